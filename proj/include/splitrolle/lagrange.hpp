#pragma once

/**
 * @file lagrange.hpp
 * @brief Lagrange weights and cleared Lagrange combinations.
 *
 * For distinct nodes q_0..q_n and a polynomial g of degree <= n,
 *
 *     g(x) = sum_i c_i * prod_{j != i} (x - q_j),   c_i = g(q_i) / prod_{j != i} (q_i - q_j).
 *
 * Scaling the weights by a common factor gives integer vectors k with
 * sum_i k_i prod_{j != i}(x - q_j) = scale * g(x), which is the logarithmic
 * derivative numerator of prod (x - q_i)^{k_i}.
 */

#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace srolle {

/// prod_{j != i} (q_i - q_j)
inline Rat node_denominator(std::span<const Rat> nodes, std::size_t i) {
    Rat d(1);
    for (std::size_t j = 0; j < nodes.size(); ++j)
        if (j != i) d *= nodes[i] - nodes[j];
    return d;
}

inline void require_distinct(std::span<const Rat> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolation nodes must be distinct");
}

/// c_i = g(q_i) / prod_{j != i}(q_i - q_j)
inline std::vector<Rat> lagrange_weights(const Poly& g, std::span<const Rat> nodes) {
    require_distinct(nodes);
    std::vector<Rat> w;
    w.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) w.push_back(g(nodes[i]) / node_denominator(nodes, i));
    return w;
}

/// sum_i coeffs_i * prod_{j != i}(x - q_j), via one full product and
/// synthetic division by each (x - q_i).
template <class Scalar>
Poly cleared_combination(std::span<const Rat> nodes, std::span<const Scalar> coeffs) {
    if (nodes.size() != coeffs.size()) throw std::invalid_argument("node and coefficient counts differ");
    if (nodes.empty()) return {};
    Poly full = Poly::constant(1);
    for (const auto& q : nodes) full *= Poly::linear_root(q);
    const auto& fc = full.coefficients();
    const std::size_t n = nodes.size();

    std::vector<Rat> acc(n);
    std::vector<Rat> quo(n);
    for (std::size_t i = 0; i < n; ++i) {
        // full / (x - q_i) by Horner from the top
        Rat carry;
        for (std::size_t k = n; k-- > 0;) {
            carry = fc[k + 1] + carry * nodes[i];
            quo[k] = carry;
        }
        const Rat c(coeffs[i]);
        for (std::size_t k = 0; k < n; ++k) acc[k] += c * quo[k];
    }
    return Poly(std::move(acc));
}

} // namespace srolle
