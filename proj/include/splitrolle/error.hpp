#pragma once

#include <stdexcept>
#include <string>

namespace srolle {

/// A construction declined on mathematical grounds. The input was well formed
/// but no certificate of the requested kind exists (or the caller's limits
/// forbid building one).
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some irrational root is nonreal or repeated.
class NotTotallyRealSimple : public Refusal {
public:
    NotTotallyRealSimple()
        : Refusal("irrational roots not all real and simple") {}
    explicit NotTotallyRealSimple(const std::string& what) : Refusal(what) {}
};

class DegenerateInput : public Refusal {
public:
    using Refusal::Refusal;
};

/// An interleaving rational would need a denominator above the caller's cap.
class DenominatorCapExceeded : public Refusal {
public:
    using Refusal::Refusal;
};

/// A Sturm count was requested at a point where the polynomial vanishes.
/// Callers should nudge the endpoint and retry.
class EndpointIsRoot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace srolle
