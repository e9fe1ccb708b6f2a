#pragma once

#include <splitrolle/belyimap.hpp>
#include <splitrolle/error.hpp>
#include <splitrolle/factor.hpp>
#include <splitrolle/lagrange.hpp>
#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>
#include <splitrolle/realroots.hpp>
#include <splitrolle/rollewitness.hpp>
#include <splitrolle/verification.hpp>
