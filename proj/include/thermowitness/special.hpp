#pragma once

#include <cstddef>

#include "thermowitness/errors.hpp"

namespace thermowitness::special {

/// Termination control for series summation.
struct SeriesTolerance {
    double relative_epsilon = 1e-15; ///< stop once a term drops below this fraction of the sum
    std::size_t max_terms = 20'000'000;
};

/// Riemann zeta for real s > 1, relative error <= 1e-12.
/// Throws DivergentZeta for s <= 1.
double zeta(double s);

/// Polylogarithm Li_s(z) = sum_{k>=1} z^k / k^s for s > 0, z in [0,1].
/// Li_s(1) delegates to zeta(s) and requires s > 1.
/// Relative error <= 1e-12 (tail-bounded near z = 1).
double polylog(double s, double z, const SeriesTolerance& tol = {});

} // namespace thermowitness::special
