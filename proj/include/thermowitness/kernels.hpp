#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace thermowitness::kernels {

/// Number and energy sums of a Bose distribution over a fixed mode set.
/// Inputs are the energies relative to the ground mode (shifted so the
/// lowest entry is 0), the precomputed Boltzmann factors
/// w_n = exp(-beta * (eps_n - eps_0)), and the shifted activity
/// x = exp(beta * (mu - eps_0)) in [0, 1).
struct BoseSums {
    double number; ///< sum_n w_n x / (1 - w_n x)
    double energy; ///< sum_n eps_n w_n x / (1 - w_n x), eps_n the absolute energies
};

BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity);

/// Quadratic form <psi| T |psi> of the uniform symmetric tridiagonal
/// operator with diagonal `diag` and off-diagonal `off`.
double tridiag_quadratic(double diag, double off, std::span<const double> psi);

double dot(std::span<const double> a, std::span<const double> b);

/// Name of the kernel set selected at startup ("scalar", "avx2").
std::string_view active_kernel_set();

/// Force the scalar reference kernels (used by equivalence tests).
void force_scalar(bool on);

namespace scalar {
BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity);
double tridiag_quadratic(double diag, double off, std::span<const double> psi);
double dot(std::span<const double> a, std::span<const double> b);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity);
double tridiag_quadratic(double diag, double off, std::span<const double> psi);
double dot(std::span<const double> a, std::span<const double> b);
} // namespace avx2
#endif

} // namespace thermowitness::kernels
