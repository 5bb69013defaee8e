#include "thermowitness/kernels.hpp"

#include <atomic>

namespace thermowitness::kernels {

namespace scalar {

BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity) {
    double n = 0.0;
    double u = 0.0;
    const std::size_t count = weights.size();
    for (std::size_t i = 0; i < count; ++i) {
        const double wx = weights[i] * activity;
        const double occ = wx / (1.0 - wx);
        n += occ;
        u += energies[i] * occ;
    }
    return {n, u};
}

double tridiag_quadratic(double diag, double off, std::span<const double> psi) {
    const std::size_t n = psi.size();
    double d = 0.0;
    double o = 0.0;
    for (std::size_t i = 0; i < n; ++i) d += psi[i] * psi[i];
    for (std::size_t i = 0; i + 1 < n; ++i) o += psi[i] * psi[i + 1];
    return diag * d + 2.0 * off * o;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace scalar

namespace {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<bool> g_force_scalar{false};

bool use_simd() { return !g_force_scalar.load(std::memory_order_relaxed) && avx2_available(); }

} // namespace

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

std::string_view active_kernel_set() { return use_simd() ? "avx2" : "scalar"; }

BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) return avx2::bose_sums(weights, energies, activity);
#endif
    return scalar::bose_sums(weights, energies, activity);
}

double tridiag_quadratic(double diag, double off, std::span<const double> psi) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) return avx2::tridiag_quadratic(diag, off, psi);
#endif
    return scalar::tridiag_quadratic(diag, off, psi);
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) return avx2::dot(a, b);
#endif
    return scalar::dot(a, b);
}

} // namespace thermowitness::kernels
