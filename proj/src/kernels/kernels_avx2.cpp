#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "thermowitness/kernels.hpp"

// Compiled with -mavx2 -mfma; only reached after the runtime CPUID check.

namespace thermowitness::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

BoseSums bose_sums(std::span<const double> weights, std::span<const double> energies,
                   double activity) {
    const std::size_t n = weights.size();
    const double* w = weights.data();
    const double* e = energies.data();

    const __m256d vx = _mm256_set1_pd(activity);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d vn = _mm256_setzero_pd();
    __m256d vu = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d wx = _mm256_mul_pd(_mm256_loadu_pd(w + i), vx);
        const __m256d occ = _mm256_div_pd(wx, _mm256_sub_pd(one, wx));
        vn = _mm256_add_pd(vn, occ);
        vu = _mm256_fmadd_pd(_mm256_loadu_pd(e + i), occ, vu);
    }
    double sn = hsum(vn);
    double su = hsum(vu);
    for (; i < n; ++i) {
        const double wx = w[i] * activity;
        const double occ = wx / (1.0 - wx);
        sn += occ;
        su += e[i] * occ;
    }
    return {sn, su};
}

double tridiag_quadratic(double diag, double off, std::span<const double> psi) {
    const std::size_t n = psi.size();
    const double* p = psi.data();

    __m256d vd = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        vd = _mm256_fmadd_pd(v, v, vd);
    }
    double d = hsum(vd);
    for (; i < n; ++i) d += p[i] * p[i];

    __m256d vo = _mm256_setzero_pd();
    i = 0;
    for (; i + 5 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + i);
        const __m256d b = _mm256_loadu_pd(p + i + 1);
        vo = _mm256_fmadd_pd(a, b, vo);
    }
    double o = hsum(vo);
    for (; i + 1 < n; ++i) o += p[i] * p[i + 1];

    return diag * d + 2.0 * off * o;
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const double* pa = a.data();
    const double* pb = b.data();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += pa[i] * pb[i];
    return s;
}

} // namespace thermowitness::kernels::avx2

#endif
