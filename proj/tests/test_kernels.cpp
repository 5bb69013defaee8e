#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "thermowitness/kernels.hpp"

using namespace thermowitness;

namespace {

struct ScalarGuard {
    ~ScalarGuard() { kernels::force_scalar(false); }
};

} // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    // Odd lengths exercise the vector remainder handling.
    for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u, 4096u}) {
        std::vector<double> w(n), e(n), a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = uni(rng) * 0.999;
            e[i] = uni(rng) * 1e-28;
            a[i] = uni(rng) - 0.5;
            b[i] = uni(rng) - 0.5;
        }
        const double activity = 0.97;

        const auto sd = kernels::bose_sums(w, e, activity);
        const auto ss = kernels::scalar::bose_sums(w, e, activity);
        CHECK(sd.number == doctest::Approx(ss.number).epsilon(1e-13));
        CHECK(sd.energy == doctest::Approx(ss.energy).epsilon(1e-13));

        CHECK(kernels::tridiag_quadratic(2.0, -1.0, a) ==
              doctest::Approx(kernels::scalar::tridiag_quadratic(2.0, -1.0, a))
                  .epsilon(1e-12));
        CHECK(kernels::dot(a, b) ==
              doctest::Approx(kernels::scalar::dot(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("force_scalar falls back to the reference kernels") {
    ScalarGuard guard;
    kernels::force_scalar(true);
    CHECK(kernels::active_kernel_set() == "scalar");

    std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(kernels::dot(v, v) == doctest::Approx(55.0));
    kernels::force_scalar(false);
}

TEST_CASE("tridiag quadratic form against a dense evaluation") {
    const std::vector<double> psi{0.3, -0.2, 0.7, 0.1, -0.5};
    const double diag = 2.5, off = -1.25;
    double expect = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        expect += diag * psi[i] * psi[i];
        if (i + 1 < psi.size()) expect += 2.0 * off * psi[i] * psi[i + 1];
    }
    CHECK(kernels::tridiag_quadratic(diag, off, psi) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("bose sums closed form for a single mode") {
    const std::vector<double> w{1.0};
    const std::vector<double> e{2.0};
    // occupation x/(1-x) at activity x = 1/2 is exactly 1
    const auto s = kernels::bose_sums(w, e, 0.5);
    CHECK(s.number == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.energy == doctest::Approx(2.0).epsilon(1e-15));
}
