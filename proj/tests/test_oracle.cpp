#include <cmath>
#include <random>

#include <doctest.h>

#include "thermowitness/gas.hpp"
#include "thermowitness/oracle.hpp"
#include "thermowitness/witness.hpp"

using namespace thermowitness;

namespace {

constexpr double kPi = 3.14159265358979323846;

PhysicalConstants reduced_units() {
    PhysicalConstants pc = codata();
    pc.hbar = 1.0;
    pc.boltzmann = 1.0;
    return pc;
}

} // namespace

TEST_CASE("box spectrum vs analytic ground energy") {
    const auto ru = reduced_units();
    const oracle::DiscreteBox box{2000, 1.0, 1.0};
    const auto spec = oracle::box_spectrum(box, 4, ru);

    CHECK(spec.eigenvalues[0] == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-5));
    for (double r : spec.residuals) CHECK(r < 1e-10);

    // The discrete operator's exact spectrum is (hbar^2/m h^2)(1 - cos(pi i h / L)),
    // evaluated through the cancellation-free half-angle form.
    const double h = box.spacing();
    for (int i = 0; i < 4; ++i) {
        const double sn = std::sin(0.5 * kPi * (i + 1) * h);
        const double exact = (2.0 / (h * h)) * sn * sn;
        CHECK(spec.eigenvalues[i] == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("box spectrum: second-order convergence") {
    const auto ru = reduced_units();
    const double analytic = kPi * kPi / 2.0;
    const oracle::DiscreteBox coarse{500, 1.0, 1.0};
    const oracle::DiscreteBox fine{1001, 1.0, 1.0}; // h exactly halved
    const double gap_coarse =
        std::abs(oracle::box_spectrum(coarse, 1, ru).eigenvalues[0] - analytic);
    const double gap_fine =
        std::abs(oracle::box_spectrum(fine, 1, ru).eigenvalues[0] - analytic);
    const double ratio = gap_coarse / gap_fine;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("box spectrum: input guards") {
    const auto ru = reduced_units();
    const oracle::DiscreteBox box{100, 1.0, 1.0};
    CHECK_THROWS_AS(oracle::box_spectrum(box, 26, ru), DomainError); // k > n/4
    CHECK_THROWS_AS(oracle::box_spectrum({8, 1.0, 1.0}, 1, ru), DomainError);
}

TEST_CASE("subbox ground energy") {
    const auto ru = reduced_units();
    // n + 1 divisible by M so subset walls coincide with grid nodes.
    const oracle::DiscreteBox box{1999, 1.0, 1.0};

    SUBCASE("identity partition equals the full box") {
        CHECK(oracle::subbox_ground_energy(box, 1, 1, ru) ==
              doctest::Approx(oracle::box_spectrum(box, 1, ru).eigenvalues[0])
                  .epsilon(1e-13));
    }

    SUBCASE("M = 4 scales the ground energy by 16") {
        CHECK(oracle::subbox_ground_energy(box, 4, 1, ru) ==
              doctest::Approx(16.0 * kPi * kPi / 2.0).epsilon(1e-4));
    }

    SUBCASE("translation symmetry across subsets") {
        const double first = oracle::subbox_ground_energy(box, 4, 1, ru);
        for (int j = 2; j <= 4; ++j)
            CHECK(oracle::subbox_ground_energy(box, 4, j, ru) ==
                  doctest::Approx(first).epsilon(1e-12));
    }

    SUBCASE("coarse subsets rejected") {
        CHECK_THROWS_AS(oracle::subbox_ground_energy({63, 1.0, 1.0}, 8, 1, ru), TooCoarse);
    }
}

TEST_CASE("separable brute force: N = 1, M = 2 reaches the half-box ground state") {
    const auto ru = reduced_units();
    const oracle::DiscreteBox box{1999, 1.0, 1.0};
    const auto res = oracle::separable_minimum_bruteforce(box, 2, 1, 500, 0x5eed, ru);
    // Half-box ground energy = 4x the full-box value, up to discretization error.
    CHECK(res.minimum_energy == doctest::Approx(4.0 * kPi * kPi / 2.0).epsilon(1e-4));
    CHECK(res.bound_violations == 0);
}

TEST_CASE("separable brute force: every sample respects the variational bound") {
    const auto ru = reduced_units();
    const oracle::DiscreteBox box{479, 1.0, 1.0};
    const auto res = oracle::separable_minimum_bruteforce(box, 2, 3, 1000, 0x5eed, ru);
    CHECK(res.samples == 1000);
    CHECK(res.bound_violations == 0);
    // Refinement converges onto N * E_0^j.
    CHECK(res.minimum_energy == doctest::Approx(res.floor).epsilon(1e-6));
}

TEST_CASE("separable brute force: desk-scale guard") {
    const auto ru = reduced_units();
    const oracle::DiscreteBox box{479, 1.0, 1.0};
    CHECK_THROWS_AS(oracle::separable_minimum_bruteforce(box, 9, 1, 10, 1, ru), DomainError);
    CHECK_THROWS_AS(oracle::separable_minimum_bruteforce(box, 2, 9, 10, 1, ru), DomainError);
}

TEST_CASE("witness gap demo") {
    const auto ru = reduced_units();

    SUBCASE("M = 1: floors coincide") {
        const oracle::DiscreteBox box{999, 1.0, 1.0};
        const auto gap = oracle::witness_gap_demo(box, 1, 3, ru);
        CHECK(gap.separable_floor ==
              doctest::Approx(gap.entangled_ground).epsilon(1e-12));
    }

    SUBCASE("M = 2: ratio approaches 4") {
        const oracle::DiscreteBox box{3999, 1.0, 1.0};
        const auto gap = oracle::witness_gap_demo(box, 2, 1, ru);
        CHECK(gap.entangled_ground < gap.separable_floor);
        CHECK(gap.separable_floor / gap.entangled_ground ==
              doctest::Approx(4.0).epsilon(1e-3));
    }

    SUBCASE("M = 3, N = 5: ratio approaches 9") {
        const oracle::DiscreteBox box{2999, 1.0, 1.0};
        const auto gap = oracle::witness_gap_demo(box, 3, 5, ru);
        CHECK(gap.separable_floor / gap.entangled_ground ==
              doctest::Approx(9.0).epsilon(1e-3));
    }
}

TEST_CASE("crossing temperature matches the closed form (condensed branch)") {
    gas::GasSpec spec{3, 1e-5, lookup_species("sodium-23").mass, 7e5};
    const witness::Partition part{185};
    const auto res = oracle::crossing_temperature(spec, part);
    CHECK(res.condensed ==
          doctest::Approx(witness::transition_temperature(spec, part)).epsilon(1e-10));
    CHECK(res.condensed == doctest::Approx(2e-5).epsilon(0.05));
}

TEST_CASE("condensed crossing equals the closed form over random specs") {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<int> dims(1, 3), cuts(1, 200);
    std::uniform_real_distribution<double> logn(2.0, 6.0), logl(-6.0, -4.0), umass(1.0, 130.0);
    for (int i = 0; i < 20; ++i) {
        gas::GasSpec spec{dims(rng), std::pow(10.0, logl(rng)),
                          umass(rng) * codata().atomic_mass_unit,
                          std::pow(10.0, logn(rng))};
        const witness::Partition part{cuts(rng)};
        const double closed = witness::transition_temperature(spec, part);
        CHECK(oracle::crossing_temperature(spec, part).condensed ==
              doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("piecewise crossing sits above the condensed-branch crossing") {
    // At M^3 = N the crossing lies above T_crit, where the normal-phase
    // energy falls short of the condensed extrapolation (Li_{5/2}(z) < zeta(5/2)),
    // so the full equation of state crosses E_lowest at a higher temperature.
    gas::GasSpec spec{3, 1e-5, lookup_species("sodium-23").mass, 389017.0}; // 73^3
    const witness::Partition part{73};
    const auto res = oracle::crossing_temperature(spec, part);
    REQUIRE(res.piecewise.has_value());
    CHECK(*res.piecewise > res.condensed);
}

TEST_CASE("no crossing outside the bracket") {
    // A Planck-mass particle at desk density: E_lowest stays above U(T)
    // over the whole search range only if the floor is absurdly high, so
    // push M up until the bracket fails.
    gas::GasSpec spec{3, 1e-35, codata().planck_mass, 1.0};
    CHECK_THROWS_AS(oracle::crossing_temperature(spec, witness::Partition{1000000000}),
                    NoCrossing);
}
