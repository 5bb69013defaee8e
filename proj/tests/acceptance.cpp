// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "thermowitness/constants.hpp"
#include "thermowitness/gas.hpp"
#include "thermowitness/oracle.hpp"
#include "thermowitness/special.hpp"
#include "thermowitness/witness.hpp"

using namespace thermowitness;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    g_notes.emplace_back(buf);
}

bool check(bool ok, const char* what) {
    if (!ok) {
        note("FAILED: %s", what);
        return false;
    }
    return true;
}

bool rel(double got, double want, double tol, const char* what) {
    const bool ok = std::abs(got - want) <= tol * std::abs(want);
    if (!ok) note("FAILED: %s (got %.12g, want %.12g, tol %g)", what, got, want, tol);
    return ok;
}

void criterion(int index, const char* title, const std::function<bool()>& body) {
    g_notes.clear();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note("exception: %s", e.what());
    }
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", index, title);
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
    if (!ok) ++g_failures;
}

gas::GasSpec ketterle() {
    return {3, 1e-5, lookup_species("sodium-23").mass, 7e5};
}

PhysicalConstants reduced_units() {
    PhysicalConstants pc = codata();
    pc.hbar = 1.0;
    pc.boltzmann = 1.0;
    return pc;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    criterion(1, "sodium-gas reproduction: M = 185, T_trans in [1.9e-5, 2.1e-5] K, < 1 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto spec = ketterle();
        const auto inv = witness::max_witnessed_partition(spec, 2e-5);
        bool ok = check(inv.nearest_cuts == 185, "nearest-integer M == 185");
        const double t_trans = witness::transition_temperature(spec, {185});
        ok &= check(t_trans >= 1.9e-5 && t_trans <= 2.1e-5,
                    "T_trans(185) in [1.9e-5, 2.1e-5] K");
        const double elapsed = seconds_since(t0);
        ok &= check(elapsed < 1.0, "runtime < 1 s");
        note("M_real = %.6g, T_trans = %.6g K, %.3f s", inv.real_cuts, t_trans, elapsed);
        return ok;
    });

    criterion(2, "entanglement length approx 5.4e-8 m (within 10% of 5e-8)", [] {
        const double dl = witness::entanglement_length(ketterle(), {185});
        note("dL = %.6g m", dl);
        return check(std::abs(dl - 5e-8) <= 0.1 * 5e-8, "|dL - 5e-8| <= 10%");
    });

    criterion(3, "fixed-density ratio T_trans/T_crit = 2.02 +/- 0.02", [] {
        const auto spec = ketterle();
        const double ratio = witness::transition_temperature_fixed_density(spec) /
                             gas::critical_temperature(spec);
        note("ratio = %.6g", ratio);
        return check(std::abs(ratio - 2.02) <= 0.02, "ratio in [2.00, 2.04]");
    });

    criterion(4, "Planck-scale scenario: T_trans in [1e30, 1e34] K", [] {
        const auto& pc = codata();
        const gas::GasSpec spec{3, 100.0 * pc.planck_length, pc.planck_mass, 1e6};
        const double t = witness::transition_temperature(spec, {1});
        note("T_trans = %.6g K", t);
        return check(t > 1e30 && t < 1e34, "T_trans within four decades of 1e32 K");
    });

    criterion(5, "oracle-formula equivalence to 1e-10 over 20 random specs, < 5 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(0xacce97);
        std::uniform_int_distribution<int> dims(1, 3), cuts(1, 200);
        std::uniform_real_distribution<double> logn(2.0, 6.0), logl(-6.0, -4.0),
            umass(1.0, 130.0);
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            const gas::GasSpec spec{dims(rng), std::pow(10.0, logl(rng)),
                                    umass(rng) * codata().atomic_mass_unit,
                                    std::pow(10.0, logn(rng))};
            const witness::Partition part{cuts(rng)};
            const double closed = witness::transition_temperature(spec, part);
            const double numeric = oracle::crossing_temperature(spec, part).condensed;
            ok &= rel(numeric, closed, 1e-10, "numeric crossing vs closed form");
        }
        const double elapsed = seconds_since(t0);
        ok &= check(elapsed < 5.0, "runtime < 5 s");
        note("%.3f s for 20 specs", elapsed);
        return ok;
    });

    criterion(6, "discretization: ground energy 1e-5, O(h^2) ratio, M^2 subboxes 1e-3", [] {
        const auto ru = reduced_units();
        const double analytic = kPi * kPi / 2.0; // hbar = m = L = 1
        bool ok = rel(oracle::box_spectrum({2000, 1.0, 1.0}, 1, ru).eigenvalues[0],
                      analytic, 1e-5, "full-box ground energy at n = 2000");
        const double gap_c =
            std::abs(oracle::box_spectrum({500, 1.0, 1.0}, 1, ru).eigenvalues[0] - analytic);
        const double gap_f =
            std::abs(oracle::box_spectrum({1001, 1.0, 1.0}, 1, ru).eigenvalues[0] - analytic);
        const double ratio = gap_c / gap_f;
        ok &= check(ratio > 3.5 && ratio < 4.5, "halving h shrinks the error ~4x");
        note("convergence ratio = %.4g", ratio);
        for (int m = 2; m <= 8; ++m) {
            // n + 1 divisible by m so subset walls land on grid nodes
            const oracle::DiscreteBox box{840 * m - 1, 1.0, 1.0};
            ok &= rel(oracle::subbox_ground_energy(box, m, 1, ru),
                      m * m * analytic, 1e-3, "subbox energy scales as M^2");
        }
        return ok;
    });

    criterion(7, "separable bound: 1e3 samples per config, refinement 1e-6, gap M^2 1e-3", [] {
        const auto ru = reduced_units();
        bool ok = true;
        const int configs[][2] = {{2, 3}, {4, 2}, {3, 5}}; // {M, N}
        for (const auto& c : configs) {
            const oracle::DiscreteBox box{240 * c[0] - 1, 1.0, 1.0};
            const auto res =
                oracle::separable_minimum_bruteforce(box, c[0], c[1], 1000, 0x5eed, ru);
            ok &= check(res.samples >= 1000, "at least 1e3 samples drawn");
            ok &= check(res.bound_violations == 0, "no sample below N E_0^j");
            ok &= rel(res.minimum_energy, res.floor, 1e-6, "refined minimum hits the floor");
        }
        for (int m : {2, 3, 4}) {
            const oracle::DiscreteBox box{840 * m - 1, 1.0, 1.0};
            const auto gap = oracle::witness_gap_demo(box, m, 3, ru);
            ok &= rel(gap.separable_floor / gap.entangled_ground, double(m) * m, 1e-3,
                      "witness gap ratio -> M^2");
        }
        return ok;
    });

    criterion(8, "special functions: zeta(2), Li_1 closed form, derivative identity", [] {
        bool ok = rel(special::zeta(2.0), kPi * kPi / 6.0, 1e-12, "zeta(2) = pi^2/6");
        for (int i = 1; i <= 20; ++i) {
            const double z = i / 21.0;
            ok &= rel(special::polylog(1.0, z), -std::log1p(-z), 1e-12,
                      "Li_1(z) = -ln(1 - z)");
        }
        // z d/dz Li_s(z) = Li_{s-1}(z) via central differences.
        for (double z : {0.2, 0.5, 0.8}) {
            const double h = 1e-6 * z;
            const double deriv =
                (special::polylog(2.5, z + h) - special::polylog(2.5, z - h)) / (2.0 * h);
            ok &= rel(z * deriv, special::polylog(1.5, z), 1e-6, "z Li_2.5' = Li_1.5");
        }
        return ok;
    });

    criterion(9, "scaling laws to 1e-12; monotone T_trans; inversion round-trip 1e-10", [] {
        const auto base = ketterle();
        const double e0 = witness::lowest_separable_energy(base, {7});
        bool ok = true;

        auto spec = base;
        spec.particle_number *= 3.0;
        ok &= rel(witness::lowest_separable_energy(spec, {7}), 3.0 * e0, 1e-12,
                  "E_lowest linear in N");
        ok &= rel(witness::lowest_separable_energy(base, {14}), 4.0 * e0, 1e-12,
                  "E_lowest quadratic in M");
        spec = base;
        spec.dimension = 1;
        ok &= rel(witness::lowest_separable_energy(spec, {7}), e0 / 3.0, 1e-12,
                  "E_lowest linear in d");
        spec = base;
        spec.mass *= 2.0;
        ok &= rel(witness::lowest_separable_energy(spec, {7}), e0 / 2.0, 1e-12,
                  "E_lowest inverse in m");
        spec = base;
        spec.box_length *= 2.0;
        ok &= rel(witness::lowest_separable_energy(spec, {7}), e0 / 4.0, 1e-12,
                  "E_lowest inverse in L^2");

        PhysicalConstants half = codata();
        half.hbar *= 0.5;
        ok &= rel(witness::transition_temperature(base, {10}, half),
                  witness::transition_temperature(base, {10}) / 4.0, 1e-12,
                  "T_trans proportional to hbar^2");

        double prev = 0.0;
        for (int m = 1; m <= 512; m *= 2) {
            const double t = witness::transition_temperature(base, {m});
            ok &= check(t > prev, "T_trans strictly increasing in M");
            prev = t;
        }

        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> cuts(1, 1000), dims(1, 3);
        std::uniform_real_distribution<double> logn(1.0, 6.0);
        for (int i = 0; i < 20; ++i) {
            gas::GasSpec r{dims(rng), 1e-5, base.mass, std::pow(10.0, logn(rng))};
            const int m = cuts(rng);
            const double t = witness::transition_temperature(r, {m});
            ok &= rel(witness::max_witnessed_partition(r, t).real_cuts, double(m), 1e-10,
                      "inversion round-trip");
        }
        return ok;
    });

    criterion(10, "low dimensions: T_crit throws, T_trans finite and positive", [] {
        bool ok = true;
        for (int d : {1, 2}) {
            auto spec = ketterle();
            spec.dimension = d;
            bool threw = false;
            try {
                gas::critical_temperature(spec);
            } catch (const NoFiniteCondensation&) {
                threw = true;
            }
            ok &= check(threw, "critical_temperature raises NoFiniteCondensation");
            const double t = witness::transition_temperature(spec, {10});
            ok &= check(t > 0.0 && std::isfinite(t), "T_trans finite and positive");
        }
        return ok;
    });

    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
