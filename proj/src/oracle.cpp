#include "thermowitness/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "thermowitness/kernels.hpp"

namespace thermowitness::oracle {

namespace {

// ---- symmetric tridiagonal machinery (uniform diagonal a, off-diagonal b) ----

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(int n, double a, double b, double x) {
    const double b2 = b * b;
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        q = (a - x) - (i > 0 ? b2 / q : 0.0);
        if (q == 0.0) q = 1e-300;
        if (q < 0.0) count++;
    }
    return count;
}

// i-th smallest eigenvalue (0-based) by bisection inside Gershgorin bounds.
double eigenvalue_by_bisection(int n, double a, double b, int index) {
    double lo = a - 2.0 * std::abs(b);
    double hi = a + 2.0 * std::abs(b);
    while (hi - lo > 1e-15 * (std::abs(lo) + std::abs(hi)) + 1e-300) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (sturm_count(n, a, b, mid) <= index ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Tridiagonal solve with partial pivoting; rhs overwritten by the solution.
// diag is the (shifted) diagonal, off the constant off-diagonal.
void tridiag_solve_pivoted(std::vector<double> d, double off, std::vector<double>& rhs) {
    const int n = static_cast<int>(d.size());
    std::vector<double> e(n, off);   // super-diagonal
    std::vector<double> f(n, 0.0);   // second super-diagonal (fill-in)
    std::vector<double> sub(n, off); // sub-diagonal, consumed in elimination

    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(d[i])) {
            std::swap(d[i], sub[i + 1]);
            std::swap(e[i], d[i + 1]);
            std::swap(f[i], e[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (d[i] == 0.0) d[i] = 1e-300;
        const double m = sub[i + 1] / d[i];
        d[i + 1] -= m * e[i];
        e[i + 1] -= m * f[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    rhs[n - 1] /= d[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - e[n - 2] * rhs[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
        rhs[i] = (rhs[i] - e[i] * rhs[i + 1] - f[i] * rhs[i + 2]) / d[i];
}

void normalize(std::vector<double>& v) {
    const double nrm = std::sqrt(kernels::dot(v, v));
    for (double& x : v) x /= nrm;
}

// Inverse iteration at a converged eigenvalue estimate; returns the
// normalized eigenvector.
std::vector<double> inverse_iterate(int n, double a, double b, double lambda) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = uni(rng);
    normalize(v);

    const double shift = lambda * (1.0 - 1e-12) - 1e-300;
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<double> d(n, a - shift);
        tridiag_solve_pivoted(std::move(d), b, v);
        normalize(v);
    }
    return v;
}

// v^T T v for the kinetic operator (a = 2c, b = -c) rewritten as
// c (v_1^2 + v_n^2 + sum (v_{i+1} - v_i)^2): every term is positive, so the
// Rayleigh quotient keeps full relative precision even though the naive
// a sum - |b| sum form cancels by a factor ~ n^2 for the lowest modes.
double kinetic_quadratic(double c, const std::vector<double>& v) {
    const std::size_t n = v.size();
    double acc = v[0] * v[0] + v[n - 1] * v[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double diff = v[i + 1] - v[i];
        acc += diff * diff;
    }
    return c * acc;
}

// Backward error of the eigenpair, relative to the operator scale (not
// lambda, so fine grids where ||T|| / lambda_0 ~ n^2 stay certifiable).
double eigenpair_residual(double a, double b, double lambda, const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
        double tv = a * v[i];
        if (i > 0) tv += b * v[i - 1];
        if (i + 1 < n) tv += b * v[i + 1];
        const double r = tv - lambda * v[i];
        rr += r * r;
    }
    return std::sqrt(rr) / (std::abs(a) + 2.0 * std::abs(b));
}

// Bisection locates lambda to ~eps ||T|| absolute; the Rayleigh quotient of
// the inverse-iterated vector then restores full relative accuracy.
double refined_eigenvalue(int n, double a, double b, int index, double* residual_out) {
    const double coarse = eigenvalue_by_bisection(n, a, b, index);
    const auto v = inverse_iterate(n, a, b, coarse);
    const double lambda = kinetic_quadratic(-b, v);
    if (residual_out) *residual_out = eigenpair_residual(a, b, lambda, v);
    return lambda;
}

// Sizes of the index blocks the M-way geometric partition induces on the
// grid. Nodes landing exactly on a subset boundary act as wall nodes and
// belong to no block.
std::vector<int> block_sizes(int n, int cuts) {
    std::vector<int> sizes(cuts);
    const long np1 = n + 1;
    for (int j = 1; j <= cuts; ++j) {
        const long lo = (static_cast<long>(j - 1) * np1) / cuts + 1; // first interior node
        long hi = (static_cast<long>(j) * np1) / cuts;               // last candidate
        if ((static_cast<long>(j) * np1) % cuts == 0) hi -= 1;       // boundary node is a wall
        sizes[j - 1] = static_cast<int>(hi - lo + 1);
    }
    return sizes;
}

struct TridiagCoeffs {
    double diag;
    double off;
};

TridiagCoeffs kinetic_coeffs(const DiscreteBox& box, const PhysicalConstants& pc) {
    const double h = box.spacing();
    const double c = pc.hbar * pc.hbar / (2.0 * box.mass * h * h);
    return {2.0 * c, -c};
}

// Ground state of a block by inverse power iteration (shift 0, the operator
// is positive definite); converges quadratically in the Rayleigh quotient.
double refine_block_ground(int n, double a, double b, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = uni(rng);
    normalize(v);

    double prev = kernels::tridiag_quadratic(a, b, v);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> d(n, a);
        tridiag_solve_pivoted(std::move(d), b, v);
        normalize(v);
        const double rq = kernels::tridiag_quadratic(a, b, v);
        if (std::abs(rq - prev) <= 1e-14 * std::abs(rq)) return rq;
        prev = rq;
    }
    return prev;
}

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (int take = 0; take <= total; ++take) {
        current.push_back(take);
        compositions(total - take, parts - 1, current, visit);
        current.pop_back();
    }
}

// Geometric-mean bisection of a monotone increasing f on [lo, hi].
template <typename F>
double log_bisect_root(F&& f, double lo, double hi, double rel_tol) {
    if (f(lo) > 0.0 || f(hi) < 0.0)
        throw NoCrossing("energy balance has no root inside the search bracket");
    while (hi - lo > rel_tol * lo) {
        const double mid = std::sqrt(lo * hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

} // namespace

void DiscreteBox::validate() const {
    if (grid_points < 16) throw DomainError("DiscreteBox: need at least 16 grid points");
    if (!(length > 0.0)) throw DomainError("DiscreteBox: length must be positive");
    if (!(mass > 0.0)) throw DomainError("DiscreteBox: mass must be positive");
}

SpectrumResult box_spectrum(const DiscreteBox& box, int k, const PhysicalConstants& pc) {
    box.validate();
    if (k < 1 || k > box.grid_points / 4)
        throw DomainError("box_spectrum: k must lie in [1, n/4]");

    const auto [a, b] = kinetic_coeffs(box, pc);
    SpectrumResult res;
    for (int i = 0; i < k; ++i) {
        double resid = 0.0;
        const double lambda = refined_eigenvalue(box.grid_points, a, b, i, &resid);
        if (resid >= 1e-10)
            throw ConvergenceFailure("box_spectrum: eigenpair residual above 1e-10");
        res.eigenvalues.push_back(lambda);
        res.residuals.push_back(resid);
    }
    return res;
}

double subbox_ground_energy(const DiscreteBox& box, int cuts, int subset_index,
                            const PhysicalConstants& pc) {
    box.validate();
    if (cuts < 1) throw DomainError("subbox_ground_energy: M must be >= 1");
    if (subset_index < 1 || subset_index > cuts)
        throw DomainError("subbox_ground_energy: subset index out of range");

    const auto sizes = block_sizes(box.grid_points, cuts);
    const int q = sizes[subset_index - 1];
    if (q < 16) throw TooCoarse("subbox_ground_energy: fewer than 16 grid points in subset");

    const auto [a, b] = kinetic_coeffs(box, pc);
    return refined_eigenvalue(q, a, b, 0, nullptr);
}

SeparableSearchResult separable_minimum_bruteforce(const DiscreteBox& box, int cuts,
                                                   int particles, std::size_t samples,
                                                   std::uint64_t seed,
                                                   const PhysicalConstants& pc) {
    box.validate();
    if (cuts < 1 || cuts > 8 || particles < 1 || particles > 8)
        throw DomainError("separable_minimum_bruteforce: desk scale is N <= 8, M <= 8");

    const auto sizes = block_sizes(box.grid_points, cuts);
    for (int q : sizes)
        if (q < 16) throw TooCoarse("separable_minimum_bruteforce: subset grid too coarse");

    const auto [a, b] = kinetic_coeffs(box, pc);
    std::vector<double> ground(cuts);
    for (int j = 0; j < cuts; ++j) ground[j] = eigenvalue_by_bisection(sizes[j], a, b, 0);
    const double floor_energy =
        particles * *std::min_element(ground.begin(), ground.end());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_subset(0, cuts - 1);

    SeparableSearchResult result;
    result.floor = floor_energy;
    result.samples = samples;
    double best = std::numeric_limits<double>::infinity();

    // Random product-state samples: a random occupation split plus random
    // hard-wall amplitudes in each occupied subset.
    std::vector<double> psi;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<int> occ(cuts, 0);
        for (int p = 0; p < particles; ++p) occ[pick_subset(rng)]++;

        double energy = 0.0;
        for (int j = 0; j < cuts; ++j) {
            if (occ[j] == 0) continue;
            psi.assign(sizes[j], 0.0);
            for (double& x : psi) x = uni(rng);
            normalize(psi);
            energy += occ[j] * kernels::tridiag_quadratic(a, b, psi);
        }
        best = std::min(best, energy);
        if (energy < floor_energy * (1.0 - 1e-9)) result.bound_violations++;
    }

    // Refinement: per-subset ground states by inverse power iteration, then
    // an exhaustive scan over all occupation splits.
    std::vector<double> refined(cuts);
    for (int j = 0; j < cuts; ++j) refined[j] = refine_block_ground(sizes[j], a, b, rng);

    std::vector<int> current;
    compositions(particles, cuts, current, [&](const std::vector<int>& occ) {
        double energy = 0.0;
        for (int j = 0; j < cuts; ++j) energy += occ[j] * refined[j];
        best = std::min(best, energy);
    });

    result.minimum_energy = best;
    return result;
}

WitnessGap witness_gap_demo(const DiscreteBox& box, int cuts, int particles,
                            const PhysicalConstants& pc) {
    box.validate();
    if (cuts < 1) throw DomainError("witness_gap_demo: M must be >= 1");
    if (particles < 1) throw DomainError("witness_gap_demo: N must be >= 1");

    const auto [a, b] = kinetic_coeffs(box, pc);
    WitnessGap gap;
    gap.entangled_ground =
        particles * refined_eigenvalue(box.grid_points, a, b, 0, nullptr);
    gap.separable_floor = particles * subbox_ground_energy(box, cuts, 1, pc);
    if (cuts >= 2 && !(gap.entangled_ground < gap.separable_floor))
        throw Error("witness_gap_demo: delocalized ground state not below the separable floor");
    return gap;
}

CrossingResult crossing_temperature(const gas::GasSpec& spec, const witness::Partition& part,
                                    const PhysicalConstants& pc) {
    spec.validate();
    part.validate();
    const double e_lowest = witness::lowest_separable_energy(spec, part, pc);

    CrossingResult res;
    res.condensed = log_bisect_root(
        [&](double t) { return gas::internal_energy_condensed(t, spec, pc) - e_lowest; },
        1e-12, 1e6, 1e-13);

    if (spec.dimension == 3) {
        res.piecewise = log_bisect_root(
            [&](double t) { return gas::internal_energy(t, spec, pc) - e_lowest; }, 1e-12,
            1e6, 1e-12);
    }
    return res;
}

} // namespace thermowitness::oracle
