#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "thermowitness/constants.hpp"
#include "thermowitness/gas.hpp"
#include "thermowitness/witness.hpp"

namespace thermowitness::oracle {

/// 1D central-difference discretization of a hard-wall box.
/// Interior grid x_i = i h, i = 1..n, with h (n+1) = L; the walls sit
/// just outside the grid.
struct DiscreteBox {
    int grid_points = 0; ///< n >= 16
    double length = 0.0; ///< L [m]
    double mass = 0.0;   ///< m [kg]

    void validate() const;
    double spacing() const { return length / (grid_points + 1); }
};

struct SpectrumResult {
    std::vector<double> eigenvalues; ///< [J], ascending
    std::vector<double> residuals;   ///< ||T v - lambda v|| / ||T|| per pair
};

/// k smallest eigenvalues of the kinetic operator
/// -(hbar^2 / 2m) d2/dx2 (second-order central differences, Dirichlet).
/// Sturm-sequence bisection plus inverse iteration for the residual check.
SpectrumResult box_spectrum(const DiscreteBox& box, int k,
                            const PhysicalConstants& pc = codata());

/// Ground energy of the operator restricted to subset A_j of an M-way
/// partition, j in [1, M]. Grid nodes on a subset boundary act as walls.
double subbox_ground_energy(const DiscreteBox& box, int cuts, int subset_index,
                            const PhysicalConstants& pc = codata());

struct SeparableSearchResult {
    double minimum_energy = 0.0; ///< best product-state energy found [J]
    double floor = 0.0;          ///< N x smallest subbox ground energy [J]
    std::size_t samples = 0;
    std::size_t bound_violations = 0; ///< samples below floor (expected 0)
};

/// Brute-force minimization of sum_j n_j <psi_j|H|psi_j> over exhaustive
/// occupation splits and random per-subset amplitudes, refined by inverse
/// power iteration. Desk scale: N <= 8, M <= 8.
SeparableSearchResult separable_minimum_bruteforce(const DiscreteBox& box, int cuts,
                                                   int particles, std::size_t samples,
                                                   std::uint64_t seed = 0x5eed,
                                                   const PhysicalConstants& pc = codata());

struct WitnessGap {
    double separable_floor = 0.0;  ///< N x subbox ground energy [J]
    double entangled_ground = 0.0; ///< N x full-box ground energy [J]
};

/// The strict energy window below the separable floor occupied by the
/// delocalized ground state (present for M >= 2, absent at M = 1).
WitnessGap witness_gap_demo(const DiscreteBox& box, int cuts, int particles,
                            const PhysicalConstants& pc = codata());

struct CrossingResult {
    double condensed = 0.0;          ///< root of U_condensed(T) = E_lowest [K]
    std::optional<double> piecewise; ///< root of the piecewise U(T), d = 3 only [K]
};

/// Numeric solve of U(T) = E_lowest(M) over [1e-12, 1e6] K.
/// The condensed branch reproduces the closed-form transition temperature;
/// the piecewise branch uses the full equation of state above T_crit.
CrossingResult crossing_temperature(const gas::GasSpec& spec, const witness::Partition& part,
                                    const PhysicalConstants& pc = codata());

} // namespace thermowitness::oracle
