#pragma once

#include <cstddef>
#include <vector>

#include "thermowitness/constants.hpp"
#include "thermowitness/errors.hpp"

namespace thermowitness::gas {

/// A free Bose gas in a d-dimensional box with hard walls.
struct GasSpec {
    int dimension = 3;        ///< d in {1, 2, 3}
    double box_length = 0.0;  ///< L [m]
    double mass = 0.0;        ///< m [kg]
    double particle_number = 0.0; ///< N, grand-canonical average

    void validate() const;
    double volume() const;  ///< L^d [m^d]
    double density() const; ///< N / L^d [m^-d]
};

enum class Phase { Condensed, Normal };

/// A solved thermodynamic state of the gas.
struct ThermoPoint {
    double temperature = 0.0;        ///< [K]
    double fugacity = 0.0;           ///< z = exp(beta mu), in [0,1]
    double chemical_potential = 0.0; ///< [J]
    double internal_energy = 0.0;    ///< [J]
    Phase phase = Phase::Normal;
};

/// Single-particle box levels eps_n = hbar^2 pi^2 |n|^2 / (2 m L^2),
/// enumerated up to an energy cutoff and sorted ascending.
struct ModeSet {
    int dimension = 0;
    int max_index = 0;            ///< per-axis quantum number cap
    std::vector<double> energies; ///< [J], ascending

    double ground_energy() const { return energies.front(); }
};

double thermal_wavelength(double temperature, double mass,
                          const PhysicalConstants& pc = codata());

/// BEC critical temperature (d = 3 only).
/// Throws NoFiniteCondensation for d in {1, 2}.
double critical_temperature(const GasSpec& spec, const PhysicalConstants& pc = codata());

/// Condensed-branch (mu = 0) internal energy
/// U = (d/2) k_B T zeta(1 + d/2) V / lambda_T^d, applied at any T > 0.
double internal_energy_condensed(double temperature, const GasSpec& spec,
                                 const PhysicalConstants& pc = codata());

/// Normal-phase equation-of-state solve: rho lambda_T^d = Li_{d/2}(z).
/// Throws PhaseError below the critical temperature in d = 3.
ThermoPoint solve_fugacity(double temperature, const GasSpec& spec,
                           const PhysicalConstants& pc = codata());

/// Piecewise internal energy: condensed branch at and below T_crit,
/// fugacity solve above (always the normal branch for d in {1, 2}).
double internal_energy(double temperature, const GasSpec& spec,
                       const PhysicalConstants& pc = codata());

/// Enumerate all modes with eps_n - eps_ground <= cutoff_factor k_B T.
/// The default factor 40 keeps the dropped tail weight below 1e-17.
ModeSet build_mode_set(double temperature, const GasSpec& spec,
                       const PhysicalConstants& pc = codata(), double cutoff_factor = 40.0);

/// Exact finite-size grand-canonical solve over a discrete mode set:
/// mu < eps_ground chosen so that sum_n 1/(e^{beta(eps_n - mu)} - 1) = N
/// to 1e-9 relative, with the exact-sum internal energy.
/// Throws CutoffTooSmall if the mode set does not cover the thermally
/// occupied spectrum at this temperature.
ThermoPoint discrete_grand_canonical(double temperature, const GasSpec& spec,
                                     const ModeSet& modes,
                                     const PhysicalConstants& pc = codata());

} // namespace thermowitness::gas
