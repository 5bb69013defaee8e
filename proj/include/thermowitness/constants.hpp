#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thermowitness/errors.hpp"

namespace thermowitness {

/// Fundamental constants in SI units (CODATA 2018).
struct PhysicalConstants {
    double hbar;               ///< reduced Planck constant [J s]
    double boltzmann;          ///< k_B [J/K]
    double atomic_mass_unit;   ///< u [kg]
    double light_speed;        ///< c [m/s]
    double gravitation;        ///< G [m^3 kg^-1 s^-2]
    double planck_mass;        ///< sqrt(hbar c / G) [kg]
    double planck_length;      ///< sqrt(hbar G / c^3) [m]
    double planck_temperature; ///< sqrt(hbar c^5 / G) / k_B [K]
};

/// The CODATA 2018 constant set. Immutable after initialization.
const PhysicalConstants& codata();

/// Planck units recomputed from hbar, c, G, k_B.
struct PlanckUnits {
    double mass;        ///< [kg]
    double length;      ///< [m]
    double temperature; ///< [K]
};

PlanckUnits planck_units(const PhysicalConstants& pc = codata());

struct ParticleSpecies {
    std::string name;
    double mass; ///< [kg]
};

/// Case-insensitive registry lookup over the built-in species set.
/// Throws UnknownSpecies for names not in the registry.
ParticleSpecies lookup_species(std::string_view name);

/// All built-in species, for listings.
const std::vector<ParticleSpecies>& species_registry();

} // namespace thermowitness
