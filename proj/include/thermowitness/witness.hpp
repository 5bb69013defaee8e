#pragma once

#include <optional>

#include "thermowitness/constants.hpp"
#include "thermowitness/gas.hpp"

namespace thermowitness::witness {

/// Equal spatial partition: M cuts per dimension, M^d subsets total.
struct Partition {
    int cuts = 1; ///< M >= 1

    void validate() const;
    double subset_length(const gas::GasSpec& spec) const; ///< L / M [m]
};

enum class Verdict { Entangled, Inconclusive };

/// Either branch of a witness measurement.
struct Measurement {
    enum class Kind { Energy, Temperature };
    Kind kind;
    double value; ///< [J] or [K]

    static Measurement energy(double joules) { return {Kind::Energy, joules}; }
    static Measurement temperature(double kelvin) { return {Kind::Temperature, kelvin}; }
};

struct WitnessReport {
    double e_lowest = 0.0;            ///< separable energy floor [J]
    double t_trans = 0.0;             ///< entanglement transition temperature [K]
    std::optional<double> t_crit;     ///< BEC critical temperature [K], d = 3 only
    double entanglement_length = 0.0; ///< L / M [m]
    Verdict verdict = Verdict::Inconclusive;
    double margin = 0.0; ///< measured value / bound; < 1 certifies entanglement
};

/// Minimum energy of any M-separable configuration:
/// E_lowest(M) = d N hbar^2 pi^2 M^2 / (2 m L^2).
double lowest_separable_energy(const gas::GasSpec& spec, const Partition& part,
                               const PhysicalConstants& pc = codata());

/// Temperature below which every thermal state is entangled:
/// T_trans(M) = (2 pi hbar^2 / (k_B m L^2)) (N M^2 pi / (2 zeta(1+d/2)))^{2/(2+d)}.
double transition_temperature(const gas::GasSpec& spec, const Partition& part,
                              const PhysicalConstants& pc = codata());

/// Transition temperature at the one-particle-per-subset partition M^d = N,
/// expressed through the density alone.
double transition_temperature_fixed_density(const gas::GasSpec& spec,
                                            const PhysicalConstants& pc = codata());

/// Inversion of the transition temperature for the partition count.
struct PartitionInversion {
    double real_cuts;   ///< real-valued M solving T_trans(M) = T
    long floor_cuts;    ///< largest integer M with T_trans(M) <= T
    long nearest_cuts;  ///< nearest integer
};

PartitionInversion max_witnessed_partition(const gas::GasSpec& spec, double temperature,
                                           const PhysicalConstants& pc = codata());

double entanglement_length(const gas::GasSpec& spec, const Partition& part);

/// Compare a measured energy or temperature against the separability bound.
/// Strictly below the bound -> Entangled; at or above -> Inconclusive.
WitnessReport verdict(const gas::GasSpec& spec, const Partition& part,
                      const Measurement& measurement,
                      const PhysicalConstants& pc = codata());

} // namespace thermowitness::witness
