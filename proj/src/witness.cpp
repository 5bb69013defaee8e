#include "thermowitness/witness.hpp"

#include <cmath>

#include "thermowitness/special.hpp"

namespace thermowitness::witness {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

void Partition::validate() const {
    if (cuts < 1) throw DomainError("Partition: M must be >= 1");
}

double Partition::subset_length(const gas::GasSpec& spec) const {
    validate();
    return spec.box_length / cuts;
}

double lowest_separable_energy(const gas::GasSpec& spec, const Partition& part,
                               const PhysicalConstants& pc) {
    spec.validate();
    part.validate();
    const double m2 = static_cast<double>(part.cuts) * part.cuts;
    return spec.dimension * spec.particle_number * pc.hbar * pc.hbar * kPi * kPi * m2 /
           (2.0 * spec.mass * spec.box_length * spec.box_length);
}

double transition_temperature(const gas::GasSpec& spec, const Partition& part,
                              const PhysicalConstants& pc) {
    spec.validate();
    part.validate();
    const double d = spec.dimension;
    const double m2 = static_cast<double>(part.cuts) * part.cuts;
    const double bracket =
        spec.particle_number * m2 * kPi / (2.0 * special::zeta(1.0 + 0.5 * d));
    return 2.0 * kPi * pc.hbar * pc.hbar /
           (pc.boltzmann * spec.mass * spec.box_length * spec.box_length) *
           std::pow(bracket, 2.0 / (2.0 + d));
}

double transition_temperature_fixed_density(const gas::GasSpec& spec,
                                            const PhysicalConstants& pc) {
    spec.validate();
    const double d = spec.dimension;
    const double bracket = kPi / (2.0 * special::zeta(1.0 + 0.5 * d));
    return 2.0 * kPi * pc.hbar * pc.hbar * std::pow(spec.density(), 2.0 / d) /
           (pc.boltzmann * spec.mass) * std::pow(bracket, 2.0 / (2.0 + d));
}

PartitionInversion max_witnessed_partition(const gas::GasSpec& spec, double temperature,
                                           const PhysicalConstants& pc) {
    spec.validate();
    if (!(temperature > 0.0))
        throw DomainError("max_witnessed_partition: T must be positive");
    const double d = spec.dimension;
    const double scaled = temperature * pc.boltzmann * spec.mass * spec.box_length *
                          spec.box_length / (2.0 * kPi * pc.hbar * pc.hbar);
    const double m2 = 2.0 * special::zeta(1.0 + 0.5 * d) / (spec.particle_number * kPi) *
                      std::pow(scaled, 0.5 * (2.0 + d));
    PartitionInversion inv;
    inv.real_cuts = std::sqrt(m2);
    inv.floor_cuts = static_cast<long>(std::floor(inv.real_cuts));
    inv.nearest_cuts = std::lround(inv.real_cuts);
    return inv;
}

double entanglement_length(const gas::GasSpec& spec, const Partition& part) {
    spec.validate();
    return part.subset_length(spec);
}

WitnessReport verdict(const gas::GasSpec& spec, const Partition& part,
                      const Measurement& measurement, const PhysicalConstants& pc) {
    if (!(measurement.value > 0.0))
        throw DomainError("verdict: measured value must be positive");

    WitnessReport rep;
    rep.e_lowest = lowest_separable_energy(spec, part, pc);
    rep.t_trans = transition_temperature(spec, part, pc);
    rep.entanglement_length = entanglement_length(spec, part);
    if (spec.dimension == 3) rep.t_crit = gas::critical_temperature(spec, pc);

    const double bound =
        measurement.kind == Measurement::Kind::Energy ? rep.e_lowest : rep.t_trans;
    rep.margin = measurement.value / bound;
    // The separability bound is non-strict: equality stays inconclusive.
    rep.verdict = rep.margin < 1.0 ? Verdict::Entangled : Verdict::Inconclusive;
    return rep;
}

} // namespace thermowitness::witness
