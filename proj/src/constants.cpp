#include "thermowitness/constants.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace thermowitness {

namespace {

PhysicalConstants make_codata() {
    PhysicalConstants pc{};
    pc.hbar = 1.054571817e-34;
    pc.boltzmann = 1.380649e-23;
    pc.atomic_mass_unit = 1.66053906660e-27;
    pc.light_speed = 299792458.0;
    pc.gravitation = 6.67430e-11;
    pc.planck_mass = 2.176434e-8;
    pc.planck_length = 1.616255e-35;
    pc.planck_temperature = 1.416784e32;
    return pc;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

const PhysicalConstants& codata() {
    static const PhysicalConstants pc = make_codata();
    return pc;
}

PlanckUnits planck_units(const PhysicalConstants& pc) {
    PlanckUnits pu{};
    pu.mass = std::sqrt(pc.hbar * pc.light_speed / pc.gravitation);
    pu.length = std::sqrt(pc.hbar * pc.gravitation /
                          (pc.light_speed * pc.light_speed * pc.light_speed));
    pu.temperature = std::sqrt(pc.hbar * std::pow(pc.light_speed, 5) / pc.gravitation) /
                     pc.boltzmann;
    return pu;
}

const std::vector<ParticleSpecies>& species_registry() {
    static const std::vector<ParticleSpecies> registry = [] {
        const double u = codata().atomic_mass_unit;
        // Atomic masses in u (AME2020, rounded).
        return std::vector<ParticleSpecies>{
            {"hydrogen-1", 1.00782503 * u},
            {"helium-4", 4.00260325 * u},
            {"lithium-7", 7.01600344 * u},
            {"sodium-23", 22.98977 * u},
            {"potassium-39", 38.96370649 * u},
            {"rubidium-87", 86.90918053 * u},
            {"cesium-133", 132.90545196 * u},
        };
    }();
    return registry;
}

ParticleSpecies lookup_species(std::string_view name) {
    const std::string key = lower(name);
    for (const auto& sp : species_registry()) {
        if (sp.name == key) return sp;
    }
    throw UnknownSpecies(std::string(name));
}

} // namespace thermowitness
