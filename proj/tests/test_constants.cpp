#include <cmath>

#include <doctest.h>

#include "thermowitness/constants.hpp"

using namespace thermowitness;

TEST_CASE("species registry lookups") {
    // 22.98977 u and 1.00782503 u times the CODATA atomic mass unit,
    // evaluated by hand before the build.
    CHECK(lookup_species("sodium-23").mass == doctest::Approx(3.8175411e-26).epsilon(1e-5));
    CHECK(lookup_species("hydrogen-1").mass == doctest::Approx(1.6735328e-27).epsilon(1e-5));
    CHECK(lookup_species("rubidium-87").mass > lookup_species("sodium-23").mass);

    CHECK(lookup_species("SODIUM-23").mass == lookup_species("sodium-23").mass);
    CHECK_THROWS_AS(lookup_species("unobtainium"), UnknownSpecies);
}

TEST_CASE("registry masses lie in the atomic range") {
    for (const auto& sp : species_registry()) {
        CAPTURE(sp.name);
        CHECK(sp.mass > 1e-28);
        CHECK(sp.mass < 1e-24);
        CHECK(lookup_species(sp.name).mass == sp.mass);
    }
}

TEST_CASE("planck units from CODATA constants") {
    const auto pu = planck_units();
    CHECK(pu.temperature == doctest::Approx(1.4e32).epsilon(0.05));
    CHECK(pu.length == doctest::Approx(1.6e-35).epsilon(0.02));
    CHECK(pu.mass == doctest::Approx(2.18e-8).epsilon(0.01));

    // Stored values agree with the recomputed ones to 4 significant digits.
    const auto& pc = codata();
    CHECK(pu.temperature == doctest::Approx(pc.planck_temperature).epsilon(1e-4));
    CHECK(pu.length == doctest::Approx(pc.planck_length).epsilon(1e-4));
    CHECK(pu.mass == doctest::Approx(pc.planck_mass).epsilon(1e-4));
}

TEST_CASE("dimensional consistency of the planck temperature") {
    const auto& pc = codata();
    const double lhs = pc.planck_temperature * pc.boltzmann;
    const double rhs = pc.planck_mass * pc.light_speed * pc.light_speed;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
}

TEST_CASE("all constants strictly positive") {
    const auto& pc = codata();
    for (double v : {pc.hbar, pc.boltzmann, pc.atomic_mass_unit, pc.light_speed,
                     pc.gravitation, pc.planck_mass, pc.planck_length,
                     pc.planck_temperature})
        CHECK(v > 0.0);
}
