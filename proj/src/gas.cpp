#include "thermowitness/gas.hpp"

#include <algorithm>
#include <cmath>

#include "thermowitness/kernels.hpp"
#include "thermowitness/special.hpp"

namespace thermowitness::gas {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Largest fugacity the series-based polylog can certify.
constexpr double kMaxFugacity = 1.0 - 2e-6;

} // namespace

void GasSpec::validate() const {
    if (dimension < 1 || dimension > 3)
        throw DomainError("GasSpec: dimension must be 1, 2 or 3");
    if (!(box_length > 0.0)) throw DomainError("GasSpec: box length must be positive");
    if (!(mass > 0.0)) throw DomainError("GasSpec: mass must be positive");
    if (!(particle_number >= 1.0)) throw DomainError("GasSpec: particle number must be >= 1");
}

double GasSpec::volume() const { return std::pow(box_length, dimension); }

double GasSpec::density() const { return particle_number / volume(); }

double thermal_wavelength(double temperature, double mass, const PhysicalConstants& pc) {
    if (!(temperature > 0.0)) throw DomainError("thermal_wavelength: T must be positive");
    if (!(mass > 0.0)) throw DomainError("thermal_wavelength: mass must be positive");
    return std::sqrt(2.0 * kPi * pc.hbar * pc.hbar / (mass * pc.boltzmann * temperature));
}

double critical_temperature(const GasSpec& spec, const PhysicalConstants& pc) {
    spec.validate();
    if (spec.dimension != 3) throw NoFiniteCondensation(spec.dimension);
    const double z32 = special::zeta(1.5);
    return 2.0 * kPi * pc.hbar * pc.hbar * std::pow(spec.density(), 2.0 / 3.0) /
           (pc.boltzmann * spec.mass * std::pow(z32, 2.0 / 3.0));
}

double internal_energy_condensed(double temperature, const GasSpec& spec,
                                 const PhysicalConstants& pc) {
    spec.validate();
    if (!(temperature > 0.0)) throw DomainError("internal_energy_condensed: T must be positive");
    const double d = spec.dimension;
    const double lambda = thermal_wavelength(temperature, spec.mass, pc);
    return 0.5 * d * pc.boltzmann * temperature * special::zeta(1.0 + 0.5 * d) *
           spec.volume() / std::pow(lambda, d);
}

ThermoPoint solve_fugacity(double temperature, const GasSpec& spec,
                           const PhysicalConstants& pc) {
    spec.validate();
    if (!(temperature > 0.0)) throw DomainError("solve_fugacity: T must be positive");

    const double d = spec.dimension;
    const double lambda = thermal_wavelength(temperature, spec.mass, pc);
    const double target = spec.density() * std::pow(lambda, d); // rho lambda^d
    const double s = 0.5 * d;

    if (spec.dimension == 3 && target >= special::zeta(1.5))
        throw PhaseError("solve_fugacity: T at or below the condensation temperature");

    ThermoPoint pt;
    pt.temperature = temperature;
    pt.phase = Phase::Normal;
    const double energy_prefactor =
        0.5 * d * pc.boltzmann * temperature * spec.volume() / std::pow(lambda, d);

    // Largest target the direct series can still resolve at z = kMaxFugacity,
    // from the known small-(1-z) behaviour of Li_{d/2} (slightly conservative).
    const double delta = 1.0 - kMaxFugacity;
    double series_limit = 0.0;
    switch (spec.dimension) {
        case 1: series_limit = std::sqrt(kPi / delta) - 2.5; break; // + zeta(1/2) - margin
        case 2: series_limit = -std::log(delta) - 0.01; break;      // Li_1 closed form
        case 3:
            series_limit = special::zeta(1.5) - 2.0 * std::sqrt(kPi * delta) - 1e-4;
            break;
    }

    if (target > series_limit) {
        // Just above condensation in d = 3 the series cannot resolve 1 - z.
        // Invert the expansion Li_{3/2}(e^-a) ~ zeta(3/2) - 2 sqrt(pi a)
        // instead; the dropped O(a) terms stay below 1e-8 relative here.
        if (spec.dimension != 3)
            throw DomainError("solve_fugacity: degeneracy too high for the series solver");
        const double alpha =
            std::pow((special::zeta(1.5) - target) / (2.0 * std::sqrt(kPi)), 2.0);
        pt.fugacity = std::exp(-alpha);
        pt.chemical_potential = -pc.boltzmann * temperature * alpha;
        pt.internal_energy =
            energy_prefactor * (special::zeta(2.5) - special::zeta(1.5) * alpha);
        return pt;
    }

    // Bisect to full double resolution; the 1e-12 re-substitution residual
    // then rests only on the polylog accuracy.
    double lo = 0.0;
    double hi = kMaxFugacity;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (special::polylog(s, mid) < target ? lo : hi) = mid;
    }
    const double z = 0.5 * (lo + hi);

    pt.fugacity = z;
    pt.chemical_potential = pc.boltzmann * temperature * std::log(z);
    pt.internal_energy = energy_prefactor * special::polylog(1.0 + s, z);
    return pt;
}

double internal_energy(double temperature, const GasSpec& spec, const PhysicalConstants& pc) {
    spec.validate();
    if (spec.dimension == 3) {
        const double tc = critical_temperature(spec, pc);
        if (temperature <= tc) return internal_energy_condensed(temperature, spec, pc);
    }
    return solve_fugacity(temperature, spec, pc).internal_energy;
}

ModeSet build_mode_set(double temperature, const GasSpec& spec, const PhysicalConstants& pc,
                       double cutoff_factor) {
    spec.validate();
    if (!(temperature > 0.0)) throw DomainError("build_mode_set: T must be positive");

    const double unit = pc.hbar * pc.hbar * kPi * kPi /
                        (2.0 * spec.mass * spec.box_length * spec.box_length);
    const int d = spec.dimension;
    const double e_ground = d * unit;
    const double e_max = e_ground + cutoff_factor * pc.boltzmann * temperature;

    const double cap2 = e_max / unit - (d - 1); // |n|^2 budget for one axis at others = 1
    const int n_max = std::max(1, static_cast<int>(std::floor(std::sqrt(cap2))));
    if (static_cast<double>(n_max) * (d >= 2 ? n_max : 1) * (d >= 3 ? n_max : 1) > 5e7)
        throw DomainError("build_mode_set: mode count exceeds the desk-scale limit");

    ModeSet set;
    set.dimension = d;
    set.max_index = n_max;
    for (int nx = 1; nx <= n_max; ++nx) {
        if (d == 1) {
            const double e = unit * nx * nx;
            if (e <= e_max) set.energies.push_back(e);
            continue;
        }
        for (int ny = 1; ny <= n_max; ++ny) {
            if (d == 2) {
                const double e = unit * (nx * nx + ny * ny);
                if (e <= e_max) set.energies.push_back(e);
                continue;
            }
            for (int nz = 1; nz <= n_max; ++nz) {
                const double e = unit * (nx * nx + ny * ny + nz * nz);
                if (e <= e_max) set.energies.push_back(e);
            }
        }
    }
    std::sort(set.energies.begin(), set.energies.end());
    return set;
}

ThermoPoint discrete_grand_canonical(double temperature, const GasSpec& spec,
                                     const ModeSet& modes, const PhysicalConstants& pc) {
    spec.validate();
    if (!(temperature > 0.0))
        throw DomainError("discrete_grand_canonical: T must be positive");
    if (modes.energies.empty())
        throw DomainError("discrete_grand_canonical: empty mode set");

    const double beta = 1.0 / (pc.boltzmann * temperature);
    const double e0 = modes.energies.front();

    // The first excluded per-axis level must carry negligible weight.
    const double unit = pc.hbar * pc.hbar * kPi * kPi /
                        (2.0 * spec.mass * spec.box_length * spec.box_length);
    const long next = static_cast<long>(modes.max_index) + 1;
    const double e_excluded = unit * (static_cast<double>(next) * next + (spec.dimension - 1));
    if (beta * (e_excluded - e0) < std::log(1e16))
        throw CutoffTooSmall("discrete_grand_canonical: truncated modes are thermally occupied");

    std::vector<double> weights(modes.energies.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        weights[i] = std::exp(-beta * (modes.energies[i] - e0));

    const double target = spec.particle_number;
    // N(mu) is monotone in mu; bracket below the ground level.
    double mu_lo = e0 - 1e3 * pc.boltzmann * temperature;
    double mu_hi = e0 - 1e-15 * std::abs(e0);
    double mu = 0.5 * (mu_lo + mu_hi);
    double n_mean = 0.0;
    for (int iter = 0; iter < 500; ++iter) {
        mu = 0.5 * (mu_lo + mu_hi);
        const double activity = std::exp(beta * (mu - e0));
        n_mean = kernels::bose_sums(weights, modes.energies, activity).number;
        if (std::abs(n_mean - target) <= 1e-9 * target) break;
        (n_mean < target ? mu_lo : mu_hi) = mu;
    }
    if (std::abs(n_mean - target) > 1e-9 * target)
        throw ConvergenceFailure("discrete_grand_canonical: particle-number solve stalled");

    const auto sums = kernels::bose_sums(weights, modes.energies, std::exp(beta * (mu - e0)));
    ThermoPoint pt;
    pt.temperature = temperature;
    pt.chemical_potential = mu;
    // Activity relative to the ground level; stays in [0, 1) like the
    // continuum fugacity convention.
    pt.fugacity = std::exp(beta * (mu - e0));
    pt.internal_energy = sums.energy;
    pt.phase = Phase::Normal;
    return pt;
}

} // namespace thermowitness::gas
