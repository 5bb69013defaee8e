#include "thermowitness/special.hpp"

#include <cmath>

namespace thermowitness::special {

namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333e-02,  // B2/2!
    -1.3888888888888889e-03, // B4/4!
    3.3068783068783069e-05,  // B6/6!
    -8.2671957671957672e-07, // B8/8!
    2.0876756987868099e-08,  // B10/10!
    -5.2841901386874932e-10, // B12/12!
    1.3382536530684679e-11,  // B14/14!
    -3.3896802963225829e-13, // B16/16!
    8.5860620562778446e-15,  // B18/18!
    -2.1748686985580619e-16, // B20/20!
};

} // namespace

double zeta(double s) {
    if (!(s > 1.0)) throw DivergentZeta(s);

    // Direct terms, then an Euler-Maclaurin tail at n.
    constexpr int n = 50;
    double sum = 0.0;
    for (int k = n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);

    const double dn = static_cast<double>(n);
    sum += std::pow(dn, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(dn, -s);

    // Correction terms: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * n^{-(s+2j-1)}.
    double rising = s;        // s(s+1)...(s+2j-2)
    double npow = std::pow(dn, -s - 1.0);
    const double inv_n2 = 1.0 / (dn * dn);
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulliOverFactorial[j - 1] * rising * npow;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        npow *= inv_n2;
    }
    return sum;
}

double polylog(double s, double z, const SeriesTolerance& tol) {
    if (!(s > 0.0)) throw DomainError("polylog: order s must be positive");
    if (!(z >= 0.0) || z > 1.0) throw DomainError("polylog: fugacity z must lie in [0,1]");
    if (z == 1.0) {
        if (s <= 1.0) throw DomainError("polylog: Li_s(1) diverges for s <= 1");
        return zeta(s);
    }
    if (z == 0.0) return 0.0;

    // Compensated direct summation; z^k tracked multiplicatively.
    double sum = 0.0;
    double comp = 0.0;
    double zk = 1.0;
    for (std::size_t k = 1; k <= tol.max_terms; ++k) {
        zk *= z;
        const double term = zk / std::pow(static_cast<double>(k), s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term < tol.relative_epsilon * sum) return sum;
    }
    // Geometric tail bound; valid since k^{-s} is decreasing.
    const double last = zk / std::pow(static_cast<double>(tol.max_terms), s);
    const double tail = last * z / (1.0 - z);
    if (tail > 1e-12 * sum)
        throw ConvergenceFailure("polylog: series tail not certified at max_terms");
    return sum + tail;
}

} // namespace thermowitness::special
