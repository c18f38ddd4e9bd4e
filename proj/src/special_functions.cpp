#include "fermisea/special_functions.hpp"

#include "fermisea/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fermisea {

namespace {

constexpr double relative_eps = 1e-15;
constexpr double tiny         = 1e-300;

int iteration_cap(double a, double x) {
    // Both expansions need O(sqrt(a)) terms near the transition x ~ a.
    return std::max(300, static_cast<int>(std::ceil(10.0 * std::sqrt(std::max(a, x)))));
}

// Stirling remainder lgamma(a) - [(a - 1/2) ln a - a + ln(2 pi)/2], a >= 15.
double stirling_remainder(double a) {
    const double r  = 1.0 / a;
    const double r2 = r * r;
    return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680 - r2 / 1188))));
}

// x^a e^{-x} / Gamma(a), with the large-a cancellation between a ln x, x and
// lgamma(a) removed analytically.
double gamma_prefactor(double a, double x) {
    if(a < 15.0) return std::exp(a * std::log(x) - x - std::lgamma(a));
    const double t = (x - a) / a;
    const double e = a * (std::log1p(t) - t) + 0.5 * std::log(a / (2.0 * std::numbers::pi)) - stirling_remainder(a);
    return std::exp(e);
}

// sum_{n>=0} x^n / (a (a+1) ... (a+n)), so that P = prefactor * series.
double lower_series(double a, double x) {
    const int cap = iteration_cap(a, x);
    double    ap  = a;
    double    del = 1.0 / a;
    double    sum = del;
    for(int n = 0; n < cap; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if(std::abs(del) < std::abs(sum) * relative_eps) return sum;
    }
    throw NumericalError("incomplete gamma series did not converge (a=" + std::to_string(a) +
                         ", x=" + std::to_string(x) + ")");
}

// Modified Lentz evaluation of the continued fraction with Q = prefactor * cf.
double upper_fraction(double a, double x) {
    const int cap = iteration_cap(a, x);
    double    b   = x + 1.0 - a;
    double    c   = 1.0 / tiny;
    double    d   = 1.0 / b;
    double    h   = d;
    for(int i = 1; i <= cap; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if(std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if(std::abs(c) < tiny) c = tiny;
        d              = 1.0 / d;
        const double s = d * c;
        h *= s;
        if(std::abs(s - 1.0) < relative_eps) return h;
    }
    throw NumericalError("incomplete gamma continued fraction did not converge (a=" + std::to_string(a) +
                         ", x=" + std::to_string(x) + ")");
}

void check_args(double a, double x) {
    if(!(a > 0.0) || !(x >= 0.0) || !std::isfinite(a)) throw InvalidInput("incomplete gamma: need a > 0 and x >= 0");
}

} // namespace

double regularized_gamma_p(double a, double x) {
    check_args(a, x);
    if(x == 0.0) return 0.0;
    if(std::isinf(x)) return 1.0;
    if(x < a + 1.0) return std::min(1.0, gamma_prefactor(a, x) * lower_series(a, x));
    return 1.0 - gamma_prefactor(a, x) * upper_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
    check_args(a, x);
    if(x == 0.0) return 1.0;
    if(std::isinf(x)) return 0.0;
    if(x < a + 1.0) return 1.0 - std::min(1.0, gamma_prefactor(a, x) * lower_series(a, x));
    return gamma_prefactor(a, x) * upper_fraction(a, x);
}

QuadratureRule gauss_legendre(int n) {
    if(n < 1) throw InvalidInput("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for(int i = 0; i < m; ++i) {
        double z  = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for(int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for(int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2              = p1;
                p1              = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp             = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if(std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        const auto   lo = static_cast<std::size_t>(i);
        const auto   hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo]   = -z;
        rule.nodes[hi]   = z;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int nodes_per_panel) {
    if(panels < 1 || !(hi >= lo)) throw InvalidInput("composite_gauss_legendre: bad interval or panel count");
    const QuadratureRule base  = gauss_legendre(nodes_per_panel);
    const double         width = (hi - lo) / panels;
    QuadratureRule       rule;
    rule.nodes.reserve(base.nodes.size() * static_cast<std::size_t>(panels));
    rule.weights.reserve(rule.nodes.capacity());
    for(int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        for(std::size_t i = 0; i < base.nodes.size(); ++i) {
            rule.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
            rule.weights.push_back(0.5 * width * base.weights[i]);
        }
    }
    return rule;
}

} // namespace fermisea
