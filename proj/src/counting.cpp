#include "fermisea/counting.hpp"

#include "fermisea/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fermisea {

namespace {

constexpr double ln2 = std::numbers::ln2;

void validate_unit(const std::vector<double> &values) {
    for(std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i];
        if(!(d >= 0.0 && d <= 1.0)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "occupation " << i << " = " << d << " is outside [0,1]";
            throw InvalidInput(msg.str());
        }
    }
}

template<typename Term>
double sum_over(const OccupationSpectrum &spec, Term term) {
    CompensatedSum s;
    for(double d : spec) s += term(d);
    return s.value();
}

} // namespace

OccupationSpectrum::OccupationSpectrum(std::vector<double> values) : values_(std::move(values)) {
    validate_unit(values_);
}

OccupationSpectrum::OccupationSpectrum(std::initializer_list<double> values)
    : OccupationSpectrum(std::vector<double>(values)) {}

OccupationSpectrum OccupationSpectrum::from_eigenvalues(const RVector &eigenvalues, double tolerance) {
    return OccupationSpectrum(clamp_unit_spectrum(eigenvalues, tolerance));
}

OccupationSpectrum OccupationSpectrum::concat(const OccupationSpectrum &other) const {
    std::vector<double> v = values_;
    v.insert(v.end(), other.values_.begin(), other.values_.end());
    return OccupationSpectrum(std::move(v));
}

double binary_entropy(double x) noexcept {
    const double y = 1.0 - x;
    if(x <= 0.0 || y <= 0.0) return 0.0;
    // log1p on the larger argument keeps the small-probability side accurate.
    if(x < 0.5) return -x * std::log(x) - y * std::log1p(-x);
    return -x * std::log1p(-y) - y * std::log(y);
}

double entropy(const OccupationSpectrum &spec) {
    return sum_over(spec, binary_entropy);
}

double mean_number(const OccupationSpectrum &spec) {
    return sum_over(spec, [](double d) { return d; });
}

double variance(const OccupationSpectrum &spec) {
    return sum_over(spec, [](double d) { return d * (1.0 - d); });
}

double fourth_cumulant(const OccupationSpectrum &spec) {
    return sum_over(spec, [](double d) { return d * (1.0 - d) * (1.0 - 6.0 * d + 6.0 * d * d); });
}

std::vector<long long> cumulant_polynomial(int order) {
    if(order < 1 || order > max_cumulant_order) {
        throw InvalidInput("cumulant order must be in [1, " + std::to_string(max_cumulant_order) + "], got " +
                           std::to_string(order));
    }
    std::vector<long long> poly{0, 1}; // kappa_1 = d
    for(int m = 1; m < order; ++m) {
        std::vector<long long> next(poly.size() + 1, 0);
        for(std::size_t j = 0; j + 1 < poly.size(); ++j) {
            // derivative coefficient of d^j, then multiply by d - d^2
            long long deriv = 0;
            if(__builtin_mul_overflow(static_cast<long long>(j + 1), poly[j + 1], &deriv) ||
               __builtin_add_overflow(next[j + 1], deriv, &next[j + 1]) ||
               __builtin_sub_overflow(next[j + 2], deriv, &next[j + 2])) {
                throw NumericalError("cumulant polynomial coefficient overflow");
            }
        }
        poly = std::move(next);
    }
    return poly;
}

double cumulant(const OccupationSpectrum &spec, int order) {
    const auto poly = cumulant_polynomial(order);
    return sum_over(spec, [&](double d) {
        double acc = 0.0;
        for(auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * d + static_cast<double>(*it);
        return acc;
    });
}

cplx generating_function(const OccupationSpectrum &spec, double lambda) {
    // e^{i l} - 1 = 2i sin(l/2) e^{i l/2}, accurate for small l
    const cplx shift = cplx(0.0, 2.0 * std::sin(0.5 * lambda)) * std::polar(1.0, 0.5 * lambda);
    cplx       chi(1.0, 0.0);
    for(double d : spec) chi *= 1.0 + d * shift;
    return chi;
}

std::vector<double> number_distribution(const OccupationSpectrum &spec) {
    const std::size_t n = spec.size();
    if(n > max_distribution_modes) throw InvalidInput("number_distribution: more than 10^6 modes");
    std::vector<double> p(n + 1, 0.0);
    p[0] = 1.0;
    for(std::size_t i = 0; i < n; ++i) {
        const double d = spec[i];
        const double e = 1.0 - d;
        for(std::size_t k = i + 1; k >= 1; --k) p[k] = p[k] * e + p[k - 1] * d;
        p[0] *= e;
    }
    for(double &x : p)
        if(x < 0.0 && x >= -1e-14) x = 0.0;
    return p;
}

CountingReport inequality_report(const OccupationSpectrum &spec) {
    CountingReport r;
    r.mean                           = mean_number(spec);
    r.variance                       = variance(spec);
    r.kappa4                         = fourth_cumulant(spec);
    r.entropy_nats                   = entropy(spec);
    r.bound2                         = 4.0 * ln2 * r.variance;
    r.bound4                         = -8.0 * ln2 * r.kappa4;
    r.chain_holds.entropy_ge_bound2 = r.entropy_nats - r.bound2 >= -chain_slack;
    r.chain_holds.bound2_ge_bound4  = r.bound2 - r.bound4 >= -chain_slack;
    return r;
}

BoundFunctions fig1_functions(double x) {
    if(!(x >= 0.0 && x <= 1.0)) throw InvalidInput("fig1_functions: x must lie in [0,1]");
    const double q = x * (1.0 - x);
    return {binary_entropy(x), 4.0 * ln2 * q, -8.0 * ln2 * q * (1.0 - 6.0 * x + 6.0 * x * x)};
}

BosonOccupations::BosonOccupations(std::vector<double> values) : values_(std::move(values)) {
    for(std::size_t i = 0; i < values_.size(); ++i) {
        if(!(values_[i] >= 0.0) || !std::isfinite(values_[i]))
            throw InvalidInput("boson occupation " + std::to_string(i) + " must be finite and >= 0");
    }
}

BosonOccupations::BosonOccupations(std::initializer_list<double> values)
    : BosonOccupations(std::vector<double>(values)) {}

double boson_entropy(const BosonOccupations &occ) {
    CompensatedSum s;
    for(double n : occ.values()) {
        if(n == 0.0) continue;
        s += (1.0 + n) * std::log1p(n) - n * std::log(n);
    }
    return s.value();
}

double boson_variance(const BosonOccupations &occ) {
    CompensatedSum s;
    for(double n : occ.values()) s += n * (1.0 + n);
    return s.value();
}

BosonInequality boson_inequality_check(const BosonOccupations &occ) {
    BosonInequality r;
    r.applicable = true;
    for(double n : occ.values())
        if(!(n < 1.0)) r.applicable = false;
    r.entropy  = boson_entropy(occ);
    r.variance = boson_variance(occ);
    r.bound    = ln2 * r.variance;
    r.holds    = r.entropy >= r.bound - chain_slack;
    return r;
}

} // namespace fermisea
