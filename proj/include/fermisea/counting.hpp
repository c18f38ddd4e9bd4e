#pragma once

// Counting statistics of quasi-free fermion (and boson) occupation spectra.
//
// Every statistic of a region-restricted quasi-free state is a symmetric
// function of the occupation probabilities d_i of its natural modes: the
// reduced state is a product of independent two-level systems, so the particle
// number is a sum of independent Bernoulli variables. All logarithms are
// natural, entropies are in nats.

#include "fermisea/types.hpp"

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace fermisea {

/// Occupation probabilities of independent fermionic modes, each in [0,1].
class OccupationSpectrum {
public:
    OccupationSpectrum() = default;
    explicit OccupationSpectrum(std::vector<double> values);
    OccupationSpectrum(std::initializer_list<double> values);

    /// Snap eigenvalues within `tolerance` of [0,1] onto the interval and
    /// reject anything further out.
    [[nodiscard]] static OccupationSpectrum from_eigenvalues(const RVector &eigenvalues, double tolerance = 1e-10);

    [[nodiscard]] std::span<const double>    values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<double> &vector() const noexcept { return values_; }
    [[nodiscard]] std::size_t                size() const noexcept { return values_.size(); }
    [[nodiscard]] bool                       empty() const noexcept { return values_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] auto   begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto   end() const noexcept { return values_.end(); }

    [[nodiscard]] OccupationSpectrum concat(const OccupationSpectrum &other) const;

private:
    std::vector<double> values_;
};

struct ChainVerdict {
    bool entropy_ge_bound2 = false;
    bool bound2_ge_bound4  = false;
    [[nodiscard]] bool both() const noexcept { return entropy_ge_bound2 && bound2_ge_bound4; }
    friend bool operator==(const ChainVerdict &, const ChainVerdict &) = default;
};

/// Scalar summary of one spectrum together with the entropy lower-bound chain
///   S >= 4 ln2 * variance >= -8 ln2 * kappa4.
struct CountingReport {
    double       mean         = 0.0;
    double       variance     = 0.0;
    double       kappa4       = 0.0;
    double       entropy_nats = 0.0;
    double       bound2       = 0.0;
    double       bound4       = 0.0;
    ChainVerdict chain_holds;
};

/// Slack allowed when checking the inequality chain against roundoff.
inline constexpr double chain_slack = 1e-12;

/// Binary entropy -x ln x - (1-x) ln(1-x), finite at both endpoints.
[[nodiscard]] double binary_entropy(double x) noexcept;

[[nodiscard]] double entropy(const OccupationSpectrum &spec);
[[nodiscard]] double mean_number(const OccupationSpectrum &spec);
[[nodiscard]] double variance(const OccupationSpectrum &spec);
[[nodiscard]] double fourth_cumulant(const OccupationSpectrum &spec);

inline constexpr int max_cumulant_order = 12;

/// Integer coefficients (ascending powers of d) of the single-mode cumulant
/// polynomial kappa_m(d), generated by kappa_1 = d,
/// kappa_{m+1} = d (1-d) d/dd kappa_m.
[[nodiscard]] std::vector<long long> cumulant_polynomial(int order);

/// m-th cumulant of the particle number, 1 <= order <= 12.
[[nodiscard]] double cumulant(const OccupationSpectrum &spec, int order);

/// chi(lambda) = prod_i (1 + d_i (e^{i lambda} - 1)) = sum_k P(k) e^{i lambda k}.
[[nodiscard]] cplx generating_function(const OccupationSpectrum &spec, double lambda);

inline constexpr std::size_t max_distribution_modes = 1'000'000;

/// Poisson-binomial distribution P(0..n) by iterated convolution.
[[nodiscard]] std::vector<double> number_distribution(const OccupationSpectrum &spec);

[[nodiscard]] CountingReport inequality_report(const OccupationSpectrum &spec);

/// The three single-mode curves bounding each other pointwise on [0,1].
struct BoundFunctions {
    double entropy_fn = 0.0; // -x ln x - (1-x) ln(1-x)
    double bound2_fn  = 0.0; // 4 ln2 x(1-x)
    double bound4_fn  = 0.0; // -8 ln2 x(1-x)(1-6x+6x^2)
};

[[nodiscard]] BoundFunctions fig1_functions(double x);

// Bosons

/// Mean occupations of independent bosonic modes, each >= 0.
class BosonOccupations {
public:
    BosonOccupations() = default;
    explicit BosonOccupations(std::vector<double> values);
    BosonOccupations(std::initializer_list<double> values);
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t             size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

[[nodiscard]] double boson_entropy(const BosonOccupations &occ);
[[nodiscard]] double boson_variance(const BosonOccupations &occ);

struct BosonInequality {
    bool   applicable = false; // every n_i < 1 (dilute gas)
    bool   holds      = false; // S >= ln2 * variance - 1e-12
    double entropy    = 0.0;
    double variance   = 0.0;
    double bound      = 0.0; // ln2 * variance
};

[[nodiscard]] BosonInequality boson_inequality_check(const BosonOccupations &occ);

} // namespace fermisea
