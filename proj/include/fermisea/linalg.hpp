#pragma once

#include "fermisea/types.hpp"

#include <span>
#include <vector>

namespace fermisea {

/// Neumaier-compensated running sum. Summation order is the call order.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if(std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum &operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_  = 0.0;
    double comp_ = 0.0;
};

[[nodiscard]] double compensated_sum(std::span<const double> values);

/// Eigen-decomposition of a Hermitian matrix with a fixed, reproducible gauge.
///
/// Eigenvalues are sorted descending. Ties (within 1e-12) are ordered by the
/// lexicographic order of the real parts of the gauge-fixed eigenvectors.
/// Each eigenvector is rotated so that its largest-magnitude entry (first one
/// on ties) is real and positive.
struct HermitianEigen {
    RVector values;  // descending
    CMatrix vectors; // column i belongs to values[i]
};

[[nodiscard]] HermitianEigen hermitian_eigen(const CMatrix &matrix);
[[nodiscard]] RVector        hermitian_eigenvalues(const CMatrix &matrix);

[[nodiscard]] double max_abs(const CMatrix &matrix);
[[nodiscard]] double hermiticity_defect(const CMatrix &matrix);

/// Clamp a spectrum that must lie in [0,1]. Values within `tolerance` outside
/// the interval are snapped to the boundary; anything further out throws
/// NumericalError.
[[nodiscard]] std::vector<double> clamp_unit_spectrum(const RVector &values, double tolerance = 1e-10);

} // namespace fermisea
