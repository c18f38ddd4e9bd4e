#pragma once

#include <vector>

namespace fermisea {

/// Regularized lower incomplete gamma function P(a, x) = gamma(a, x) / Gamma(a)
/// for a > 0, x >= 0. Series below x = a + 1, Lentz continued fraction above.
/// Throws NumericalError if neither converges.
[[nodiscard]] double regularized_gamma_p(double a, double x);

/// Upper complement Q(a, x) = 1 - P(a, x), accurate when Q is small.
[[nodiscard]] double regularized_gamma_q(double a, double x);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
[[nodiscard]] QuadratureRule gauss_legendre(int n);

/// Composite Gauss-Legendre rule on [lo, hi] split into `panels` equal panels.
[[nodiscard]] QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int nodes_per_panel);

} // namespace fermisea
