#include "fermisea/special_functions.hpp"
#include "fermisea/types.hpp"

#include "poisson_tail.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fermisea;

TEST_CASE("regularized gamma P against boost and the Poisson tail") {
    double worst_boost = 0.0, worst_tail = 0.0;
    for(long k = 0; k <= 700; k += 7) {
        for(double x : {0.01, 0.5, 1.0, 2.25, 9.0, 25.0, 99.0, 100.0, 101.0, 225.0, 399.0, 400.0, 401.0, 450.0}) {
            const double a   = static_cast<double>(k) + 1.0;
            const double p   = regularized_gamma_p(a, x);
            worst_boost      = std::max(worst_boost, std::abs(p - boost::math::gamma_p(a, x)));
            worst_tail       = std::max(worst_tail, std::abs(p - poisson_upper_tail(k, x)));
            CHECK(std::abs(p + regularized_gamma_q(a, x) - 1.0) <= 1e-15);
        }
    }
    CHECK(worst_boost <= 1e-13);
    CHECK(worst_tail <= 1e-13);
}

TEST_CASE("regularized gamma Q keeps relative accuracy in the upper tail") {
    for(double x : {30.0, 60.0, 120.0}) {
        const double q = regularized_gamma_q(2.0, x);
        CHECK(std::abs(q / boost::math::gamma_q(2.0, x) - 1.0) < 1e-12);
    }
}

TEST_CASE("regularized gamma closed forms and edges") {
    CHECK(regularized_gamma_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(regularized_gamma_p(3.0, 0.0) == 0.0);
    CHECK(regularized_gamma_p(3.0, INFINITY) == 1.0);
    // P(2, x) = 1 - (1 + x) e^{-x}
    for(double x : {0.1, 1.0, 3.0, 10.0})
        CHECK(regularized_gamma_p(2.0, x) == doctest::Approx(1.0 - (1.0 + x) * std::exp(-x)).epsilon(1e-14));
    CHECK_THROWS_AS((void)regularized_gamma_p(0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS((void)regularized_gamma_p(1.0, -1.0), InvalidInput);
}

TEST_CASE("large arguments still converge") {
    // R = 50: x = 2500 with a around the crossover needs more than 300 terms.
    for(double a : {2400.0, 2500.0, 2501.0, 2600.0}) {
        const double p = regularized_gamma_p(a, 2500.0);
        CHECK(std::abs(p - boost::math::gamma_p(a, 2500.0)) <= 1e-12);
    }
}

TEST_CASE("Gauss-Legendre rules") {
    for(int n : {1, 2, 5, 16, 64}) {
        const auto rule = gauss_legendre(n);
        double     sum  = 0.0;
        for(double w : rule.weights) sum += w;
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
        // exact for polynomial degree 2n - 1
        const int deg = 2 * n - 1;
        double    integral = 0.0;
        for(std::size_t i = 0; i < rule.nodes.size(); ++i) integral += rule.weights[i] * std::pow(rule.nodes[i], deg - 1);
        const double exact = (deg - 1) % 2 == 0 ? 2.0 / deg : 0.0;
        CHECK(std::abs(integral - exact) < 1e-14);
    }
    const auto c   = composite_gauss_legendre(0.0, 3.0, 3, 64);
    double     gau = 0.0;
    for(std::size_t i = 0; i < c.nodes.size(); ++i) gau += c.weights[i] * std::exp(-c.nodes[i] * c.nodes[i]);
    CHECK(gau == doctest::Approx(0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS((void)gauss_legendre(0), InvalidInput);
}
