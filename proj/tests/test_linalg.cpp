#include "fermisea/linalg.hpp"
#include "fermisea/random.hpp"

#include <doctest.h>

using namespace fermisea;

TEST_CASE("compensated sum recovers digits lost by naive summation") {
    std::vector<double> v{1e16, 1.0, -1e16, 1.0};
    CHECK(compensated_sum(v) == 2.0);
    std::vector<double> many(1000000, 0.1);
    CHECK(std::abs(compensated_sum(many) - 100000.0) < 1e-9);
}

TEST_CASE("hermitian_eigen orders descending and fixes the phase") {
    Rng           rng(3);
    const CMatrix h   = random_hermitian(7, 1.0, rng);
    const auto    eig = hermitian_eigen(h);
    for(Index i = 1; i < eig.values.size(); ++i) CHECK(eig.values[i - 1] >= eig.values[i]);
    for(Index j = 0; j < eig.values.size(); ++j) {
        const CVector v = eig.vectors.col(j);
        CHECK((h * v - eig.values[j] * v).norm() < 1e-12);
        Index big;
        v.cwiseAbs().maxCoeff(&big);
        CHECK(std::abs(v[big].imag()) < 1e-15);
        CHECK(v[big].real() > 0.0);
    }
    CHECK((eig.vectors.adjoint() * eig.vectors - CMatrix::Identity(7, 7)).norm() < 1e-12);

    // Same input twice gives bitwise identical output.
    const auto again = hermitian_eigen(h);
    CHECK(again.vectors == eig.vectors);
    CHECK(again.values == eig.values);
}

TEST_CASE("hermitian_eigenvalues matches the full decomposition") {
    Rng           rng(4);
    const CMatrix h = random_hermitian(5, 2.0, rng);
    CHECK((hermitian_eigenvalues(h) - hermitian_eigen(h).values).norm() < 1e-12);
    CHECK_THROWS_AS((void)hermitian_eigenvalues(CMatrix::Zero(2, 3)), InvalidInput);
}

TEST_CASE("clamp_unit_spectrum") {
    RVector v(4);
    v << -1e-11, 0.3, 1.0 + 1e-11, 1.0;
    const auto c = clamp_unit_spectrum(v);
    CHECK(c == std::vector<double>{0.0, 0.3, 1.0, 1.0});
    v[0] = -2e-10;
    CHECK_THROWS_AS((void)clamp_unit_spectrum(v), NumericalError);
}
