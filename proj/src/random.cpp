#include "fermisea/random.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <numeric>

namespace fermisea {

namespace {

CMatrix gaussian(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix                          m(rows, cols);
    for(Index j = 0; j < cols; ++j)
        for(Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j)         = cplx(re, im);
        }
    return m;
}

CMatrix orthonormal_columns(const CMatrix &a) {
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ() * CMatrix::Identity(a.rows(), a.cols());
    // Remove the R-diagonal phase ambiguity so the result is Haar distributed.
    const CMatrix r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
    for(Index j = 0; j < a.cols(); ++j) {
        const cplx d = r(j, j);
        if(std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

} // namespace

OrbitalSet random_orbitals(Index dim, Index n_occ, Rng &rng) {
    return OrbitalSet(orthonormal_columns(gaussian(dim, n_occ, rng)).transpose());
}

CMatrix random_unitary(Index n, Rng &rng) {
    return orthonormal_columns(gaussian(n, n, rng));
}

CMatrix random_hermitian(Index dim, double scale, Rng &rng) {
    const CMatrix g = gaussian(dim, dim, rng);
    return 0.5 * scale * (g + g.adjoint());
}

std::vector<int> random_sites(int dim, Rng &rng) {
    std::uniform_int_distribution<int> size_dist(1, dim);
    const int                          m = size_dist(rng);
    std::vector<int>                   all(static_cast<std::size_t>(dim));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(m));
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<double> random_unit_values(std::size_t length, Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double>                    v(length);
    for(double &x : v) x = unit(rng);
    return v;
}

} // namespace fermisea
