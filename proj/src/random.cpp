#include "arlab/random.hpp"

#include <Eigen/QR>

namespace arlab {

Mat ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    Mat g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    return g;
}

UnitaryMatrix haar_unitary(Rng& rng, Eigen::Index n) {
    Mat g = ginibre(rng, n, n);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the diagonal phases so the distribution is Haar, not QR-biased.
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= (a > 0) ? d / a : Complex(1, 0);
    }
    return UnitaryMatrix(std::move(q));
}

Mat random_hermitian(Rng& rng, Eigen::Index n) {
    Mat g = ginibre(rng, n, n);
    return (g + g.adjoint()) / 2.0;
}

Mat random_projection(Rng& rng, Eigen::Index n, Eigen::Index r) {
    UnitaryMatrix u = haar_unitary(rng, n);
    Mat v = u.m.leftCols(r);
    return v * v.adjoint();
}

Vec random_unit_vector(Rng& rng, Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(rng.normal(), rng.normal());
    v.normalize();
    return v;
}

}  // namespace arlab
