#include "arlab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace arlab {

void require_finite(const Mat& x, const char* what) {
    if (!x.allFinite()) throw validation_error(std::string(what) + ": non-finite entries");
}

void require_square(const Mat& x, const char* what) {
    if (x.rows() != x.cols())
        throw validation_error(std::string(what) + ": expected a square matrix, got " +
                               std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}

bool is_unitary(const Mat& u, double tolerance) {
    if (u.rows() != u.cols() || !u.allFinite()) return false;
    Mat d = u.adjoint() * u - Mat::Identity(u.cols(), u.cols());
    return operator_norm(d) <= tolerance;
}

bool is_hermitian(const Mat& x, double tolerance) {
    if (x.rows() != x.cols() || !x.allFinite()) return false;
    return operator_norm(Mat(x - x.adjoint())) <= tolerance;
}

bool is_projection(const Mat& p, double tolerance) {
    if (p.rows() != p.cols() || !p.allFinite()) return false;
    return operator_norm(Mat(p - p.adjoint())) <= tolerance &&
           operator_norm(Mat(p * p - p)) <= tolerance;
}

UnitaryMatrix::UnitaryMatrix(Mat u, double tolerance) : m(std::move(u)) {
    require_finite(m, "unitary");
    require_square(m, "unitary");
    if (m.rows() == 0) throw validation_error("unitary: empty matrix");
    if (!is_unitary(m, tolerance)) throw validation_error("unitary: ||U*U - I|| exceeds tolerance");
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix r;
    r.m = m.adjoint();
    return r;
}

Complex normalized_trace(const Mat& x) {
    require_square(x, "trace");
    return x.trace() / double(x.rows());
}

double normalized_hs_norm(const Mat& x) {
    require_square(x, "normalized_hs_norm");
    require_finite(x, "normalized_hs_norm");
    return x.norm() / std::sqrt(double(x.rows()));
}

double frobenius_norm(const Mat& x) { return x.norm(); }

double operator_norm(const Mat& x) {
    if (x.size() == 0) return 0.0;
    // The spectral norm via the Hermitian eigenproblem of x*x; cheaper and
    // more stable than a full SVD for repeated small calls.
    Mat g = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

Mat pad_to(const Mat& x, Eigen::Index m) {
    require_square(x, "pad_to");
    if (x.rows() > m) throw validation_error("pad_to: target dimension smaller than input");
    Mat y = Mat::Zero(m, m);
    y.topLeftCorner(x.rows(), x.cols()) = x;
    return y;
}

double d2_distance(const Mat& x, const Mat& y) {
    require_square(x, "d2_distance");
    require_square(y, "d2_distance");
    const Eigen::Index m = std::max(x.rows(), y.rows());
    return normalized_hs_norm(pad_to(x, m) - pad_to(y, m));
}

double d2_distance(const UnitaryMatrix& x, const UnitaryMatrix& y) {
    return d2_distance(x.m, y.m);
}

double SpectralMeasure::total_weight() const {
    double s = 0;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

double SpectralMeasure::moment(int k) const {
    double s = 0;
    for (const auto& a : atoms) s += a.weight * std::pow(a.value, k);
    return s;
}

double SpectralMeasure::interval_weight(double a, double b) const {
    double s = 0;
    for (const auto& at : atoms)
        if (at.value >= a && at.value <= b) s += at.weight;
    return s;
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& x, double herm_tol) {
    require_square(x, "hermitian_eigenvalues");
    require_finite(x, "hermitian_eigenvalues");
    if (!is_hermitian(x, herm_tol))
        throw validation_error("hermitian_eigenvalues: matrix not Hermitian within tolerance");
    Mat h = (x + x.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

SpectralMeasure hermitian_spectrum(const Mat& x, double herm_tol, double cluster_tol) {
    Eigen::VectorXd ev = hermitian_eigenvalues(x, herm_tol);
    const Eigen::Index n = ev.size();
    SpectralMeasure mu;
    Eigen::Index i = 0;
    while (i < n) {
        // Cluster eigenvalues that split only at machine scale.
        Eigen::Index j = i + 1;
        while (j < n && ev[j] - ev[j - 1] <= cluster_tol) ++j;
        double mean = 0;
        for (Eigen::Index k = i; k < j; ++k) mean += ev[k];
        mean /= double(j - i);
        mu.atoms.push_back({mean, double(j - i) / double(n)});
        i = j;
    }
    return mu;
}

double spectral_interval_weight(const Mat& x, double a, double b, double herm_tol) {
    if (a > b) throw validation_error("spectral_interval_weight: empty interval a > b");
    Eigen::VectorXd ev = hermitian_eigenvalues(x, herm_tol);
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] >= a && ev[i] <= b) ++count;
    return double(count) / double(ev.size());
}

UnitaryMatrix closest_unitary(const Mat& x, double rank_tol) {
    require_square(x, "closest_unitary");
    require_finite(x, "closest_unitary");
    Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().minCoeff() < rank_tol)
        throw validation_error("closest_unitary: rank-deficient input");
    return UnitaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

SingularTriple svd_top(const Mat& t) {
    require_square(t, "svd_top");
    require_finite(t, "svd_top");
    // Right-singular data via the Hermitian eigendecomposition of T*T.
    Mat g = t.adjoint() * t;
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    const Eigen::Index n = t.rows();
    SingularTriple out;
    out.lambda1 = std::sqrt(std::max(0.0, es.eigenvalues()[n - 1]));
    out.lambda2 = n >= 2 ? std::sqrt(std::max(0.0, es.eigenvalues()[n - 2])) : 0.0;
    out.top_right_vector = es.eigenvectors().col(n - 1);
    out.top_right_vector.normalize();
    return out;
}

}  // namespace arlab
