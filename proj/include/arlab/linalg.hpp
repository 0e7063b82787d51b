#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "arlab/errors.hpp"

namespace arlab {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Default numeric tolerances. The underlying objects are exact; these only
// absorb floating-point noise and are configurable at each call site.
namespace tol {
inline constexpr double unitary = 1e-10;
inline constexpr double hermitian = 1e-8;
inline constexpr double eig = 1e-9;
inline constexpr double rank = 1e-12;
inline constexpr double eig_cluster = 1e-8;
}  // namespace tol

// --- basic checks -----------------------------------------------------------

void require_finite(const Mat& x, const char* what = "matrix");
void require_square(const Mat& x, const char* what = "matrix");

bool is_unitary(const Mat& u, double tolerance = tol::unitary);
bool is_hermitian(const Mat& x, double tolerance = tol::hermitian);
bool is_projection(const Mat& p, double tolerance = 1e-10);

// Square matrix with ||U*U - I||_op within tolerance, validated on construction.
struct UnitaryMatrix {
    Mat m;

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(Mat u, double tolerance = tol::unitary);

    Eigen::Index dim() const { return m.rows(); }
    UnitaryMatrix adjoint() const;
};

// --- norms and traces -------------------------------------------------------

// tr(x)/n
Complex normalized_trace(const Mat& x);

// (tr(x*x)/n)^{1/2}
double normalized_hs_norm(const Mat& x);

double frobenius_norm(const Mat& x);

// Largest singular value.
double operator_norm(const Mat& x);

// Distance across dimensions: the smaller matrix is padded with a zero block
// to the larger size and the normalized HS norm of the difference is taken
// there. Symmetric in its arguments; a metric on the union of all U(n).
double d2_distance(const Mat& x, const Mat& y);
double d2_distance(const UnitaryMatrix& x, const UnitaryMatrix& y);

// Zero-pad a square matrix to dimension m >= n (top-left corner embedding).
Mat pad_to(const Mat& x, Eigen::Index m);

// --- spectra ----------------------------------------------------------------

// Finite atomic probability measure on the real line: eigenvalues with
// normalized-trace weights.
struct SpectralMeasure {
    struct Atom {
        double value;
        double weight;
    };
    std::vector<Atom> atoms;  // values ascending, weights sum to 1

    double total_weight() const;
    // k-th moment  sum_i w_i v_i^k
    double moment(int k) const;
    // Mass of the closed interval [a, b].
    double interval_weight(double a, double b) const;
};

// Eigenvalues of (x + x*)/2 with multiplicity weights k/n. Eigenvalues closer
// than cluster_tol are merged into one atom. Rejects inputs that are not
// Hermitian within herm_tol.
SpectralMeasure hermitian_spectrum(const Mat& x, double herm_tol = tol::hermitian,
                                   double cluster_tol = tol::eig_cluster);

// tau(chi_[a,b](x)) = (number of eigenvalues in [a,b]) / n, for Hermitian x.
double spectral_interval_weight(const Mat& x, double a, double b,
                                double herm_tol = tol::hermitian);

// Sorted eigenvalues of a Hermitian matrix (ascending, with repetitions).
Eigen::VectorXd hermitian_eigenvalues(const Mat& x, double herm_tol = tol::hermitian);

// --- factorizations ---------------------------------------------------------

// Polar factor UV* from the SVD x = U S V*; the Frobenius-closest unitary to
// x. Rejects matrices whose smallest singular value is below rank_tol.
UnitaryMatrix closest_unitary(const Mat& x, double rank_tol = tol::rank);

// Two largest singular values of a square matrix plus the top right-singular
// vector (unit top eigenvector of T*T).
struct SingularTriple {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Vec top_right_vector;
};

SingularTriple svd_top(const Mat& t);

}  // namespace arlab
