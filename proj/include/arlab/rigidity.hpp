#pragma once

#include <map>
#include <string>
#include <vector>

#include "arlab/linalg.hpp"
#include "arlab/rep.hpp"

namespace arlab {

// A representation acting on the corner p M_n p, stored on its own r-dim
// space together with the isometry embedding that space into C^n. The
// projection is p = V V*.
struct CornerEmbedding {
    Mat v;  // n x r, V*V = I_r

    explicit CornerEmbedding(Mat v_);
    static CornerEmbedding full(Eigen::Index n);  // p = 1
    // Isometry onto the range of a projection (eigenvectors at eigenvalue 1).
    static CornerEmbedding from_projection(const Mat& p, double tolerance = 1e-10);

    Eigen::Index ambient_dim() const { return v.rows(); }
    Eigen::Index corner_dim() const { return v.cols(); }
    Mat projection() const { return v * v.adjoint(); }
    // Embed an r x r corner operator as an n x n matrix supported on the corner.
    Mat embed(const Mat& corner_op) const { return v * corner_op * v.adjoint(); }
};

inline constexpr double collapse_floor = 0.1;

struct IntertwinerResult {
    enum class Status { converged, collapsed, max_iters };

    Mat xi;                              // in p M_n, rescaled so the ratio is 1
    double normalized_distance_to_p = 0; // ||xi - p||_2 / ||p||_2
    double hs_norm_ratio = 0;            // ||xi||_2 / ||p||_2
    double op_norm = 0;
    std::map<std::string, double> residuals;  // element key -> ||pi(g) xi rho(g)* - xi||_2 / ||p||_2
    double max_residual = 0;
    Status status = Status::max_iters;
    int iterations = 0;
};

struct LeftRightDefect {
    double direct = 0;     // ||pi(s) p rho(s)* - p||_2 / ||p||_2
    double via_trace = 0;  // sqrt(2 (tau(p) - Re tau(p pi(s) p rho(s)* p))) / ||p||_2
};

// Both routes are computed and must agree within 1e-9.
LeftRightDefect left_right_defect(const UnitaryRep& pi, const UnitaryRep& rho,
                                  const CornerEmbedding& corner, const std::string& generator);

// Iterates T <- (1/|S|) sum_s pi(s) T rho(s)* from T0 = p. The map is a
// 2-norm contraction whose fixed points intertwine; a limit with HS ratio
// below collapse_floor is reported as collapsed.
IntertwinerResult averaging_intertwiner(const UnitaryRep& pi, const UnitaryRep& rho,
                                        const CornerEmbedding& corner, int max_iters = 2000,
                                        double tolerance = 1e-12, int test_radius = 2);

struct MinNormPoint {
    std::vector<double> weights;  // convex coefficients over the atoms
    Mat point;
    double objective = 0;  // ||point||_2^2
    int iterations = 0;
};

// Frank-Wolfe minimization of ||sum_g c_g A_g||_2^2 over the simplex. Atom
// subproblems are exact argmins over the finite atom set; the objective is
// nonincreasing (exact line search) and iteration stops at duality gap <= tol.
MinNormPoint min_norm_point(const std::vector<Mat>& atoms, double tolerance = 1e-12,
                            int max_iters = 200000);

// Min-norm point of the orbit {pi(g) p rho(g)* : g in B_radius}, rescaled to
// unit HS ratio. Records the operator norm and asserts the rescaled bound
// op_norm <= 2 / (1 - delta) with delta the pre-rescaling distance to p.
IntertwinerResult bounded_intertwiner(const UnitaryRep& pi, const UnitaryRep& rho,
                                      const CornerEmbedding& corner, int ball_radius = 2,
                                      double tolerance = 1e-12, int test_radius = 2);

}  // namespace arlab
