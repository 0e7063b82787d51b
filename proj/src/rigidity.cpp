#include "arlab/rigidity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace arlab {

CornerEmbedding::CornerEmbedding(Mat v_) : v(std::move(v_)) {
    require_finite(v, "corner embedding");
    if (v.rows() < v.cols() || v.cols() == 0)
        throw validation_error("corner embedding: expected a tall isometry");
    Mat g = v.adjoint() * v - Mat::Identity(v.cols(), v.cols());
    if (operator_norm(g) > 1e-9)
        throw validation_error("corner embedding: columns are not orthonormal");
}

CornerEmbedding CornerEmbedding::full(Eigen::Index n) {
    return CornerEmbedding(Mat::Identity(n, n));
}

CornerEmbedding CornerEmbedding::from_projection(const Mat& p, double tolerance) {
    require_square(p, "projection");
    if (!is_projection(p, tolerance))
        throw validation_error("corner embedding: matrix is not a projection");
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat((p + p.adjoint()) / 2.0));
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > 0.5) ++rank;
    if (rank == 0) throw validation_error("corner embedding: zero projection");
    return CornerEmbedding(es.eigenvectors().rightCols(rank));
}

namespace {

void check_same_alphabet(const UnitaryRep& pi, const UnitaryRep& rho) {
    const auto& ga = pi.generators();
    const auto& gb = rho.generators();
    if (ga.size() != gb.size())
        throw validation_error("rigidity: representations over different generating sets");
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga.generators[i].first != gb.generators[i].first)
            throw validation_error("rigidity: representations over different generating sets");
}

void check_corner(const UnitaryRep& pi, const UnitaryRep& rho, const CornerEmbedding& corner) {
    check_same_alphabet(pi, rho);
    if (corner.corner_dim() != pi.dim())
        throw validation_error("rigidity: corner dimension does not match pi");
    if (corner.ambient_dim() != rho.dim())
        throw validation_error("rigidity: ambient dimension does not match rho");
}

// Residuals ||pi(g) T rho(g)* - T||_2 / ||p||_2 over a Cayley ball of words.
void fill_residuals(IntertwinerResult& res, const UnitaryRep& pi, const UnitaryRep& rho,
                    const CornerEmbedding& corner, const Mat& t, int radius) {
    const double pnorm = normalized_hs_norm(corner.projection());
    GeneratingSet free_over_names;
    free_over_names.ctx = GroupContext::free_group(int(pi.generators().size()));
    for (std::size_t i = 0; i < pi.generators().size(); ++i)
        free_over_names.generators.emplace_back(pi.generators().generators[i].first,
                                                FreeWord::generator(int(pi.generators().size()),
                                                                    int(i)));
    for (const auto& entry : cayley_ball_entries(free_over_names, radius)) {
        const FreeWord& w = std::get<FreeWord>(entry.element);
        Mat left = corner.embed(pi.evaluate_word(w));
        Mat right = rho.evaluate_word(w);
        double r = normalized_hs_norm(Mat(left * t * right.adjoint() - t)) / pnorm;
        res.residuals[w.key()] = r;
        res.max_residual = std::max(res.max_residual, r);
    }
}

IntertwinerResult finalize(IntertwinerResult res, const UnitaryRep& pi, const UnitaryRep& rho,
                           const CornerEmbedding& corner, const Mat& t, int test_radius) {
    const Mat p = corner.projection();
    const double pnorm = normalized_hs_norm(p);
    const double ratio = normalized_hs_norm(t) / pnorm;
    if (ratio < collapse_floor) {
        res.status = IntertwinerResult::Status::collapsed;
        res.xi = t;
        res.hs_norm_ratio = ratio;
        res.normalized_distance_to_p = normalized_hs_norm(Mat(t - p)) / pnorm;
        return res;
    }
    res.xi = t / ratio;
    res.hs_norm_ratio = 1.0;
    res.normalized_distance_to_p = normalized_hs_norm(Mat(res.xi - p)) / pnorm;
    res.op_norm = operator_norm(res.xi);
    fill_residuals(res, pi, rho, corner, res.xi, test_radius);
    return res;
}

}  // namespace

LeftRightDefect left_right_defect(const UnitaryRep& pi, const UnitaryRep& rho,
                                  const CornerEmbedding& corner, const std::string& generator) {
    check_corner(pi, rho, corner);
    const Mat p = corner.projection();
    if (!is_projection(p, 1e-10)) throw validation_error("left-right defect: p not a projection");
    const double pnorm = normalized_hs_norm(p);
    Mat ps = corner.embed(pi.image(generator));
    Mat rs = rho.image(generator);

    LeftRightDefect out;
    out.direct = normalized_hs_norm(Mat(ps * p * rs.adjoint() - p)) / pnorm;
    Complex cross = normalized_trace(Mat(p * ps * p * rs.adjoint() * p));
    double tau_p = normalized_trace(p).real();
    out.via_trace = std::sqrt(std::max(0.0, 2.0 * (tau_p - cross.real()))) / pnorm;
    if (std::abs(out.direct - out.via_trace) > 1e-9)
        throw hypothesis_error("left-right defect: the two evaluation routes disagree");
    return out;
}

IntertwinerResult averaging_intertwiner(const UnitaryRep& pi, const UnitaryRep& rho,
                                        const CornerEmbedding& corner, int max_iters,
                                        double tolerance, int test_radius) {
    check_corner(pi, rho, corner);
    const Mat p = corner.projection();
    const double pnorm = normalized_hs_norm(p);
    const std::size_t k = pi.generators().size();

    std::vector<Mat> left(k), right(k);
    for (std::size_t i = 0; i < k; ++i) {
        left[i] = corner.embed(pi.image(i));
        right[i] = rho.image(i);
    }

    IntertwinerResult res;
    Mat t = p;
    for (res.iterations = 0; res.iterations < max_iters; ++res.iterations) {
        Mat next = Mat::Zero(t.rows(), t.cols());
        for (std::size_t i = 0; i < k; ++i) next += left[i] * t * right[i].adjoint();
        next /= double(k);
        double step = normalized_hs_norm(Mat(next - t)) / pnorm;
        t = std::move(next);
        if (step < tolerance) {
            res.status = IntertwinerResult::Status::converged;
            break;
        }
    }
    return finalize(std::move(res), pi, rho, corner, t, test_radius);
}

MinNormPoint min_norm_point(const std::vector<Mat>& atoms, double tolerance, int max_iters) {
    if (atoms.empty()) throw validation_error("min norm point: empty atom list");
    const std::size_t m = atoms.size();
    const double n = double(atoms.front().rows());
    for (const auto& a : atoms)
        if (a.rows() != atoms.front().rows() || a.cols() != atoms.front().cols())
            throw validation_error("min norm point: atoms of unequal shape");

    // Real Gram matrix of the normalized HS inner product; the objective is
    // the quadratic form c^T G c on the simplex.
    Eigen::MatrixXd gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double g = (atoms[j].adjoint() * atoms[i]).trace().real() / n;
            gram(i, j) = gram(j, i) = g;
        }

    Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
    // Start from the smallest atom.
    Eigen::Index start;
    gram.diagonal().minCoeff(&start);
    c[start] = 1.0;

    MinNormPoint out;
    Eigen::VectorXd grad = gram.col(start);
    for (out.iterations = 0; out.iterations < max_iters; ++out.iterations) {
        Eigen::Index j;
        grad.minCoeff(&j);
        double gap = 2.0 * (c.dot(grad) - grad[j]);
        if (gap <= tolerance) break;
        // Away atom: worst direction currently carrying weight.
        Eigen::Index a = j;
        double worst = -std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < Eigen::Index(m); ++i)
            if (c[i] > 0 && grad[i] > worst) {
                worst = grad[i];
                a = i;
            }
        if (a != j && c[a] > 0) {
            // Pairwise step: move mass from the away atom to the target atom.
            double denom = gram(j, j) - 2.0 * gram(j, a) + gram(a, a);
            double gamma = denom > 0 ? std::clamp((grad[a] - grad[j]) / denom, 0.0, c[a]) : c[a];
            if (gamma <= 0) break;
            c[j] += gamma;
            c[a] -= gamma;
            grad += gamma * (gram.col(j) - gram.col(a));
        } else {
            // Plain step toward the target vertex with exact line search.
            double cgc = c.dot(grad);
            double denom = cgc - 2.0 * grad[j] + gram(j, j);
            double gamma = denom > 0 ? std::clamp((cgc - grad[j]) / denom, 0.0, 1.0) : 1.0;
            if (gamma <= 0) break;
            c *= (1.0 - gamma);
            c[j] += gamma;
            grad = (1.0 - gamma) * grad + gamma * gram.col(j);
        }
    }

    out.weights.assign(c.data(), c.data() + m);
    out.point = Mat::Zero(atoms.front().rows(), atoms.front().cols());
    for (std::size_t i = 0; i < m; ++i) out.point += c[Eigen::Index(i)] * atoms[i];
    out.objective = c.dot(gram * c);
    return out;
}

IntertwinerResult bounded_intertwiner(const UnitaryRep& pi, const UnitaryRep& rho,
                                      const CornerEmbedding& corner, int ball_radius,
                                      double tolerance, int test_radius) {
    check_corner(pi, rho, corner);
    const Mat p = corner.projection();
    const double pnorm = normalized_hs_norm(p);

    GeneratingSet free_over_names;
    free_over_names.ctx = GroupContext::free_group(int(pi.generators().size()));
    for (std::size_t i = 0; i < pi.generators().size(); ++i)
        free_over_names.generators.emplace_back(pi.generators().generators[i].first,
                                                FreeWord::generator(int(pi.generators().size()),
                                                                    int(i)));
    std::vector<Mat> orbit;
    for (const auto& entry : cayley_ball_entries(free_over_names, ball_radius)) {
        const FreeWord& w = std::get<FreeWord>(entry.element);
        orbit.push_back(corner.embed(pi.evaluate_word(w)) * p * rho.evaluate_word(w).adjoint());
    }

    MinNormPoint mn = min_norm_point(orbit, tolerance);
    IntertwinerResult res;
    res.iterations = mn.iterations;
    double delta = normalized_hs_norm(Mat(mn.point - p)) / pnorm;
    res = finalize(std::move(res), pi, rho, corner, mn.point, test_radius);
    if (res.status == IntertwinerResult::Status::collapsed) return res;
    res.status = IntertwinerResult::Status::converged;
    if (res.op_norm > 2.0 / (1.0 - std::min(delta, 0.99)) + 1e-9)
        throw hypothesis_error("bounded intertwiner: operator norm exceeds the rescaling bound");
    return res;
}

}  // namespace arlab
