#include "arlab/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace arlab {

Cocycle2::Cocycle2(std::function<Complex(const GroupElement&, const GroupElement&)> eval,
                   std::string description)
    : eval_(std::move(eval)),
      description_(std::move(description)),
      memo_(std::make_shared<std::map<std::string, Complex>>()) {}

Complex Cocycle2::operator()(const GroupElement& g, const GroupElement& h) const {
    if (!eval_) throw validation_error("cocycle: empty evaluator");
    std::string key = ge_key(g) + "|" + ge_key(h);
    auto it = memo_->find(key);
    if (it != memo_->end()) return it->second;
    Complex v = eval_(g, h);
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
        throw validation_error("cocycle: value off the unit circle at (" + key + ")");
    memo_->emplace(std::move(key), v);
    return v;
}

Cocycle2 Cocycle2::trivial() {
    return Cocycle2([](const GroupElement&, const GroupElement&) { return Complex(1, 0); },
                    "trivial");
}

std::pair<unsigned, unsigned> unipotent_coordinates(const ModMat& g) {
    if (g.dim != 3) throw validation_error("unipotent coordinates: expected a 3x3 matrix");
    ModMat expected = unipotent_element(g.modulus, g.at(0, 1), g.at(0, 2));
    if (!(expected == g))
        throw validation_error("unipotent coordinates: matrix outside the abelian subgroup");
    return {g.at(0, 1), g.at(0, 2)};
}

ModMat unipotent_element(unsigned n, unsigned a, unsigned b) {
    return ModMat(3, n, {1, a % n, b % n, 0, 1, 0, 0, 0, 1});
}

GeneratingSet heisenberg_group(unsigned n) {
    GeneratingSet s;
    s.ctx = GroupContext::mod(n, 3);
    s.generators = {{"a", unipotent_element(n, 1, 0)}, {"b", unipotent_element(n, 0, 1)}};
    return s;
}

Cocycle2 Cocycle2::heisenberg(unsigned n) {
    return Cocycle2(
        [n](const GroupElement& g, const GroupElement& h) {
            auto [ag, bg] = unipotent_coordinates(std::get<ModMat>(g));
            auto [ah, bh] = unipotent_coordinates(std::get<ModMat>(h));
            (void)bg;
            (void)ah;
            double angle = 2.0 * std::numbers::pi * double(ag) * double(bh) / double(n);
            return std::polar(1.0, angle);
        },
        "heisenberg:" + std::to_string(n));
}

Cocycle2 Cocycle2::coboundary(std::function<Complex(const GroupElement&)> phase,
                              std::string description) {
    return Cocycle2(
        [phase](const GroupElement& g, const GroupElement& h) {
            return phase(g) * phase(h) / phase(ge_mul(g, h));
        },
        std::move(description));
}

Cocycle2 Cocycle2::from_table(std::map<std::string, Complex> table, std::string description) {
    auto tbl = std::make_shared<std::map<std::string, Complex>>(std::move(table));
    return Cocycle2(
        [tbl](const GroupElement& g, const GroupElement& h) {
            auto it = tbl->find(ge_key(g) + "|" + ge_key(h));
            if (it == tbl->end())
                throw validation_error("cocycle table: missing pair (" + ge_key(g) + ", " +
                                       ge_key(h) + ")");
            return it->second;
        },
        std::move(description));
}

CocycleReport cocycle_checks(const Cocycle2& c, const std::vector<GroupElement>& test_set,
                             double certify_threshold) {
    CocycleReport rep;
    for (const auto& g : test_set)
        for (const auto& h : test_set) {
            for (const auto& k : test_set) {
                Complex lhs = c(g, h) * c(ge_mul(g, h), k);
                Complex rhs = c(h, k) * c(g, ge_mul(h, k));
                rep.identity_residual = std::max(rep.identity_residual, std::abs(lhs - rhs));
            }
            if (ge_equal(ge_mul(g, h), ge_mul(h, g))) {
                Complex beta = c(g, h) / c(h, g);
                rep.commuting_pairs.push_back({g, h, beta});
                rep.max_beta_deviation =
                    std::max(rep.max_beta_deviation, std::abs(beta - Complex(1, 0)));
            }
        }
    rep.non_coboundary_certified = rep.max_beta_deviation > certify_threshold;
    return rep;
}

UnitaryRep twisted_regular_rep(const GeneratingSet& gens, const Cocycle2& c) {
    gens.validate();
    if (gens.ctx.kind == GroupKind::sl2int)
        throw validation_error("twisted regular representation: group must be finite");

    // Exhaust the group through growing balls.
    std::vector<GroupElement> elements;
    std::size_t prev = 0;
    for (int r = 1; r <= 256; ++r) {
        elements = cayley_ball(gens, r);
        if (elements.size() == prev) break;
        prev = elements.size();
        if (r == 256) throw validation_error("twisted regular representation: group too large");
    }
    std::sort(elements.begin(), elements.end(),
              [](const GroupElement& a, const GroupElement& b) { return ge_key(a) < ge_key(b); });

    auto index = std::make_shared<std::map<std::string, Eigen::Index>>();
    for (std::size_t i = 0; i < elements.size(); ++i)
        index->emplace(ge_key(elements[i]), Eigen::Index(i));
    auto elems = std::make_shared<std::vector<GroupElement>>(std::move(elements));
    const Eigen::Index dim = Eigen::Index(elems->size());

    auto u_of = [index, elems, c, dim](const GroupElement& g) {
        Mat u = Mat::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            const GroupElement& h = (*elems)[std::size_t(col)];
            GroupElement gh = ge_mul(g, h);
            u(index->at(ge_key(gh)), col) = c(g, h);
        }
        return u;
    };

    std::map<std::string, Mat> images;
    for (const auto& [name, g] : gens.generators) images[name] = u_of(g);
    UnitaryRep rep(gens, images);
    rep.set_element_evaluator(u_of);
    return rep;
}

double projective_defect(const ProjectiveAlmostRep& par,
                         const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
    double d = 0;
    for (const auto& [g, h] : pairs) {
        Mat lhs = par.rep.evaluate_element(g) * par.rep.evaluate_element(h);
        Mat rhs = par.cocycle(g, h) * par.rep.evaluate_element(ge_mul(g, h));
        d = std::max(d, normalized_hs_norm(Mat(lhs - rhs)));
    }
    return d;
}

UnitaryRep tensor_conjugate_square(const UnitaryRep& rep) {
    std::map<std::string, Mat> images;
    const Eigen::Index d = rep.dim();
    for (std::size_t i = 0; i < rep.generators().size(); ++i) {
        const Mat& u = rep.image(i);
        Mat big(d * d, d * d);
        for (Eigen::Index r = 0; r < d; ++r)
            for (Eigen::Index cc = 0; cc < d; ++cc)
                big.block(r * d, cc * d, d, d) = u(r, cc) * u.conjugate();
        images[rep.generators().generators[i].first] = big;
    }
    return UnitaryRep(rep.generators(), images);
}

double theta0_default() { return 0.0039; }

double theta0_supremum(double tolerance) {
    // Admissibility in terms of a = 1 - sqrt(2 t): a >= 1/sqrt(2) and
    // a - sqrt(1 - a^2) > 1/2. The binding constraint is the second; its
    // boundary a* solves a - sqrt(1 - a^2) = 1/2, and the supremum is
    // (1 - a*)^2 / 2.
    auto f = [](double a) { return a - std::sqrt(1.0 - a * a) - 0.5; };
    double lo = 1.0 / std::sqrt(2.0), hi = 1.0;
    while (hi - lo > tolerance) {
        double mid = (lo + hi) / 2.0;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    double a = (lo + hi) / 2.0;
    return (1.0 - a) * (1.0 - a) / 2.0;
}

ConnesExtraction connes_extract(const std::vector<UnitaryMatrix>& unitaries, const Mat& t,
                                double epsilon_claim, const Vec& xi_witness) {
    require_square(t, "connes extract");
    require_finite(t, "connes extract");
    if (epsilon_claim < 0 || epsilon_claim > 0.125)
        throw hypothesis_error("connes extract: epsilon must lie in [0, 1/8] for a nonvacuous bound");
    if (std::abs(frobenius_norm(t) - 1.0) > 1e-9)
        throw hypothesis_error("connes extract: ||T||_F must equal 1");
    if (std::abs(xi_witness.norm() - 1.0) > 1e-9)
        throw hypothesis_error("connes extract: witness vector must be a unit vector");
    if (xi_witness.size() != t.rows())
        throw validation_error("connes extract: witness dimension mismatch");
    Mat rank_one = xi_witness * xi_witness.adjoint();
    double witness_dist = frobenius_norm(Mat(t - rank_one));
    if (!(witness_dist < theta0_default()))
        throw hypothesis_error("connes extract: ||T - xi xi*||_F = " +
                               std::to_string(witness_dist) + " is not below theta0");

    ConnesExtraction out;
    for (const auto& u : unitaries) {
        if (u.dim() != t.rows()) throw validation_error("connes extract: unitary of wrong size");
        out.epsilon_measured =
            std::max(out.epsilon_measured, frobenius_norm(Mat(u.m * t * u.m.adjoint() - t)));
    }
    if (out.epsilon_measured > epsilon_claim + 1e-12) {
        std::ostringstream msg;
        msg << "connes extract: measured invariance defect " << out.epsilon_measured
            << " exceeds the claimed " << epsilon_claim;
        throw hypothesis_error(msg.str());
    }

    SingularTriple top = svd_top(t);
    out.lambda1 = top.lambda1;
    out.lambda2 = top.lambda2;
    out.eta = top.top_right_vector;
    if (out.lambda1 < 0.5 - tol::eig)
        throw hypothesis_error("connes extract: top singular value below 1/2");
    if (out.lambda1 - out.lambda2 <= tol::eig_cluster)
        throw hypothesis_error("connes extract: top singular value is not simple");

    out.min_overlap = 1.0;
    for (const auto& u : unitaries)
        out.min_overlap = std::min(out.min_overlap, std::abs((u.m * out.eta).dot(out.eta)));
    double bound = std::sqrt(std::max(0.0, 1.0 - 8.0 * out.epsilon_measured));
    if (out.min_overlap + 1e-12 < bound) {
        std::ostringstream msg;
        msg << "connes extract: overlap " << out.min_overlap << " fell below sqrt(1 - 8 eps) = "
            << bound;
        throw hypothesis_error(msg.str());
    }
    return out;
}

TrivializationResult phase_trivialization(const ProjectiveAlmostRep& par, const UnitaryRep& rho,
                                          const Mat& eta, const std::vector<GroupElement>& test_set,
                                          double phase_floor, double trivial_tol) {
    if (par.rep.dim() != rho.dim() || eta.rows() != rho.dim() || eta.cols() != rho.dim())
        throw validation_error("phase trivialization: dimension mismatch");
    const double eta_sq = normalized_hs_norm(eta) * normalized_hs_norm(eta);
    if (eta_sq <= 0) throw validation_error("phase trivialization: zero intertwiner");

    TrivializationResult out;
    auto phase_of = [&](const GroupElement& g) -> Complex {
        std::string key = ge_key(g);
        auto it = out.phases.find(key);
        if (it != out.phases.end()) return it->second;
        Mat moved = par.rep.evaluate_element(g) * eta * rho.evaluate_element(g).adjoint();
        // <moved, eta> in the normalized HS inner product
        Complex z = (eta.adjoint() * moved).trace() / double(eta.rows());
        if (std::abs(z) < phase_floor * eta_sq)
            throw hypothesis_error("phase trivialization: inner product vanishes at '" + key +
                                   "'");
        Complex lambda = z / std::abs(z);
        out.phases.emplace(key, lambda);
        return lambda;
    };

    for (const auto& g : test_set) phase_of(g);
    for (const auto& g : test_set)
        for (const auto& h : test_set) {
            Complex db = phase_of(g) * phase_of(h) / phase_of(ge_mul(g, h));
            out.coboundary_residual =
                std::max(out.coboundary_residual, std::abs(db - par.cocycle(g, h)));
        }
    out.status = out.coboundary_residual < trivial_tol
                     ? TrivializationResult::Status::trivialized
                     : TrivializationResult::Status::residual_too_large;
    return out;
}

}  // namespace arlab
