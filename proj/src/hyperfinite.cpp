#include "arlab/hyperfinite.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

namespace arlab {

void BlockSubalgebra::validate() const {
    if (ambient_dim <= 0) throw validation_error("block subalgebra: empty ambient space");
    if (change_of_basis.dim() != ambient_dim)
        throw validation_error("block subalgebra: change of basis has wrong dimension");
    Eigen::Index total = 0;
    for (auto [d, m] : blocks) {
        if (d <= 0 || m <= 0) throw validation_error("block subalgebra: nonpositive block size");
        total += d * m;
    }
    if (total != ambient_dim)
        throw validation_error("block subalgebra: blocks fill " + std::to_string(total) +
                               " of " + std::to_string(ambient_dim) + " dimensions");
}

Eigen::Index BlockSubalgebra::subhomogeneity_degree() const {
    Eigen::Index d = 0;
    for (auto [dk, mk] : blocks) d = std::max(d, dk);
    return d;
}

Eigen::Index BlockSubalgebra::dimension() const {
    Eigen::Index s = 0;
    for (auto [dk, mk] : blocks) s += dk * dk;
    return s;
}

BlockSubalgebra BlockSubalgebra::unitalized() const {
    Eigen::Index total = 0;
    for (auto [d, m] : blocks) total += d * m;
    if (total == ambient_dim) return *this;
    if (total > ambient_dim) throw validation_error("block subalgebra: blocks exceed ambient");
    BlockSubalgebra q = *this;
    q.blocks.emplace_back(1, ambient_dim - total);  // scalar block on the complement
    return q;
}

std::string BlockSubalgebra::descriptor_key() const {
    std::string s;
    for (auto [d, m] : blocks) s += std::to_string(d) + "x" + std::to_string(m) + ";";
    return s;
}

BlockSubalgebra BlockSubalgebra::full(Eigen::Index n) {
    return {n, UnitaryMatrix(Mat::Identity(n, n)), {{n, 1}}};
}

BlockSubalgebra BlockSubalgebra::scalars(Eigen::Index n) {
    return {n, UnitaryMatrix(Mat::Identity(n, n)), {{1, n}}};
}

BlockSubalgebra BlockSubalgebra::diagonal(Eigen::Index n) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks(std::size_t(n), {1, 1});
    return {n, UnitaryMatrix(Mat::Identity(n, n)), blocks};
}

Mat conditional_expectation(const BlockSubalgebra& q, const Mat& x) {
    q.validate();
    require_square(x, "conditional expectation");
    if (x.rows() != q.ambient_dim)
        throw validation_error("conditional expectation: dimension mismatch");

    const Mat& u = q.change_of_basis.m;
    Mat y = u.adjoint() * x * u;
    Mat z = Mat::Zero(x.rows(), x.cols());
    Eigen::Index off = 0;
    for (auto [d, m] : q.blocks) {
        // Average the m x m multiplicity fibers: the block pattern is A (x) 1_m
        // with index (i, a) = i*m + a.
        Mat avg = Mat::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) {
                Complex s = 0;
                for (Eigen::Index a = 0; a < m; ++a) s += y(off + i * m + a, off + j * m + a);
                avg(i, j) = s / double(m);
            }
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index a = 0; a < m; ++a)
                    z(off + i * m + a, off + j * m + a) = avg(i, j);
        off += d * m;
    }
    return u * z * u.adjoint();
}

HyperfiniteCheck hyperfinite_certificate_check(const std::vector<Mat>& tuple,
                                               const HyperfiniteCertificate& cert) {
    HyperfiniteCheck out;
    try {
        cert.subalgebra.validate();
    } catch (const validation_error& e) {
        out.reason = e.what();
        return out;
    }
    if (tuple.empty()) {
        out.reason = "empty tuple";
        return out;
    }
    for (const auto& x : tuple)
        if (x.rows() != cert.subalgebra.ambient_dim || x.cols() != cert.subalgebra.ambient_dim) {
            out.reason = "tuple dimension does not match the subalgebra";
            return out;
        }

    double eps = 0.0;
    for (const auto& x : tuple)
        eps = std::max(eps, normalized_hs_norm(Mat(x - conditional_expectation(cert.subalgebra, x))));
    out.epsilon_measured = eps;

    Eigen::Index d = cert.mode == HyperfiniteMode::subhomogeneity
                         ? cert.subalgebra.subhomogeneity_degree()
                         : cert.subalgebra.dimension();
    if (d > cert.D_bound) {
        out.reason = "D bound violated: " + std::to_string(d) + " > " +
                     std::to_string(cert.D_bound);
        return out;
    }
    if (eps > cert.epsilon) {
        out.reason = "epsilon understated: measured " + std::to_string(eps);
        return out;
    }
    out.pass = true;
    return out;
}

namespace {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Superoperator of Y -> sum_i [Y, x_i] (plus adjoint terms) acting on
// column-major vec(Y); its kernel is the commutant of the *-algebra the
// tuple generates.
Mat commutant_form(const std::vector<Mat>& tuple) {
    const Eigen::Index n = tuple.front().rows();
    Mat id = Mat::Identity(n, n);
    Mat k = Mat::Zero(n * n, n * n);
    for (const Mat& x : tuple) {
        for (const Mat& v : {x, Mat(x.adjoint())}) {
            Mat ad = kron(id, v) - kron(v.transpose(), id);
            k += ad.adjoint() * ad;
        }
    }
    return k;
}

}  // namespace

std::optional<HyperfiniteCertificate> heuristic_block_finder(const std::vector<Mat>& tuple,
                                                             double target_epsilon,
                                                             std::uint64_t seed,
                                                             double cluster_tol) {
    if (tuple.empty()) return std::nullopt;
    const Eigen::Index n = tuple.front().rows();
    for (const auto& x : tuple) {
        require_square(x, "block finder");
        require_finite(x, "block finder");
        if (x.rows() != n) throw validation_error("block finder: unequal dimensions");
    }

    std::vector<HyperfiniteCertificate> candidates;
    auto add_candidate = [&](BlockSubalgebra q) {
        q = q.unitalized();
        HyperfiniteCertificate cert;
        cert.subalgebra = std::move(q);
        cert.mode = HyperfiniteMode::subhomogeneity;
        cert.D_bound = cert.subalgebra.subhomogeneity_degree();
        HyperfiniteCheck chk = hyperfinite_certificate_check(tuple, {cert.subalgebra, 2.0,
                                                                     cert.D_bound, cert.mode});
        if (!chk.pass) return;
        cert.epsilon = chk.epsilon_measured;
        candidates.push_back(std::move(cert));
    };

    add_candidate(BlockSubalgebra::scalars(n));
    add_candidate(BlockSubalgebra::full(n));

    // Approximate commutant: near-kernel of the positive form.
    Mat k = commutant_form(tuple);
    Eigen::SelfAdjointEigenSolver<Mat> es(k);
    const double scale = std::max(1.0, es.eigenvalues().maxCoeff());
    const double kernel_floor = 1e-9 * scale;
    std::vector<Eigen::Index> kernel_cols;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] <= kernel_floor) kernel_cols.push_back(i);

    if (kernel_cols.size() > 1) {
        // Generic Hermitian commutant element: a seeded random combination of
        // the kernel basis, symmetrized. The kernel is *-closed, so the
        // Hermitian part stays inside it.
        Rng rng(seed);
        Mat z = Mat::Zero(n, n);
        for (Eigen::Index col : kernel_cols) {
            Complex c(rng.normal(), rng.normal());
            Mat y = Eigen::Map<const Mat>(es.eigenvectors().col(col).data(), n, n);
            z += c * y;
        }
        Mat h = (z + z.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<Mat> hes(h);

        std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks;
        Eigen::Index i = 0;
        while (i < n) {
            Eigen::Index j = i + 1;
            while (j < n && hes.eigenvalues()[j] - hes.eigenvalues()[j - 1] <= cluster_tol) ++j;
            blocks.emplace_back(j - i, 1);
            i = j;
        }
        add_candidate(BlockSubalgebra{n, UnitaryMatrix(hes.eigenvectors()), blocks});
    }

    std::optional<HyperfiniteCertificate> best;
    for (auto& cand : candidates) {
        if (cand.epsilon > target_epsilon) continue;
        if (!best || std::tuple(cand.D_bound, cand.epsilon, cand.subalgebra.descriptor_key()) <
                         std::tuple(best->D_bound, best->epsilon,
                                    best->subalgebra.descriptor_key()))
            best = cand;
    }
    return best;
}

}  // namespace arlab
