#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arlab/linalg.hpp"
#include "arlab/random.hpp"

namespace arlab {

// Descriptor of a unital *-subalgebra u (⊕_k M_{d_k} ⊗ 1_{m_k}) u* of M_n.
struct BlockSubalgebra {
    Eigen::Index ambient_dim = 0;
    UnitaryMatrix change_of_basis;                        // u
    std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks;  // (d_k, m_k)

    void validate() const;
    // max_k d_k
    Eigen::Index subhomogeneity_degree() const;
    // sum_k d_k^2
    Eigen::Index dimension() const;
    // Appends a scalar block on the complement when the listed blocks do not
    // fill the ambient dimension.
    BlockSubalgebra unitalized() const;
    // Deterministic descriptor string, used for candidate ordering.
    std::string descriptor_key() const;

    static BlockSubalgebra full(Eigen::Index n);      // M_n itself
    static BlockSubalgebra scalars(Eigen::Index n);   // C * 1
    static BlockSubalgebra diagonal(Eigen::Index n);  // diagonal matrices
};

// Trace-preserving conditional expectation onto the subalgebra: the
// HS-orthogonal projection. Idempotent and 2-norm contractive.
Mat conditional_expectation(const BlockSubalgebra& q, const Mat& x);

enum class HyperfiniteMode { subhomogeneity, dimension };

struct HyperfiniteCertificate {
    BlockSubalgebra subalgebra;
    double epsilon = 0.0;
    Eigen::Index D_bound = 0;
    HyperfiniteMode mode = HyperfiniteMode::subhomogeneity;
};

struct HyperfiniteCheck {
    bool pass = false;
    double epsilon_measured = 0.0;
    std::string reason;
};

// Recomputes epsilon from scratch (max_i ||x_i - E_Q(x_i)||_2) and re-derives
// the D bound from the descriptor; certificates are never trusted.
HyperfiniteCheck hyperfinite_certificate_check(const std::vector<Mat>& tuple,
                                               const HyperfiniteCertificate& cert);

// Best-effort search for a block subalgebra witnessing (epsilon, D)-
// hyperfiniteness: near-kernel of Y -> sum_i ||[Y, x_i]||_F^2 (the approximate
// commutant), eigenspace clustering of a generic Hermitian kernel element,
// full matrix algebras on the clustered eigenspaces. Detects invariant
// subspaces but not multiplicity structure (m_k = 1 blocks), so the D bound
// may overshoot. Returns a certificate that passes the independent checker at
// its own measured epsilon, or nothing.
std::optional<HyperfiniteCertificate> heuristic_block_finder(const std::vector<Mat>& tuple,
                                                             double target_epsilon,
                                                             std::uint64_t seed,
                                                             double cluster_tol = 1e-6);

}  // namespace arlab
