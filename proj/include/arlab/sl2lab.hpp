#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arlab/group.hpp"
#include "arlab/linalg.hpp"
#include "arlab/rep.hpp"

namespace arlab {

enum class SwapDirection { plus_to_minus, minus_to_plus };

// Conjugation by diag(sqrt p, 1/sqrt p), realized on integer matrices: it
// moves the p-divisibility between the off-diagonal entries,
// (a, b; p c', d) <-> (a, p b; c', d). Errors when the divisibility needed by
// the requested direction fails.
SL2Int sigma_swap(const SL2Int& x, unsigned p, SwapDirection direction);

// The two generator tuples related by the swap, with membership checks: plus
// generators have lower-left entry divisible by p, minus generators upper-right.
struct SigmaContext {
    unsigned p = 2;
    std::vector<SL2Int> plus_generators;
    std::vector<SL2Int> minus_generators;

    void validate() const;
    std::size_t size() const { return plus_generators.size(); }
};

// The tuple {(1,0;p,1), (1,1;0,1), -I} and its swap image. Only p = 2 and
// p = 3 are accepted; the generation property behind this choice does not
// extend to larger primes.
SigmaContext default_generators(unsigned p);

enum class CongruenceKind { regular, projective_line };

// Reduction mod N followed by the permutation action on SL2(Z/N) (regular,
// dim |SL2(Z/N)|) or on the projective line (dim N+1, prime N only). The
// returned representation evaluates arbitrary integer matrices through an
// installed element evaluator.
UnitaryRep congruence_rep(unsigned N, CongruenceKind kind);

// Order of SL2(Z/N).
std::size_t sl2_mod_order(unsigned N);

// The compatible partner of the regular congruence representation for
// gcd(N, p) = 1: g -> image of (a, b/p; p c, d) mod N. Paired with
// congruence_rep(N, kind), the two form a compatible pair exactly.
UnitaryRep congruence_rep_sigma_partner(unsigned N, CongruenceKind kind, unsigned p);

struct CompatibilityReport {
    std::vector<double> per_generator;  // d2(pi+(s_i+), pi-(s_i-))
    double defect = 0.0;                // max of per_generator
    std::optional<double> dist_upper_bound;
    std::vector<double> search_trace;  // running best merit, nonincreasing
    int iterations = 0;
};

CompatibilityReport compatibility_defect(const UnitaryRep& plus, const UnitaryRep& minus,
                                         const SigmaContext& ctx);

// Local search for a compatible genuine pair minimizing the distance to the
// input on the case-study generators: phase correction, penalized gradient
// descent with unitary retraction (penalty doubling every 50 iterations until
// the constraint residual passes 1e-8), and a feasibility-restoration tail.
// The reported bound always comes from a candidate whose relator and
// compatibility residuals are below 1e-8; the identity pair serves as the
// always-feasible fallback.
CompatibilityReport dist_search(const UnitaryRep& plus, const UnitaryRep& minus,
                                const SigmaContext& ctx, int max_iters, std::uint64_t seed);

struct ScanRow {
    unsigned N = 0;
    std::string kind;
    Eigen::Index dim = 0;
    double defect = 0.0;
    double dist_upper_bound = 0.0;
    int iterations = 0;
    long long wallclock_ms = 0;
};

// Sweep over moduli 2..nmax. Rows with gcd(N, p) = 1 pair the congruence
// representation with its sigma partner (a compatible pair); rows with p | N
// pair it with itself. Gradient search runs only on rows with dimension at
// most search_dim_cap; larger rows report the best cheap feasible bound.
// kind is "regular", "pline" or "both"; projective-line rows exist for prime
// N only. wallclock_ms is 0 unless timing is requested (reproducible output).
std::vector<ScanRow> sl2_scan(unsigned p, unsigned nmax, const std::string& kind,
                              int search_iters, std::uint64_t seed, bool timing = false,
                              Eigen::Index search_dim_cap = 256);

}  // namespace arlab
