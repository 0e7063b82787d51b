#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arlab/group.hpp"
#include "arlab/linalg.hpp"

namespace arlab {

// Standard generators of SL2(Z): S = (0,-1;1,0), T = (1,1;0,1).
SL2Int sl2_gen_S();
SL2Int sl2_gen_T();

// Writes x as a reduced word over {S, T} (alphabet indices 0 and 1) by the
// Euclidean algorithm on the first column. The result is verified exactly.
FreeWord sl2_word_in_standard_generators(const SL2Int& x);

// Defining relators of SL2(Z) over {S, T}: S^4 and S^2 (ST)^-3.
std::vector<FreeWord> sl2_standard_relators();

// --- unitary representations -------------------------------------------------

// Assignment of unitary matrices to the named generators of a group, with
// word evaluation. Inverse generators are never stored independently: when a
// generator's inverse is also named in the set, its matrix is derived (and
// validated) as the adjoint, so pi(s^-1) = pi(s)* holds by construction.
class UnitaryRep {
  public:
    UnitaryRep() = default;
    // `images` may omit a generator if the inverse element of some provided
    // generator equals it; the missing matrix is filled in as the adjoint.
    UnitaryRep(GeneratingSet gens, const std::map<std::string, Mat>& images,
               double unitary_tol = tol::unitary);

    Eigen::Index dim() const { return dim_; }
    const GeneratingSet& generators() const { return gens_; }
    const Mat& image(const std::string& name) const;
    const Mat& image(std::size_t index) const { return images_[index]; }

    // Product of generator images along the word; empty word gives identity.
    // Letters index the generating set (1-based, negative for adjoint).
    Mat evaluate_word(const FreeWord& w) const;

    // Evaluate an arbitrary group element: through the direct evaluator when
    // one is installed (congruence representations), by generator lookup, by
    // the canonical shortest word from the Cayley ball (finite groups), or by
    // the Euclidean word decomposition (SL2(Z) with standard generators).
    Mat evaluate_element(const GroupElement& g) const;

    // Canonical word used by evaluate_element, when one exists.
    std::optional<FreeWord> canonical_word(const GroupElement& g) const;

    // pi~(sum a_g g) = sum a_g pi(g).
    Mat ring_apply(const GroupRingElement& xi) const;

    void set_element_evaluator(std::function<Mat(const GroupElement&)> f) {
        element_evaluator_ = std::move(f);
    }
    bool has_element_evaluator() const { return bool(element_evaluator_); }

  private:
    void build_word_table() const;

    Eigen::Index dim_ = 0;
    GeneratingSet gens_;
    std::vector<Mat> images_;
    std::function<Mat(const GroupElement&)> element_evaluator_;
    // key -> shortest word over the generating set; only for finite groups
    mutable std::shared_ptr<std::map<std::string, FreeWord>> word_table_;
};

// pi~ applied to a group-ring element (free-function form).
Mat ring_extension_apply(const UnitaryRep& rep, const GroupRingElement& xi);

// --- defect reports ----------------------------------------------------------

enum class DefectNorm { normalized_hs, op };

struct DefectReport {
    std::map<std::string, double> per_relator;  // relator word key -> defect
    struct PairDefect {
        GroupElement g, h;
        double defect;
    };
    std::vector<PairDefect> pairs_checked;
    double max_defect = 0.0;
    DefectNorm norm = DefectNorm::normalized_hs;
};

// Relator defects ||pi(r) - I|| and, when a pair set is given, the
// multiplicativity defects ||pi(gh) - pi(g)pi(h)||.
DefectReport defect_report(const UnitaryRep& rep, const std::vector<FreeWord>& relators,
                           const std::vector<std::pair<GroupElement, GroupElement>>& pairs = {},
                           DefectNorm norm = DefectNorm::normalized_hs);

// max_s d2(pi1(s), pi2(s)) over the shared generator names; dimensions may
// differ (the d2 metric pads).
double rep_distance(const UnitaryRep& a, const UnitaryRep& b);

// Normalized trace of each evaluated element.
std::map<std::string, Complex> trace_character(const UnitaryRep& rep,
                                               const std::vector<GroupElement>& elements);

// Block-diagonal direct sum (generator-wise); same generating set.
UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);

}  // namespace arlab
