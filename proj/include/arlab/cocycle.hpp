#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arlab/group.hpp"
#include "arlab/linalg.hpp"
#include "arlab/rep.hpp"

namespace arlab {

// Circle-valued 2-cocycle, memoized on canonical key pairs. The evaluator is
// validated to return unit-modulus values; the cocycle identity is checked by
// cocycle_checks, not on every call.
class Cocycle2 {
  public:
    Cocycle2() = default;
    Cocycle2(std::function<Complex(const GroupElement&, const GroupElement&)> eval,
             std::string description);

    Complex operator()(const GroupElement& g, const GroupElement& h) const;
    const std::string& description() const { return description_; }

    static Cocycle2 trivial();
    // On the abelian unipotent subgroup {I + a e12 + b e13} of SL3(Z/n):
    // c(g, h) = exp(2 pi i a(g) b(h) / n).
    static Cocycle2 heisenberg(unsigned n);
    // c = d(lambda): c(g,h) = lambda(g) lambda(h) / lambda(gh).
    static Cocycle2 coboundary(std::function<Complex(const GroupElement&)> phase,
                               std::string description = "coboundary");
    // Lookup table keyed by "gkey|hkey"; missing pairs are an error.
    static Cocycle2 from_table(std::map<std::string, Complex> table,
                               std::string description = "table");

  private:
    std::function<Complex(const GroupElement&, const GroupElement&)> eval_;
    std::string description_;
    mutable std::shared_ptr<std::map<std::string, Complex>> memo_;
};

// The coordinates (a, b) of an element of the abelian unipotent subgroup of
// SL3(Z/n); rejects other matrices.
std::pair<unsigned, unsigned> unipotent_coordinates(const ModMat& g);
// The element I + a e12 + b e13 in SL3(Z/n).
ModMat unipotent_element(unsigned n, unsigned a, unsigned b);
// Generating set {(1,0), (0,1)} of the abelian unipotent subgroup.
GeneratingSet heisenberg_group(unsigned n);

struct CocycleReport {
    double identity_residual = 0;  // max |c(g,h) c(gh,k) - c(h,k) c(g,hk)| over triples
    struct Obstruction {
        GroupElement g, h;
        Complex beta;  // c(g,h) / c(h,g) on a commuting pair
    };
    std::vector<Obstruction> commuting_pairs;
    double max_beta_deviation = 0;  // max |beta - 1|
    // beta is invariant under multiplying c by any coboundary, so a beta far
    // from 1 certifies that c is not a coboundary.
    bool non_coboundary_certified = false;
};

CocycleReport cocycle_checks(const Cocycle2& c, const std::vector<GroupElement>& test_set,
                             double certify_threshold = 1e-6);

// The |G|-dimensional representation u_g delta_h = c(g, h) delta_{gh} on a
// finite group (enumerated from the generating set). Satisfies
// u_g u_h = c(g,h) u_{gh} exactly; an element evaluator is installed so that
// arbitrary elements map to their twisted translation operator.
UnitaryRep twisted_regular_rep(const GeneratingSet& gens, const Cocycle2& c);

struct ProjectiveAlmostRep {
    UnitaryRep rep;
    Cocycle2 cocycle;
};

// max over pairs of ||pi(g) pi(h) - c(g,h) pi(gh)||_2.
double projective_defect(const ProjectiveAlmostRep& par,
                         const std::vector<std::pair<GroupElement, GroupElement>>& pairs);

// pi (x) conj(pi): the associated cocycle of the tensor-conjugate square is
// trivial, at the cost of at most doubling the defect.
UnitaryRep tensor_conjugate_square(const UnitaryRep& rep);

// Admissible rank-one-closeness constant: strictly below the supremum of the
// values t with 1 - sqrt(2t) >= 1/sqrt(2) and
// 1 - sqrt(2t) - sqrt(1 - (1 - sqrt(2t))^2) > 1/2.
double theta0_default();
// The supremum itself, located by bisection (~0.0039216).
double theta0_supremum(double tolerance = 1e-12);

struct ConnesExtraction {
    Vec eta;  // top right-singular vector of T
    double lambda1 = 0;
    double lambda2 = 0;
    double min_overlap = 0;      // min_i |<U_i eta, eta>|
    double epsilon_measured = 0; // max_i ||U_i T U_i* - T||_F
};

// Checks ||T||_F = 1, the rank-one witness ||T - xi xi*||_F < theta0 and the
// claimed almost-invariance, then extracts the top singular vector and
// verifies lambda1 >= 1/2, multiplicity one, and
// min_i |<U_i eta, eta>| >= sqrt(1 - 8 epsilon). Hypothesis violations throw.
ConnesExtraction connes_extract(const std::vector<UnitaryMatrix>& unitaries, const Mat& t,
                                double epsilon_claim, const Vec& xi_witness);

struct TrivializationResult {
    enum class Status { trivialized, residual_too_large };

    std::map<std::string, Complex> phases;  // g -> lambda(g), unit modulus
    double coboundary_residual = 0;         // max |lambda(g)lambda(h)/lambda(gh) - c(g,h)|
    Status status = Status::residual_too_large;
};

// lambda(g) is the phase making <pi(g) eta rho(g)*, lambda(g) eta> positive;
// the recovered phases should trivialize the cocycle when an almost
// intertwiner eta exists. Vanishing inner products (below phase_floor,
// relative) are reported as errors naming the offending element.
TrivializationResult phase_trivialization(const ProjectiveAlmostRep& par, const UnitaryRep& rho,
                                          const Mat& eta,
                                          const std::vector<GroupElement>& test_set,
                                          double phase_floor = 1e-6, double trivial_tol = 1e-3);

}  // namespace arlab
