#pragma once

#include "arlab/group.hpp"
#include "arlab/linalg.hpp"
#include "arlab/rep.hpp"

namespace arlab {

// Spectral measure of pi~(Delta_S). Requires a symmetric generating set; the
// adjoint convention on representations then makes pi~(Delta_S) Hermitian and
// its spectrum lands in [0, 2] even for almost representations.
SpectralMeasure laplacian_spectrum(const UnitaryRep& rep, const GeneratingSet& s);

struct GapReport {
    double lambda = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;           // requested bound
    double epsilon_measured = 0.0;  // measured multiplicativity defect (sos check)
    double interval_weight = 0.0;
    bool pass = false;
    // effective constants of the sum-of-squares consequence check
    double C = 0.0;
    double Cprime = 0.0;
    double M_l1 = 0.0;   // max l1 norm among the certificate elements and Delta_S
    double M_linf = 0.0; // max sup-norm among the certificate elements
};

// Mass of [alpha, lambda - alpha]: passes when it is at most epsilon.
GapReport almost_gap_check(const SpectralMeasure& measure, double lambda, double alpha,
                           double epsilon);

// Certificate data for Delta_S^2 - lambda Delta_S = sum_i xi_i* xi_i.
struct SosCertificate {
    GroupContext ctx;
    Rational lambda;
    std::vector<GroupRingElement> xis;

    void validate(const GeneratingSet& s) const;
    // Union of the supports of the xi_i.
    std::vector<GroupElement> support_union() const;
};

struct SosResidual {
    GroupRingElement element;  // Delta^2 - lambda Delta - sum xi_i* xi_i, exact
    Rational l1;
};

// Exact residual of the certificate identity (rational arithmetic throughout).
SosResidual sos_residual(const GeneratingSet& s, const SosCertificate& cert);

// Verifies that the representation is multiplicative within epsilon (operator
// norm) on products from the certificate support, then checks the implied
// containment sigma(pi~(Delta_S)) in [0, C' eps] u [lambda - C' eps, 2] with
// C = (n+1) M^2 and C' = 2C / lambda. Throws hypothesis_error when the
// measured multiplicativity defect exceeds epsilon, or when an empty
// certificate has a nonzero residual.
GapReport sos_consequence_check(const UnitaryRep& rep, const GeneratingSet& s,
                                const SosCertificate& cert, double epsilon);

}  // namespace arlab
