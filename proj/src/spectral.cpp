#include "arlab/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arlab {

SpectralMeasure laplacian_spectrum(const UnitaryRep& rep, const GeneratingSet& s) {
    if (!s.is_symmetric_set())
        throw validation_error("laplacian spectrum: generating set not symmetric");
    Mat x = rep.ring_apply(laplacian(s));
    return hermitian_spectrum(x);
}

GapReport almost_gap_check(const SpectralMeasure& measure, double lambda, double alpha,
                           double epsilon) {
    if (!(alpha > 0.0) || !(alpha < lambda / 2.0))
        throw validation_error("almost gap check: need 0 < alpha < lambda/2");
    GapReport r;
    r.lambda = lambda;
    r.alpha = alpha;
    r.epsilon = epsilon;
    r.interval_weight = measure.interval_weight(alpha, lambda - alpha);
    r.pass = r.interval_weight <= epsilon;
    return r;
}

void SosCertificate::validate(const GeneratingSet& s) const {
    if (!(ctx == s.ctx)) throw validation_error("certificate: group mismatch");
    if (!(lambda > 0) || lambda > 2)
        throw validation_error("certificate: lambda must lie in (0, 2]");
    for (const auto& xi : xis)
        if (!(xi.ctx == ctx)) throw validation_error("certificate: xi from a different group");
}

std::vector<GroupElement> SosCertificate::support_union() const {
    std::map<std::string, GroupElement> acc;
    for (const auto& xi : xis)
        for (const auto& g : xi.support()) acc.emplace(ge_key(g), g);
    std::vector<GroupElement> out;
    for (auto& [k, g] : acc) out.push_back(g);
    return out;
}

SosResidual sos_residual(const GeneratingSet& s, const SosCertificate& cert) {
    cert.validate(s);
    GroupRingElement lap = laplacian(s);
    GroupRingElement lhs = gr_sub(gr_product(lap, lap),
                                  gr_scale(RationalComplex(cert.lambda, Rational(0)), lap));
    for (const auto& xi : cert.xis) lhs = gr_sub(lhs, gr_product(gr_adjoint(xi), xi));
    SosResidual r{lhs, lhs.l1_norm()};
    return r;
}

GapReport sos_consequence_check(const UnitaryRep& rep, const GeneratingSet& s,
                                const SosCertificate& cert, double epsilon) {
    cert.validate(s);
    if (epsilon < 0) throw validation_error("sos check: negative epsilon");

    SosResidual residual = sos_residual(s, cert);
    if (cert.xis.empty() && !residual.element.is_zero())
        throw hypothesis_error("sos check: empty certificate with nonzero residual (l1 = " +
                               rational_to_string(residual.l1) + ")");

    // Multiplicativity defect in operator norm over products from the check
    // set: the generators, the identity, and the certificate supports.
    std::map<std::string, GroupElement> check_set;
    GroupElement e = s.ctx.identity();
    check_set.emplace(ge_key(e), e);
    for (const auto& [name, g] : s.generators) check_set.emplace(ge_key(g), g);
    for (const auto& g : cert.support_union()) check_set.emplace(ge_key(g), g);

    double eps_measured = 0.0;
    for (const auto& [kg, g] : check_set)
        for (const auto& [kh, h] : check_set) {
            Mat lhs = rep.evaluate_element(g) * rep.evaluate_element(h);
            Mat rhs = rep.evaluate_element(ge_mul(g, h));
            eps_measured = std::max(eps_measured, operator_norm(Mat(lhs - rhs)));
        }
    if (eps_measured > epsilon + 1e-12) {
        std::ostringstream msg;
        msg << "sos check: measured multiplicativity defect " << eps_measured
            << " exceeds the claimed epsilon " << epsilon;
        throw hypothesis_error(msg.str());
    }

    const double lambda = cert.lambda.convert_to<double>();
    const std::size_t n = cert.xis.size();

    // Each substitution step costs eps * (l1 norm)^2, and Delta_S itself
    // enters once, so its l1 norm (= 2) joins the maximum. The sup-norm
    // variant is recorded alongside.
    Rational m_l1 = laplacian(s).l1_norm();
    Rational m_linf = 0;
    for (const auto& xi : cert.xis) {
        m_l1 = std::max(m_l1, xi.l1_norm());
        m_linf = std::max(m_linf, xi.linf_norm());
    }

    GapReport r;
    r.lambda = lambda;
    r.epsilon = epsilon;
    r.epsilon_measured = eps_measured;
    r.M_l1 = m_l1.convert_to<double>();
    r.M_linf = m_linf.convert_to<double>();
    r.C = double(n + 1) * r.M_l1 * r.M_l1;
    r.Cprime = 2.0 * r.C / lambda;

    // A nonzero exact residual shifts the sum-of-squares bound additively.
    const double slack = r.Cprime * epsilon + 2.0 * residual.l1.convert_to<double>() / lambda;
    r.alpha = slack;

    Eigen::VectorXd ev = hermitian_eigenvalues(rep.ring_apply(laplacian(s)));
    bool ok = true;
    double inner_mass = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double x = ev[i];
        if (x < -tol::eig || x > 2.0 + tol::eig) ok = false;
        bool low = x <= slack + tol::eig;
        bool high = x >= lambda - slack - tol::eig;
        if (!low && !high) {
            ok = false;
            inner_mass += 1.0 / double(ev.size());
        }
    }
    r.interval_weight = inner_mass;
    r.pass = ok;
    return r;
}

}  // namespace arlab
