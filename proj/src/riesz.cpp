#include "entrobound/riesz.hpp"

#include <cmath>
#include <sstream>

#include "entrobound/entropy.hpp"
#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kContractionTol = 1e-9;
// Squared support threshold, consistent with the 1e-9 norm threshold
// used by the bound functionals.
constexpr double kProbSupport = 1e-18;

// (sum_i x_i^e)^{1/e} for positive entries and any e > 0; the public
// power_sum is restricted to exponents >= 1, the squared PVM form needs
// beta < 1 as well.
double positive_power_sum(const std::vector<double>& xs, double e) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, x);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double x : xs)
        if (x > 0.0) s += std::pow(x / m, e);
    return m * std::pow(s, 1.0 / e);
}

} // namespace

CVector apply_transform(const ComplexMatrix& t, const CVector& x) { return t.apply(x); }

double eta(const ComplexMatrix& t) { return t.max_abs(); }

ContractionInstance make_contraction(ComplexMatrix t, CVector x) {
    const double op_norm = operator_norm(t);
    if (op_norm > 1.0 + kContractionTol) {
        std::ostringstream os;
        os << "make_contraction: matrix is not a contraction (operator norm " << op_norm << ")";
        throw ValidationError(os.str());
    }
    ContractionInstance inst;
    inst.y = apply_transform(t, x);
    inst.eta = eta(t);
    inst.t = std::move(t);
    inst.x = std::move(x);
    return inst;
}

RieszResult riesz_check(const ComplexMatrix& t, const CVector& x, double b, double tol) {
    if (!(b > 1.0 && b < 2.0)) {
        std::ostringstream os;
        os << "riesz_check: exponent must lie in (1, 2), got " << b;
        throw ValidationError(os.str());
    }
    const ContractionInstance inst = make_contraction(t, x);
    const double a = b / (b - 1.0);

    RieszResult result;
    result.lhs = power_sum(inst.y, a);
    result.rhs = std::pow(inst.eta, (2.0 - b) / b) * power_sum(inst.x, b);
    result.pass = result.lhs <= result.rhs + tol;
    return result;
}

SquaredRieszResult squared_riesz_check(const Measurement& p, const Measurement& q,
                                       const PureState& psi, double beta, double tol) {
    if (p.kind() != MeasurementKind::PVM || q.kind() != MeasurementKind::PVM)
        throw ValidationError("squared_riesz_check: both measurements must be PVMs");
    if (p.dim() != q.dim() || p.dim() != psi.dim())
        throw ValidationError("squared_riesz_check: dimension mismatch");
    if (!(beta > 0.5 && beta < 1.0)) {
        std::ostringstream os;
        os << "squared_riesz_check: order must lie in (1/2, 1), got " << beta;
        throw ValidationError(os.str());
    }
    const double alpha = beta / (2.0 * beta - 1.0);
    const CVector& amp = psi.amplitudes();

    // Normalized projections u_i = P_i psi / ||P_i psi||, restricted to
    // outcomes carrying probability.
    std::vector<CVector> us, vs;
    std::vector<double> probs_p, probs_q;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const CVector pi_psi = p.element(i).matrix().apply(amp);
        const double len = norm(pi_psi);
        if (len * len <= kProbSupport) continue;
        us.push_back(scaled(pi_psi, Complex{1.0 / len, 0.0}));
        probs_p.push_back(len * len);
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
        const CVector qj_psi = q.element(j).matrix().apply(amp);
        const double len = norm(qj_psi);
        if (len * len <= kProbSupport) continue;
        vs.push_back(scaled(qj_psi, Complex{1.0 / len, 0.0}));
        probs_q.push_back(len * len);
    }

    ComplexMatrix overlap(us.size(), vs.size());
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            overlap(i, j) = inner(us[i], vs[j]);

    SquaredRieszResult result;
    result.eta = eta(overlap);
    result.lhs = positive_power_sum(probs_p, alpha);
    result.rhs = std::pow(result.eta, 2.0 * (1.0 - beta) / beta) * positive_power_sum(probs_q, beta);
    result.pass = result.lhs <= result.rhs + tol;
    return result;
}

} // namespace entrobound
