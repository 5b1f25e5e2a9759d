#include "entrobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kDegenerateGap = 1e-8;

InequalityRow make_row(std::string name, double lhs, double rhs, double tol) {
    InequalityRow row;
    row.name = std::move(name);
    row.lhs = lhs;
    row.rhs = rhs;
    row.slack = lhs - rhs;
    row.pass = row.slack >= -tol;
    return row;
}

bool has_degenerate_support(const DensityMatrix& rho) {
    const auto& support = rho.support();
    const auto& ev = rho.spectrum().eigenvalues;
    for (std::size_t k = 0; k + 1 < support.size(); ++k)
        if (ev[support[k]] - ev[support[k + 1]] < kDegenerateGap) return true;
    return false;
}

} // namespace

bool BoundReport::all_pass() const {
    for (const auto& row : rows)
        if (!row.pass) return false;
    return true;
}

double BoundReport::min_slack() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) m = std::min(m, row.slack);
    return m;
}

double f_pure(const Measurement& m, const Measurement& n, const PureState& psi) {
    if (m.dim() != n.dim() || m.dim() != psi.dim())
        throw ValidationError("f_pure: dimension mismatch");

    const CVector& amp = psi.amplitudes();
    std::vector<double> root_m(m.size()), root_n(n.size());
    std::vector<CVector> m_psi(m.size()), n_psi(n.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        root_m[i] = norm(m.element_sqrt(i).apply(amp));
        m_psi[i] = m.element(i).matrix().apply(amp);
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        root_n[j] = norm(n.element_sqrt(j).apply(amp));
        n_psi[j] = n.element(j).matrix().apply(amp);
    }

    double best = -1.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (root_m[i] <= kSupportNormTol) continue;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (root_n[j] <= kSupportNormTol) continue;
            best = std::max(best, std::abs(inner(m_psi[i], n_psi[j])) / (root_m[i] * root_n[j]));
        }
    }
    // Completeness forces some outcome probability >= 1/size, so a valid
    // pair always admits at least one index pair.
    if (best < 0.0) throw ValidationError("f_pure: no admissible index pair");
    return best;
}

double f_mixed(const Measurement& m, const Measurement& n, const DensityMatrix& rho) {
    if (m.dim() != rho.dim()) throw ValidationError("f_mixed: dimension mismatch");
    double best = -1.0;
    for (std::size_t k : rho.support()) {
        const PureState eigvec(rho.spectrum().eigenvectors.column(k));
        best = std::max(best, f_pure(m, n, eigvec));
    }
    if (best < 0.0) throw ValidationError("f_mixed: density matrix has empty support");
    return best;
}

double f_bar(const Measurement& m, const Measurement& n) {
    if (m.dim() != n.dim()) throw ValidationError("f_bar: dimension mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j)
            best = std::max(best, operator_norm(m.element_sqrt(i) * n.element_sqrt(j)));
    return best;
}

double phi(const Measurement& m, const DensityMatrix& rho) {
    return outcome_distribution(m, rho).max();
}

double phi(const Measurement& m, const PureState& psi) {
    return outcome_distribution(m, psi).max();
}

double phi_bar(const Measurement& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        best = std::max(best, std::max(m.element_eig(i).eigenvalues.front(), 0.0));
    return best;
}

BoundReport check_pair_bound(const Measurement& m, const Measurement& n, const DensityMatrix& rho,
                             RenyiOrder alpha, double tol) {
    const RenyiOrder beta = conjugate_order(alpha);

    BoundReport report;
    report.alpha = alpha.value();
    report.beta = beta.value();
    report.entropy_alpha = renyi_entropy(outcome_distribution(m, rho), alpha);
    report.entropy_beta = renyi_entropy(outcome_distribution(n, rho), beta);
    report.degenerate_spectrum = has_degenerate_support(rho);

    const double fm = f_mixed(m, n, rho);
    const double fb = f_bar(m, n);
    report.values.emplace_back("f_mixed", fm);
    report.values.emplace_back("f_bar", fb);

    const double lhs = report.entropy_alpha + report.entropy_beta;
    report.rows.push_back(make_row("pair.f", lhs, -2.0 * std::log(fm), tol));
    report.rows.push_back(make_row("pair.fbar", lhs, -2.0 * std::log(fb), tol));
    report.rows.push_back(make_row("chain.f_le_fbar", fb, fm, tol));
    return report;
}

BoundReport check_single_bound(const Measurement& m, const DensityMatrix& rho, RenyiOrder alpha,
                               double tol) {
    BoundReport report;
    report.alpha = alpha.value();
    report.beta = std::numeric_limits<double>::quiet_NaN();
    report.entropy_alpha = renyi_entropy(outcome_distribution(m, rho), alpha);
    report.entropy_beta = std::numeric_limits<double>::quiet_NaN();

    const double ph = phi(m, rho);
    const double phb = phi_bar(m);
    report.values.emplace_back("phi", ph);
    report.values.emplace_back("phi_bar", phb);

    report.rows.push_back(make_row("single.phi", report.entropy_alpha, -std::log(ph), tol));
    report.rows.push_back(make_row("single.phibar", report.entropy_alpha, -std::log(phb), tol));
    report.rows.push_back(make_row("chain.phi_le_phibar", phb, ph, tol));
    return report;
}

BoundReport check_free_order_bound(const Measurement& m, const Measurement& n,
                                   const DensityMatrix& rho, RenyiOrder alpha, RenyiOrder beta,
                                   double tol) {
    BoundReport report;
    report.alpha = alpha.value();
    report.beta = beta.value();
    report.entropy_alpha = renyi_entropy(outcome_distribution(m, rho), alpha);
    report.entropy_beta = renyi_entropy(outcome_distribution(n, rho), beta);

    const double ph_m = phi(m, rho);
    const double ph_n = phi(n, rho);
    report.values.emplace_back("phi_m", ph_m);
    report.values.emplace_back("phi_n", ph_n);

    const double lhs = report.entropy_alpha + report.entropy_beta;
    report.rows.push_back(make_row("free.phiphi", lhs, -std::log(ph_m * ph_n), tol));
    return report;
}

double compare_bounds(const Measurement& m, const Measurement& n, const DensityMatrix& rho,
                      RenyiOrder alpha) {
    conjugate_order(alpha);  // the comparison is meaningful in the conjugate regime only
    const double pair_rhs = -2.0 * std::log(f_bar(m, n));
    const double free_rhs = -std::log(phi(m, rho) * phi(n, rho));
    return pair_rhs - free_rhs;
}

SaturationVerdict check_rank_one_saturation(const Measurement& m, const Measurement& n,
                                            const DensityMatrix& rho, double tol) {
    SaturationVerdict verdict;
    if (!rank_one_decomposition(m) || !rank_one_decomposition(n)) return verdict;
    verdict.applicable = true;
    verdict.f_mixed_value = f_mixed(m, n, rho);
    verdict.f_bar_value = f_bar(m, n);
    verdict.gap = std::abs(verdict.f_mixed_value - verdict.f_bar_value);
    verdict.saturated = verdict.gap <= tol;
    return verdict;
}

std::pair<double, double> robertson_bound(const HermitianOperator& a, const HermitianOperator& b,
                                          const PureState& psi) {
    if (a.dim() != b.dim() || a.dim() != psi.dim())
        throw ValidationError("robertson_bound: dimension mismatch");
    const CVector& amp = psi.amplitudes();

    const CVector a_psi = a.matrix().apply(amp);
    const CVector b_psi = b.matrix().apply(amp);
    const double mean_a = inner(amp, a_psi).real();
    const double mean_b = inner(amp, b_psi).real();
    const double var_a = std::max(inner(a_psi, a_psi).real() - mean_a * mean_a, 0.0);
    const double var_b = std::max(inner(b_psi, b_psi).real() - mean_b * mean_b, 0.0);
    const double lhs = std::sqrt(var_a) * std::sqrt(var_b);

    // <psi, (AB - BA) psi> = <A psi, B psi> - <B psi, A psi>
    const Complex commutator_mean = inner(a_psi, b_psi) - inner(b_psi, a_psi);
    const double rhs = 0.5 * std::abs(commutator_mean);
    return {lhs, rhs};
}

} // namespace entrobound
