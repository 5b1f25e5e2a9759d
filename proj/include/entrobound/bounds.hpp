/*
 * Uncertainty-bound functionals and inequality certificates.
 *
 * For POVMs M = {M_i}, N = {N_j} and a pure state psi:
 *
 *   f(M,N|psi) = max_ij |<M_i psi, N_j psi>| / (||M_i^{1/2} psi|| ||N_j^{1/2} psi||)
 *   f(M,N|rho) = max over eigenvectors of rho (support only) of f(M,N|psi)
 *   fbar(M,N)  = max_ij || M_i^{1/2} N_j^{1/2} ||
 *   phi(M|rho) = max_i tr(M_i rho)
 *   phibar(M)  = max_i || M_i ||
 *
 * The certified inequalities, for conjugate orders 1/a + 1/b = 2:
 *
 *   pair:   H_a(M|rho) + H_b(N|rho) >= -2 ln f(M,N|rho) >= -2 ln fbar(M,N)
 *   single: H_a(M|rho) >= -ln phi(M|rho) >= -ln phibar(M)         (any a > 0)
 *   free:   H_a(M|rho) + H_b(N|rho) >= -ln(phi(M|rho) phi(N|rho)) (any a, b > 0)
 *
 * Each check_* call returns a BoundReport whose rows record lhs, rhs,
 * slack = lhs - rhs, and a verdict (pass iff slack >= -1e-9).
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/entropy.hpp"
#include "entrobound/linalg.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

inline constexpr double kVerdictTol = 1e-9;
// Index pairs enter the f(M,N|psi) maximum only when both root norms
// exceed this; separates genuine zero outcomes from roundoff.
inline constexpr double kSupportNormTol = 1e-9;

struct InequalityRow {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs, exactly as evaluated
    bool pass = false;
};

struct BoundReport {
    double alpha = 1.0;
    double beta = 0.0;          // NaN when the check involves a single order
    double entropy_alpha = 0.0;
    double entropy_beta = 0.0;  // NaN when unused
    std::vector<std::pair<std::string, double>> values;  // named bound values
    std::vector<InequalityRow> rows;
    // Set when rho has eigenvalue gaps < 1e-8 inside its support; the
    // recorded f(M,N|rho) is then eigenbasis-dependent.
    bool degenerate_spectrum = false;

    bool all_pass() const;
    double min_slack() const;
};

double f_pure(const Measurement& m, const Measurement& n, const PureState& psi);
double f_mixed(const Measurement& m, const Measurement& n, const DensityMatrix& rho);
double f_bar(const Measurement& m, const Measurement& n);
double phi(const Measurement& m, const DensityMatrix& rho);
double phi(const Measurement& m, const PureState& psi);
double phi_bar(const Measurement& m);

// Pair bound at conjugate orders: rows "pair.f" (state-dependent),
// "pair.fbar" (state-independent), "chain.f_le_fbar".
BoundReport check_pair_bound(const Measurement& m, const Measurement& n, const DensityMatrix& rho,
                             RenyiOrder alpha, double tol = kVerdictTol);

// Single-measurement bound at any order: rows "single.phi",
// "single.phibar", "chain.phi_le_phibar".
BoundReport check_single_bound(const Measurement& m, const DensityMatrix& rho, RenyiOrder alpha,
                               double tol = kVerdictTol);

// Free-order bound: row "free.phiphi".
BoundReport check_free_order_bound(const Measurement& m, const Measurement& n,
                                   const DensityMatrix& rho, RenyiOrder alpha, RenyiOrder beta,
                                   double tol = kVerdictTol);

// State-independent pair RHS (-2 ln fbar) minus free-order RHS
// (-ln(phi phi)); positive means the pair bound is the stronger one.
double compare_bounds(const Measurement& m, const Measurement& n, const DensityMatrix& rho,
                      RenyiOrder alpha);

struct SaturationVerdict {
    bool applicable = false;  // both measurements decompose into rank-one elements
    bool saturated = false;   // |f_mixed - f_bar| <= tol
    double gap = 0.0;
    double f_mixed_value = 0.0;
    double f_bar_value = 0.0;
};

// Rank-one POVM pairs satisfy f(M,N|rho) = fbar(M,N) for every rho.
SaturationVerdict check_rank_one_saturation(const Measurement& m, const Measurement& n,
                                            const DensityMatrix& rho, double tol = kVerdictTol);

// Robertson relation: returns (dA * dB, |<psi, [A,B] psi>| / 2).
std::pair<double, double> robertson_bound(const HermitianOperator& a, const HermitianOperator& b,
                                          const PureState& psi);

} // namespace entrobound
