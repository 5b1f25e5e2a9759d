/*
 * Standalone verifier for the Riesz interpolation inequality
 *
 *   S_a(T x) <= eta^{(2-b)/b} S_b(x),   1/a + 1/b = 1,  1 < b < 2,
 *
 * valid for any contraction T (largest singular value <= 1), with
 * eta = max_ij |t_ij|. The squared PVM form transports the inequality
 * to outcome probabilities via the overlap matrix of the normalized
 * projections u_i = P_i psi / ||P_i psi||, v_j = Q_j psi / ||Q_j psi||:
 *
 *   S_alpha(p) <= eta^{2(1-beta)/beta} S_beta(q),   1/alpha + 1/beta = 2.
 *
 * This is the analytic engine behind the pair entropy bounds; it is kept
 * independent of the bounds module so the two act as cross-checks.
 */
#pragma once

#include <vector>

#include "entrobound/linalg.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

// Certified contraction: operator_norm(t) <= 1 + 1e-9, with the image
// y = T x and eta = max_ij |t_ij| precomputed.
struct ContractionInstance {
    ComplexMatrix t;
    CVector x;
    CVector y;
    double eta = 0.0;
};

ContractionInstance make_contraction(ComplexMatrix t, CVector x);

// y_i = sum_j t_ij x_j.
CVector apply_transform(const ComplexMatrix& t, const CVector& x);

double eta(const ComplexMatrix& t);

struct RieszResult {
    double lhs = 0.0;  // S_a(y)
    double rhs = 0.0;  // eta^{(2-b)/b} S_b(x)
    bool pass = false;
};

// Requires 1 < b < 2 and a certified contraction.
RieszResult riesz_check(const ComplexMatrix& t, const CVector& x, double b, double tol = 1e-9);

struct SquaredRieszResult {
    double lhs = 0.0;  // S_alpha(p)
    double rhs = 0.0;  // eta^{2(1-beta)/beta} S_beta(q)
    double eta = 0.0;
    bool pass = false;
};

// Requires PVMs p and q, 1/2 < beta < 1; alpha is the conjugate order.
SquaredRieszResult squared_riesz_check(const Measurement& p, const Measurement& q,
                                       const PureState& psi, double beta, double tol = 1e-9);

} // namespace entrobound
