/*
 * Renyi-family entropies of outcome distributions, in nats.
 *
 *   H_a(p) = ln(sum_i p_i^a) / (1 - a)        (a > 0, a != 1)
 *   H_1(p) = -sum_i p_i ln p_i                (Shannon limit)
 *   H_inf(p) = -ln max_i p_i                  (min-entropy limit)
 *
 * Orders within 1e-9 of 1 dispatch to the Shannon form to avoid the
 * 1/(1-a) blow-up; the power sums are evaluated relative to the largest
 * probability so extreme orders neither overflow nor underflow.
 */
#pragma once

#include <vector>

#include "entrobound/linalg.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

class RenyiOrder {
public:
    // Requires alpha > 0 (finite) or infinity for the min-entropy limit.
    static RenyiOrder of(double alpha);
    static RenyiOrder shannon() { return RenyiOrder(1.0); }
    static RenyiOrder infinity();

    double value() const { return alpha_; }
    bool is_shannon() const;
    bool is_infinite() const;

    bool operator==(const RenyiOrder& other) const = default;

private:
    explicit RenyiOrder(double alpha) : alpha_(alpha) {}
    double alpha_ = 1.0;
};

double renyi_entropy(const OutcomeDistribution& p, RenyiOrder order);
double shannon_entropy(const OutcomeDistribution& p);
double min_entropy(const OutcomeDistribution& p);

// S_b(x) = (sum_j |x_j|^b)^{1/b} for b >= 1.
double power_sum(const std::vector<double>& xs, double b);
double power_sum(const CVector& xs, double b);

// The conjugate order beta = alpha / (2 alpha - 1), i.e. 1/alpha + 1/beta = 2.
// Requires alpha > 1/2; the (infinity, 1/2) pair is rejected.
RenyiOrder conjugate_order(RenyiOrder alpha);

} // namespace entrobound
