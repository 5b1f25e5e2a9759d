#include "entrobound/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kShannonDispatch = 1e-9;

// ln(sum_i p_i^a) evaluated as a*ln(pmax) + ln(sum (p_i/pmax)^a), which
// stays finite for a up to ~1e6 and for a < 1 alike. Zero entries are
// skipped (their contribution is 0 for every a > 0).
double log_power_moment(const std::vector<double>& p, double a) {
    double pmax = 0.0;
    for (double x : p) pmax = std::max(pmax, x);
    if (pmax <= 0.0) throw ValidationError("renyi_entropy: distribution is all zero");
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s += std::pow(x / pmax, a);
    return a * std::log(pmax) + std::log(s);
}

} // namespace

RenyiOrder RenyiOrder::of(double alpha) {
    if (std::isnan(alpha) || alpha <= 0.0) {
        std::ostringstream os;
        os << "RenyiOrder: order must be positive, got " << alpha;
        throw ValidationError(os.str());
    }
    return RenyiOrder(alpha);
}

RenyiOrder RenyiOrder::infinity() { return RenyiOrder(std::numeric_limits<double>::infinity()); }

bool RenyiOrder::is_shannon() const { return std::abs(alpha_ - 1.0) < kShannonDispatch; }

bool RenyiOrder::is_infinite() const { return std::isinf(alpha_); }

double renyi_entropy(const OutcomeDistribution& p, RenyiOrder order) {
    if (order.is_infinite()) return min_entropy(p);
    if (order.is_shannon()) return shannon_entropy(p);
    const double a = order.value();
    const double h = log_power_moment(p.probabilities, a) / (1.0 - a);
    return h <= 0.0 ? 0.0 : h;
}

double shannon_entropy(const OutcomeDistribution& p) {
    double h = 0.0;
    for (double x : p.probabilities)
        if (x > 0.0) h -= x * std::log(x);
    return h <= 0.0 ? 0.0 : h;
}

double min_entropy(const OutcomeDistribution& p) {
    const double pmax = p.max();
    if (pmax <= 0.0) throw ValidationError("min_entropy: distribution is all zero");
    const double h = -std::log(pmax);
    return h <= 0.0 ? 0.0 : h;
}

double power_sum(const std::vector<double>& xs, double b) {
    if (!(b >= 1.0)) {
        std::ostringstream os;
        os << "power_sum: exponent must satisfy b >= 1, got " << b;
        throw ValidationError(os.str());
    }
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double x : xs) {
        const double r = std::abs(x) / m;
        if (r > 0.0) s += std::pow(r, b);
    }
    return m * std::pow(s, 1.0 / b);
}

double power_sum(const CVector& xs, double b) {
    std::vector<double> mags(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) mags[i] = std::abs(xs[i]);
    return power_sum(mags, b);
}

RenyiOrder conjugate_order(RenyiOrder alpha) {
    if (alpha.is_infinite())
        throw ValidationError("conjugate_order: the (infinity, 1/2) pair is outside the admissible range");
    const double a = alpha.value();
    if (a <= 0.5) {
        std::ostringstream os;
        os << "conjugate_order: order must exceed 1/2, got " << a;
        throw ValidationError(os.str());
    }
    if (alpha.is_shannon()) return RenyiOrder::shannon();
    return RenyiOrder::of(a / (2.0 * a - 1.0));
}

} // namespace entrobound
