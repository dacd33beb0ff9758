#include "nhairy/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace nhairy {

namespace {

// Legendre P_n(x) and derivative by the three-term recurrence.
std::pair<Real, Real> legendre_pd(int n, const Real& x) {
    Real p0(1), p1(x);
    for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    Real d = n * (x * p1 - p0) / (x * x - 1);
    return {p1, d};
}

GaussRule compute_rule(int order, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    Real pi = pi_value();
    Real tol = eps10(static_cast<long>(digits) + 5);
    for (int k = 0; k < (order + 1) / 2; ++k) {
        Real x = cos(pi * (k + Real(3) / 4) / (order + Real(1) / 2));
        for (int it = 0; it < 200; ++it) {
            auto [p, d] = legendre_pd(order, x);
            Real dx = p / d;
            x -= dx;
            if (fabs(dx) < tol) break;
        }
        auto [p, d] = legendre_pd(order, x);
        Real w = 2 / ((1 - x * x) * d * d);
        rule.nodes[k] = -x;
        rule.weights[k] = w;
        rule.nodes[order - 1 - k] = x;
        rule.weights[order - 1 - k] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0;
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order, unsigned digits) {
    static std::map<std::pair<int, unsigned>, GaussRule> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(order, digits);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, compute_rule(order, digits)).first;
    return it->second;
}

namespace {

Real panel(const std::function<Real(const Real&)>& f, const Real& a,
           const Real& b, const GaussRule& rule) {
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real sum = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return sum * half;
}

Real adapt(const std::function<Real(const Real&)>& f, const Real& a,
           const Real& b, const Real& tol, const GaussRule& lo,
           const GaussRule& hi, int depth, int max_depth) {
    Real coarse = panel(f, a, b, lo);
    Real fine = panel(f, a, b, hi);
    if (fabs(fine - coarse) <= tol) return fine;
    if (depth >= max_depth)
        throw QuadratureFailure("integrate: refinement stalled above tolerance");
    Real mid = (a + b) / 2;
    Real half_tol = tol / 2;
    return adapt(f, a, mid, half_tol, lo, hi, depth + 1, max_depth) +
           adapt(f, mid, b, half_tol, lo, hi, depth + 1, max_depth);
}

} // namespace

Real integrate(const std::function<Real(const Real&)>& f, const Real& a,
               const Real& b, const Real& tol, unsigned digits,
               int panel_order, int max_depth) {
    PrecisionGuard guard(digits + 10);
    if (a == b) return Real(0);
    const GaussRule& lo = gauss_legendre(panel_order, digits);
    const GaussRule& hi = gauss_legendre(2 * panel_order, digits);
    return adapt(f, Real(a), Real(b), Real(tol) / 2, lo, hi, 0, max_depth);
}

} // namespace nhairy
