#pragma once

#include "nhairy/series.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace nhairy {

enum class ZeroMethod { bisection, newton, argument_principle, recursion_walk };

struct ZeroRecord {
    Complex location;
    int multiplicity = 1;
    Real residual;
    std::optional<std::pair<Real, Real>> bracket; // real interval, when used
    ZeroMethod method = ZeroMethod::newton;
};

// [(3 pi k / 2)^{2/3}, (3 pi (k+1) / 2)^{2/3}], one simple-zero triple of
// Xi(., 1, 0) per interval.
struct ZeroInterval {
    int k;
    Real lo;
    Real hi;
};

ZeroInterval polya_interval(int k, unsigned digits = 50);

// (3 pi (k + 1/4) / 2)^{2/3}.
Real asymptotic_modulus(int k, unsigned digits = 50);

using ComplexFn = std::function<Complex(const Complex&)>;

// All real zeros of the solution S (S(0)=0, S'(0)=deriv_norm) in [lo, hi].
// Scan + bisection + Newton; completeness checked against a winding count,
// halving the scan step on disagreement.
std::vector<ZeroRecord> real_zeros(const Parameters& params, const Real& lo,
                                   const Real& hi, const Real& tol,
                                   unsigned digits);

// Same, for a caller-supplied evaluator (must be real on the real axis).
std::vector<ZeroRecord> real_zeros(const Propagator& S, const Real& lo,
                                   const Real& hi, const Real& tol);

// First max_k zero triples of Xi(., a, 0), via the real negative zeros of
// 1F2(1; 4/3, 5/3; .). Records come in triples ray by ray, modulus ascending.
std::vector<ZeroRecord> ray_zeros(const Complex& a, int max_k, const Real& tol,
                                  unsigned digits);

// Winding number of f around the circle |z - center| = radius; equals the
// number of enclosed zeros with multiplicity. Trapezoid phase tracking on
// 2^m samples, m escalated until the integer stabilizes twice.
int argument_principle_count(const ComplexFn& f, const Complex& center,
                             const Real& radius, const Real& quad_tol);

// Winding number along the rectangle boundary.
int winding_rectangle(const ComplexFn& f, const Real& x0, const Real& x1,
                      const Real& y0, const Real& y1, const Real& band);

// Zeros of f inside the rectangle by recursive contour subdivision, refined
// with Newton (f'/f for simple zeros, f'' Newton through df for multiple).
std::vector<ZeroRecord> zeros_in_rectangle(const ComplexFn& f,
                                           const ComplexFn& df, const Real& x0,
                                           const Real& x1, const Real& y0,
                                           const Real& y1, const Real& tol,
                                           unsigned digits);

// First-order displacement of a simple zero of Xi(., a, 0) under b -> b_small:
// -b Xi_1(xi0, a) / Xi_0'(xi0, a).
Complex perturbed_zero_shift(const Complex& xi0, const Complex& a,
                             const Complex& b_small, unsigned digits);

// Same displacement through the resummed hypergeometric form.
Complex perturbed_zero_shift_hyp(const Complex& xi0, const Complex& a,
                                 const Complex& b_small, unsigned digits);

// The b-linear correction term Xi_1(z, a) itself (series form).
Complex xi1_series(const Complex& z, const Complex& a, unsigned digits);

enum class Family { principal, particular };

// Classifies the solution through (q, alpha): particular iff a double zero
// (simultaneous zero of S and S') exists within |z| <= region_radius.
// The verdict is region-limited by construction.
Family classify_families(const Complex& q, const Complex& alpha,
                         const Parameters& params, const Real& region_radius,
                         unsigned digits);

} // namespace nhairy
