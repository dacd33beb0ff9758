#pragma once

#include "nhairy/series.hpp"
#include "nhairy/zero_finder.hpp"

#include <vector>

namespace nhairy {

// Coefficients c_0..c_N of the Laurent expansion S'/S = 1/z + sum c_n z^n
// around a simple zero, with b_eff = b + a*xi and beta = c/(2 S'(xi)).
struct LaurentSequence {
    Complex a;
    Complex b_eff;
    Complex beta;
    std::vector<Complex> coeffs;
    unsigned precision = 0;
};

// Seeds c_0 = beta, c_1 = b_eff/3 - c_0^2, c_2 = c_0^3 - b_eff c_0/4 + a/4;
// then (n+4)(n+2) c_{n+2} = b_eff c_n + a c_{n-1} - 3 sum c_k c_{n+1-k}
//   - 3 sum (k+1) c_{k+1} c_{n-k} - sum sum c_j c_{k-j} c_{n-k}, n >= 1.
LaurentSequence laurent_coeffs(const Complex& a, const Complex& b_eff,
                               const Complex& beta, int N, unsigned digits);

struct InsufficientZeros : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |c_n + sum_k xi_k^{-(n+1)}| over the supplied zeros, plus a tail bound from
// |xi_K| and the k^{2/3} growth of the moduli. Throws InsufficientZeros when
// the tail bound exceeds `target` (if target > 0).
Real power_sum_residual(const LaurentSequence& seq,
                        const std::vector<ZeroRecord>& zeros, int n,
                        Real* tail_bound = nullptr, const Real& target = Real(0));

enum class WalkDiag { converged, oscillating_2_periodic, diverging, max_terms };

struct NextZeroResult {
    Complex zero;
    WalkDiag diag = WalkDiag::converged;
    int terms_used = 0;
};

// How the third argument of the walk recursion is normalized: `derived` uses
// beta = c/(2 S'(xi_k)); `literal` divides the origin beta by S'(xi_k), which
// coincides when S'(0) = 1.
enum class BetaMode { derived, literal };

// One step of the ratio-limit recursion from the simple zero xi_k. Builds the
// Laurent coefficients for (a, b + a*xi_k) and returns xi_k + c_N/c_{N+1}
// once the ratio sequence has stabilized; the result is re-verified as a zero
// of the solution. Throws Oscillating / NotConverged otherwise.
NextZeroResult next_zero(const Complex& a, const Complex& b, const Complex& c,
                         const Complex& xi_k, const Complex& deriv_at_xi_k,
                         int N, unsigned digits,
                         BetaMode mode = BetaMode::derived,
                         const Complex& deriv_at_origin = Complex(1));

struct WalkState {
    Complex current_zero;
    std::vector<Complex> step_history; // xi_0, xi_1, ... as visited
    WalkDiag diagnostics = WalkDiag::converged;
};

// Iterates next_zero from xi_0 = 0 (a simple zero with S'(0) = deriv_norm),
// re-deriving S' at each accepted zero. Stops at max_steps, on oscillation
// (revisiting an earlier zero), or on non-convergence.
WalkState walk_zeros(const Parameters& params, int max_steps, int N,
                     unsigned digits = 0);

// Precision policy for the walk: at least 30 + N/2 digits.
unsigned walk_digits(unsigned requested, int N);

} // namespace nhairy
