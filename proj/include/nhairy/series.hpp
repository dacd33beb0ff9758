#pragma once

#include "nhairy/complex.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace nhairy {

// Solution family: double_zero has y = y' = 0 at the center, simple_zero has
// y = 0, y' != 0 there.
enum class FamilyTag { double_zero, simple_zero, general };

// The ODE y'' = (a z + b) y + c together with the derivative normalization
// at the reference zero (S'(0) in the default setup).
struct Parameters {
    Complex a;
    Complex b;
    Complex c;
    Complex deriv_norm = Complex(1);
};

// Truncated Taylor solution about `center`: coeffs[n] multiplies
// (z - center)^n, n = 0..truncation_order.
struct SeriesSolution {
    Complex center;
    std::vector<Complex> coeffs;
    int truncation_order = 0;
    unsigned precision = 0; // working decimal digits
    FamilyTag family_tag = FamilyTag::general;
};

struct EvalResult {
    Complex value;
    Real abs_error_bound;
    int terms_used = 0;
};

// Working precision policy: max(50, requested + order/10).
unsigned working_digits(unsigned requested, int order);

// Taylor coefficients of the solution with y(center) = y0, y'(center) = y1.
// g2 = ((a*center+b) g0 + c)/2, g3 = ((a*center+b) g1 + a g0)/6 and
// g_{n+2} = ((a*center+b) g_n + a g_{n-1}) / ((n+1)(n+2)) for n >= 2.
SeriesSolution build_series(const Parameters& params, const Complex& center,
                            const Complex& y0, const Complex& y1, int order,
                            unsigned digits);

// Horner-free ascending summation with the adaptive tail criterion: accepts z
// when |g_N| |z-center|^N / max(1,|value|) < 10^(-precision+10), otherwise
// throws RadiusExceeded.
EvalResult eval(const SeriesSolution& series, const Complex& z);

SeriesSolution derivative(const SeriesSolution& series);

// |y'' - (a z + b) y - c| at z, from the stored coefficients.
Real residual_check(const Parameters& params, const SeriesSolution& series,
                    const Complex& z);

// Evaluates one entire solution anywhere by re-centering the Taylor series
// over a unit lattice, walking out from the initial center. Series are cached
// and the truncation order escalates on demand.
class Propagator {
public:
    // y0, y1 are the value and derivative at `anchor`.
    Propagator(const Parameters& params, const Complex& y0, const Complex& y1,
               unsigned digits, int initial_order = 0,
               const Complex& anchor = Complex(0));

    Complex value(const Complex& z) const;
    Complex deriv(const Complex& z) const;
    std::pair<Complex, Complex> value_and_deriv(const Complex& z) const;

    const Parameters& params() const { return params_; }
    unsigned digits() const { return digits_; }

private:
    struct Cell {
        SeriesSolution s;
        SeriesSolution ds;
    };
    const Cell& cell(long i, long j) const;
    Cell build_cell(const Complex& center, const Complex& y0,
                    const Complex& y1) const;

    Parameters params_;
    Complex anchor_;
    Complex y0_, y1_;
    unsigned digits_;
    int order_;
    mutable std::map<std::pair<long, long>, Cell> cache_;
    mutable std::mutex mutex_;
};

} // namespace nhairy
