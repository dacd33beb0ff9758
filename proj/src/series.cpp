#include "nhairy/series.hpp"

#include <cmath>
#include <cstdlib>

namespace nhairy {

unsigned working_digits(unsigned requested, int order) {
    unsigned w = requested + static_cast<unsigned>(order) / 10;
    return w < 50 ? 50 : w;
}

namespace {

// Extends the coefficient recursion g_{n+2} = (bc*g_n + a*g_{n-1})/((n+1)(n+2))
// with bc = a*center + b.
void extend_coeffs(std::vector<Complex>& g, const Complex& a,
                   const Complex& bc, const Complex& c, int order) {
    if (g.size() < 2) return; // callers always seed g0, g1
    if (g.size() == 2 && order >= 2) g.push_back((bc * g[0] + c) / Real(2));
    if (g.size() == 3 && order >= 3) g.push_back((bc * g[1] + a * g[0]) / Real(6));
    for (int n = static_cast<int>(g.size()) - 2; n <= order - 2; ++n)
        g.push_back((bc * g[n] + a * g[n - 1]) / Real((n + 1) * (n + 2)));
}

FamilyTag tag_from(const Complex& y0, const Complex& y1) {
    if (y0.is_zero()) return y1.is_zero() ? FamilyTag::double_zero : FamilyTag::simple_zero;
    return FamilyTag::general;
}

} // namespace

SeriesSolution build_series(const Parameters& params, const Complex& center,
                            const Complex& y0, const Complex& y1, int order,
                            unsigned digits) {
    if (order < 4) throw std::invalid_argument("build_series: order must be >= 4");
    if (digits < 30) throw std::invalid_argument("build_series: precision must be >= 30 digits");
    if (!isfinite(params.a) || !isfinite(params.b) || !isfinite(params.c) ||
        !isfinite(center) || !isfinite(y0) || !isfinite(y1))
        throw std::invalid_argument("build_series: non-finite input");

    unsigned wd = working_digits(digits, order);
    PrecisionGuard guard(wd);

    SeriesSolution s;
    s.center = at_precision(center, wd);
    s.truncation_order = order;
    s.precision = wd;
    s.family_tag = tag_from(y0, y1);

    Complex a = at_precision(params.a, wd);
    Complex bc = a * s.center + at_precision(params.b, wd);
    Complex c = at_precision(params.c, wd);

    s.coeffs.reserve(order + 1);
    s.coeffs.push_back(at_precision(y0, wd));
    s.coeffs.push_back(at_precision(y1, wd));
    extend_coeffs(s.coeffs, a, bc, c, order);
    return s;
}

EvalResult eval(const SeriesSolution& series, const Complex& z) {
    PrecisionGuard guard(series.precision);
    Complex w = at_precision(z, series.precision) - series.center;
    Real r = abs(w);

    EvalResult out;
    out.terms_used = static_cast<int>(series.coeffs.size());
    if (r.is_zero()) {
        out.value = series.coeffs[0];
        out.abs_error_bound = 0;
        return out;
    }

    Complex sum = series.coeffs[0];
    Complex pw(1);
    Real abs_sum = abs(series.coeffs[0]);
    Real last = 0, prev = 0;
    for (size_t n = 1; n < series.coeffs.size(); ++n) {
        pw *= w;
        Complex term = series.coeffs[n] * pw;
        sum += term;
        prev = last;
        last = abs(term);
        abs_sum += last;
    }

    Real scale = abs(sum);
    if (scale < 1) scale = 1;
    Real tail = last > prev ? last : prev;
    if (tail / scale >= eps10(static_cast<long>(series.precision) - 10))
        throw RadiusExceeded("eval: truncation tail too large at |z-center| = " +
                             r.str(6));
    out.value = sum;
    out.abs_error_bound =
        2 * tail + abs_sum * eps10(static_cast<long>(series.precision) - 2);
    return out;
}

SeriesSolution derivative(const SeriesSolution& series) {
    PrecisionGuard guard(series.precision);
    SeriesSolution d;
    d.center = series.center;
    d.truncation_order = series.truncation_order - 1;
    d.precision = series.precision;
    d.family_tag = FamilyTag::general;
    d.coeffs.reserve(series.coeffs.size() - 1);
    for (size_t n = 1; n < series.coeffs.size(); ++n)
        d.coeffs.push_back(series.coeffs[n] * Real(static_cast<long>(n)));
    return d;
}

Real residual_check(const Parameters& params, const SeriesSolution& series,
                    const Complex& z) {
    PrecisionGuard guard(series.precision);
    SeriesSolution d1 = derivative(series);
    SeriesSolution d2 = derivative(d1);
    Complex y = eval(series, z).value;
    Complex ypp = eval(d2, z).value;
    Complex rhs = (params.a * z + params.b) * y + params.c;
    return abs(ypp - rhs);
}

// ---------------------------------------------------------------------------
// Propagator

namespace {

// Builds a series whose order grows until the tail at radius 0.9 is
// negligible at the working precision.
SeriesSolution build_adaptive(const Parameters& params, const Complex& center,
                              const Complex& y0, const Complex& y1,
                              unsigned wd, int min_order) {
    PrecisionGuard guard(wd);
    SeriesSolution s;
    s.center = at_precision(center, wd);
    s.precision = wd;
    s.family_tag = FamilyTag::general;

    Complex a = at_precision(params.a, wd);
    Complex bc = a * s.center + at_precision(params.b, wd);
    Complex c = at_precision(params.c, wd);

    s.coeffs.push_back(at_precision(y0, wd));
    s.coeffs.push_back(at_precision(y1, wd));

    const Real radius(Real(9) / 10);
    const Real target = eps10(static_cast<long>(wd) + 5);
    Real pw = radius * radius; // radius^n for n = |coeffs|
    int consecutive = 0;
    const int cap = 8192;
    int n = 2;
    for (; n <= cap; ++n) {
        extend_coeffs(s.coeffs, a, bc, c, n);
        Real t = abs(s.coeffs[n]) * pw;
        pw *= radius;
        if (t < target) {
            if (++consecutive >= 5 && n >= min_order) break;
        } else {
            consecutive = 0;
        }
    }
    s.truncation_order = static_cast<int>(s.coeffs.size()) - 1;
    if (n > cap)
        throw RadiusExceeded("Propagator: series did not converge at order cap");
    return s;
}

} // namespace

Propagator::Propagator(const Parameters& params, const Complex& y0,
                       const Complex& y1, unsigned digits, int initial_order,
                       const Complex& anchor)
    : params_(params), anchor_(anchor), y0_(y0), y1_(y1), digits_(digits),
      order_(initial_order > 0 ? initial_order : 16) {}

Propagator::Cell Propagator::build_cell(const Complex& center,
                                        const Complex& y0,
                                        const Complex& y1) const {
    Cell c;
    c.s = build_adaptive(params_, center, y0, y1, digits_ + 15, order_);
    c.ds = derivative(c.s);
    return c;
}

const Propagator::Cell& Propagator::cell(long i, long j) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    // Walk the Manhattan path from the anchor cell, filling missing cells.
    long ci = 0, cj = 0;
    auto cur = cache_.find({0, 0});
    if (cur == cache_.end())
        cur = cache_.emplace(std::make_pair(0L, 0L), build_cell(anchor_, y0_, y1_)).first;
    while (ci != i || cj != j) {
        if (ci != i)
            ci += (i > ci) ? 1 : -1;
        else
            cj += (j > cj) ? 1 : -1;
        auto next = cache_.find({ci, cj});
        if (next == cache_.end()) {
            Complex center = anchor_ + Complex(Real(ci), Real(cj));
            Complex v = eval(cur->second.s, center).value;
            Complex d = eval(cur->second.ds, center).value;
            next = cache_.emplace(std::make_pair(ci, cj),
                                  build_cell(center, v, d)).first;
        }
        cur = next;
    }
    return cur->second;
}

std::pair<Complex, Complex> Propagator::value_and_deriv(const Complex& z) const {
    Complex w = z - anchor_;
    long i = std::lround(static_cast<double>(w.re));
    long j = std::lround(static_cast<double>(w.im));
    const Cell& c = cell(i, j);
    return {eval(c.s, z).value, eval(c.ds, z).value};
}

Complex Propagator::value(const Complex& z) const {
    return value_and_deriv(z).first;
}

Complex Propagator::deriv(const Complex& z) const {
    return value_and_deriv(z).second;
}

} // namespace nhairy
