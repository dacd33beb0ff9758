#include "nhairy/zero_finder.hpp"

#include "nhairy/special.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace nhairy {

ZeroInterval polya_interval(int k, unsigned digits) {
    if (k < 1) throw std::invalid_argument("polya_interval: k must be >= 1");
    PrecisionGuard guard(digits);
    Real pi = pi_value();
    ZeroInterval iv;
    iv.k = k;
    iv.lo = pow(3 * pi * k / 2, Real(2) / 3);
    iv.hi = pow(3 * pi * (k + 1) / 2, Real(2) / 3);
    return iv;
}

Real asymptotic_modulus(int k, unsigned digits) {
    if (k < 1) throw std::invalid_argument("asymptotic_modulus: k must be >= 1");
    PrecisionGuard guard(digits);
    Real pi = pi_value();
    return pow(3 * pi * (k + Real(1) / 4) / 2, Real(2) / 3);
}

// ---------------------------------------------------------------------------
// Winding numbers

namespace {

// Winding of f along the closed path t in [0,1) -> path(t). Escalates the
// sample count until every phase step is below pi/2 and the integer repeats.
int winding_closed(const ComplexFn& f,
                   const std::function<Complex(const Real&)>& path,
                   const Real& band) {
    int prev = INT_MIN;
    for (int m = 8; m <= 17; ++m) {
        long n = 1L << m;
        bool ok = true;
        Real total = 0;
        Real min_mag(-1), max_mag(0);
        Complex first, prev_w;
        Real half_pi = pi_value() / 2;
        for (long k = 0; k <= n && ok; ++k) {
            Complex w = (k == n) ? first : f(path(Real(k) / n));
            Real mag = abs(w);
            if (min_mag < 0 || mag < min_mag) min_mag = mag;
            if (mag > max_mag) max_mag = mag;
            if (k == 0) {
                first = w;
            } else {
                Real d = arg(w / prev_w);
                if (fabs(d) >= half_pi) ok = false;
                total += d;
            }
            prev_w = w;
        }
        if (!band.is_zero() && min_mag < band)
            throw ZeroOnContour("winding: |f| below the boundary band");
        if (!ok) continue;
        int wind = static_cast<int>(
            std::lround(static_cast<double>(total / (2 * pi_value()))));
        if (wind == prev) return wind;
        prev = wind;
    }
    if (prev != INT_MIN) return prev;
    throw ZeroOnContour("winding: phase steps never settled (zero near contour?)");
}

} // namespace

int argument_principle_count(const ComplexFn& f, const Complex& center,
                             const Real& radius, const Real& quad_tol) {
    Real two_pi = 2 * pi_value();
    return winding_closed(
        f,
        [&](const Real& t) { return center + polar(radius, two_pi * t); },
        quad_tol);
}

int winding_rectangle(const ComplexFn& f, const Real& x0, const Real& x1,
                      const Real& y0, const Real& y1, const Real& band) {
    Real w = x1 - x0, h = y1 - y0;
    Real per = 2 * (w + h);
    auto path = [&](const Real& t) -> Complex {
        Real s = t * per;
        if (s < w) return Complex(x0 + s, y0);
        s -= w;
        if (s < h) return Complex(x1, y0 + s);
        s -= h;
        if (s < w) return Complex(x1 - s, y1);
        s -= w;
        return Complex(x0, y1 - s);
    };
    return winding_closed(f, path, band);
}

// ---------------------------------------------------------------------------
// Newton refinement

namespace {

struct NewtonResult {
    Complex z;
    Real residual;
    bool ok = false;
};

NewtonResult newton_complex(const ComplexFn& f, const ComplexFn& df,
                            Complex z, unsigned digits, int max_iter = 120) {
    NewtonResult res;
    Real step_tol = eps10(static_cast<long>(digits) - 5);
    for (int it = 0; it < max_iter; ++it) {
        Complex fv = f(z);
        Complex dv = df(z);
        Real dmag = abs(dv);
        if (dmag.is_zero()) return res;
        Complex step = fv / dv;
        z -= step;
        Real scale = abs(z);
        if (scale < 1) scale = 1;
        if (abs(step) < step_tol * scale) {
            res.z = z;
            res.residual = abs(f(z));
            res.ok = true;
            return res;
        }
    }
    return res;
}

} // namespace

// ---------------------------------------------------------------------------
// Real-axis search

std::vector<ZeroRecord> real_zeros(const Propagator& S, const Real& lo,
                                   const Real& hi, const Real& tol) {
    if (!(lo < hi)) throw std::invalid_argument("real_zeros: needs lo < hi");
    unsigned digits = S.digits();
    PrecisionGuard guard(digits + 10);

    auto fval = [&](const Real& x) { return S.value(Complex(x)).re; };
    auto fn = [&](const Complex& z) { return S.value(z); };

    Real width = hi - lo;
    Real step = width / 64;
    for (int attempt = 0; attempt < 7; ++attempt, step /= 2) {
        long n = static_cast<long>(static_cast<double>(width / step)) + 1;
        std::vector<Real> xs(n + 1), vs(n + 1);
        for (long k = 0; k <= n; ++k) {
            xs[k] = (k == n) ? hi : lo + k * step;
            vs[k] = fval(xs[k]);
        }

        std::vector<ZeroRecord> found;
        Real tiny = eps10(static_cast<long>(digits) - 8);
        for (long k = 0; k < n; ++k) {
            bool hit = fabs(vs[k]) < tiny;
            bool change = !hit && fabs(vs[k + 1]) >= tiny &&
                          ((vs[k] < 0) != (vs[k + 1] < 0));
            if (!hit && !change) continue;

            Real a = xs[k], b = xs[k + 1];
            if (change) {
                // bisection down to width 1e-3, then Newton
                Real va = vs[k];
                while (b - a > Real(1) / 1000) {
                    Real mid = (a + b) / 2;
                    Real vm = fval(mid);
                    if (vm.is_zero()) { a = b = mid; break; }
                    if ((vm < 0) == (va < 0)) {
                        a = mid;
                        va = vm;
                    } else {
                        b = mid;
                    }
                }
            }
            Complex start((a + b) / 2);
            auto nr = newton_complex(fn, [&](const Complex& z) { return S.deriv(z); },
                                     start, digits);
            if (!nr.ok || !(nr.residual <= tol)) continue;
            if (!(nr.z.re >= lo && nr.z.re <= hi)) continue;
            bool dup = false;
            for (const auto& zr : found)
                if (abs(zr.location - nr.z) < 10 * step / 64 + eps10(digits / 2))
                    dup = true;
            if (dup) continue;
            ZeroRecord rec;
            rec.location = Complex(nr.z.re); // real-axis zero
            rec.multiplicity = 1;
            rec.residual = nr.residual;
            rec.bracket = std::make_pair(a, b);
            rec.method = change ? ZeroMethod::bisection : ZeroMethod::newton;
            found.push_back(rec);
        }
        std::sort(found.begin(), found.end(),
                  [](const ZeroRecord& a, const ZeroRecord& b) {
                      return a.location.re < b.location.re;
                  });

        // Completeness: winding count over a thin box around the interval.
        Real pad = 0;
        int count = -1;
        for (int shrink = 0; shrink < 4; ++shrink) {
            try {
                count = winding_rectangle(fn, lo + pad, hi - pad, -step, step,
                                          Real(0));
                break;
            } catch (const ZeroOnContour&) {
                pad += step / 9;
            }
        }
        if (count < 0) return found; // contour never settled; scan result stands
        long inside = 0;
        for (const auto& zr : found)
            if (zr.location.re >= lo + pad && zr.location.re <= hi - pad)
                ++inside;
        if (count == inside) return found;
    }
    throw ScanTooCoarse(
        "real_zeros: winding count exceeds scan results at the finest step");
}

std::vector<ZeroRecord> real_zeros(const Parameters& params, const Real& lo,
                                   const Real& hi, const Real& tol,
                                   unsigned digits) {
    if (!params.a.is_real() || !params.b.is_real() || !params.c.is_real() ||
        !params.deriv_norm.is_real())
        throw std::invalid_argument("real_zeros: parameters must be real");
    if (params.deriv_norm.is_zero())
        throw std::invalid_argument("real_zeros: deriv_norm must be nonzero");
    Propagator S(params, Complex(0), params.deriv_norm, digits);
    return real_zeros(S, lo, hi, tol);
}

// ---------------------------------------------------------------------------
// Ray zeros of Xi(., a, 0)

std::vector<ZeroRecord> ray_zeros(const Complex& a, int max_k, const Real& tol,
                                  unsigned digits) {
    if (a.is_zero()) throw std::invalid_argument("ray_zeros: a must be nonzero");
    PrecisionGuard guard(digits + 10);
    Hyp1F2Args h{Real(1), Real(4) / 3, Real(5) / 3};
    Hyp1F2Args dh{Real(2), Real(7) / 3, Real(8) / 3};
    Real dpref = 1 / (h.b1 * h.b2);

    auto F = [&](const Real& x) { return hyp1f2(h, Complex(x), digits).re; };
    auto dF = [&](const Real& x) -> Real {
        return dpref * hyp1f2(dh, Complex(x), digits).re;
    };

    // zeros for a = 1, scaled afterwards by lambda = a^{1/3}
    Real cbr = pow(abs(a), Real(1) / 3);
    Real theta = arg(a) / 3;
    Real pi = pi_value();

    std::vector<ZeroRecord> out;
    for (int k = 1; k <= max_k; ++k) {
        ZeroInterval iv = polya_interval(k, digits + 10);
        Real xlo = -pow(iv.hi, 3) / 9, xhi = -pow(iv.lo, 3) / 9;
        Real va = F(xlo), vb = F(xhi);
        if ((va < 0) == (vb < 0))
            throw IntervalMiss("ray_zeros: no sign change in Polya interval k=" +
                               std::to_string(k));
        // bisection, then Newton polish
        Real a0 = xlo, b0 = xhi;
        for (int it = 0; it < 40; ++it) {
            Real mid = (a0 + b0) / 2;
            Real vm = F(mid);
            if (vm.is_zero()) { a0 = b0 = mid; break; }
            if ((vm < 0) == (va < 0)) {
                a0 = mid;
                va = vm;
            } else {
                b0 = mid;
            }
        }
        Real x = (a0 + b0) / 2;
        Real step_tol = eps10(static_cast<long>(digits) + 5);
        for (int it = 0; it < 100; ++it) {
            Real dx = F(x) / dF(x);
            x -= dx;
            if (fabs(dx) < step_tol * fabs(x)) break;
        }
        Real r = pow(-9 * x, Real(1) / 3); // modulus for a = 1

        const Real angles[3] = {pi, Real(pi / 3), Real(-pi / 3)};
        for (const Real& ang : angles) {
            Complex z = polar(r / cbr, ang - theta);
            ZeroRecord rec;
            rec.location = z;
            rec.multiplicity = 1;
            // residual of Xi(z, a, 0) = z^2/2 * F(a z^3 / 9)
            Complex w = a * z * z * z / Real(9);
            rec.residual = abs(z * z * hyp1f2(h, w, digits)) / 2;
            if (!(rec.residual <= tol))
                throw IntervalMiss("ray_zeros: refinement above tolerance");
            rec.bracket = std::make_pair(iv.lo, iv.hi);
            rec.method = ZeroMethod::bisection;
            out.push_back(rec);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rectangle subdivision

namespace {

void rect_recurse(const ComplexFn& f, const ComplexFn& df, Real x0, Real x1,
                  Real y0, Real y1, const Real& tol, unsigned digits,
                  std::vector<ZeroRecord>& out, int depth) {
    int w;
    try {
        w = winding_rectangle(f, x0, x1, y0, y1, Real(0));
    } catch (const ZeroOnContour&) {
        if (depth == 0) throw;
        // nudge the box outward slightly; the parent split avoids double counts
        throw;
    }
    if (w == 0) return;

    Real wx = x1 - x0, wy = y1 - y0;
    Real diam = wx > wy ? wx : wy;
    if (diam < Real(1) / 8 || depth > 60) {
        Complex center((x0 + x1) / 2, (y0 + y1) / 2);
        NewtonResult nr;
        if (w == 1) {
            nr = newton_complex(f, df, center, digits);
        } else {
            // multiple zero: Newton on f' then verify f
            nr = newton_complex(df, [&](const Complex& z) {
                // second derivative by central difference of df
                Real h = eps10(static_cast<long>(digits) / 3);
                return (df(z + Complex(h)) - df(z - Complex(h))) / (2 * h);
            }, center, digits);
        }
        if (nr.ok && abs(f(nr.z)) <= tol) {
            ZeroRecord rec;
            rec.location = nr.z;
            rec.multiplicity = w;
            rec.residual = abs(f(nr.z));
            rec.method = w == 1 ? ZeroMethod::newton : ZeroMethod::argument_principle;
            out.push_back(rec);
            return;
        }
        if (diam < eps10(3)) {
            ZeroRecord rec; // unresolved cluster, report the box center
            rec.location = center;
            rec.multiplicity = w;
            rec.residual = abs(f(center));
            rec.method = ZeroMethod::argument_principle;
            out.push_back(rec);
            return;
        }
    }

    // split the longer side, jittering the cut if it lands on a zero
    bool split_x = wx >= wy;
    for (const double frac : {0.5, 0.46153, 0.55891, 0.42371}) {
        Real cut = split_x ? x0 + wx * Real(frac) : y0 + wy * Real(frac);
        try {
            if (split_x) {
                rect_recurse(f, df, x0, cut, y0, y1, tol, digits, out, depth + 1);
                rect_recurse(f, df, cut, x1, y0, y1, tol, digits, out, depth + 1);
            } else {
                rect_recurse(f, df, x0, x1, y0, cut, tol, digits, out, depth + 1);
                rect_recurse(f, df, x0, x1, cut, y1, tol, digits, out, depth + 1);
            }
            return;
        } catch (const ZeroOnContour&) {
            continue; // try the next cut fraction
        }
    }
    throw ZeroOnContour("zeros_in_rectangle: could not place a zero-free cut");
}

} // namespace

std::vector<ZeroRecord> zeros_in_rectangle(const ComplexFn& f,
                                           const ComplexFn& df, const Real& x0,
                                           const Real& x1, const Real& y0,
                                           const Real& y1, const Real& tol,
                                           unsigned digits) {
    PrecisionGuard guard(digits + 10);
    std::vector<ZeroRecord> out;
    rect_recurse(f, df, x0, x1, y0, y1, tol, digits, out, 0);
    // deduplicate zeros found twice across adjacent boxes
    std::vector<ZeroRecord> uniq;
    for (const auto& r : out) {
        bool dup = false;
        for (const auto& u : uniq)
            if (abs(u.location - r.location) < eps10(6)) dup = true;
        if (!dup) uniq.push_back(r);
    }
    return uniq;
}

// ---------------------------------------------------------------------------
// First-order zero perturbation in b

Complex xi1_series(const Complex& z, const Complex& a, unsigned digits) {
    unsigned wd = digits + 15;
    PrecisionGuard guard(wd);
    Complex zz = at_precision(z, wd), aa = at_precision(a, wd);
    Complex z3 = zz * zz * zz;
    Complex z4 = z3 * zz;

    // A_n = 3^{n+1}(n+1)!/(3n+4)!, B_n = 1/(3^{n+1}(n+1)!) prod_{k=1}^{n+1} 1/(3k+1)
    Real A(Real(3) / 24), B(Real(1) / 12);
    Complex apow(1); // (a z^3)^n
    Complex sum(0);
    Real eps = eps10(static_cast<long>(digits) + 10);
    int small_count = 0;
    for (long n = 0; n < 100000 && small_count < 3; ++n) {
        Complex term = apow * (A - B);
        sum += term;
        Real scale = abs(sum);
        if (scale < 1) scale = 1;
        small_count = (abs(term) < eps * scale) ? small_count + 1 : 0;
        A *= Real(3 * (n + 2));
        A /= Real(3 * n + 7) * Real(3 * n + 6) * Real(3 * n + 5);
        B /= Real(3 * (n + 2)) * Real(3 * n + 7);
        apow *= aa * z3;
    }
    return z4 * sum;
}

Complex perturbed_zero_shift(const Complex& xi0, const Complex& a,
                             const Complex& b_small, unsigned digits) {
    Parameters p;
    p.a = a;
    p.b = Complex(0);
    p.c = Complex(1);
    Propagator xi0_fn(p, Complex(0), Complex(0), digits);
    Complex d = xi0_fn.deriv(xi0);
    if (abs(d) < eps10(static_cast<long>(digits) / 2))
        throw NotASimpleZero("perturbed_zero_shift: |Xi_0'(xi0)| below tolerance");
    if (b_small.is_zero()) return Complex(0);
    return -(b_small * xi1_series(xi0, a, digits)) / d;
}

Complex perturbed_zero_shift_hyp(const Complex& xi0, const Complex& a,
                                 const Complex& b_small, unsigned digits) {
    unsigned wd = digits + 15;
    PrecisionGuard guard(wd);
    Complex w = a * xi0 * xi0 * xi0 / Real(9);
    Complex f1 = hyp1f2({Real(1), Real(5) / 3, Real(7) / 3}, w, digits);
    Complex f2 = hyp1f2({Real(1), Real(2), Real(7) / 3}, w, digits);
    Complex f3 = hyp1f2({Real(2), Real(7) / 3, Real(8) / 3}, w, digits);
    if (abs(f3) < eps10(static_cast<long>(digits) / 2))
        throw NotASimpleZero("perturbed_zero_shift_hyp: denominator vanishes");
    return -(Real(5) * b_small / (Real(9) * a)) * (Real(3) * f1 - Real(2) * f2) / f3;
}

// ---------------------------------------------------------------------------
// Family classification

Family classify_families(const Complex& q, const Complex& alpha,
                         const Parameters& params, const Real& region_radius,
                         unsigned digits) {
    if (alpha.is_zero()) return Family::particular; // double zero at q itself
    PrecisionGuard guard(digits + 10);
    Propagator S(params, Complex(0), alpha, digits, 0, q);

    auto f = [&](const Complex& z) { return S.deriv(z); };
    auto df = [&](const Complex& z) {
        // S'' = (a z + b) S + c from the equation itself
        return (params.a * z + params.b) * S.value(z) + params.c;
    };

    Real R = region_radius;
    std::vector<ZeroRecord> critical;
    try {
        critical = zeros_in_rectangle(f, df, -R, R, -R, R, eps10(10), digits);
    } catch (const ZeroOnContour&) {
        throw Inconclusive("classify_families: contour search failed");
    }
    Real tol = eps10(static_cast<long>(digits) / 2);
    for (const auto& cp : critical)
        if (abs(S.value(cp.location)) < tol) return Family::particular;
    return Family::principal;
}

} // namespace nhairy
