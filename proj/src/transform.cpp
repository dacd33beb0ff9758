#include "nhairy/transform.hpp"

#include "nhairy/quadrature.hpp"

#include <algorithm>

namespace nhairy {

Parameters apply_transform_params(const TransformSpec& spec,
                                  const Parameters& params,
                                  bool allow_projection) {
    Parameters out = params;
    out.b = params.b + params.a * spec.B;
    if (spec.A.is_zero()) {
        if (!allow_projection)
            throw DegenerateA("apply_transform_params: A = 0 without the projection flag");
        // T_{0,B} keeps only the c-proportional part; c is unchanged and the
        // result lives in the double-zero family.
        return out;
    }
    out.c = params.c / spec.A;
    return out;
}

TransformSpec compose(const TransformSpec& first, const TransformSpec& second) {
    return TransformSpec{first.A * second.A, first.B + second.B};
}

Real transform_residual(const TransformSpec& spec, const Parameters& params,
                        const Complex& y0, const Complex& y1,
                        const std::vector<Complex>& samples, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    Parameters pt = apply_transform_params(spec, params);
    Propagator src(params, y0, y1, digits);
    // y_T solves the (a, b+aB, c/A) equation and satisfies y(z) = A y_T(z-B);
    // its initial data at z = -B matches the source data at 0 scaled by 1/A.
    Propagator dst(pt, y0 / spec.A, y1 / spec.A, digits, 0,
                   Complex(0) - spec.B);
    Real worst(0);
    for (const auto& z : samples) {
        Real r = abs(src.value(z) - spec.A * dst.value(z - spec.B));
        if (r > worst) worst = r;
    }
    return worst;
}

QuasiPeriodReport verify_quasi_periodicity(const Parameters& params, int n,
                                           int K, const Real& tol,
                                           unsigned digits) {
    if (n < 1 || K < 1)
        throw std::invalid_argument("verify_quasi_periodicity: need n, K >= 1");
    PrecisionGuard guard(digits + 10);
    Real refine_tol = eps10(static_cast<long>(digits) - 8);

    int want = std::max(n, K);
    Real hi = 3 * Real(want) + 4;
    std::vector<ZeroRecord> zs;
    for (int grow = 0; grow < 6; ++grow, hi *= 2) {
        zs = real_zeros(params, Real(1) / 100, hi, refine_tol, digits);
        if (static_cast<int>(zs.size()) >= want) break;
    }
    if (static_cast<int>(zs.size()) < want)
        throw ZeroSetMismatch("verify_quasi_periodicity: not enough real zeros found");

    Propagator S(params, Complex(0), params.deriv_norm, digits);
    Complex xi_n = zs[n - 1].location;
    Complex A_n = S.deriv(xi_n) / params.deriv_norm;

    Parameters shifted = params;
    shifted.b = params.b + params.a * xi_n;
    shifted.c = params.c / A_n;
    // S(z + xi_n)/A_n keeps the derivative normalization at its zero z = 0

    QuasiPeriodReport rep;
    rep.max_distance = 0;
    for (int k = 0; k < K; ++k)
        rep.shifted_zeros.push_back(zs[k].location - xi_n);
    rep.shifted_zeros.push_back(Complex(0) - xi_n); // the origin zero shifts too

    Real lo_t = -zs[n - 1].location.re - 1;
    Real hi_t = zs[K - 1].location.re - xi_n.re + Real(1) / 2;
    std::vector<ZeroRecord> zt = real_zeros(shifted, lo_t, hi_t, refine_tol, digits);
    for (const auto& zr : zt) rep.transformed_zeros.push_back(zr.location);
    rep.transformed_zeros.push_back(Complex(0)); // zero at the new origin

    for (const auto& expect : rep.shifted_zeros) {
        if (abs(expect - Complex(0)).is_zero()) continue;
        Real best(-1);
        for (const auto& got : rep.transformed_zeros) {
            Real d = abs(expect - got);
            if (best < 0 || d < best) best = d;
        }
        if (best < 0 || best > tol)
            throw ZeroSetMismatch("verify_quasi_periodicity: unmatched zero at " +
                                  to_decimal_string(expect, 10));
        ++rep.matched;
        if (best > rep.max_distance) rep.max_distance = best;
    }
    return rep;
}

Real verify_homogeneity(const Complex& a, const Complex& b,
                        const Complex& lambda,
                        const std::vector<Complex>& samples, unsigned digits) {
    if (lambda.is_zero())
        throw std::invalid_argument("verify_homogeneity: lambda must be nonzero");
    PrecisionGuard guard(digits + 10);
    Parameters base{a, b, Complex(1)};
    Complex l2 = lambda * lambda;
    Complex l3 = l2 * lambda;
    Parameters scaled{a * l3, b * l2, Complex(1)};
    Propagator xi(base, Complex(0), Complex(0), digits);
    Propagator xi_s(scaled, Complex(0), Complex(0), digits);
    Real worst(0);
    for (const auto& z : samples) {
        Real r = abs(l2 * xi_s.value(z / lambda) - xi.value(z));
        if (r > worst) worst = r;
    }
    return worst;
}

Real energy_identity_residual(const Real& a, const Real& b, const Real& c,
                              const Real& z, const Real& quad_tol,
                              unsigned digits) {
    PrecisionGuard guard(digits + 10);
    Parameters p{Complex(a), Complex(b), Complex(c)};
    Propagator y(p, Complex(0), Complex(0), digits);
    if (z.is_zero()) return Real(0);
    Real integral = integrate(
        [&](const Real& t) -> Real {
            Real v = y.value(Complex(t)).re;
            return v * v;
        },
        Real(0), z, quad_tol, digits);
    Real yv = y.value(Complex(z)).re;
    Real yd = y.deriv(Complex(z)).re;
    Real lhs = yd * yd;
    Real rhs = (a * z + b) * yv * yv + 2 * c * yv - a * integral;
    return fabs(lhs - rhs);
}

Real xi_square_integral(const Real& a, const Real& b, const Real& p,
                        const Real& quad_tol, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    Parameters params{Complex(a), Complex(b), Complex(1)};
    Propagator xi(params, Complex(0), Complex(0), digits);
    // mass of Xi^2 between 0 and p, independent of which endpoint is larger
    Real lo = p < 0 ? p : Real(0);
    Real hi = p < 0 ? Real(0) : p;
    return integrate(
        [&](const Real& t) -> Real {
            Real v = xi.value(Complex(t)).re;
            return v * v;
        },
        lo, hi, quad_tol, digits);
}

} // namespace nhairy
