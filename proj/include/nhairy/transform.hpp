#pragma once

#include "nhairy/series.hpp"
#include "nhairy/zero_finder.hpp"

#include <vector>

namespace nhairy {

// T_{A,B} maps the solution y_T of the (a, b+aB, c/A) equation to the
// solution z -> A y_T(z - B) of the (a, b, c) equation.
struct TransformSpec {
    Complex A;
    Complex B;
};

// Parameter bookkeeping of T_{A,B}. Throws DegenerateA for A = 0 unless
// allow_projection is set (the c-proportional projection keeps c unchanged
// and is handled by callers through the double-zero family).
Parameters apply_transform_params(const TransformSpec& spec,
                                  const Parameters& params,
                                  bool allow_projection = false);

// Composition on parameter triples: T_{A2,B2} . T_{A1,B1} = T_{A1 A2, B1+B2}.
TransformSpec compose(const TransformSpec& first, const TransformSpec& second);

// Max of |y(z) - A y_T(z - B)| over the sample points, where y is the source
// solution (y(0)=y0, y'(0)=y1) of the (a,b,c) equation and y_T the solution
// of the transformed (a, b+aB, c/A) equation with matching data at z = -B.
Real transform_residual(const TransformSpec& spec, const Parameters& params,
                        const Complex& y0, const Complex& y1,
                        const std::vector<Complex>& samples, unsigned digits);

struct QuasiPeriodReport {
    Real max_distance;   // worst matched-pair distance
    int matched = 0;
    int excluded = 0;    // shifted out of the computed window
    std::vector<Complex> shifted_zeros;
    std::vector<Complex> transformed_zeros;
};

// Checks {xi_k(a, b+a xi_n, c/A_n)} = {xi_k(a,b,c) - xi_n} over the first K
// real zeros, A_n = S'(xi_n)/S'(0). Throws ZeroSetMismatch beyond tol.
QuasiPeriodReport verify_quasi_periodicity(const Parameters& params, int n,
                                           int K, const Real& tol,
                                           unsigned digits);

// Max over samples of |lambda^2 Xi(z/lambda, lambda^3 a, lambda^2 b) - Xi(z,a,b)|
// (the scaling matching the z^2/2 leading coefficient of the double zero).
Real verify_homogeneity(const Complex& a, const Complex& b,
                        const Complex& lambda,
                        const std::vector<Complex>& samples, unsigned digits);

// |(y')^2 - (az+b) y^2 - 2c y + a int_0^z y^2| for the double-zero solution y
// of y'' = (az+b) y + c (this is Xi when c = 1). Real axis only.
Real energy_identity_residual(const Real& a, const Real& b, const Real& c,
                              const Real& z, const Real& quad_tol,
                              unsigned digits);

// int_0^p Xi(z,a,b)^2 dz; strictly positive for real p != 0.
Real xi_square_integral(const Real& a, const Real& b, const Real& p,
                        const Real& quad_tol, unsigned digits);

} // namespace nhairy
