#pragma once

#include "nhairy/precision.hpp"

#include <functional>
#include <vector>

namespace nhairy {

// Gauss-Legendre nodes/weights on (-1, 1) at the current default precision.
// Nodes are found by Newton iteration on P_n; results are cached per
// (order, digits).
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

const GaussRule& gauss_legendre(int order, unsigned digits);

// Adaptive bisection with a fixed-order Gauss rule per panel; a panel is
// accepted when the 2x-order estimate agrees within its share of tol.
Real integrate(const std::function<Real(const Real&)>& f, const Real& a,
               const Real& b, const Real& tol, unsigned digits,
               int panel_order = 24, int max_depth = 40);

} // namespace nhairy
