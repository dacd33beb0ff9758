#pragma once

#include "nhairy/series.hpp"

namespace nhairy {

struct LommelParams {
    Real mu;
    Real nu;
};

struct Hyp1F2Args {
    Real a1;
    Real b1;
    Real b2;
};

// 1F2(a1; b1, b2; x) by direct term summation. Stops once two successive
// partial sums agree at the requested precision while the terms decrease.
Complex hyp1f2(const Hyp1F2Args& args, const Complex& x, unsigned digits,
               long term_cap = 100000);

// s_{mu,nu}(z) = z^{mu+1}/((mu+1)^2 - nu^2) 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4).
Complex lommel_series(const LommelParams& params, const Complex& z,
                      unsigned digits);

// s_{0,nu}(z) = 1/(1+cos(pi nu)) * int_0^pi sin(z sin t) cos(nu t) dt.
Real lommel_integral(const Real& nu, const Real& z, const Real& tol);

// The finite-interval representation with the arcsin weight, integrated after
// the substitution t = sin(theta) (which removes the endpoint singularity).
Real lommel_int1_form(const Real& nu, const Real& z, const Real& tol);

// [cos(nu asin t) + cos(nu pi - nu asin t)] / sqrt(1 - t^2), 0 < t < 1.
// The 1/(1+cos(pi nu)) prefactor is applied by callers.
Real polya_weight(const Real& nu, const Real& t);

enum class ScorerKind { Hi, Gi };
enum class AiryKind { Ai, Bi };

Complex scorer(ScorerKind kind, const Complex& z, unsigned digits);
Complex airy_homogeneous(AiryKind kind, const Complex& z, unsigned digits);

// Value and first derivative together (needed for Wronskians and Newton).
std::pair<Complex, Complex> scorer_vd(ScorerKind kind, const Complex& z,
                                      unsigned digits);
std::pair<Complex, Complex> airy_homogeneous_vd(AiryKind kind, const Complex& z,
                                                unsigned digits);

// Reference values at z = 0 from the Gamma function.
Real scorer_gi0(unsigned digits);       // Gi(0) = 1/(3^{7/6} Gamma(2/3))
Real scorer_gi_prime0(unsigned digits); // Gi'(0) = 1/(3^{5/6} Gamma(1/3))
Real airy_ai0(unsigned digits);         // Ai(0) = 1/(3^{2/3} Gamma(2/3))
Real airy_ai_prime0(unsigned digits);   // Ai'(0) = -1/(3^{1/3} Gamma(1/3))
Real airy_bi0(unsigned digits);         // Bi(0) = 1/(3^{1/6} Gamma(2/3))
Real airy_bi_prime0(unsigned digits);   // Bi'(0) = 3^{1/6}/Gamma(1/3)

} // namespace nhairy
