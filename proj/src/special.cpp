#include "nhairy/special.hpp"

#include "nhairy/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace nhairy {

Complex hyp1f2(const Hyp1F2Args& args, const Complex& x, unsigned digits,
               long term_cap) {
    for (const Real* b : {&args.b1, &args.b2}) {
        if (*b <= 0 && *b == floor(*b))
            throw std::invalid_argument(
                "hyp1f2: lower parameter is zero or a negative integer");
    }
    unsigned wd = digits + 15;
    PrecisionGuard guard(wd);
    Real a1 = at_precision(args.a1, wd), b1 = at_precision(args.b1, wd),
         b2 = at_precision(args.b2, wd);
    Complex xx = at_precision(x, wd);

    Complex term(1), sum(1);
    Real eps = eps10(static_cast<long>(digits) + 10);
    Real prev_mag = 1;
    bool decreasing = false;
    int small_count = 0;
    for (long n = 0; n < term_cap; ++n) {
        term = term * xx * ((a1 + n) / ((b1 + n) * (b2 + n) * (n + 1)));
        sum += term;
        Real mag = abs(term);
        decreasing = decreasing || mag < prev_mag;
        prev_mag = mag;
        Real scale = abs(sum);
        if (scale < 1) scale = 1;
        if (decreasing && mag < eps * scale) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
    }
    throw NoConvergence("hyp1f2: term cap reached before the series settled");
}

Complex lommel_series(const LommelParams& params, const Complex& z,
                      unsigned digits) {
    unsigned wd = digits + 15;
    PrecisionGuard guard(wd);
    Real mu = at_precision(params.mu, wd), nu = at_precision(params.nu, wd);
    Real denom = (mu + 1) * (mu + 1) - nu * nu;
    if (denom.is_zero())
        throw std::invalid_argument("lommel_series: (mu+1)^2 == nu^2");

    Complex zz = at_precision(z, wd);
    Complex zpow;
    if (mu == floor(mu) && mu >= 0) {
        zpow = Complex(1);
        for (long k = 0; k <= static_cast<long>(mu); ++k) zpow *= zz;
    } else {
        // principal power for non-integer mu
        Real r = abs(zz), th = arg(zz);
        zpow = polar(pow(r, mu + 1), (mu + 1) * th);
    }
    Hyp1F2Args h{Real(1), (mu - nu + 3) / 2, (mu + nu + 3) / 2};
    Complex f = hyp1f2(h, Complex(Real(-1) / 4) * zz * zz, digits);
    return zpow / denom * f;
}

namespace {

unsigned digits_for_tol(const Real& tol) {
    long d = 10 - static_cast<long>(static_cast<double>(log10(tol)));
    return d < 30 ? 30 : static_cast<unsigned>(d);
}

} // namespace

Real lommel_integral(const Real& nu, const Real& z, const Real& tol) {
    if (fabs(nu) >= 1)
        throw std::invalid_argument("lommel_integral: requires |nu| < 1");
    unsigned wd = digits_for_tol(tol);
    PrecisionGuard guard(wd);
    Real pi = pi_value();
    Real pref = 1 / (1 + cos(pi * nu));
    Real znu = at_precision(nu, wd), zz = at_precision(z, wd);
    Real v = integrate(
        [&](const Real& t) -> Real { return sin(zz * sin(t)) * cos(znu * t); }, Real(0),
        pi, tol / (2 * pref), wd);
    return pref * v;
}

Real lommel_int1_form(const Real& nu, const Real& z, const Real& tol) {
    if (fabs(nu) >= 1)
        throw std::invalid_argument("lommel_int1_form: requires |nu| < 1");
    unsigned wd = digits_for_tol(tol);
    PrecisionGuard guard(wd);
    Real pi = pi_value();
    Real pref = 1 / (1 + cos(pi * nu));
    Real znu = at_precision(nu, wd), zz = at_precision(z, wd);
    Real v = integrate(
        [&](const Real& th) -> Real {
            return sin(zz * sin(th)) *
                   (cos(znu * th) + cos(znu * pi - znu * th));
        },
        Real(0), pi / 2, tol / (2 * pref), wd);
    return pref * v;
}

Real polya_weight(const Real& nu, const Real& t) {
    if (!(t > 0 && t < 1))
        throw std::invalid_argument("polya_weight: t must lie in (0,1)");
    if (fabs(nu) >= 1)
        throw std::invalid_argument("polya_weight: requires |nu| < 1");
    Real pi = pi_value();
    Real s = asin(t); // principal branch, range (-pi/2, pi/2)
    return (cos(nu * s) + cos(nu * pi - nu * s)) / sqrt(1 - t * t);
}

// ---------------------------------------------------------------------------
// Scorer and homogeneous Airy functions via the series engine.

Real scorer_gi0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return 1 / (pow(Real(3), Real(7) / 6) * tgamma(Real(2) / 3));
}
Real scorer_gi_prime0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return 1 / (pow(Real(3), Real(5) / 6) * tgamma(Real(1) / 3));
}
Real airy_ai0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return 1 / (pow(Real(3), Real(2) / 3) * tgamma(Real(2) / 3));
}
Real airy_ai_prime0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return -1 / (pow(Real(3), Real(1) / 3) * tgamma(Real(1) / 3));
}
Real airy_bi0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return 1 / (pow(Real(3), Real(1) / 6) * tgamma(Real(2) / 3));
}
Real airy_bi_prime0(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    return pow(Real(3), Real(1) / 6) / tgamma(Real(1) / 3);
}

namespace {

// Propagators for the four named functions, cached per (kind, digits).
const Propagator& named_function(int kind, unsigned digits) {
    static std::map<std::pair<int, unsigned>, std::unique_ptr<Propagator>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(kind, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    PrecisionGuard guard(digits + 10);
    Real pi = pi_value();
    Parameters p;
    p.a = Complex(1);
    p.b = Complex(0);
    Complex y0, y1;
    switch (kind) {
    case 0: // Hi
        p.c = Complex(1 / pi);
        y0 = Complex(2 * scorer_gi0(digits));
        y1 = Complex(2 * scorer_gi_prime0(digits));
        break;
    case 1: // Gi
        p.c = Complex(-1 / pi);
        y0 = Complex(scorer_gi0(digits));
        y1 = Complex(scorer_gi_prime0(digits));
        break;
    case 2: // Ai
        p.c = Complex(0);
        y0 = Complex(airy_ai0(digits));
        y1 = Complex(airy_ai_prime0(digits));
        break;
    default: // Bi
        p.c = Complex(0);
        y0 = Complex(airy_bi0(digits));
        y1 = Complex(airy_bi_prime0(digits));
        break;
    }
    it = cache.emplace(key, std::make_unique<Propagator>(p, y0, y1, digits))
             .first;
    return *it->second;
}

} // namespace

Complex scorer(ScorerKind kind, const Complex& z, unsigned digits) {
    return named_function(kind == ScorerKind::Hi ? 0 : 1, digits).value(z);
}
std::pair<Complex, Complex> scorer_vd(ScorerKind kind, const Complex& z,
                                      unsigned digits) {
    return named_function(kind == ScorerKind::Hi ? 0 : 1, digits)
        .value_and_deriv(z);
}
Complex airy_homogeneous(AiryKind kind, const Complex& z, unsigned digits) {
    return named_function(kind == AiryKind::Ai ? 2 : 3, digits).value(z);
}
std::pair<Complex, Complex> airy_homogeneous_vd(AiryKind kind, const Complex& z,
                                                unsigned digits) {
    return named_function(kind == AiryKind::Ai ? 2 : 3, digits)
        .value_and_deriv(z);
}

} // namespace nhairy
