#include "nhairy/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace nhairy {

unsigned walk_digits(unsigned requested, int N) {
    unsigned floor_d = 30 + static_cast<unsigned>(N) / 2;
    return requested > floor_d ? requested : floor_d;
}

LaurentSequence laurent_coeffs(const Complex& a, const Complex& b_eff,
                               const Complex& beta, int N, unsigned digits) {
    if (N < 3) throw std::invalid_argument("laurent_coeffs: N must be >= 3");
    unsigned wd = working_digits(digits, N);
    PrecisionGuard guard(wd);

    LaurentSequence seq;
    seq.a = at_precision(a, wd);
    seq.b_eff = at_precision(b_eff, wd);
    seq.beta = at_precision(beta, wd);
    seq.precision = wd;

    std::vector<Complex>& c = seq.coeffs;
    c.reserve(N + 1);
    c.push_back(seq.beta);
    c.push_back(seq.b_eff / Real(3) - c[0] * c[0]);
    c.push_back(c[0] * c[0] * c[0] - seq.b_eff * c[0] / Real(4) + seq.a / Real(4));

    // d[k] = sum_{j=0}^{k} c_j c_{k-j}, grown alongside c
    std::vector<Complex> d;
    d.push_back(c[0] * c[0]);
    d.push_back(Real(2) * (c[0] * c[1]));
    d.push_back(Real(2) * (c[0] * c[2]) + c[1] * c[1]);

    for (int n = 1; n + 2 <= N; ++n) {
        // extend d to index n+1 (c is known up to n+1)
        if (static_cast<int>(d.size()) == n + 1) {
            Complex dn(0);
            for (int j = 0; j <= n + 1; ++j) dn += c[j] * c[n + 1 - j];
            d.push_back(dn);
        }
        Complex s2(0);
        for (int k = 0; k <= n; ++k)
            s2 += Real(k + 1) * (c[k + 1] * c[n - k]);
        Complex s3(0);
        for (int k = 0; k <= n; ++k) s3 += d[k] * c[n - k];
        Complex rhs = seq.b_eff * c[n] + seq.a * c[n - 1] - Real(3) * d[n + 1] -
                      Real(3) * s2 - s3;
        c.push_back(rhs / Real((n + 4) * (n + 2)));
    }
    return seq;
}

Real power_sum_residual(const LaurentSequence& seq,
                        const std::vector<ZeroRecord>& zeros, int n,
                        Real* tail_bound, const Real& target) {
    if (n < 1) throw std::invalid_argument("power_sum_residual: n must be >= 1");
    if (static_cast<size_t>(n) >= seq.coeffs.size())
        throw std::invalid_argument("power_sum_residual: n beyond the sequence");
    if (zeros.empty()) throw InsufficientZeros("power_sum_residual: no zeros");
    PrecisionGuard guard(seq.precision);

    Complex sum(0);
    std::vector<Real> moduli;
    long count = 0;
    for (const auto& zr : zeros) {
        if (abs(zr.location).is_zero())
            throw std::invalid_argument("power_sum_residual: zero at origin");
        Complex inv = Real(1) / zr.location;
        Complex p = inv;
        for (int j = 0; j < n; ++j) p *= inv;
        sum += Real(zr.multiplicity) * p;
        count += zr.multiplicity;
        for (int m = 0; m < zr.multiplicity; ++m)
            moduli.push_back(abs(zr.location));
    }

    // Remaining moduli modeled by the growth law |xi_j| ~ kappa j^{2/3} with
    // kappa calibrated as the smallest observed ratio; then
    // sum_{j>K} |xi_j|^{-(n+1)} <= kappa^{-(n+1)} K^{1-2(n+1)/3} / expo.
    std::sort(moduli.begin(), moduli.end());
    Real kappa(-1);
    for (long j = 1; j <= count; ++j) {
        Real r = moduli[j - 1] / pow(Real(j), Real(2) / 3);
        if (kappa < 0 || r < kappa) kappa = r;
    }
    Real expo = Real(2 * (n + 1)) / 3 - 1; // positive for n >= 1
    Real tail = pow(kappa, -(n + 1)) *
                pow(Real(count), 1 - Real(2 * (n + 1)) / 3) / expo;
    if (tail_bound) *tail_bound = tail;
    if (target > 0 && tail > target)
        throw InsufficientZeros("power_sum_residual: tail bound above target");

    return abs(seq.coeffs[n] + sum);
}

// ---------------------------------------------------------------------------
// Ratio-limit recursion

namespace {

struct RatioAnalysis {
    bool converged = false;
    bool parity = false;     // one parity of c_n vanishes; step^2 available
    bool oscillating = false;
    Complex step;            // direct ratio limit
    Complex step_sq;         // c_n/c_{n+2} limit for the parity case
    Complex cluster_a, cluster_b;
};

RatioAnalysis analyze_ratios(const std::vector<Complex>& c, const Real& tol) {
    RatioAnalysis out;
    int top = static_cast<int>(c.size()) - 1;
    int window = 12;
    if (top < window + 2) return out;

    Real scale(0);
    for (int i = top - window; i <= top; ++i)
        if (abs(c[i]) > scale) scale = abs(c[i]);
    if (scale.is_zero()) return out;
    Real tiny = scale * eps10(20);

    // direct ratios over the trailing window
    std::vector<Complex> r;
    bool all_valid = true;
    for (int i = top - window; i < top; ++i) {
        if (abs(c[i + 1]) < tiny) {
            all_valid = false;
            break;
        }
        r.push_back(c[i] / c[i + 1]);
    }
    if (all_valid) {
        bool conv = true;
        for (size_t i = r.size() - 5; i < r.size(); ++i)
            if (!(abs(r[i] - r[i - 1]) < tol * abs(r[i]))) conv = false;
        if (conv) {
            out.converged = true;
            out.step = r.back();
            return out;
        }
        // two-cluster oscillation of the ratios
        Complex me(0), mo(0);
        int ne = 0, no = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            if (i % 2 == 0) { me += r[i]; ++ne; }
            else            { mo += r[i]; ++no; }
        }
        me /= Real(ne);
        mo /= Real(no);
        Real gap = abs(me - mo);
        Real spread(0);
        for (size_t i = 0; i < r.size(); ++i) {
            Real dev = abs(r[i] - (i % 2 == 0 ? me : mo));
            if (dev > spread) spread = dev;
        }
        if (gap > 1000 * tol * (abs(me) + abs(mo)) && spread < gap / 20) {
            out.oscillating = true;
            out.cluster_a = me;
            out.cluster_b = mo;
            return out;
        }
        return out;
    }

    // parity split: one parity negligible against the other
    Real se(0), so(0);
    for (int i = top - window; i <= top; ++i) {
        Real m = abs(c[i]);
        if (i % 2 == 0) { if (m > se) se = m; }
        else            { if (m > so) so = m; }
    }
    bool even_dominant = se > so;
    Real dom = even_dominant ? se : so, sub = even_dominant ? so : se;
    if (sub < dom * eps10(12)) {
        std::vector<Complex> r2;
        int start = top - window;
        if ((start % 2 == 0) != even_dominant) ++start;
        for (int i = start; i + 2 <= top; i += 2) {
            if (abs(c[i + 2]) < tiny) return out;
            r2.push_back(c[i] / c[i + 2]);
        }
        if (r2.size() >= 3) {
            bool conv = true;
            for (size_t i = r2.size() - 2; i < r2.size(); ++i)
                if (!(abs(r2[i] - r2[i - 1]) < tol * abs(r2[i]))) conv = false;
            if (conv) {
                out.parity = true;
                out.step_sq = r2.back();
            }
        }
    }
    return out;
}

} // namespace

NextZeroResult next_zero(const Complex& a, const Complex& b, const Complex& c,
                         const Complex& xi_k, const Complex& deriv_at_xi_k,
                         int N, unsigned digits, BetaMode mode,
                         const Complex& deriv_at_origin) {
    if (deriv_at_xi_k.is_zero())
        throw NotASimpleZero("next_zero: derivative at xi_k must be nonzero");
    Complex beta = (mode == BetaMode::derived)
                       ? c / (Real(2) * deriv_at_xi_k)
                       : (c / (Real(2) * deriv_at_origin)) / deriv_at_xi_k;
    Complex b_eff = b + a * xi_k;
    Real tol = eps10(4);

    RatioAnalysis ra;
    unsigned d = digits;
    for (int attempt = 0; attempt < 2; ++attempt, d *= 2) {
        LaurentSequence seq = laurent_coeffs(a, b_eff, beta, N + 1, d);
        ra = analyze_ratios(seq.coeffs, tol);
        if (ra.converged || ra.parity || ra.oscillating) break;
    }

    if (ra.oscillating)
        throw Oscillating("next_zero: ratio alternates between " +
                          to_decimal_string(ra.cluster_a, 10) + " and " +
                          to_decimal_string(ra.cluster_b, 10));
    if (!ra.converged && !ra.parity)
        throw NotConverged("next_zero: ratio sequence did not stabilize at N=" +
                           std::to_string(N));

    // re-verify the candidate as a zero of the solution through (xi_k, deriv)
    Parameters p;
    p.a = a;
    p.b = b;
    p.c = c;
    Propagator S(p, Complex(0), deriv_at_xi_k, digits, 0, xi_k);
    auto verifies = [&](const Complex& z) {
        auto [v, dv] = S.value_and_deriv(z);
        Real dmag = abs(dv);
        if (dmag.is_zero()) return false;
        Real corr = abs(v) / dmag;
        Real ref = abs(z - xi_k);
        if (ref < 1) ref = 1;
        return corr < ref / 1000;
    };

    NextZeroResult res;
    res.terms_used = N;
    if (ra.converged) {
        res.zero = xi_k + ra.step;
        if (!verifies(res.zero))
            throw NotConverged("next_zero: limit point failed re-verification");
        return res;
    }
    // parity case: candidate displacement is +-sqrt(c_n/c_{n+2})
    Complex s = sqrt(ra.step_sq);
    for (const Complex& cand : {xi_k + s, xi_k - s}) {
        if (verifies(cand)) {
            res.zero = cand;
            return res;
        }
    }
    throw NotConverged("next_zero: neither symmetric candidate verified");
}

WalkState walk_zeros(const Parameters& params, int max_steps, int N,
                     unsigned digits) {
    unsigned d = walk_digits(digits, N);
    if (params.deriv_norm.is_zero())
        throw std::invalid_argument("walk_zeros: 0 must be a simple zero");
    PrecisionGuard guard(d + 10);

    WalkState st;
    st.step_history.push_back(Complex(0));
    st.current_zero = Complex(0);

    Propagator S(params, Complex(0), params.deriv_norm, d);
    Complex cur(0);
    Complex deriv = params.deriv_norm;

    for (int step = 0; step < max_steps; ++step) {
        NextZeroResult nz;
        try {
            nz = next_zero(params.a, params.b, params.c, cur, deriv, N, d);
        } catch (const Oscillating&) {
            st.diagnostics = WalkDiag::oscillating_2_periodic;
            return st;
        } catch (const NotConverged&) {
            st.diagnostics = WalkDiag::max_terms;
            return st;
        }
        Complex cand = nz.zero;
        if (!isfinite(cand)) {
            st.diagnostics = WalkDiag::diverging;
            return st;
        }

        // revisiting a previous zero means the inter-zero distances are not
        // decreasing and the recursion bounces between two zeros
        Real match = Real(1) / 1000;
        for (const auto& seen : st.step_history) {
            Real ref = abs(cand);
            if (ref < 1) ref = 1;
            if (abs(cand - seen) < match * ref) {
                st.step_history.push_back(cand);
                st.current_zero = cand;
                st.diagnostics = WalkDiag::oscillating_2_periodic;
                return st;
            }
        }

        st.step_history.push_back(cand);
        st.current_zero = cand;

        // polish for the next step's expansion data
        Complex z = cand;
        for (int it = 0; it < 60; ++it) {
            auto [v, dv] = S.value_and_deriv(z);
            Complex delta = v / dv;
            z -= delta;
            Real ref = abs(z);
            if (ref < 1) ref = 1;
            if (abs(delta) < eps10(static_cast<long>(d) - 5) * ref) break;
        }
        cur = z;
        deriv = S.deriv(z);
    }
    st.diagnostics = WalkDiag::converged;
    return st;
}

} // namespace nhairy
