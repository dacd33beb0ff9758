#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhairy/laurent.hpp"

#include <vector>

using namespace nhairy;

namespace {

// Independent route to the same coefficients: series division of S'/S.
// With S = z h(z), h(0) = 1, the quotient q = S' / h satisfies
// S'/S = q(z)/z, so c_n = q_{n+1}.
std::vector<Complex> divide_series(const Parameters& p, int N, unsigned digits) {
    SeriesSolution s =
        build_series(p, Complex(0), Complex(0), p.deriv_norm, N + 4, digits);
    int M = N + 2;
    std::vector<Complex> h(M + 1), d(M + 1), hinv(M + 1), q(M + 1);
    for (int n = 0; n <= M; ++n) {
        h[n] = s.coeffs[n + 1];
        d[n] = Real(n + 1) * s.coeffs[n + 1];
    }
    hinv[0] = Real(1) / h[0];
    for (int n = 1; n <= M; ++n) {
        Complex acc(0);
        for (int k = 1; k <= n; ++k) acc += h[k] * hinv[n - k];
        hinv[n] = -acc / h[0];
    }
    for (int n = 0; n <= M; ++n) {
        Complex acc(0);
        for (int k = 0; k <= n; ++k) acc += d[k] * hinv[n - k];
        q[n] = acc;
    }
    std::vector<Complex> c(N + 1);
    for (int n = 0; n <= N; ++n) c[n] = q[n + 1];
    return c;
}

} // namespace

TEST_CASE("laurent_coeffs seeds match their closed forms") {
    PrecisionGuard guard(60);
    Complex a(Real("0.7"), Real("-0.2")), b(Real("-1.3"), Real("0.4")),
        beta(Real("0.25"), Real("0.1"));
    LaurentSequence seq = laurent_coeffs(a, b, beta, 5, 50);
    CHECK(abs(seq.coeffs[0] - beta) < eps10(45));
    CHECK(abs(seq.coeffs[1] - (b / Real(3) - beta * beta)) < eps10(45));
    CHECK(abs(seq.coeffs[2] -
              (beta * beta * beta - b * beta / Real(4) + a / Real(4))) <
          eps10(45));
    CHECK_THROWS_AS(laurent_coeffs(a, b, beta, 2, 50), std::invalid_argument);
}

TEST_CASE("trig degeneration reproduces the cotangent expansion") {
    // a = 0, b = -1, c = 0 makes S = sin z, so S'/S = cot z and the
    // coefficients are the classical ones: only odd indices survive.
    PrecisionGuard guard(60);
    LaurentSequence seq = laurent_coeffs(Complex(0), Complex(-1), Complex(0), 6, 50);
    CHECK(seq.coeffs[0].is_zero());
    CHECK(abs(seq.coeffs[1] + Complex(Real(1) / 3)) < eps10(45));
    CHECK(abs(seq.coeffs[2]) < eps10(45));
    CHECK(abs(seq.coeffs[3] + Complex(Real(1) / 45)) < eps10(45));
    CHECK(abs(seq.coeffs[4]) < eps10(45));
    CHECK(abs(seq.coeffs[5] + Complex(Real(2) / 945)) < eps10(45));
}

TEST_CASE("laurent_coeffs agrees with direct series division") {
    PrecisionGuard guard(80);
    struct Draw {
        Parameters p;
    } draws[] = {
        {{Complex(-1), Complex(-1), Complex(Real("-0.1"))}},
        {{Complex(Real("0.6"), Real("0.3")), Complex(Real("-0.8")),
          Complex(Real("0.2"), Real("-0.5"))}},
        {{Complex(2), Complex(Real("1.5")), Complex(-1)}},
    };
    for (const auto& dr : draws) {
        const Parameters& p = dr.p;
        Complex beta = p.c / (Real(2) * p.deriv_norm);
        LaurentSequence seq = laurent_coeffs(p.a, p.b, beta, 20, 60);
        auto ref = divide_series(p, 20, 60);
        for (int n = 0; n <= 20; ++n)
            CHECK(abs(seq.coeffs[n] - ref[n]) < eps10(30));
    }
}

TEST_CASE("power sums over the sine zeros recover -c_1") {
    // sum over all nonzero zeros +-k pi of xi^{-2} equals 1/3 = -c_1.
    PrecisionGuard guard(60);
    LaurentSequence seq = laurent_coeffs(Complex(0), Complex(-1), Complex(0), 6, 50);
    Real pi = pi_value();
    std::vector<ZeroRecord> zeros;
    for (int k = 1; k <= 200; ++k) {
        ZeroRecord zr;
        zr.location = Complex(k * pi);
        zr.residual = Real(0);
        zeros.push_back(zr);
        zr.location = Complex(-k * pi);
        zeros.push_back(zr);
    }
    Real tail;
    Real res = power_sum_residual(seq, zeros, 1, &tail);
    CHECK(res < tail);
    CHECK(res < Real("0.002")); // the true truncation defect is ~1e-3
    CHECK(tail > res);
    // an unreachable target trips the guard
    CHECK_THROWS_AS(power_sum_residual(seq, zeros, 1, nullptr, eps10(3)),
                    InsufficientZeros);
    std::vector<ZeroRecord> none;
    CHECK_THROWS_AS(power_sum_residual(seq, none, 1), InsufficientZeros);
}

TEST_CASE("next_zero reproduces the first documented zero") {
    PrecisionGuard guard(70);
    NextZeroResult nz =
        next_zero(Complex(-1), Complex(-1), Complex(Real("-0.1")), Complex(0),
                  Complex(1), 80, 60);
    CHECK(abs(nz.zero - Complex(Real("2.0977152"))) < Real("5e-7"));
    CHECK(nz.diag == WalkDiag::converged);
    // literal beta normalization coincides when S'(0) = 1
    NextZeroResult nl =
        next_zero(Complex(-1), Complex(-1), Complex(Real("-0.1")), Complex(0),
                  Complex(1), 80, 60, BetaMode::literal, Complex(1));
    CHECK(abs(nl.zero - nz.zero) < eps10(40));
    CHECK_THROWS_AS(next_zero(Complex(-1), Complex(-1), Complex(1), Complex(0),
                              Complex(0), 40, 50),
                    NotASimpleZero);
}

TEST_CASE("next_zero handles the parity-degenerate trig case") {
    // For sin the direct ratios never form (every other coefficient is 0);
    // the square-ratio route must land on the step pi.
    PrecisionGuard guard(110);
    NextZeroResult nz = next_zero(Complex(0), Complex(-1), Complex(0),
                                  Complex(0), Complex(1), 130, 100);
    CHECK(abs(nz.zero - Complex(pi_value())) < eps10(30));
}

TEST_CASE("walk_zeros marches along the real zeros") {
    PrecisionGuard guard(70);
    Parameters p{Complex(-1), Complex(-1), Complex(Real("-0.1"))};
    WalkState st = walk_zeros(p, 3, 80, 60);
    REQUIRE(st.step_history.size() == 4);
    CHECK(abs(st.step_history[1] - Complex(Real("2.0977152"))) < Real("5e-7"));
    CHECK(abs(st.step_history[2] - Complex(Real("3.7233151"))) < Real("5e-7"));
    CHECK(abs(st.step_history[3] - Complex(Real("5.0507149"))) < Real("5e-7"));
    CHECK(st.diagnostics == WalkDiag::converged);
}

TEST_CASE("walk_zeros diagnoses the 2-periodic bounce") {
    PrecisionGuard guard(70);
    Parameters p{Complex(-1), Complex(-1), Complex(-1)};
    WalkState st = walk_zeros(p, 6, 80, 60);
    CHECK(st.diagnostics == WalkDiag::oscillating_2_periodic);
    // the walk never gets past the first zero
    REQUIRE(st.step_history.size() >= 2);
    CHECK(abs(st.step_history[1] - Complex(Real("1.4230603"))) < Real("5e-7"));
}

TEST_CASE("walk_digits enforces the precision floor") {
    CHECK(walk_digits(0, 80) == 70);
    CHECK(walk_digits(100, 80) == 100);
    CHECK(walk_digits(10, 130) == 95);
}
