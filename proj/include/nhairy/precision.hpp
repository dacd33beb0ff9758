#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace nhairy {

// Arbitrary-precision real. Precision is tracked per value; mixed-precision
// arithmetic yields the wider operand's precision.
using Real = boost::multiprecision::mpfr_float;

// Scopes the default construction precision (decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real pi_value() { return 4 * atan(Real(1)); }

// 10^-k at the current default precision.
inline Real eps10(long k) { return pow(Real(10), -k); }

inline std::string to_decimal_string(const Real& x, unsigned digits) {
    return x.str(digits);
}

struct RadiusExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroOnContour : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotASimpleZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScanTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntervalMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Oscillating : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateA : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroSetMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nhairy
