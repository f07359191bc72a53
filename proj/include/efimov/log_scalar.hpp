#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace efimov {

/// ln(e^a + e^b) without overflow; symmetric, tolerates +-infinity operands.
inline double log_sum_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// ln(e^a - e^b) for a > b.  Throws if the difference would be negative.
inline double log_diff_exp(double a, double b) {
    if (b == -std::numeric_limits<double>::infinity()) return a;
    if (a <= b) throw std::domain_error("log_diff_exp: a must exceed b");
    return a + std::log1p(-std::exp(b - a));
}

// Signed value carried as sign * exp(log_magnitude).  Survives magnitudes far
// outside double range (log_magnitude anywhere in [-1e6, 1e6]); used wherever
// the energy parameter z drives quantities like g_z below 1e-150.
struct LogScalar {
    int sign = 0;               // -1, 0, +1
    double log_magnitude = -std::numeric_limits<double>::infinity();

    LogScalar() = default;
    LogScalar(int s, double lm) : sign(s), log_magnitude(s == 0 ? -std::numeric_limits<double>::infinity() : lm) {}

    static LogScalar zero() { return LogScalar(); }
    static LogScalar one() { return LogScalar(1, 0.0); }

    static LogScalar from_double(double x) {
        if (x == 0.0) return zero();
        return LogScalar(x > 0 ? 1 : -1, std::log(std::fabs(x)));
    }
    /// Value sign * e^lnmag given directly in log form.
    static LogScalar from_log(double lnmag, int sign = 1) {
        return LogScalar(sign, lnmag);
    }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    bool is_zero() const { return sign == 0; }

    LogScalar operator*(const LogScalar& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return LogScalar(sign * o.sign, log_magnitude + o.log_magnitude);
    }
    LogScalar operator/(const LogScalar& o) const {
        if (o.sign == 0) throw std::domain_error("LogScalar: division by zero");
        if (sign == 0) return zero();
        return LogScalar(sign * o.sign, log_magnitude - o.log_magnitude);
    }
    LogScalar operator-() const { return LogScalar(-sign, log_magnitude); }

    LogScalar operator+(const LogScalar& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        if (sign == o.sign) return LogScalar(sign, log_sum_exp(log_magnitude, o.log_magnitude));
        if (log_magnitude == o.log_magnitude) return zero();
        return log_magnitude > o.log_magnitude
                   ? LogScalar(sign, log_diff_exp(log_magnitude, o.log_magnitude))
                   : LogScalar(o.sign, log_diff_exp(o.log_magnitude, log_magnitude));
    }
    LogScalar operator-(const LogScalar& o) const { return *this + (-o); }

    /// Magnitude-and-sign comparison without leaving the log domain.
    bool operator<(const LogScalar& o) const {
        if (sign != o.sign) return sign < o.sign;
        if (sign == 0) return false;
        return sign > 0 ? log_magnitude < o.log_magnitude : log_magnitude > o.log_magnitude;
    }

    LogScalar pow(double e) const {
        if (sign == 0) return zero();
        if (sign < 0) throw std::domain_error("LogScalar::pow: negative base");
        return LogScalar(1, e * log_magnitude);
    }
    LogScalar sqrt() const { return pow(0.5); }
};

}  // namespace efimov
