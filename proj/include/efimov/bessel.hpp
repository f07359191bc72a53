#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "efimov/log_scalar.hpp"
#include "efimov/quadrature.hpp"

namespace efimov {
namespace detail {

inline double digamma_int(int n) {
    // psi(n) = -gamma + H_{n-1}
    constexpr double euler_gamma = 0.57721566490153286060651209008240243;
    double h = 0.0;
    for (int j = 1; j < n; ++j) h += 1.0 / j;
    return -euler_gamma + h;
}

inline double lfact(int n) { return std::lgamma(n + 1.0); }

/// Ascending series for I_l, x in (0, ~16].  Returns ln I_l(x).
inline double log_bessel_i_series(int l, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= q / (static_cast<double>(m) * (m + l));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return l * std::log(0.5 * x) - lfact(l) + std::log(sum);
}

/// K_l by the standard small-argument expansion, x in (0, ~16], integer l >= 0.
inline double log_bessel_k_series(int l, double x) {
    const double q = 0.25 * x * x;
    double finite = 0.0;
    if (l > 0) {
        double pw = 0.5 * std::pow(2.0 / x, l);  // x >= ~1e-8 keeps this in range
        double term = std::exp(lfact(l - 1));
        finite = pw * term;
        double acc = term;
        for (int m = 1; m < l; ++m) {
            acc *= -q / (static_cast<double>(m) * (l - m));
            finite += pw * acc;
        }
    }
    const double il = std::exp(log_bessel_i_series(l, x));
    const double logterm = ((l % 2 == 0) ? -1.0 : 1.0) * std::log(0.5 * x) * il;
    double tail = 0.0;
    {
        double term = std::exp(l * std::log(0.5 * x) - lfact(l));
        for (int m = 0; m < 200; ++m) {
            const double c = digamma_int(m + 1) + digamma_int(l + m + 1);
            tail += c * term;
            term *= q / (static_cast<double>(m + 1) * (m + 1 + l));
            if (std::fabs(term) < 1e-18 * (std::fabs(tail) + 1.0) && m > 3) break;
        }
        tail *= 0.5 * ((l % 2 == 0) ? 1.0 : -1.0);
    }
    const double k = finite + logterm + tail;
    if (!(k > 0.0)) throw std::runtime_error("log_bessel_k_series: lost positivity");
    return std::log(k);
}

// Scaled integral form for the mid range, where the ascending series cancels
// catastrophically and the asymptotic series has not yet converged:
//   K_l(x) = sqrt(pi/(2x)) e^{-x} / Gamma(l+1/2) * 2 int_0^inf e^{-s^2} s^{2l} (1+s^2/(2x))^{l-1/2} ds.
inline double log_bessel_k_integral(int l, double x) {
    static thread_local const QuadratureRule rule = gauss_legendre(12, 0.0, 1.0);
    const int panels = 24;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = 8.0 * p / panels, hi = 8.0 * (p + 1) / panels;
        for (int j = 0; j < 12; ++j) {
            const double s = lo + (hi - lo) * rule.nodes[j];
            if (s == 0.0) continue;
            const double w = (hi - lo) * rule.weights[j];
            acc += w * std::exp(-s * s + 2.0 * l * std::log(s) + (l - 0.5) * std::log1p(s * s / (2.0 * x)));
        }
    }
    acc *= 2.0;
    return -x + 0.5 * std::log(M_PI / (2.0 * x)) + std::log(acc) - std::lgamma(l + 0.5);
}

/// Divergent large-argument series, truncated at the smallest term.
inline double asymptotic_tail(int l, double x, bool alternating) {
    const double mu = 4.0 * l * l;
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k <= 24; ++k) {
        const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        term *= alternating ? -f : f;
        if (std::fabs(term) > std::fabs(prev)) break;  // past the optimal truncation
        sum += term;
        prev = term;
        if (std::fabs(term) < 1e-17) break;
    }
    return sum;
}

}  // namespace detail

/// ln I_l(x) for integer l >= 0, x > 0.
inline double log_bessel_i(int l, double x) {
    if (l < 0 || !(x > 0.0)) throw std::invalid_argument("log_bessel_i: need l >= 0, x > 0");
    if (x <= 16.0) return detail::log_bessel_i_series(l, x);
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(detail::asymptotic_tail(l, x, true));
}

/// ln K_l(x) for integer l >= 0, x > 0.  Series / scaled integral / asymptotic
/// branches keep full accuracy through the mid range, where the ascending
/// series loses ~e^{2x} digits to cancellation.
inline double log_bessel_k(int l, double x) {
    if (l < 0 || !(x > 0.0)) throw std::invalid_argument("log_bessel_k: need l >= 0, x > 0");
    if (x <= 5.0) return detail::log_bessel_k_series(l, x);
    if (x < 20.0) return detail::log_bessel_k_integral(l, x);
    return -x + 0.5 * std::log(M_PI / (2.0 * x)) + std::log(detail::asymptotic_tail(l, x, false));
}

// I_l(z r_<) K_l(z r_>), the l-th angular component of the 2D Helmholtz kernel
// by the addition theorem.  Evaluated in the log domain so z down to 1e-300
// (and below, via LogScalar) cannot underflow; z.sign == 0 requests the z -> 0
// limit r_<^l / (2 l r_>^l), which exists only for l >= 1.
inline double bessel_i_k_product(int l, const LogScalar& z, double r_small, double r_large) {
    if (!(r_small > 0.0) || !(r_small <= r_large))
        throw std::invalid_argument("bessel_i_k_product: need 0 < r_small <= r_large");
    if (l < 0) throw std::invalid_argument("bessel_i_k_product: need l >= 0");
    const bool zero_limit = z.is_zero();
    if (!zero_limit && z.sign < 0) throw std::invalid_argument("bessel_i_k_product: z must be positive");
    const double ln_ratio_limit = l * (std::log(r_small) - std::log(r_large)) - std::log(2.0 * l);
    if (zero_limit) {
        if (l == 0) throw std::invalid_argument("bessel_i_k_product: l = 0 has no z -> 0 limit");
        return std::exp(ln_ratio_limit);
    }
    const double ln_t_large = z.log_magnitude + std::log(r_large);
    if (ln_t_large < std::log(1e-8)) {
        // both arguments tiny: leading series of the product, exact to O(t^2 ln t)
        if (l == 0) throw std::invalid_argument("bessel_i_k_product: l = 0 diverges as z -> 0");
        return std::exp(ln_ratio_limit);
    }
    const double ln_t_small = z.log_magnitude + std::log(r_small);
    const double ln_i = ln_t_small < std::log(1e-8)
                            ? l * (ln_t_small - std::log(2.0)) - detail::lfact(l)
                            : log_bessel_i(l, std::exp(ln_t_small));
    return std::exp(ln_i + log_bessel_k(l, std::exp(ln_t_large)));
}

inline double bessel_i_k_product(int l, double z, double r_small, double r_large) {
    return bessel_i_k_product(l, z == 0.0 ? LogScalar::zero() : LogScalar::from_double(z), r_small, r_large);
}

}  // namespace efimov
