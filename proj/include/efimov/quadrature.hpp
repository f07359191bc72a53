#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efimov {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2n-1.
inline QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = x;
        r.nodes[n - 1 - i] = -x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
        if (n % 2 == 1 && i == m - 1) {
            r.nodes[i] = 0.0;  // odd rules have an exact midpoint node
        }
    }
    // map [-1,1] -> [a,b], ascending
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = c + h * r.nodes[n - 1 - i];
        ws[i] = h * r.weights[n - 1 - i];
    }
    r.nodes = std::move(xs);
    r.weights = std::move(ws);
    return r;
}

enum class GridScheme { uniform_composite_gauss, log_composite_gauss };

// Quadrature grid for the radial measure x dx.  `weights` are plain dx
// weights: integrals against x dx are sums of w_i * x_i * f(x_i), and the
// Nystrom symmetrization factor is sqrt(w_i * x_i).  For the log scheme the
// nodes are Gauss points in u = ln x, so u_nodes is the primary coordinate
// and deep-infrared assembly never has to leave the log domain.
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    GridScheme scheme = GridScheme::uniform_composite_gauss;
    std::vector<double> u_nodes;  // ln(nodes), log scheme only

    int size() const { return static_cast<int>(nodes.size()); }

    double ln_node(int i) const {
        return u_nodes.empty() ? std::log(nodes[i]) : u_nodes[i];
    }
    /// ln(w_i x_i), the log of the x dx quadrature mass at node i.
    double ln_mass(int i) const {
        return u_nodes.empty() ? std::log(weights[i] * nodes[i])
                               : std::log(weights[i]) + u_nodes[i];
    }

    template <class F>
    double integrate_x_dx(F&& f) const {
        double s = 0.0;
        for (int i = 0; i < size(); ++i) s += weights[i] * nodes[i] * f(nodes[i]);
        return s;
    }

    void validate() const {
        if (nodes.empty()) throw std::invalid_argument("RadialGrid: empty");
        if (nodes.size() != weights.size()) throw std::invalid_argument("RadialGrid: size mismatch");
        double prev = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!(nodes[i] > prev)) throw std::invalid_argument("RadialGrid: nodes must be positive increasing");
            if (!(weights[i] > 0.0)) throw std::invalid_argument("RadialGrid: weights must be positive");
            prev = nodes[i];
        }
        if (!u_nodes.empty() && u_nodes.size() != nodes.size())
            throw std::invalid_argument("RadialGrid: u_nodes size mismatch");
    }
};

/// Composite Gauss grid with `panels` equal panels of `degree` nodes on [a, b].
inline RadialGrid radial_grid_uniform(double a, double b, int panels, int degree) {
    if (panels < 1 || degree < 1) throw std::invalid_argument("radial_grid_uniform: bad panel spec");
    if (!(a >= 0.0 && a < b)) throw std::invalid_argument("radial_grid_uniform: need 0 <= a < b");
    RadialGrid g;
    g.scheme = GridScheme::uniform_composite_gauss;
    const QuadratureRule base = gauss_legendre(degree, -1.0, 1.0);
    g.nodes.reserve(static_cast<std::size_t>(panels) * degree);
    g.weights.reserve(static_cast<std::size_t>(panels) * degree);
    for (int p = 0; p < panels; ++p) {
        const double lo = a + (b - a) * p / panels;
        const double hi = a + (b - a) * (p + 1) / panels;
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int j = 0; j < degree; ++j) {
            g.nodes.push_back(c + h * base.nodes[j]);
            g.weights.push_back(h * base.weights[j]);
        }
    }
    g.validate();
    return g;
}

/// Composite Gauss grid uniform in u = ln x between ln(s_min) and ln(s_max).
/// dx weights carry the e^u Jacobian, so integrate_x_dx works unchanged.
inline RadialGrid radial_grid_log(double ln_s_min, double ln_s_max, int panels, int degree) {
    if (panels < 1 || degree < 1) throw std::invalid_argument("radial_grid_log: bad panel spec");
    if (!(ln_s_min < ln_s_max)) throw std::invalid_argument("radial_grid_log: need s_min < s_max");
    if (ln_s_min < -690.0)
        throw std::invalid_argument("radial_grid_log: s_min underflows double; raise the infrared floor");
    RadialGrid g;
    g.scheme = GridScheme::log_composite_gauss;
    const QuadratureRule base = gauss_legendre(degree, -1.0, 1.0);
    for (int p = 0; p < panels; ++p) {
        const double lo = ln_s_min + (ln_s_max - ln_s_min) * p / panels;
        const double hi = ln_s_min + (ln_s_max - ln_s_min) * (p + 1) / panels;
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int j = 0; j < degree; ++j) {
            const double u = c + h * base.nodes[j];
            g.u_nodes.push_back(u);
            g.nodes.push_back(std::exp(u));
            g.weights.push_back(h * base.weights[j] * std::exp(u));
        }
    }
    g.validate();
    return g;
}

}  // namespace efimov
