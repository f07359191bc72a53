#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efimov {

enum class PotentialKind { exponential, tabulated };

// Attractive radial pair potential with an exponential envelope:
// |coupling * v(r)| <= coupling * alpha1 * exp(-alpha2 r).
// `evaluate` returns the coupled value lambda * v(r) <= 0.
struct PotentialModel {
    PotentialKind kind = PotentialKind::exponential;
    double alpha1 = 1.0;    // envelope strength, > 0
    double alpha2 = 1.0;    // envelope inverse range, > 0
    double coupling = 1.0;  // lambda, > 0
    std::vector<std::pair<double, double>> table;  // (r, v(r)) samples, tabulated kind

    PotentialModel() = default;
    PotentialModel(PotentialKind k, double a1, double a2, double lambda,
                   std::vector<std::pair<double, double>> tab = {})
        : kind(k), alpha1(a1), alpha2(a2), coupling(lambda), table(std::move(tab)) {
        validate();
    }

    static PotentialModel exponential(double a1, double a2, double lambda = 1.0) {
        return PotentialModel(PotentialKind::exponential, a1, a2, lambda);
    }

    void validate() const {
        if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
            throw std::invalid_argument("PotentialModel: envelope constants must be positive");
        if (!(coupling > 0.0)) throw std::invalid_argument("PotentialModel: coupling must be positive");
        if (kind == PotentialKind::tabulated) {
            if (table.empty()) throw std::invalid_argument("PotentialModel: tabulated kind needs samples");
            double prev = -1.0;
            for (const auto& [r, v] : table) {
                if (!(r > prev)) throw std::invalid_argument("PotentialModel: table radii must increase");
                if (v > 0.0) throw std::invalid_argument("PotentialModel: potential must be non-positive");
                if (std::fabs(v) > alpha1 * std::exp(-alpha2 * r) * (1.0 + 1e-12))
                    throw std::invalid_argument("PotentialModel: envelope violated at r=" + std::to_string(r));
                prev = r;
            }
        }
    }

    /// lambda * v(r); exact closed form for the exponential kind.
    double evaluate(double r) const {
        if (r < 0.0) throw std::invalid_argument("PotentialModel::evaluate: r must be >= 0");
        if (kind == PotentialKind::exponential) return -coupling * alpha1 * std::exp(-alpha2 * r);
        return coupling * interpolate(r);
    }

    /// |lambda * v(r)|, the quantity entering every Birman-Schwinger kernel.
    double magnitude(double r) const { return -evaluate(r); }

    PotentialModel with_coupling(double lambda) const {
        PotentialModel p = *this;
        p.coupling = lambda;
        return p;
    }

  private:
    double interpolate(double r) const {
        if (r <= table.front().first) return table.front().second;
        if (r >= table.back().first) return table.back().second * std::exp(-alpha2 * (r - table.back().first));
        auto hi = std::lower_bound(table.begin(), table.end(), r,
                                   [](const auto& e, double x) { return e.first < x; });
        auto lo = hi - 1;
        const double t = (r - lo->first) / (hi->first - lo->first);
        return (1.0 - t) * lo->second + t * hi->second;
    }
};

}  // namespace efimov
