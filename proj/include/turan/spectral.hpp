#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "turan/counting.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph.hpp"

namespace turan {

using Rational = boost::multiprecision::cpp_rational;

struct SpectralReport {
    double mu = 0.0;            // spectral radius estimate
    double residual = 0.0;      // last Rayleigh-quotient difference
    int iterations = 0;
    bool converged = false;
    bool edgeless = false;
    Rational walk_ratio;        // N(W_l,G)/n, exact
    Rational path_lhs;          // 2 N(P_l,G)/n, exact
    int l = 0;
    bool chain_holds = false;
};

/// Power iteration for the spectral radius. Bipartite adjacency is periodic,
/// so the iteration runs on A^2 (two applications per step) and reports the
/// square root of its Rayleigh quotient; from the all-ones start vector the
/// quotient converges monotonically up to the top eigenvalue.
inline SpectralReport spectral_radius(const Graph& g, double tol = 1e-12, int max_iterations = 200000) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    SpectralReport rep;
    const int n = g.order();
    if (g.edge_count() == 0) {
        rep.edgeless = true;
        rep.converged = true;
        return rep;
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n), aax(n);
    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (int u = 0; u < n; ++u) {
            double s = 0.0;
            g.neighbors(u).for_each([&](int v) { s += in[v]; });
            out[u] = s;
        }
    };
    double prev = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        apply(x, ax);
        apply(ax, aax);
        double num = 0.0, den = 0.0;
        for (int u = 0; u < n; ++u) {
            num += x[u] * aax[u];   // = |Ax|^2
            den += x[u] * x[u];
        }
        double rayleigh = num / den;
        rep.mu = std::sqrt(rayleigh);
        rep.iterations = it;
        rep.residual = std::abs(rep.mu - prev);
        if (it > 1 && rep.residual < tol) {
            rep.converged = true;
            return rep;
        }
        prev = rep.mu;
        double norm = 0.0;
        for (double v : aax) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            // All mass sat on isolated structure; radius of the rest is 0.
            rep.converged = true;
            return rep;
        }
        for (int u = 0; u < n; ++u) x[u] = aax[u] / norm;
    }
    return rep;   // converged stays false
}

/// The walk chain: 2 N(P_l)/n <= N(W_l)/n <= mu^(l-1), with the left
/// comparison exact in rationals and the right one allowed eps slack for
/// iteration error.
inline SpectralReport walk_chain_check(const Graph& g, int l, double eps = 1e-6, double tol = 1e-12) {
    if (l < 2) throw std::invalid_argument("walk_chain_check: need l >= 2");
    SpectralReport rep = spectral_radius(g, tol);
    rep.l = l;
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("walk_chain_check: empty graph");
    rep.walk_ratio = Rational(count_walks(g, l).count, n);
    rep.path_lhs = Rational(2 * count_paths(g, l).count, n);
    bool left = rep.path_lhs <= rep.walk_ratio;
    bool right = static_cast<double>(rep.walk_ratio) <= std::pow(rep.mu, l - 1) * (1.0 + eps);
    rep.chain_holds = left && right;
    return rep;
}

/// Theorem-level bound formulas, evaluated as written. The even-cycle bound
/// drops an o(n) term and is diagnostic only; the odd-cycle bound n/2 is a
/// hard bound once n > 320(2k+1).
inline double nikiforov_even_bound(long long n, int k) {
    return (k - 1) / 2.0 + std::sqrt(static_cast<double>(k - 1) * static_cast<double>(n));
}

inline double nikiforov_odd_bound(long long n) { return static_cast<double>(n) / 2.0; }

inline bool nikiforov_odd_applicable(long long n, int k) { return n > 320LL * (2 * k + 1); }

struct PathBoundReport {
    int l = 0;
    Count path_count;
    bool odd_case = false;
    bool holds = false;         // meaningful in the odd case
    double formula = 0.0;       // the right-hand side, as a real
};

/// Odd case: asserts N(P_l) <= (n/2)^l exactly (as 2^l N(P_l) <= n^l).
/// Even case: reports the measured count against the formula value without
/// asserting, since the dropped o(n) term is not quantified.
inline PathBoundReport path_upper_bound_check(const Graph& g, int l, bool odd_case, int k = 2) {
    if (l < 1) throw std::invalid_argument("path_upper_bound_check: need l >= 1");
    PathBoundReport rep;
    rep.l = l;
    rep.odd_case = odd_case;
    rep.path_count = count_paths(g, l).count;
    const long long n = g.order();
    if (odd_case) {
        Count lhs = rep.path_count, pow2 = 1, rhs = 1;
        for (int i = 0; i < l; ++i) {
            pow2 *= 2;
            rhs *= n;
        }
        rep.holds = lhs * pow2 <= rhs;
        rep.formula = std::pow(static_cast<double>(n) / 2.0, l);
    } else {
        rep.formula = 0.5 * std::pow(static_cast<double>(k - 1), (l - 1) / 2.0) *
                      std::pow(static_cast<double>(n), (l + 1) / 2.0);
        rep.holds = true;   // not asserted
    }
    return rep;
}

} // namespace turan
