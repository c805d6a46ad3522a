#pragma once

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "twinwalk/graph.hpp"
#include "twinwalk/matrix.hpp"

namespace twinwalk::testing {

/// Unweighted neighbourhood test straight from the edge list:
/// N(a) \ {b} == N(b) \ {a}.
inline bool twins_by_neighbourhoods(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, Vertex a,
                                    Vertex b) {
    std::vector<std::set<Vertex>> nbr(n);
    for (auto [u, v] : edges) {
        nbr[u].insert(v);
        nbr[v].insert(u);
    }
    auto na = nbr[a];
    auto nb = nbr[b];
    na.erase(b);
    nb.erase(a);
    return na == nb;
}

inline std::vector<std::pair<Vertex, Vertex>> all_twins_by_neighbourhoods(
    std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (twins_by_neighbourhoods(n, edges, a, b)) out.emplace_back(a, b);
    return out;
}

/// Adjacency-walk eigenvalue of a circulant via the DFT of row 0:
/// theta_l = sum_j A[0][j] omega^{l j}.
inline double circulant_eigenvalue_by_dft(const SymmetricMatrix& adj, std::size_t l) {
    const std::size_t n = adj.size();
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        sum += adj(0, j) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(l * j) / static_cast<double>(n));
    }
    return sum.real();
}

/// Closed-form K_n propagator: J/n + exp(-i n t) (I - J/n).
inline ComplexMatrix complete_graph_propagator(std::size_t n, double t) {
    ComplexMatrix u(n);
    const double inv = 1.0 / static_cast<double>(n);
    const std::complex<double> ph = std::polar(1.0, -static_cast<double>(n) * t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) = inv + ph * ((i == j ? 1.0 : 0.0) - inv);
    return u;
}

/// Binary gcd, deliberately a different algorithm from std::gcd.
inline long long stein_gcd(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

/// Gcd-set test by the definition: S is closed under "same gcd with n".
inline bool gcd_set_by_definition(long long n, const std::set<long long>& s) {
    for (long long x : s) {
        for (long long y = 1; y < n; ++y) {
            if (stein_gcd(y, n) == stein_gcd(x, n) && !s.contains(y)) return false;
        }
    }
    return true;
}

}  // namespace twinwalk::testing
