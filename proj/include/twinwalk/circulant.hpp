#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "twinwalk/graph.hpp"

namespace twinwalk {

using Residue = long long;

/// Cay(Z_n, S). Construction normalises members into [0, n) and rejects
/// connection sets that contain 0 or are not closed under negation.
class CirculantSpec {
public:
    CirculantSpec(Residue n, const std::vector<Residue>& connection_set);

    Residue modulus() const noexcept { return n_; }
    const std::set<Residue>& connection_set() const noexcept { return s_; }

private:
    Residue n_;
    std::set<Residue> s_;
};

/// S_n(d) = { x in Z_n : gcd(x, n) = d }.
struct GcdClass {
    Residue n = 0;
    Residue d = 0;
    std::set<Residue> members;
};

WeightedGraph build_circulant(const CirculantSpec& spec);

/// Proper divisors d of n (1 <= d < n, d | n), ascending.
std::vector<Residue> proper_divisors(Residue n);

GcdClass gcd_class(Residue n, Residue d);

/// True iff S is a union of complete gcd classes.
bool is_gcd_set(Residue n, const std::set<Residue>& s);

/// {gcd(s, n) : s in S}, the divisor set a gcd-set is built from.
std::set<Residue> divisor_set(Residue n, const std::set<Residue>& s);

/// theta_l = sum_{s in S} cos(2 pi l s / n) for l = 0..n-1. The Laplacian
/// eigenvalues are |S| - theta_l.
std::vector<double> adjacency_eigenvalues(const CirculantSpec& spec);

/// S = n/2 - S, i.e. x and x + n/2 are twins for every x. Needs even n.
bool twin_condition(const CirculantSpec& spec);

/// |S intersect S_n(d)| = 0 (mod 4) for every proper divisor d.
bool mod4_condition(const CirculantSpec& spec);

bool is_power_of_two(Residue n);

/// Hypotheses under which Cay(Z_n, S) is almost periodic along
/// (4Z + 1) pi / 2: n a power of two and the mod-4 class counts.
bool almost_periodicity_applicable(const CirculantSpec& spec);

}  // namespace twinwalk
