#include "twinwalk/circulant.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "twinwalk/error.hpp"

namespace twinwalk {

namespace {

Residue mod(Residue x, Residue n) {
    const Residue r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CirculantSpec::CirculantSpec(Residue n, const std::vector<Residue>& connection_set) : n_(n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "circulant modulus must be at least 2");
    for (Residue s : connection_set) s_.insert(mod(s, n));
    if (s_.contains(0)) throw Error(ErrorCode::ContainsZero, "connection set contains 0");
    for (Residue s : s_) {
        if (!s_.contains(mod(-s, n))) {
            throw Error(ErrorCode::AsymmetricSet,
                        std::to_string(s) + " in S but " + std::to_string(mod(-s, n)) + " is not");
        }
    }
}

WeightedGraph build_circulant(const CirculantSpec& spec) {
    const Residue n = spec.modulus();
    SymmetricMatrix w(static_cast<std::size_t>(n));
    for (Residue u = 0; u < n; ++u) {
        for (Residue v = 0; v < u; ++v) {
            if (spec.connection_set().contains(mod(u - v, n))) {
                w.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1.0);
            }
        }
    }
    return WeightedGraph::from_weights(std::move(w));
}

std::vector<Residue> proper_divisors(Residue n) {
    std::vector<Residue> out;
    for (Residue d = 1; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

GcdClass gcd_class(Residue n, Residue d) {
    if (n < 2 || d < 1 || d >= n || n % d != 0) {
        throw Error(ErrorCode::NotProperDivisor,
                    std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
    }
    GcdClass c{n, d, {}};
    for (Residue x = 1; x < n; ++x)
        if (std::gcd(x, n) == d) c.members.insert(x);
    return c;
}

std::set<Residue> divisor_set(Residue n, const std::set<Residue>& s) {
    std::set<Residue> d;
    for (Residue x : s) d.insert(std::gcd(mod(x, n), n));
    return d;
}

bool is_gcd_set(Residue n, const std::set<Residue>& s) {
    std::set<Residue> normalised;
    for (Residue x : s) normalised.insert(mod(x, n));
    if (normalised.contains(0)) return false;
    std::set<Residue> rebuilt;
    for (Residue d : divisor_set(n, normalised)) {
        const auto c = gcd_class(n, d);
        rebuilt.insert(c.members.begin(), c.members.end());
    }
    return rebuilt == normalised;
}

std::vector<double> adjacency_eigenvalues(const CirculantSpec& spec) {
    const Residue n = spec.modulus();
    std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
    for (Residue l = 0; l < n; ++l) {
        double sum = 0.0;
        for (Residue s : spec.connection_set()) {
            // Reduce l*s first so the cosine argument stays in [0, 2 pi).
            sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(mod(l * s, n)) /
                            static_cast<double>(n));
        }
        theta[static_cast<std::size_t>(l)] = sum;
    }
    return theta;
}

bool twin_condition(const CirculantSpec& spec) {
    const Residue n = spec.modulus();
    if (n % 2 != 0) throw Error(ErrorCode::OddModulus, "twin condition needs an even modulus");
    std::set<Residue> shifted;
    for (Residue s : spec.connection_set()) shifted.insert(mod(n / 2 - s, n));
    return shifted == spec.connection_set();
}

bool mod4_condition(const CirculantSpec& spec) {
    const Residue n = spec.modulus();
    for (Residue d : proper_divisors(n)) {
        std::size_t count = 0;
        for (Residue s : spec.connection_set())
            if (std::gcd(s, n) == d) ++count;
        if (count % 4 != 0) return false;
    }
    return true;
}

bool is_power_of_two(Residue n) { return n > 0 && (n & (n - 1)) == 0; }

bool almost_periodicity_applicable(const CirculantSpec& spec) {
    return is_power_of_two(spec.modulus()) && mod4_condition(spec);
}

}  // namespace twinwalk
