#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "twinwalk/circulant.hpp"
#include "twinwalk/error.hpp"
#include "twinwalk/spectral.hpp"

using namespace twinwalk;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("gcd classes of Z_8") {
    CHECK(gcd_class(8, 1).members == std::set<Residue>{1, 3, 5, 7});
    CHECK(gcd_class(8, 2).members == std::set<Residue>{2, 6});
    CHECK(gcd_class(8, 4).members == std::set<Residue>{4});
    CHECK(proper_divisors(8) == std::vector<Residue>{1, 2, 4});
    CHECK(proper_divisors(12) == std::vector<Residue>{1, 2, 3, 4, 6});
    CHECK(code_of([] { gcd_class(8, 3); }) == ErrorCode::NotProperDivisor);
    CHECK(code_of([] { gcd_class(8, 8); }) == ErrorCode::NotProperDivisor);

    // Classes partition Z_n \ {0}.
    for (Residue n : {6, 8, 12, 15, 16}) {
        std::set<Residue> all;
        std::size_t total = 0;
        for (Residue d : proper_divisors(n)) {
            const auto c = gcd_class(n, d);
            total += c.members.size();
            all.insert(c.members.begin(), c.members.end());
            for (Residue x : c.members) CHECK(twinwalk::testing::stein_gcd(x, n) == d);
        }
        CHECK(total == static_cast<std::size_t>(n - 1));
        CHECK(all.size() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("gcd-set recognition agrees with the definition") {
    using twinwalk::testing::gcd_set_by_definition;
    CHECK(is_gcd_set(8, {1, 3, 5, 7}));
    CHECK(is_gcd_set(8, {2, 4, 6}));
    CHECK_FALSE(is_gcd_set(16, {1, 7, 9, 15}));
    CHECK_FALSE(is_gcd_set(8, {1, 7}));
    CHECK(divisor_set(12, {2, 10, 3, 9}) == std::set<Residue>{2, 3});

    // Exhaustive over every subset of Z_n \ {0} for small n.
    for (Residue n : {4, 6, 8, 9, 10}) {
        const unsigned subsets = 1u << (n - 1);
        for (unsigned mask = 1; mask < subsets; ++mask) {
            std::set<Residue> s;
            for (Residue x = 1; x < n; ++x)
                if (mask & (1u << (x - 1))) s.insert(x);
            CHECK(is_gcd_set(n, s) == gcd_set_by_definition(n, s));
        }
    }
}

TEST_CASE("circulant eigenvalues") {
    // Cay(Z_8, odd residues) is K_{4,4}: theta = 4, 0 x6, -4.
    const auto theta8 = adjacency_eigenvalues(CirculantSpec(8, {1, 3, 5, 7}));
    CHECK(std::abs(theta8[0] - 4.0) < 1e-12);
    CHECK(std::abs(theta8[4] + 4.0) < 1e-12);
    for (std::size_t l : {1u, 2u, 3u, 5u, 6u, 7u}) CHECK(std::abs(theta8[l]) < 1e-12);

    // C_n: theta_l = 2 cos(2 pi l / n).
    const auto theta5 = adjacency_eigenvalues(CirculantSpec(5, {1, 4}));
    for (std::size_t l = 0; l < 5; ++l) CHECK(std::abs(theta5[l] - 2.0 * std::cos(2.0 * std::numbers::pi * l / 5.0)) < 1e-12);

    std::mt19937_64 rng(31);
    for (Residue n : {4, 8, 16}) {
        std::bernoulli_distribution keep(0.5);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Residue> s;
            for (Residue x = 1; x <= n / 2; ++x) {
                if (keep(rng)) {
                    s.push_back(x);
                    s.push_back(n - x);
                }
            }
            if (s.empty()) s = {1, n - 1};
            const CirculantSpec spec(n, s);
            const auto theta = adjacency_eigenvalues(spec);
            const auto g = build_circulant(spec);
            const auto adj = adjacency(g);
            const double degree = static_cast<double>(spec.connection_set().size());

            std::vector<double> lap;
            for (std::size_t l = 0; l < theta.size(); ++l) {
                CHECK(std::abs(theta[l] - twinwalk::testing::circulant_eigenvalue_by_dft(adj, l)) < 1e-12);
                CHECK(std::abs(theta[l] - theta[(theta.size() - l) % theta.size()]) < 1e-12);
                lap.push_back(degree - theta[l]);
            }
            std::sort(lap.begin(), lap.end());
            const auto e = jacobi_eigen(laplacian(g));
            for (std::size_t i = 0; i < lap.size(); ++i) CHECK(std::abs(lap[i] - e.values[i]) < 1e-10);
        }
    }
}

TEST_CASE("twin, mod-4 and applicability predicates") {
    const CirculantSpec z8(8, {1, 3, 5, 7});
    const CirculantSpec z16(16, {1, 7, 9, 15});
    const CirculantSpec z8_small(8, {1, 7});
    CHECK(twin_condition(z8));
    CHECK(twin_condition(z16));
    CHECK_FALSE(twin_condition(z8_small));
    CHECK(mod4_condition(z8));
    CHECK(mod4_condition(z16));
    CHECK_FALSE(mod4_condition(z8_small));
    CHECK(almost_periodicity_applicable(z16));
    CHECK_FALSE(almost_periodicity_applicable(z8_small));
    CHECK_FALSE(almost_periodicity_applicable(CirculantSpec(12, {1, 5, 7, 11})));
    CHECK(mod4_condition(CirculantSpec(12, {1, 5, 7, 11})));

    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(64));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(24));
    CHECK(code_of([] { twin_condition(CirculantSpec(5, {1, 4})); }) == ErrorCode::OddModulus);

    // The twin condition means x and x + n/2 are twins in the graph.
    for (const auto& spec : {z8, z16, z8_small, CirculantSpec(12, {3, 9}), CirculantSpec(12, {2, 4, 8, 10})}) {
        const auto g = build_circulant(spec);
        const Residue half = spec.modulus() / 2;
        for (Residue x = 0; x < half; ++x) {
            CHECK(is_twin_pair(g, static_cast<Vertex>(x), static_cast<Vertex>(x + half)) == twin_condition(spec));
        }
    }
}

TEST_CASE("circulant construction validation") {
    CHECK(code_of([] { CirculantSpec(1, {}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { CirculantSpec(8, {0, 1, 7}); }) == ErrorCode::ContainsZero);
    CHECK(code_of([] { CirculantSpec(8, {8, 1, 7}); }) == ErrorCode::ContainsZero);
    CHECK(code_of([] { CirculantSpec(8, {1, 3}); }) == ErrorCode::AsymmetricSet);

    const CirculantSpec wrapped(8, {9, -1});
    CHECK(wrapped.connection_set() == std::set<Residue>{1, 7});
    CHECK(build_circulant(wrapped) == build_circulant(CirculantSpec(8, {1, 7})));
    CHECK(build_circulant(CirculantSpec(4, {2})).edges().size() == 2);
}
