#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "twinwalk/circulant.hpp"
#include "twinwalk/error.hpp"
#include "twinwalk/families.hpp"
#include "twinwalk/random_graphs.hpp"
#include "twinwalk/walk.hpp"

using namespace twinwalk;

namespace {

constexpr double kPi = std::numbers::pi;

Spectrum spectrum_of(const WeightedGraph& g) { return eigendecompose(laplacian(g)); }

WeightedGraph k4_minus_01() { return perturb_edge(complete_graph(4), {0, 1, -1.0}); }

TwinPair twin(Vertex a, Vertex b) { return TwinPair{a, b, false, {}}; }

}  // namespace

TEST_CASE("propagator at t = 0 is the identity") {
    const auto s = spectrum_of(cycle_graph(5));
    const auto u = propagator(s, 0.0);
    CHECK(u.matrix == ComplexMatrix::identity(5));
    const auto f = fidelity(u, 2, 2);
    CHECK(f.magnitude == 1.0);
    CHECK(f.phase == Complex(1.0, 0.0));
}

TEST_CASE("complete-graph propagator matches the closed form") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto s = spectrum_of(complete_graph(n));
        for (int k = 0; k < 5; ++k) {
            const double t = time(rng);
            const auto u = propagator(s, t);
            CHECK(max_abs_diff(u.matrix, twinwalk::testing::complete_graph_propagator(n, t)) < 1e-10);
            CHECK(unitarity_defect(u.matrix) < 1e-9);
        }
    }
}

TEST_CASE("Laplacian-integral graphs are periodic at 2 pi") {
    for (const auto& g : {complete_graph(5), cycle_graph(4), cycle_graph(6),
                          build_circulant(CirculantSpec(8, {1, 3, 5, 7}))}) {
        const auto s = spectrum_of(g);
        REQUIRE(is_integral_spectrum(s));
        CHECK(max_abs_diff(propagator(s, 2.0 * kPi).matrix, ComplexMatrix::identity(g.vertex_count())) < 1e-10);
        for (Vertex p = 0; p < g.vertex_count(); ++p) CHECK(check_periodic(s, p, 2.0 * kPi).kind == TransferKind::PERIODIC);
    }
}

TEST_CASE("group law and unitarity on random spectra") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> time(0.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = random_symmetric(rng, 2 + trial % 10, -2.0, 2.0);
        const auto s = eigendecompose(h);
        const double t1 = time(rng), t2 = time(rng);
        const auto u12 = propagator(s, t1 + t2);
        CHECK(max_abs_diff(u12.matrix, propagator(s, t1).matrix * propagator(s, t2).matrix) < 1e-9);
        CHECK(unitarity_defect(u12.matrix) < 1e-9);
    }
}

TEST_CASE("perturbed propagator special cases") {
    const auto c4 = cycle_graph(4);
    const auto s = spectrum_of(c4);
    const auto m = rank_one_edge_matrix(4, 0, 2);

    // alpha * t in pi Z: the bracket is I and the base is returned untouched.
    const auto base = propagator(s, kPi / 2.0);
    CHECK(perturbed_propagator(base, m, 2.0).matrix == base.matrix);
    CHECK(perturbed_propagator(base, m, -4.0).matrix == base.matrix);
    CHECK(perturbed_propagator(base, m, 0.0).matrix == base.matrix);

    const auto k4 = complete_graph(4);
    const auto mk = rank_one_edge_matrix(4, 0, 1);
    const auto closed = perturbed_propagator(propagator(spectrum_of(k4), kPi / 2.0), mk, -1.0);
    const auto oracle = matrix_exp_oracle(laplacian(k4) + (-1.0) * mk, kPi / 2.0);
    CHECK(max_abs_diff(closed.matrix, oracle) < 1e-9);

    // Validation refuses non-twins.
    const auto p4 = path_graph(4);
    CHECK_THROWS_AS(perturbed_propagator(propagator(spectrum_of(p4), 1.0), p4, EdgePerturbation{0, 1, 1.0}), Error);
    CHECK_NOTHROW(perturbed_propagator(base, c4, EdgePerturbation{0, 2, 0.7}));
}

TEST_CASE("fidelity bounds and errors") {
    const auto s = spectrum_of(complete_graph(6));
    for (double t : {0.1, 0.7, 1.3, 2.9}) {
        const auto u = propagator(s, t);
        CHECK(fidelity(u, 0, 3).magnitude <= 2.0 / 6.0 + 1e-12);
    }
    const auto u = propagator(s, 1.0);
    CHECK_THROWS_AS(fidelity(u, 0, 6), Error);

    const auto f = fidelity(propagator(spectrum_of(k4_minus_01()), kPi / 2.0), 0, 1);
    CHECK(f.magnitude >= 1.0 - 1e-9);
    CHECK(std::abs(std::abs(f.phase) - 1.0) < 1e-12);
}

TEST_CASE("check_lpst verdicts") {
    const auto c4 = cycle_graph(4);
    const auto r = check_lpst(c4, 0, 2, kPi / 2.0, 1e-9);
    CHECK(r.kind == TransferKind::LPST);
    CHECK(r.fidelity >= 1.0 - 1e-9);
    CHECK(std::abs(r.fidelity * r.phase - propagator(spectrum_of(c4), kPi / 2.0).matrix(2, 0)) < 1e-12);

    const auto fig1 = perturb_edge(c4, {0, 2, 2.0});
    CHECK(check_lpst(fig1, 0, 2, kPi / 2.0).kind == TransferKind::LPST);

    const auto k5 = check_lpst(complete_graph(5), 0, 1, kPi);
    CHECK(k5.kind == TransferKind::NONE);
    CHECK(k5.fidelity <= 0.4 + 1e-12);

    CHECK_THROWS_AS(check_lpst(c4, 1, 1, 1.0), Error);
    CHECK_THROWS_AS(check_lpst(c4, 0, 4, 1.0), Error);
}

TEST_CASE("check_periodic verdicts") {
    for (std::size_t n : {4u, 8u, 12u}) {
        const auto g = complete_graph(n);
        for (Vertex p = 0; p < n; ++p) CHECK(check_periodic(g, p, kPi / 2.0).kind == TransferKind::PERIODIC);
    }
    // |U_00(pi/2)| for C_5 is about 0.3217.
    const auto c5 = check_periodic(cycle_graph(5), 0, kPi / 2.0);
    CHECK(c5.kind == TransferKind::NONE);
    CHECK(std::abs(c5.fidelity - 0.32165598302411) < 1e-9);
    CHECK_THROWS_AS(check_periodic(cycle_graph(5), 5, 1.0), Error);
}

TEST_CASE("twin entries agree in every column outside the pair") {
    const std::vector<double> times{0.3, 1.1, kPi / 2.0};
    CHECK(mixed_pair_entry_symmetry(k4_minus_01(), twin(0, 1), 2, times) < 1e-9);
    const std::vector<double> zero{0.0};
    CHECK(mixed_pair_entry_symmetry(k4_minus_01(), twin(0, 1), 3, zero) == 0.0);

    const auto chord = perturb_edge(cycle_graph(4), {0, 2, 2.0});
    CHECK(mixed_pair_entry_symmetry(chord, twin(0, 2), 1, times) < 1e-9);
    CHECK_THROWS_AS(mixed_pair_entry_symmetry(chord, twin(0, 2), 2, times), Error);
}

TEST_CASE("closed-form perturbation theorems on twin pairs") {
    // Base LPST inside the pair with alpha tau in pi Z: unchanged.
    const auto c4 = cycle_graph(4);
    const auto s = spectrum_of(c4);
    const double tau = kPi / 2.0;
    const auto m02 = rank_one_edge_matrix(4, 0, 2);
    for (double alpha : {2.0, -2.0, 4.0, 6.0}) {
        CHECK(max_abs_diff(perturbed_propagator(propagator(s, tau), m02, alpha).matrix, propagator(s, tau).matrix) < 1e-10);
    }

    // Columns outside the pair never change.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    std::uniform_real_distribution<double> alpha_dist(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto planted = random_graph_with_twins(rng, 10);
        const auto sp = spectrum_of(planted.graph);
        const std::size_t n = planted.graph.vertex_count();
        const auto m = rank_one_edge_matrix(n, planted.a, planted.b);
        const auto base = propagator(sp, time(rng));
        const auto pert = perturbed_propagator(base, m, alpha_dist(rng));
        double worst = 0.0;
        for (Vertex q = 0; q < n; ++q) {
            if (q == planted.a || q == planted.b) continue;
            for (Vertex r = 0; r < n; ++r) worst = std::max(worst, std::abs(pert.matrix(r, q) - base.matrix(r, q)));
        }
        CHECK(worst < 1e-12);
        CHECK(unitarity_defect(pert.matrix) < 1e-9);
    }

    // Periodic at a pair vertex and 2 alpha tau an odd multiple of pi: LPST
    // across the pair; periodic vertices outside the pair stay periodic.
    const auto k4 = complete_graph(4);
    const auto sk = spectrum_of(k4);
    REQUIRE(check_periodic(sk, 0, tau).kind == TransferKind::PERIODIC);
    const auto m01 = rank_one_edge_matrix(4, 0, 1);
    for (double alpha : {-1.0, 1.0, 3.0, -3.0}) {
        const auto pert = perturbed_propagator(propagator(sk, tau), m01, alpha);
        CHECK(fidelity(pert, 0, 1).magnitude >= 1.0 - 1e-9);
        CHECK(fidelity(pert, 2, 2).magnitude >= 1.0 - 1e-9);
        CHECK(fidelity(pert, 3, 3).magnitude >= 1.0 - 1e-9);
    }
}

TEST_CASE("verify_factorization") {
    const std::vector<double> times{0.1, 1.0, kPi / 2.0, 3.0};
    CHECK(verify_factorization(complete_graph(4), twin(0, 1), -1.0, times) < 1e-8);
    CHECK(verify_factorization(cycle_graph(4), twin(1, 3), 0.0, times) < 1e-10);
    const std::vector<double> half{kPi / 2.0};
    CHECK(verify_factorization(cycle_graph(4), twin(0, 2), 2.0, half) < 1e-8);
    CHECK_THROWS_AS(verify_factorization(path_graph(4), twin(0, 1), 1.0, times), Error);
}

TEST_CASE("pst_time_scan locates known transfer times") {
    const auto k4m = pst_time_scan(k4_minus_01(), 0, 1, 2.0 * kPi);
    CHECK(k4m.kind == TransferKind::LPST);
    CHECK(std::abs(k4m.time - kPi / 2.0) < 1e-6);
    CHECK(k4m.fidelity >= 1.0 - 1e-9);

    const auto k3q = quarter_weight_edge(complete_graph(3), 0, 2).graph;
    const auto r = pst_time_scan(k3q, 0, 2, 4.0 * kPi);
    CHECK(r.kind == TransferKind::LPST);
    CHECK(std::abs(r.time - 2.0 * kPi) < 1e-6);
    // Spectrum {0, 3/2, 3} also aligns at 2 pi / 3.
    CHECK(check_lpst(k3q, 0, 2, 2.0 * kPi / 3.0).kind == TransferKind::LPST);

    const auto k5 = pst_time_scan(complete_graph(5), 0, 1, 2.0 * kPi);
    CHECK(k5.kind == TransferKind::NONE);
    CHECK(k5.fidelity <= 0.4 + 1e-9);

    CHECK_THROWS_AS(pst_time_scan(k4_minus_01(), 0, 1, 0.0), Error);
    CHECK_THROWS_AS(pst_time_scan(k4_minus_01(), 0, 1, 1.0, 1), Error);
}

TEST_CASE("pgst_scan on circulant families") {
    const std::vector<double> ladder{1e-1, 1e-2, 1e-3};

    auto g8 = perturb_edge(build_circulant(CirculantSpec(8, {1, 3, 5, 7})), {0, 4, 1.0});
    const auto w8 = pgst_scan(g8, 0, 4, 10, ladder);
    REQUIRE(w8.all_thresholds_met());
    CHECK(w8.q_values.front() == 0);
    CHECK(std::abs(w8.times.front() - kPi / 2.0) < 1e-15);
    CHECK(w8.fidelities.front() >= 1.0 - 1e-9);
    for (const auto& th : w8.epsilon_ladder) CHECK(th.first_hit->q == 0);

    // Almost periodicity of the unperturbed, non-integral circulant.
    const auto g16 = build_circulant(CirculantSpec(16, {1, 7, 9, 15}));
    const auto ap = pgst_scan(g16, 0, 0, 1000, ladder);
    CHECK(ap.all_thresholds_met());
    CHECK(ap.alignment_defect < 0.1);

    const auto w16 = pgst_scan(perturb_edge(g16, {0, 8, 1.0}), 0, 8, 1000, ladder);
    CHECK(w16.all_thresholds_met());
    CHECK(w16.best_fidelity() < 1.0 + 1e-12);
    for (std::size_t i = 1; i < w16.fidelities.size(); ++i) {
        CHECK(w16.fidelities[i] > w16.fidelities[i - 1]);
        CHECK(w16.times[i] > w16.times[i - 1]);
    }
    // The scan only visits (4q + 1) pi / 2.
    for (std::size_t i = 0; i < w16.times.size(); ++i) {
        CHECK(std::abs(w16.times[i] - (4.0 * static_cast<double>(w16.q_values[i]) + 1.0) * kPi / 2.0) < 1e-9);
    }

    const std::vector<double> bad{1e-2, 1e-1};
    CHECK_THROWS_AS(pgst_scan(g8, 0, 4, 10, bad), Error);
    CHECK_THROWS_AS(pgst_scan(g8, 0, 4, 0, ladder), Error);
}
