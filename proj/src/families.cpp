#include "twinwalk/families.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "twinwalk/error.hpp"
#include "twinwalk/spectral.hpp"

namespace twinwalk {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string pair_text(const VertexPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

/// Range, distinctness and vertex-disjointness of a pair list.
std::set<Vertex> require_disjoint_pairs(std::size_t n, std::span<const VertexPair> pairs) {
    std::set<Vertex> used;
    for (const auto& p : pairs) {
        if (p.first >= n || p.second >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "pair " + pair_text(p) + " outside graph");
        }
        if (p.first == p.second) throw Error(ErrorCode::EqualVertices, "pair " + pair_text(p));
        if (!used.insert(p.first).second || !used.insert(p.second).second) {
            throw Error(ErrorCode::NotDisjoint, "pair " + pair_text(p) + " reuses a vertex");
        }
    }
    return used;
}

void add_transfer_witnesses(FamilyInstance& fi, std::span<const VertexPair> pairs, const std::set<Vertex>& used,
                            double t) {
    for (const auto& p : pairs) fi.expected_witnesses.push_back({TransferKind::LPST, p.first, p.second, t});
    for (Vertex v = 0; v < fi.graph.vertex_count(); ++v) {
        if (!used.contains(v)) fi.expected_witnesses.push_back({TransferKind::PERIODIC, v, v, t});
    }
}

}  // namespace

WeightedGraph complete_graph(std::size_t n) {
    std::vector<WeightedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return build_graph(n, edges);
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
    std::vector<WeightedEdge> edges;
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, 1.0});
    return build_graph(n, edges);
}

WeightedGraph path_graph(std::size_t n) {
    std::vector<WeightedEdge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1.0});
    return build_graph(n, edges);
}

FamilyInstance k4n_remove_matching(std::size_t size, std::span<const VertexPair> matching) {
    const auto used = require_disjoint_pairs(size, matching);
    FamilyInstance fi;
    fi.graph = complete_graph(size);
    fi.provenance = "k4n_matching";
    for (const auto& p : matching) fi.graph = perturb_edge(fi.graph, {p.first, p.second, -1.0});

    if (size % 4 != 0) {
        fi.warnings.push_back(std::string(to_string(ErrorCode::SizeNotMultipleOf4)) + ": K_" +
                              std::to_string(size) + " has no guaranteed transfer at pi/2");
        return fi;
    }
    add_transfer_witnesses(fi, matching, used, kHalfPi);
    return fi;
}

FamilyInstance quarter_weight_edges(const WeightedGraph& g, std::span<const VertexPair> pairs) {
    const auto used = require_disjoint_pairs(g.vertex_count(), pairs);
    if (!is_integral_spectrum(eigendecompose(laplacian(g)))) {
        throw Error(ErrorCode::NotIntegral, "base graph is not Laplacian integral");
    }

    FamilyInstance fi;
    fi.graph = g;
    fi.provenance = "quarter_weight";
    for (const auto& p : pairs) {
        if (!is_twin_pair(fi.graph, p.first, p.second)) {
            throw Error(ErrorCode::NotTwins, "pair " + pair_text(p) + " is not a twin pair");
        }
        const double alpha = 0.25 - fi.graph.weight(p.first, p.second);
        // 2 alpha (2 pi) must be an odd multiple of pi, i.e. 4 alpha odd.
        const double four_alpha = 4.0 * alpha;
        if (four_alpha != std::round(four_alpha) || std::fmod(std::abs(four_alpha), 2.0) != 1.0) {
            throw Error(ErrorCode::PreconditionFailed,
                        "pair " + pair_text(p) + ": 4*alpha = " + std::to_string(four_alpha) + " is not odd");
        }
        fi.graph = perturb_edge(fi.graph, {p.first, p.second, alpha});
    }
    add_transfer_witnesses(fi, pairs, used, kTwoPi);
    return fi;
}

FamilyInstance quarter_weight_edge(const WeightedGraph& g, Vertex a, Vertex b) {
    const VertexPair p{a, b};
    return quarter_weight_edges(g, std::span<const VertexPair>(&p, 1));
}

FamilyInstance circulant_twin_edge_family(const CirculantSpec& spec, std::span<const VertexPair> pairs) {
    const Residue n = spec.modulus();
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::PreconditionFailed, "modulus " + std::to_string(n) + " is not a power of two");
    }
    if (!mod4_condition(spec)) {
        throw Error(ErrorCode::PreconditionFailed, "some |S intersect S_n(d)| is not divisible by 4");
    }
    if (!twin_condition(spec)) throw Error(ErrorCode::PreconditionFailed, "S differs from n/2 - S");

    FamilyInstance fi;
    fi.graph = build_circulant(spec);
    const auto used = require_disjoint_pairs(fi.graph.vertex_count(), pairs);
    const auto half = static_cast<Vertex>(n / 2);
    for (const auto& p : pairs) {
        const Vertex lo = std::min(p.first, p.second);
        const Vertex hi = std::max(p.first, p.second);
        if (hi - lo != half) {
            throw Error(ErrorCode::PreconditionFailed, "pair " + pair_text(p) + " is not of the form (x, x + n/2)");
        }
        if (fi.graph.weight(lo, hi) != 0.0) {
            throw Error(ErrorCode::PreconditionFailed, "pair " + pair_text(p) + " is already an edge");
        }
        fi.graph = perturb_edge(fi.graph, {lo, hi, 1.0});
    }

    if (is_gcd_set(n, spec.connection_set())) {
        fi.provenance = "circulant_twin_integral";
        add_transfer_witnesses(fi, pairs, used, kHalfPi);
    } else {
        fi.provenance = "circulant_twin_pgst";
        for (const auto& p : pairs) {
            fi.expected_witnesses.push_back(
                {TransferKind::PGST, p.first, p.second, std::numeric_limits<double>::quiet_NaN()});
        }
    }
    return fi;
}

std::vector<WitnessResult> evaluate_witnesses(const FamilyInstance& fi, double tol, const PgstOptions& pgst) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    std::vector<WitnessResult> out;
    if (fi.expected_witnesses.empty()) return out;

    const Spectrum s = eigendecompose(laplacian(fi.graph));
    for (const auto& w : fi.expected_witnesses) {
        WitnessResult r;
        r.expected = w;
        switch (w.kind) {
            case TransferKind::LPST:
                r.report = check_lpst(s, w.a, w.b, w.time, tol);
                break;
            case TransferKind::PERIODIC:
                r.report = check_periodic(s, w.a, w.time, tol);
                break;
            case TransferKind::PGST: {
                PGSTWitness scan = pgst_scan(fi.graph, w.a, w.b, pgst.q_max, pgst.epsilons);
                r.report.from = w.a;
                r.report.to = w.b;
                r.report.kind = scan.all_thresholds_met() ? TransferKind::PGST : TransferKind::NONE;
                const auto finest = scan.epsilon_ladder.empty() ? std::nullopt : scan.epsilon_ladder.back().first_hit;
                const PgstSample shown = finest ? *finest
                                                : PgstSample{scan.q_values.back(), scan.times.back(),
                                                             scan.best_fidelity()};
                const Complex entry = transition_amplitude(s, shown.time, w.a, w.b);
                r.report.time = shown.time;
                r.report.fidelity = std::abs(entry);
                r.report.phase = r.report.fidelity < 1e-15 ? Complex(1.0, 0.0) : entry / r.report.fidelity;
                r.report.tolerance = scan.epsilon_ladder.empty() ? 0.0 : scan.epsilon_ladder.back().epsilon;
                r.pgst = std::move(scan);
                break;
            }
            case TransferKind::NONE:
                break;
        }
        r.passed = r.report.kind == w.kind;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TransferReport> verify_family(const FamilyInstance& fi, double tol, const PgstOptions& pgst) {
    std::vector<TransferReport> reports;
    for (const auto& r : evaluate_witnesses(fi, tol, pgst)) {
        if (!r.passed) {
            throw Error(ErrorCode::WitnessFailed,
                        std::string(to_string(r.expected.kind)) + " " + std::to_string(r.expected.a) + "->" +
                            std::to_string(r.expected.b) + " at t=" + std::to_string(r.expected.time) +
                            " reached fidelity " + std::to_string(r.report.fidelity));
        }
        reports.push_back(r.report);
    }
    return reports;
}

}  // namespace twinwalk
