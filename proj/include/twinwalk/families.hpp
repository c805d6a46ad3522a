#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twinwalk/circulant.hpp"
#include "twinwalk/graph.hpp"
#include "twinwalk/walk.hpp"

namespace twinwalk {

using VertexPair = std::pair<Vertex, Vertex>;

/// A transfer event a construction is known to produce. PGST witnesses refer
/// to the time sequence (4Z + 1) pi / 2 and carry a NaN time.
struct ExpectedWitness {
    TransferKind kind = TransferKind::NONE;
    Vertex a = 0;
    Vertex b = 0;
    double time = 0.0;
};

struct FamilyInstance {
    WeightedGraph graph;
    std::vector<ExpectedWitness> expected_witnesses;
    std::string provenance;
    std::vector<std::string> warnings;
};

struct PgstOptions {
    std::uint64_t q_max = kDefaultPgstQMax;
    std::vector<double> epsilons{1e-1, 1e-2, 1e-3};
};

WeightedGraph complete_graph(std::size_t n);
WeightedGraph cycle_graph(std::size_t n);
WeightedGraph path_graph(std::size_t n);

/// K_size with every matching edge deleted. When 4 divides size the removed
/// pairs are expected to show LPST at pi/2 and every untouched vertex to be
/// periodic there; otherwise a warning is recorded and no witness is expected.
FamilyInstance k4n_remove_matching(std::size_t size, std::span<const VertexPair> matching);

/// Resets the weight of each (disjoint, twin) pair to 1/4 on a Laplacian
/// integral graph. Pairs are applied in order and must stay twins in the
/// partially perturbed graph. Expects LPST at 2 pi on every pair and
/// periodicity at 2 pi elsewhere.
FamilyInstance quarter_weight_edges(const WeightedGraph& g, std::span<const VertexPair> pairs);
FamilyInstance quarter_weight_edge(const WeightedGraph& g, Vertex a, Vertex b);

/// Adds unit edges on antipodal pairs (x, x + n/2) of a circulant that is
/// almost periodic along (4Z + 1) pi / 2 and satisfies S = n/2 - S. Integral
/// circulants expect LPST at pi/2; the rest expect PGST.
FamilyInstance circulant_twin_edge_family(const CirculantSpec& spec, std::span<const VertexPair> pairs);

struct WitnessResult {
    ExpectedWitness expected;
    TransferReport report;
    bool passed = false;
    std::optional<PGSTWitness> pgst;
};

/// Recomputes every expected witness from scratch. Never throws on a failed
/// witness; see verify_family for the throwing variant.
std::vector<WitnessResult> evaluate_witnesses(const FamilyInstance& fi, double tol = kDefaultLpstTol,
                                              const PgstOptions& pgst = {});

/// Throws WitnessFailed naming the first witness that does not hold.
std::vector<TransferReport> verify_family(const FamilyInstance& fi, double tol = kDefaultLpstTol,
                                          const PgstOptions& pgst = {});

}  // namespace twinwalk
