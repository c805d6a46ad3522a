#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "twinwalk/matrix.hpp"

namespace twinwalk {

using Vertex = std::size_t;

struct WeightedEdge {
    Vertex u = 0;
    Vertex v = 0;
    double weight = 1.0;

    bool operator==(const WeightedEdge&) const = default;
};

/// Undirected graph with real edge weights. A zero weight means "no edge".
/// Immutable once built; perturbations produce new graphs.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Takes an arbitrary symmetric weight table. The diagonal must be zero.
    static WeightedGraph from_weights(SymmetricMatrix weights);

    std::size_t vertex_count() const noexcept { return weights_.size(); }
    double weight(Vertex u, Vertex v) const;
    bool has_negative_weight() const noexcept { return has_negative_weight_; }
    const SymmetricMatrix& weights() const noexcept { return weights_; }

    /// Nonzero edges with u < v, lexicographic.
    std::vector<WeightedEdge> edges() const;

    bool operator==(const WeightedGraph& o) const { return weights_ == o.weights_; }

private:
    explicit WeightedGraph(SymmetricMatrix weights);

    SymmetricMatrix weights_;
    bool has_negative_weight_ = false;
};

struct TwinPair {
    Vertex a = 0;
    Vertex b = 0;
    bool adjacent = false;
    /// Weight of every shared neighbor q (q not in {a, b}).
    std::map<Vertex, double> shared_weight_profile;
};

struct EdgePerturbation {
    Vertex a = 0;
    Vertex b = 0;
    double alpha = 0.0;
};

/// Validates the edge list: in-range endpoints, no loops, no repeated
/// unordered pairs, strictly positive weights.
WeightedGraph build_graph(std::size_t n, std::span<const WeightedEdge> edges);

/// L = D - A. Degrees are summed in sorted order so that rows holding the
/// same multiset of weights get bit-identical diagonals.
SymmetricMatrix laplacian(const WeightedGraph& g);

SymmetricMatrix adjacency(const WeightedGraph& g);

bool is_twin_pair(const WeightedGraph& g, Vertex a, Vertex b);

std::vector<TwinPair> list_twin_pairs(const WeightedGraph& g);

/// M = (e_a - e_b)(e_a - e_b)^T, which satisfies M^2 = 2M.
SymmetricMatrix rank_one_edge_matrix(std::size_t n, Vertex a, Vertex b);

/// Adds alpha to the weight of {a, b}. The result may carry negative
/// weights; nothing here assumes positive semidefiniteness.
WeightedGraph perturb_edge(const WeightedGraph& g, const EdgePerturbation& p);

/// Permutation matrix exchanging a and b and fixing everything else.
RealMatrix swap_permutation(std::size_t n, Vertex a, Vertex b);

}  // namespace twinwalk
