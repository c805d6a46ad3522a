#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "twinwalk/graph.hpp"
#include "twinwalk/matrix.hpp"
#include "twinwalk/spectral.hpp"

namespace twinwalk {

inline constexpr double kDefaultLpstTol = 1e-9;
inline constexpr std::size_t kDefaultScanGrid = 20000;
inline constexpr std::uint64_t kDefaultPgstQMax = 1'000'000;

/// U(t) = exp(-i t L) together with the time it was evaluated at.
struct Propagator {
    double time = 0.0;
    ComplexMatrix matrix;
};

enum class TransferKind { LPST, PERIODIC, PGST, NONE };

std::string_view to_string(TransferKind kind);

/// Verdict of a single check. `fidelity * phase` equals U[to][from].
struct TransferReport {
    TransferKind kind = TransferKind::NONE;
    Vertex from = 0;
    Vertex to = 0;
    double time = 0.0;
    double fidelity = 0.0;
    Complex phase{1.0, 0.0};
    double tolerance = 0.0;
};

struct Fidelity {
    double magnitude = 0.0;
    Complex phase{1.0, 0.0};
};

struct PgstSample {
    std::uint64_t q = 0;
    double time = 0.0;
    double fidelity = 0.0;
};

struct PgstThreshold {
    double epsilon = 0.0;
    std::optional<PgstSample> first_hit;  ///< earliest q with fidelity >= 1 - epsilon
};

/// Result of scanning t_q = (4q + 1) pi / 2. `times`/`fidelities` list every
/// strict improvement of the running best, so fidelities increase strictly.
struct PGSTWitness {
    Vertex from = 0;
    Vertex to = 0;
    std::uint64_t q_max = 0;
    std::vector<std::uint64_t> q_values;
    std::vector<double> times;
    std::vector<double> fidelities;
    std::vector<PgstThreshold> epsilon_ladder;
    /// max_l |exp(-i mu_l t) - 1| over the graph's spectrum at the best time.
    double alignment_defect = 0.0;

    double best_fidelity() const { return fidelities.empty() ? 0.0 : fidelities.back(); }
    bool all_thresholds_met() const;
};

Propagator propagator(const Spectrum& s, double t);

/// Single entry U(t)[to][from] without forming the whole matrix.
Complex transition_amplitude(const Spectrum& s, double t, Vertex from, Vertex to);

/// U_L(t) [I + (exp(-2 i alpha t) - 1) M / 2]. Only valid when L and M
/// commute, i.e. M's pair is a twin pair of the base graph; not checked here.
Propagator perturbed_propagator(const Propagator& base, const SymmetricMatrix& m, double alpha);

/// Same closed form, but throws TwinViolation unless (p.a, p.b) are twins in g.
Propagator perturbed_propagator(const Propagator& base, const WeightedGraph& g, const EdgePerturbation& p);

/// |U[b][a]| and its unit phase (1 when the magnitude is below 1e-15).
Fidelity fidelity(const Propagator& u, Vertex a, Vertex b);

TransferReport check_lpst(const Spectrum& s, Vertex a, Vertex b, double t, double tol = kDefaultLpstTol);
TransferReport check_lpst(const WeightedGraph& g, Vertex a, Vertex b, double t, double tol = kDefaultLpstTol);

TransferReport check_periodic(const Spectrum& s, Vertex p, double t, double tol = kDefaultLpstTol);
TransferReport check_periodic(const WeightedGraph& g, Vertex p, double t, double tol = kDefaultLpstTol);

/// max over `times` of |U[a][q] - U[b][q]| for a twin pair (a, b) and q outside it.
double mixed_pair_entry_symmetry(const WeightedGraph& g, const TwinPair& tw, Vertex q,
                                 std::span<const double> times);

/// Uniform grid over (0, t_max], then golden-section refinement around the
/// best grid point until the bracket is narrower than 1e-10.
TransferReport pst_time_scan(const WeightedGraph& g, Vertex a, Vertex b, double t_max,
                             std::size_t grid = kDefaultScanGrid, double tol = kDefaultLpstTol);

/// Exhaustive scan over q = 0..q_max of t_q = (4q + 1) pi / 2.
PGSTWitness pgst_scan(const WeightedGraph& g, Vertex a, Vertex b, std::uint64_t q_max,
                      std::span<const double> epsilons);

/// max over `times` of the gap between the closed-form perturbed propagator
/// and the oracle exponential of L + alpha M.
double verify_factorization(const WeightedGraph& g, const TwinPair& tw, double alpha,
                            std::span<const double> times);

}  // namespace twinwalk
