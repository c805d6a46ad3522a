#include "twinwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "twinwalk/error.hpp"

namespace twinwalk {

namespace {

constexpr double kPhaseFloor = 1e-15;
constexpr double kGoldenWindow = 1e-10;
constexpr int kGoldenMaxIterations = 200;
// Grid candidates must beat the incumbent by this much, so ties resolve to
// the earliest time.
constexpr double kTieMargin = 1e-12;

void require_vertex(std::size_t n, Vertex v) {
    if (v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
    }
}

/// (exp(-2 i alpha t) - 1) / 2, exact when 2 alpha t is a floating-point
/// multiple of pi.
Complex bracket_coefficient(double alpha, double t) {
    const double angle = 2.0 * alpha * t;
    const double turns = angle / std::numbers::pi;
    if (turns == std::round(turns) && std::abs(turns) < 1e15) {
        return std::fmod(std::abs(turns), 2.0) == 0.0 ? Complex(0.0, 0.0) : Complex(-1.0, 0.0);
    }
    return 0.5 * (std::polar(1.0, -angle) - 1.0);
}

/// Coefficients E_j[to][from] of the spectral sum for one matrix entry.
struct EntryExpansion {
    std::vector<double> mu;
    std::vector<double> weight;

    EntryExpansion(const Spectrum& s, Vertex from, Vertex to) {
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            const double c = s.projectors[j](to, from);
            if (c != 0.0) {
                mu.push_back(s.values[j]);
                weight.push_back(c);
            }
        }
    }

    Complex at(double t) const {
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < mu.size(); ++j) sum += weight[j] * std::polar(1.0, -mu[j] * t);
        return sum;
    }
};

Fidelity split(Complex entry) {
    const double mag = std::abs(entry);
    return {mag, mag < kPhaseFloor ? Complex(1.0, 0.0) : entry / mag};
}

TransferReport make_report(TransferKind hit, Vertex from, Vertex to, double t, Complex entry, double tol) {
    const Fidelity f = split(entry);
    TransferReport r;
    r.kind = f.magnitude >= 1.0 - tol ? hit : TransferKind::NONE;
    r.from = from;
    r.to = to;
    r.time = t;
    r.fidelity = f.magnitude;
    r.phase = f.phase;
    r.tolerance = tol;
    return r;
}

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
}

}  // namespace

std::string_view to_string(TransferKind kind) {
    switch (kind) {
        case TransferKind::LPST: return "LPST";
        case TransferKind::PERIODIC: return "PERIODIC";
        case TransferKind::PGST: return "PGST";
        case TransferKind::NONE: return "NONE";
    }
    return "NONE";
}

bool PGSTWitness::all_thresholds_met() const {
    return std::all_of(epsilon_ladder.begin(), epsilon_ladder.end(),
                       [](const PgstThreshold& th) { return th.first_hit.has_value(); });
}

Propagator propagator(const Spectrum& s, double t) {
    if (t == 0.0) return {t, ComplexMatrix::identity(s.n)};
    ComplexMatrix u(s.n);
    for (std::size_t j = 0; j < s.values.size(); ++j) {
        const Complex phase = std::polar(1.0, -s.values[j] * t);
        const auto& e = s.projectors[j];
        for (std::size_t r = 0; r < s.n; ++r)
            for (std::size_t c = 0; c < s.n; ++c) u(r, c) += phase * e(r, c);
    }
    return {t, std::move(u)};
}

Complex transition_amplitude(const Spectrum& s, double t, Vertex from, Vertex to) {
    require_vertex(s.n, from);
    require_vertex(s.n, to);
    if (t == 0.0) return from == to ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    return EntryExpansion(s, from, to).at(t);
}

Propagator perturbed_propagator(const Propagator& base, const SymmetricMatrix& m, double alpha) {
    const Complex c = bracket_coefficient(alpha, base.time);
    if (c == Complex(0.0, 0.0)) return base;
    ComplexMatrix um = base.matrix * to_complex(m.dense());
    um *= c;
    return {base.time, base.matrix + um};
}

Propagator perturbed_propagator(const Propagator& base, const WeightedGraph& g, const EdgePerturbation& p) {
    if (!is_twin_pair(g, p.a, p.b)) {
        throw Error(ErrorCode::TwinViolation, "vertices " + std::to_string(p.a) + " and " +
                                                  std::to_string(p.b) + " are not twins");
    }
    return perturbed_propagator(base, rank_one_edge_matrix(g.vertex_count(), p.a, p.b), p.alpha);
}

Fidelity fidelity(const Propagator& u, Vertex a, Vertex b) {
    require_vertex(u.matrix.size(), a);
    require_vertex(u.matrix.size(), b);
    return split(u.matrix(b, a));
}

TransferReport check_lpst(const Spectrum& s, Vertex a, Vertex b, double t, double tol) {
    require_vertex(s.n, a);
    require_vertex(s.n, b);
    if (a == b) throw Error(ErrorCode::EqualVertices, "state transfer needs distinct vertices");
    require_positive_tol(tol);
    return make_report(TransferKind::LPST, a, b, t, transition_amplitude(s, t, a, b), tol);
}

TransferReport check_lpst(const WeightedGraph& g, Vertex a, Vertex b, double t, double tol) {
    require_vertex(g.vertex_count(), a);
    require_vertex(g.vertex_count(), b);
    if (a == b) throw Error(ErrorCode::EqualVertices, "state transfer needs distinct vertices");
    return check_lpst(eigendecompose(laplacian(g)), a, b, t, tol);
}

TransferReport check_periodic(const Spectrum& s, Vertex p, double t, double tol) {
    require_vertex(s.n, p);
    require_positive_tol(tol);
    return make_report(TransferKind::PERIODIC, p, p, t, transition_amplitude(s, t, p, p), tol);
}

TransferReport check_periodic(const WeightedGraph& g, Vertex p, double t, double tol) {
    require_vertex(g.vertex_count(), p);
    return check_periodic(eigendecompose(laplacian(g)), p, t, tol);
}

double mixed_pair_entry_symmetry(const WeightedGraph& g, const TwinPair& tw, Vertex q,
                                 std::span<const double> times) {
    const std::size_t n = g.vertex_count();
    require_vertex(n, tw.a);
    require_vertex(n, tw.b);
    require_vertex(n, q);
    if (q == tw.a || q == tw.b) {
        throw Error(ErrorCode::InvalidArgument, "q must lie outside the twin pair");
    }
    const Spectrum s = eigendecompose(laplacian(g));
    const EntryExpansion to_a(s, q, tw.a);
    const EntryExpansion to_b(s, q, tw.b);
    double worst = 0.0;
    for (double t : times) {
        if (t == 0.0) continue;  // identity: both entries are exactly zero
        worst = std::max(worst, std::abs(to_a.at(t) - to_b.at(t)));
    }
    return worst;
}

TransferReport pst_time_scan(const WeightedGraph& g, Vertex a, Vertex b, double t_max, std::size_t grid,
                             double tol) {
    const std::size_t n = g.vertex_count();
    require_vertex(n, a);
    require_vertex(n, b);
    if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
    if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
    require_positive_tol(tol);

    const Spectrum s = eigendecompose(laplacian(g));
    const EntryExpansion entry(s, a, b);
    auto fid = [&](double t) { return std::abs(entry.at(t)); };

    const double step = t_max / static_cast<double>(grid);
    double best_t = step;
    double best_f = fid(best_t);
    for (std::size_t i = 2; i <= grid; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(grid);
        const double f = fid(t);
        if (f > best_f + kTieMargin) {
            best_f = f;
            best_t = t;
        }
    }

    // Golden-section maximisation inside one grid step on either side.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::max(best_t - step, 0.0);
    double hi = std::min(best_t + step, t_max);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = fid(x1);
    double f2 = fid(x2);
    for (int it = 0; it < kGoldenMaxIterations && hi - lo >= kGoldenWindow; ++it) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = fid(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = fid(x2);
        }
    }
    const double refined_t = 0.5 * (lo + hi);
    if (refined_t > 0.0 && fid(refined_t) > best_f) best_t = refined_t;

    const TransferKind hit = a == b ? TransferKind::PERIODIC : TransferKind::LPST;
    return make_report(hit, a, b, best_t, entry.at(best_t), tol);
}

PGSTWitness pgst_scan(const WeightedGraph& g, Vertex a, Vertex b, std::uint64_t q_max,
                      std::span<const double> epsilons) {
    const std::size_t n = g.vertex_count();
    require_vertex(n, a);
    require_vertex(n, b);
    if (q_max < 1) throw Error(ErrorCode::InvalidArgument, "q_max must be at least 1");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0 && epsilons[i] < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "epsilons must lie in (0, 1)");
        }
        if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "epsilons must be strictly decreasing");
        }
    }

    const Spectrum s = eigendecompose(laplacian(g));
    const EntryExpansion entry(s, a, b);

    PGSTWitness w;
    w.from = a;
    w.to = b;
    w.q_max = q_max;
    for (double eps : epsilons) w.epsilon_ladder.push_back({eps, std::nullopt});

    double best = -1.0;
    std::size_t pending = 0;  // ladder index of the coarsest unmet threshold
    for (std::uint64_t q = 0; q <= q_max; ++q) {
        const double t = (4.0 * static_cast<double>(q) + 1.0) * (std::numbers::pi / 2.0);
        const double f = std::abs(entry.at(t));
        if (f > best) {
            best = f;
            w.q_values.push_back(q);
            w.times.push_back(t);
            w.fidelities.push_back(f);
            while (pending < w.epsilon_ladder.size() && f >= 1.0 - w.epsilon_ladder[pending].epsilon) {
                w.epsilon_ladder[pending].first_hit = PgstSample{q, t, f};
                ++pending;
            }
        }
    }

    const double best_t = w.times.back();
    for (double mu : s.values) {
        w.alignment_defect = std::max(w.alignment_defect, std::abs(std::polar(1.0, -mu * best_t) - 1.0));
    }
    return w;
}

double verify_factorization(const WeightedGraph& g, const TwinPair& tw, double alpha,
                            std::span<const double> times) {
    if (!is_twin_pair(g, tw.a, tw.b)) {
        throw Error(ErrorCode::TwinViolation, "vertices " + std::to_string(tw.a) + " and " +
                                                  std::to_string(tw.b) + " are not twins");
    }
    const SymmetricMatrix l = laplacian(g);
    const SymmetricMatrix m = rank_one_edge_matrix(g.vertex_count(), tw.a, tw.b);
    const SymmetricMatrix perturbed = l + alpha * m;
    const Spectrum s = eigendecompose(l);
    double worst = 0.0;
    for (double t : times) {
        const Propagator closed = perturbed_propagator(propagator(s, t), m, alpha);
        worst = std::max(worst, max_abs_diff(closed.matrix, matrix_exp_oracle(perturbed, t)));
    }
    return worst;
}

}  // namespace twinwalk
