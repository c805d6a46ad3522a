#include "twinwalk/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "twinwalk/circulant.hpp"
#include "twinwalk/error.hpp"
#include "twinwalk/random_graphs.hpp"
#include "twinwalk/spectral.hpp"

namespace twinwalk::report {

namespace {

constexpr int kTimeDigits = 15;
constexpr int kFidelityDigits = 12;

double t15(double t) { return round_significant(t, kTimeDigits); }
double f12(double f) { return round_significant(f, kFidelityDigits); }

Vertex vertex_from_json(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw Error(ErrorCode::ParseError, "vertex index must be a non-negative integer, got " + j.dump());
    }
    return j.get<Vertex>();
}

std::vector<VertexPair> pairs_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(ErrorCode::ParseError, std::string("missing array \"") + key + "\"");
    }
    std::vector<VertexPair> pairs;
    for (const auto& p : j.at(key)) {
        if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "pair must be [a, b]: " + p.dump());
        pairs.emplace_back(vertex_from_json(p[0]), vertex_from_json(p[1]));
    }
    return pairs;
}

CirculantSpec circulant_from_json(const json& c) {
    if (!c.contains("n") || !c.at("n").is_number_integer() || !c.contains("S") || !c.at("S").is_array()) {
        throw Error(ErrorCode::ParseError, "circulant needs integer \"n\" and array \"S\"");
    }
    std::vector<Residue> s;
    for (const auto& x : c.at("S")) {
        if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "S entries must be integers");
        s.push_back(x.get<Residue>());
    }
    return CirculantSpec(c.at("n").get<Residue>(), s);
}

json phase_fields(json j, Complex phase) {
    j["phase_re"] = f12(phase.real());
    j["phase_im"] = f12(phase.imag());
    return j;
}

json sample_json(const PgstSample& s) {
    return {{"q", s.q}, {"time", t15(s.time)}, {"fidelity", f12(s.fidelity)}};
}

std::optional<json> read_json_file(const std::optional<std::filesystem::path>& path) {
    if (!path) return std::nullopt;
    std::ifstream in(*path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path->string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path->string() + ": " + e.what());
    }
}

const json& require_input(const std::optional<json>& j) {
    if (!j) throw Error(ErrorCode::InvalidArgument, "--input is required for this command");
    return *j;
}

}  // namespace

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

void validate(const RunConfig& cfg) {
    if (!(cfg.lpst_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    if (cfg.grid < 2) throw Error(ErrorCode::InvalidArgument, "--grid must be at least 2");
    if (cfg.t_max < 0.0) throw Error(ErrorCode::InvalidArgument, "--t-max must be positive");
    if (cfg.q_max < 1) throw Error(ErrorCode::InvalidArgument, "--q-max must be at least 1");
    if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "--trials must be at least 1");
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
        if (!(cfg.epsilons[i] > 0.0 && cfg.epsilons[i] < 1.0) ||
            (i > 0 && !(cfg.epsilons[i] < cfg.epsilons[i - 1]))) {
            throw Error(ErrorCode::InvalidArgument, "epsilons must be strictly decreasing in (0, 1)");
        }
    }
}

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph must be a JSON object");
    if (j.contains("circulant")) return build_circulant(circulant_from_json(j.at("circulant")));
    if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) {
        throw Error(ErrorCode::ParseError, "graph needs a positive integer \"n\"");
    }
    std::vector<WeightedEdge> edges;
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) {
                throw Error(ErrorCode::ParseError, "edge must be [u, v] or [u, v, w]: " + e.dump());
            }
            double w = 1.0;
            if (e.size() == 3) {
                if (!e[2].is_number()) throw Error(ErrorCode::ParseError, "edge weight must be numeric");
                w = e[2].get<double>();
            }
            edges.push_back({vertex_from_json(e[0]), vertex_from_json(e[1]), w});
        }
    }
    return build_graph(j.at("n").get<std::size_t>(), edges);
}

double time_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_object() && j.size() == 1 && j.contains("pi_multiple") && j.at("pi_multiple").is_number()) {
        return j.at("pi_multiple").get<double>() * std::numbers::pi;
    }
    throw Error(ErrorCode::ParseError, "time must be a number or {\"pi_multiple\": x}, got " + j.dump());
}

double parse_time_argument(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw Error(ErrorCode::ParseError, "cannot parse time \"" + text + "\"");
    }
    return time_from_json(j);
}

WeightedGraph named_graph(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
        std::size_t consumed = 0;
        std::size_t n = 0;
        try {
            n = std::stoul(name.substr(1), &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed == name.size() - 1 && n >= 1) {
            if (name[0] == 'K') return complete_graph(n);
            if (name[0] == 'C') return cycle_graph(n);
            return path_graph(n);
        }
    }
    throw Error(ErrorCode::ParseError, "unknown base graph \"" + name + "\" (expected K<n>, C<n> or P<n>)");
}

FamilyInstance family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw Error(ErrorCode::ParseError, "family file needs a string \"family\"");
    }
    const auto name = j.at("family").get<std::string>();
    if (name == "k4n_matching") {
        std::size_t size = 0;
        if (j.contains("size") && j.at("size").is_number_integer()) {
            size = j.at("size").get<std::size_t>();
        } else if (j.contains("n") && j.at("n").is_number_integer()) {
            size = 4 * j.at("n").get<std::size_t>();
        } else {
            throw Error(ErrorCode::ParseError, "k4n_matching needs integer \"n\" (K_4n) or \"size\"");
        }
        return k4n_remove_matching(size, pairs_from_json(j, "matching"));
    }
    if (name == "quarter_weight") {
        if (!j.contains("base")) throw Error(ErrorCode::ParseError, "quarter_weight needs \"base\"");
        const auto& base = j.at("base");
        const WeightedGraph g = base.is_string() ? named_graph(base.get<std::string>()) : graph_from_json(base);
        return quarter_weight_edges(g, pairs_from_json(j, "pairs"));
    }
    if (name == "circulant_twin") {
        return circulant_twin_edge_family(circulant_from_json(j), pairs_from_json(j, "pairs"));
    }
    throw Error(ErrorCode::ParseError, "unknown family \"" + name + "\"");
}

json to_json(const TransferReport& r) {
    json j = {{"kind", std::string(to_string(r.kind))},
              {"from", r.from},
              {"to", r.to},
              {"time", t15(r.time)},
              {"fidelity", f12(r.fidelity)},
              {"tolerance", r.tolerance}};
    return phase_fields(std::move(j), r.phase);
}

json to_json(const PGSTWitness& w) {
    json improvements = json::array();
    for (std::size_t i = 0; i < w.times.size(); ++i) {
        improvements.push_back(sample_json({w.q_values[i], w.times[i], w.fidelities[i]}));
    }
    json ladder = json::array();
    for (const auto& th : w.epsilon_ladder) {
        json e = {{"epsilon", th.epsilon}, {"achieved", th.first_hit.has_value()}};
        if (th.first_hit) e.update(sample_json(*th.first_hit));
        ladder.push_back(std::move(e));
    }
    return {{"kind", w.all_thresholds_met() && !w.epsilon_ladder.empty() ? "PGST" : "NONE"},
            {"from", w.from},
            {"to", w.to},
            {"q_max", w.q_max},
            {"best", improvements.empty() ? json(nullptr) : improvements.back()},
            {"improvements", std::move(improvements)},
            {"ladder", std::move(ladder)},
            {"alignment_defect", f12(w.alignment_defect)}};
}

CommandResult cmd_twins(const json& input) {
    const WeightedGraph g = graph_from_json(input);
    json pairs = json::array();
    for (const auto& tp : list_twin_pairs(g)) pairs.push_back({tp.a, tp.b});
    return {{{"twin_pairs", std::move(pairs)}}, kExitOk};
}

CommandResult cmd_check(const json& input, Vertex from, Vertex to, double t, double tol) {
    const WeightedGraph g = graph_from_json(input);
    const TransferReport r = from == to ? check_periodic(g, from, t, tol) : check_lpst(g, from, to, t, tol);
    return {to_json(r), r.kind == TransferKind::NONE ? kExitNotFound : kExitOk};
}

CommandResult cmd_scan(const json& input, const RunConfig& cfg) {
    const WeightedGraph g = graph_from_json(input);
    if (cfg.mode == ScanMode::Pst) {
        const double t_max = cfg.t_max > 0.0 ? cfg.t_max : 2.0 * std::numbers::pi;
        const TransferReport r = pst_time_scan(g, cfg.from, cfg.to, t_max, cfg.grid, cfg.lpst_tol);
        json out = to_json(r);
        out["mode"] = "pst";
        out["t_max"] = t15(t_max);
        out["grid"] = cfg.grid;
        return {std::move(out), r.kind == TransferKind::NONE ? kExitNotFound : kExitOk};
    }
    const PGSTWitness w = pgst_scan(g, cfg.from, cfg.to, cfg.q_max, cfg.epsilons);
    json out = to_json(w);
    out["mode"] = "pgst";
    const int code = out.at("kind") == "PGST" ? kExitOk : kExitNotFound;
    return {std::move(out), code};
}

CommandResult cmd_family(const json& input, double tol, const PgstOptions& pgst) {
    const FamilyInstance fi = family_from_json(input);
    json reports = json::array();
    bool all_passed = true;
    for (const auto& r : evaluate_witnesses(fi, tol, pgst)) {
        json e = to_json(r.report);
        e["expected"] = std::string(to_string(r.expected.kind));
        e["passed"] = r.passed;
        if (r.pgst) e["pgst"] = to_json(*r.pgst);
        all_passed = all_passed && r.passed;
        reports.push_back(std::move(e));
    }
    json out = {{"family", fi.provenance},
                {"vertex_count", fi.graph.vertex_count()},
                {"warnings", fi.warnings},
                {"reports", std::move(reports)},
                {"passed", all_passed}};
    return {std::move(out), all_passed ? kExitOk : kExitNotFound};
}

CommandResult cmd_verify_identities(const std::optional<json>& input, std::uint64_t seed, std::size_t trials) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> alpha_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> time_dist(0.0, 10.0);

    std::optional<WeightedGraph> fixed;
    if (input) fixed = graph_from_json(*input);

    double commutator = 0.0, m_power = 0.0, swap_symmetry = 0.0, perturbation = 0.0;
    double factorization = 0.0, column_invariance = 0.0, entry_symmetry = 0.0, unitarity = 0.0;
    std::size_t pairs_checked = 0;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<std::pair<WeightedGraph, TwinPair>> cases;
        if (fixed) {
            for (auto& tp : list_twin_pairs(*fixed)) cases.emplace_back(*fixed, std::move(tp));
        } else {
            auto planted = random_graph_with_twins(rng, 10);
            TwinPair tp{planted.a, planted.b, planted.graph.weight(planted.a, planted.b) != 0.0, {}};
            cases.emplace_back(std::move(planted.graph), std::move(tp));
        }
        for (const auto& [g, tp] : cases) {
            ++pairs_checked;
            const std::size_t n = g.vertex_count();
            const SymmetricMatrix l = laplacian(g);
            const SymmetricMatrix m = rank_one_edge_matrix(n, tp.a, tp.b);
            const RealMatrix ld = l.dense(), md = m.dense();
            commutator = std::max(commutator, max_abs_diff(ld * md, md * ld));

            RealMatrix power = md;
            for (int k = 1; k <= 6; ++k) {
                m_power = std::max(m_power, max_abs_diff(power, std::ldexp(1.0, k - 1) * md));
                power = power * md;
            }
            const RealMatrix p = swap_permutation(n, tp.a, tp.b);
            swap_symmetry = std::max(swap_symmetry, max_abs_diff(p * ld * p, ld));

            const double alpha = alpha_dist(rng);
            const WeightedGraph perturbed = perturb_edge(g, {tp.a, tp.b, alpha});
            perturbation = std::max(perturbation, max_abs_diff(laplacian(perturbed).dense(), (l + alpha * m).dense()));

            std::vector<double> times(5);
            for (auto& t : times) t = time_dist(rng);
            factorization = std::max(factorization, verify_factorization(g, tp, alpha, times));

            const Spectrum s = eigendecompose(l);
            for (double t : times) {
                const Propagator base = propagator(s, t);
                const Propagator pert = perturbed_propagator(base, m, alpha);
                unitarity = std::max(unitarity, unitarity_defect(pert.matrix));
                for (Vertex q = 0; q < n; ++q) {
                    if (q == tp.a || q == tp.b) continue;
                    for (Vertex r = 0; r < n; ++r) {
                        column_invariance = std::max(column_invariance, std::abs(pert.matrix(r, q) - base.matrix(r, q)));
                    }
                }
            }
            for (Vertex q = 0; q < n; ++q) {
                if (q == tp.a || q == tp.b) continue;
                entry_symmetry = std::max(entry_symmetry, mixed_pair_entry_symmetry(perturbed, tp, q, times));
            }
        }
    }

    const json deviations = {{"commutator", commutator},
                             {"m_power", m_power},
                             {"swap_symmetry", swap_symmetry},
                             {"perturbed_laplacian", perturbation},
                             {"factorization", factorization},
                             {"column_invariance", column_invariance},
                             {"entry_symmetry", entry_symmetry},
                             {"unitarity", unitarity}};
    const json thresholds = {{"commutator", 1e-12},    {"m_power", 1e-12},           {"swap_symmetry", 1e-12},
                             {"perturbed_laplacian", 1e-12}, {"factorization", 1e-8}, {"column_invariance", 1e-12},
                             {"entry_symmetry", 1e-9}, {"unitarity", 1e-9}};
    bool passed = pairs_checked > 0;
    for (const auto& [key, limit] : thresholds.items()) passed = passed && deviations.at(key).get<double>() < limit.get<double>();

    json out = {{"seed", seed},
                {"trials", trials},
                {"source", fixed ? "input" : "random"},
                {"pairs_checked", pairs_checked},
                {"max_deviation", deviations},
                {"thresholds", thresholds},
                {"passed", passed}};
    return {std::move(out), passed ? kExitOk : kExitNotFound};
}

CommandResult run(const RunConfig& cfg) {
    try {
        validate(cfg);
        const auto input = read_json_file(cfg.input_path);
        switch (cfg.command) {
            case Command::Twins: return cmd_twins(require_input(input));
            case Command::Check: return cmd_check(require_input(input), cfg.from, cfg.to, cfg.time, cfg.lpst_tol);
            case Command::Scan: return cmd_scan(require_input(input), cfg);
            case Command::Family: return cmd_family(require_input(input), cfg.lpst_tol, {cfg.q_max, cfg.epsilons});
            case Command::VerifyIdentities: return cmd_verify_identities(input, cfg.seed, cfg.trials);
        }
        throw Error(ErrorCode::InvalidArgument, "unknown command");
    } catch (const Error& e) {
        const int code = e.code() == ErrorCode::ConvergenceFailure ? kExitNumericalFailure : kExitInputError;
        return {{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, code};
    } catch (const json::exception& e) {
        return {{{"error", "ParseError"}, {"message", e.what()}}, kExitInputError};
    }
}

}  // namespace twinwalk::report
