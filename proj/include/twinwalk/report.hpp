#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinwalk/families.hpp"
#include "twinwalk/graph.hpp"
#include "twinwalk/walk.hpp"

namespace twinwalk::report {

using json = nlohmann::json;

enum ExitCode : int {
    kExitOk = 0,
    kExitNotFound = 1,
    kExitInputError = 2,
    kExitNumericalFailure = 3,
};

enum class Command { Twins, Check, Scan, Family, VerifyIdentities };
enum class ScanMode { Pst, Pgst };

struct RunConfig {
    Command command = Command::Twins;
    std::optional<std::filesystem::path> input_path;
    std::optional<std::filesystem::path> output_path;  ///< stdout when empty
    Vertex from = 0;
    Vertex to = 0;
    double time = 0.0;
    double lpst_tol = kDefaultLpstTol;
    ScanMode mode = ScanMode::Pst;
    double t_max = 0.0;  ///< 0 selects 2 pi
    std::size_t grid = kDefaultScanGrid;
    std::uint64_t q_max = kDefaultPgstQMax;
    std::vector<double> epsilons{1e-1, 1e-2, 1e-3};
    std::uint64_t seed = 7;
    std::size_t trials = 10;
};

/// Throws InvalidArgument when tolerances, grid or epsilons are out of range.
void validate(const RunConfig& cfg);

struct CommandResult {
    json output;
    int exit_code = kExitOk;
};

/// Rounds to `digits` significant decimal digits.
double round_significant(double x, int digits);

/// Accepts `{"n": N, "edges": [[u, v, w?], ...]}` or
/// `{"circulant": {"n": N, "S": [...]}}`.
WeightedGraph graph_from_json(const json& j);

/// A raw real, or `{"pi_multiple": x}` evaluated as x * pi.
double time_from_json(const json& j);

/// Command-line form of time_from_json: a number literal or a JSON snippet.
double parse_time_argument(const std::string& text);

/// Base graph names used by family files: "K5", "C4", "P3".
WeightedGraph named_graph(const std::string& name);

FamilyInstance family_from_json(const json& j);

json to_json(const TransferReport& r);
json to_json(const PGSTWitness& w);

CommandResult cmd_twins(const json& input);
CommandResult cmd_check(const json& input, Vertex from, Vertex to, double t, double tol);
CommandResult cmd_scan(const json& input, const RunConfig& cfg);
CommandResult cmd_family(const json& input, double tol, const PgstOptions& pgst);
CommandResult cmd_verify_identities(const std::optional<json>& input, std::uint64_t seed, std::size_t trials);

/// Reads the input file, dispatches, and maps library errors to exit codes
/// (2 for input errors, 3 for numerical failures).
CommandResult run(const RunConfig& cfg);

}  // namespace twinwalk::report
