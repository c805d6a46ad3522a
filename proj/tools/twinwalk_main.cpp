#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "twinwalk/error.hpp"
#include "twinwalk/report.hpp"

namespace {

using twinwalk::report::Command;
using twinwalk::report::RunConfig;
using twinwalk::report::ScanMode;

void add_input(CLI::App* sub, RunConfig& cfg, bool required) {
    auto* opt = sub->add_option("--input", cfg.input_path, "graph or family JSON file");
    if (required) opt->required();
}

void add_output(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.output_path, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum walks on edge-perturbed graphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string time_text;
    std::string t_max_text;
    double pi_multiple = 0.0;
    double t_max_pi_multiple = 0.0;
    std::string mode = "pst";

    auto* twins = app.add_subcommand("twins", "list twin vertex pairs");
    add_input(twins, cfg, true);
    add_output(twins, cfg);

    auto* check = app.add_subcommand("check", "test transfer (or periodicity when --from == --to) at one time");
    add_input(check, cfg, true);
    add_output(check, cfg);
    check->add_option("--from", cfg.from)->required();
    check->add_option("--to", cfg.to)->required();
    auto* time_opt = check->add_option("--time", time_text, "real time or {\"pi_multiple\": x}");
    auto* pi_opt = check->add_option("--pi-multiple", pi_multiple, "time as a multiple of pi");
    time_opt->excludes(pi_opt);
    check->add_option("--tol", cfg.lpst_tol);

    auto* scan = app.add_subcommand("scan", "search for transfer times");
    add_input(scan, cfg, true);
    add_output(scan, cfg);
    scan->add_option("--from", cfg.from)->required();
    scan->add_option("--to", cfg.to)->required();
    scan->add_option("--mode", mode)->check(CLI::IsMember({"pst", "pgst"}));
    auto* t_max_opt = scan->add_option("--t-max", t_max_text, "pst horizon: real or {\"pi_multiple\": x}");
    auto* t_max_pi_opt = scan->add_option("--t-max-pi-multiple", t_max_pi_multiple);
    t_max_opt->excludes(t_max_pi_opt);
    scan->add_option("--grid", cfg.grid);
    scan->add_option("--tol", cfg.lpst_tol);
    scan->add_option("--q-max", cfg.q_max);
    scan->add_option("--epsilons", cfg.epsilons, "decreasing thresholds for pgst mode");

    auto* family = app.add_subcommand("family", "build a known construction and verify its witnesses");
    add_input(family, cfg, true);
    add_output(family, cfg);
    family->add_option("--tol", cfg.lpst_tol);
    family->add_option("--q-max", cfg.q_max);

    auto* identities = app.add_subcommand("verify-identities", "seeded property run over twin-pair identities");
    add_input(identities, cfg, false);
    add_output(identities, cfg);
    identities->add_option("--seed", cfg.seed);
    identities->add_option("--trials", cfg.trials);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : twinwalk::report::kExitInputError;
    }

    twinwalk::report::CommandResult result;
    try {
        if (*twins) cfg.command = Command::Twins;
        if (*check) {
            cfg.command = Command::Check;
            if (*pi_opt) {
                cfg.time = pi_multiple * std::numbers::pi;
            } else if (*time_opt) {
                cfg.time = twinwalk::report::parse_time_argument(time_text);
            } else {
                throw twinwalk::Error(twinwalk::ErrorCode::InvalidArgument, "check needs --time or --pi-multiple");
            }
        }
        if (*scan) {
            cfg.command = Command::Scan;
            cfg.mode = mode == "pgst" ? ScanMode::Pgst : ScanMode::Pst;
            if (*t_max_pi_opt) cfg.t_max = t_max_pi_multiple * std::numbers::pi;
            if (*t_max_opt) cfg.t_max = twinwalk::report::parse_time_argument(t_max_text);
        }
        if (*family) cfg.command = Command::Family;
        if (*identities) cfg.command = Command::VerifyIdentities;
        result = twinwalk::report::run(cfg);
    } catch (const twinwalk::Error& e) {
        result = {{{"error", std::string(twinwalk::to_string(e.code()))}, {"message", e.what()}},
                  twinwalk::report::kExitInputError};
    }

    const std::string text = result.output.dump(2) + "\n";
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path);
        if (!out) {
            std::cerr << "cannot write " << cfg.output_path->string() << "\n";
            return twinwalk::report::kExitInputError;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return result.exit_code;
}
