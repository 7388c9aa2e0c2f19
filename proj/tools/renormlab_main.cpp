#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "renormlab/scenarios.hpp"

namespace {

int emit(const nlohmann::ordered_json& report, const std::string& out) {
    std::string text = report.dump(2);
    text += '\n';
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "renormlab: cannot write " << out << "\n";
        return 2;
    }
    file << text;
    if (!file.good()) {
        std::cerr << "renormlab: write failed for " << out << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace renormlab;

    CLI::App app{"certified verification of group-invariant strictly convex renormings"};
    app.require_subcommand(1);

    std::string name;
    std::string out;
    std::string precision_str = "1/18446744073709551616";  // 2^-64
    std::uint64_t seed = 42;
    long trials = 0;
    int dim = 12, window = 32, depth = 10;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "PRNG seed (default 42)");
        cmd->add_option("--trials", trials, "override the scenario's trial count")
            ->check(CLI::Range(0L, 1000000L));
        cmd->add_option("--precision", precision_str, "target enclosure radius as p/q");
        cmd->add_option("--dim", dim, "dimension cap")->check(CLI::Range(1, 64));
        cmd->add_option("--window", window, "subshift window cap")->check(CLI::Range(2, 128));
        cmd->add_option("--depth", depth, "cylinder depth cap")->check(CLI::Range(1, 16));
        cmd->add_option("--out", out, "write the JSON report to FILE");
    };

    CLI::App* list_cmd = app.add_subcommand("list", "print the scenario catalog");
    CLI::App* run_cmd = app.add_subcommand("run", "run one named scenario");
    run_cmd->add_option("scenario", name, "scenario name (see `renormlab list`)")->required();
    add_common(run_cmd);
    CLI::App* all_cmd = app.add_subcommand("verify-all", "run every scenario in catalog order");
    add_common(all_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const ScenarioInfo& info : scenario_catalog())
                std::cout << info.name << "\n    " << info.result << "\n";
            return 0;
        }

        ScenarioConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.dim = dim;
        cfg.window = window;
        cfg.depth = depth;
        cfg.precision = parse_rational(precision_str);
        if (!(cfg.precision > 0 && cfg.precision < 1)) {
            std::cerr << "renormlab: precision must lie in (0,1)\n";
            return 2;
        }

        if (run_cmd->parsed()) {
            if (!scenario_exists(name)) {
                std::cerr << "renormlab: unknown scenario '" << name << "' (see `renormlab list`)\n";
                return 2;
            }
            cfg.name = name;
            ScenarioResult r = run_scenario(cfg);
            int io = emit(r.report, out);
            if (io != 0) return io;
            if (r.inconclusive) return 3;
            return r.expectations_met ? 0 : 1;
        }

        SuiteResult suite = run_all_scenarios(cfg);
        int io = emit(suite.report, out);
        if (io != 0) return io;
        if (suite.inconclusive) return 3;
        return suite.expectations_met ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "renormlab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "renormlab: " << e.what() << "\n";
        return 1;
    }
}
