// kpreal-run: runs one verification experiment and reports PASS/FAIL per check.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage or config error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "kpreal/experiments.hpp"
#include "kpreal/io.hpp"
#include "kpreal/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double parse_p1(const std::string& s) {
    if (s == "inf") return kpreal::kInf;
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("--p1: expected a number or \"inf\"");
    return v;
}

std::string svg_path_for(const std::string& out) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".svg";
    return out + ".svg";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional checks for the real Kalton-Peck differential"};

    std::string command;
    double p0 = 1.0;
    std::string p1 = "inf";
    double theta = 0.5;
    std::size_t dim = 64;
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    std::size_t nmax = 20;
    std::string out;
    std::string format = "csv";
    bool plot = false;
    unsigned workers = 1;

    app.add_option("--command", command, "Experiment to run")
        ->required()
        ->check(CLI::IsMember(kpreal::experiment_commands()));
    app.add_option("--p0", p0, "Exponent of the first space")->capture_default_str();
    app.add_option("--p1", p1, "Exponent of the second space, or inf")->capture_default_str();
    app.add_option("--theta", theta, "Interpolation parameter in (0,1)")->capture_default_str();
    auto* dim_opt = app.add_option("--dim", dim, "Dimension (default: the command's dimension ladder)");
    app.add_option("--samples", samples, "Random samples per dimension")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--nmax", nmax, "Largest block count for singularity-growth")->capture_default_str();
    app.add_option("--out", out, "Output table path (default: stdout)");
    app.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_flag("--plot", plot, "Also write an SVG plot next to --out");
    app.add_option("--workers", workers, "Sampling threads (output does not depend on this)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    kpreal::ExperimentResult result;
    try {
        kpreal::ExperimentConfig cfg;
        cfg.command = command;
        cfg.params = kpreal::InterpolationParams(p0, parse_p1(p1), theta);
        if (dim_opt->count() > 0) cfg.dims = {dim};
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.nmax = nmax;
        cfg.workers = workers;
        result = kpreal::run_experiment(cfg);
    } catch (const std::exception& e) {
        std::cerr << "kpreal-run: " << e.what() << '\n';
        return kExitUsage;
    }

    auto write_table = [&](std::ostream& os) {
        if (format == "json") kpreal::write_json(os, result.table);
        else kpreal::write_csv(os, result.table);
    };
    if (out.empty()) {
        write_table(std::cout);
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "kpreal-run: cannot write " << out << '\n';
            return kExitUsage;
        }
        write_table(f);
    }

    if (plot) {
        if (result.plot.empty()) {
            std::cerr << "kpreal-run: no plot for " << command << '\n';
        } else {
            const std::string path = out.empty() ? command + ".svg" : svg_path_for(out);
            std::ofstream f(path);
            f << kpreal::svg_line_plot(command, "N", "value", result.plot);
        }
    }

    for (const auto& c : result.checks)
        std::cout << (c.passed ? "PASS: " : "FAIL: ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
    return result.passed() ? 0 : kExitFail;
}
