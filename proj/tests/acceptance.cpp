// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kpreal/experiments.hpp"

using namespace kpreal;

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
    ExperimentResult result;
    double seconds;
};

Timed run(ExperimentConfig cfg) {
    const auto t0 = Clock::now();
    ExperimentResult r = run_experiment(cfg);
    return {std::move(r), std::chrono::duration<double>(Clock::now() - t0).count()};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Checks whose name starts with one of the prefixes; empty prefixes take all.
bool select(const ExperimentResult& r, const std::vector<std::string>& prefixes, std::string& failed) {
    bool ok = true;
    std::size_t seen = 0;
    for (const auto& c : r.checks) {
        bool take = prefixes.empty();
        for (const auto& p : prefixes) take = take || starts_with(c.name, p);
        if (!take) continue;
        ++seen;
        if (!c.passed) {
            ok = false;
            failed += (failed.empty() ? "" : "; ") + c.name + " [" + c.detail + "]";
        }
    }
    if (seen == 0) {
        failed += "no checks selected";
        return false;
    }
    return ok;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

ExperimentConfig config(const std::string& command, std::size_t samples) {
    ExperimentConfig c;
    c.command = command;
    c.samples = samples;
    c.seed = 42;
    return c;
}

}  // namespace

int main() {
    {
        const Timed sel = run(config("selector-check", 1000));
        std::string why;
        const bool ok = select(sel.result, {"reconstruction exact"}, why);
        report(1, "reconstruction identity, dims 8/64/256", ok && sel.seconds < 5.0,
               why + (sel.seconds < 5.0 ? "" : " too slow") + " (" + detail::sci(sel.seconds) + " s)");

        std::string why2;
        const bool ok2 = select(sel.result, {"N0 <=", "J-norm <="}, why2);
        double jsup = 0.0, pair = 0.0;
        for (const auto& row : sel.result.table.rows) {
            const auto& stat = std::get<std::string>(row[3]);
            if (stat == "sup_jnorm_ratio") jsup = std::max(jsup, std::get<double>(row[4]));
            if (stat == "pair_witness_jnorm") pair = std::get<double>(row[4]);
        }
        report(2, "selector extremality", ok2,
               why2 + (why2.empty() ? "" : ", ") + "empirical J-norm sup " + detail::sci(jsup) +
                   ", J-norm of (e1+e2)/sqrt2 " + detail::sci(pair));
    }
    {
        const Timed con = run(config("consistency-check", 1000));
        std::string why;
        report(3, "derivation consistency", select(con.result, {}, why), why);
    }
    {
        const Timed cx = run(config("complexification-bound", 10000));
        std::string why;
        report(4, "complexification bound", select(cx.result, {}, why), why);
    }
    {
        // The runtime budget covers the flat dyadic growth curve itself.
        const auto t0 = Clock::now();
        const BlockFamily flat = flat_dyadic_blocks(20);
        const auto rows = growth_curve(flat, 20, DifferentialMap::kp(2.0));
        double worst = 0.0, fd = 0.0;
        for (const auto& row : rows)
            worst = std::max(worst, std::abs(row.ratio - std::log(std::ldexp(1.0, int(row.N) + 1) - 2.0)));
        for (std::size_t N : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20}) {
            const BlockFamily pre = N == 20 ? flat : flat.prefix(N);
            const double h = 1e-5;
            const double diff = (g_scalar(pre, 0.5 + h) - g_scalar(pre, 0.5 - h)).real() / (2.0 * h);
            fd = std::max(fd, std::abs(diff - g_log_derivative_closed(pre)));
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool core = worst <= 1e-9 && fd <= 1e-6 && rows.size() == 20 && rows[19].ratio > 14.5;

        ExperimentConfig c = config("singularity-growth", 1);
        c.nmax = 20;
        const Timed sg = run(c);
        std::string why;
        const bool ok = select(sg.result,
                               {"flat blocks: ratio", "prediction =", "ratio strictly", "ratio(20)", "real map",
                                "finite difference"},
                               why);
        report(5, "singularity growth on flat dyadic blocks", ok && core && seconds < 1.0,
               why + (why.empty() ? "" : ", ") + "max |ratio - ln(2^(N+1)-2)| " + detail::sci(worst) +
                   ", finite difference " + detail::sci(fd) + ", ratio(20) " + detail::sci(rows.back().ratio) + ", " +
                   detail::sci(seconds) + " s");

        std::string why6;
        report(6, "f-norm identities", select(sg.result, {"||f("}, why6), why6);
    }
    {
        const Timed du = run(config("duality-defect", 10000));
        std::string why;
        report(7, "dual pairing defect and diagram commutation", select(du.result, {}, why), why);
    }
    {
        const Timed ce = run(config("centralizer-defect", 10000));
        const Timed ql = run(config("quasilinearity-defect", 10000));
        std::string why;
        const bool a = select(ce.result, {}, why);
        const bool b = select(ql.result, {}, why);
        report(8, "centralizer and quasilinearity defects", a && b, why);
    }
    {
        const Timed ax = run(config("axiom-check", 1));
        std::string why;
        report(9, "pseudolattice push-forward axiom", select(ax.result, {}, why), why);
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
