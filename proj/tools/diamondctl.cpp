// Command-line front end: parameter sweeps to CSV, single-channel advice, and
// a self-test mode that reruns the oracle-equivalence suites.
//
// Exit codes: 0 success, 1 usage error, 2 internal-consistency failure.

#include "diamond/af.hpp"
#include "diamond/df_strategy1.hpp"
#include "diamond/df_strategy2.hpp"
#include "diamond/prng.hpp"
#include "diamond/sweep.hpp"

#include "../tests/support/oracles.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_selftest(int instances) {
    using namespace diamond;
    SplitMix64 rng(0x5e1f7e57ULL);
    int failures = 0;
    auto report = [&](const char* name, int bad, double worst) {
        std::cout << (bad == 0 ? "[PASS] " : "[FAIL] ") << name << ": " << bad << "/" << instances
                  << " mismatches, worst " << worst << "\n";
        if (bad != 0) ++failures;
    };

    int bad_cf = 0, bad_p1 = 0, bad_p6 = 0, bad_sandwich = 0;
    double w_cf = 0, w_p1 = 0, w_p6 = 0;
    for (int i = 0; i < instances; ++i) {
        const LinkGains g{db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30)),
                          db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30))};
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};

        const DfSolution lp = df_rate_lp(g, conf);
        const double grid = oracles::df_grid_greedy(g, conf, false, 2000);
        const DfClosedForm cf = df_rate_closed_form(g, conf);
        const double e_cf = std::max(std::abs(cf.solution.rate - lp.rate),
                                     std::abs(grid - lp.rate));
        w_cf = std::max(w_cf, e_cf);
        if (e_cf > 1e-6) ++bad_cf;

        const double one = std::max(
            df_rate_lp_one_side(g, conf, ConferencingLink::relay1_to_relay2).rate,
            df_rate_lp_one_side(g, conf, ConferencingLink::relay2_to_relay1).rate);
        w_p1 = std::max(w_p1, std::abs(one - lp.rate));
        if (std::abs(one - lp.rate) > 1e-9) ++bad_p1;

        const double c = rng.uniform(0, 10);
        const ConferencingCapacities sym{c, c};
        const double e6 = std::abs(df_rate_II(g, sym).rate - upper_bound_I(g, sym).value);
        w_p6 = std::max(w_p6, e6);
        if (e6 > 1e-6) ++bad_p6;

        if (lp.rate > upper_bound_I(g, conf).value + 1e-9 ||
            df_rate_II(g, conf).rate > upper_bound_II(g, conf).value + 1e-9)
            ++bad_sandwich;
    }
    report("closed form and greedy-grid oracle vs LP", bad_cf, w_cf);
    report("one-side LP equals full LP", bad_p1, w_p1);
    report("strategy-II DF equals strategy-I upper bound (symmetric conf)", bad_p6, w_p6);
    report("DF below upper bounds", bad_sandwich, 0.0);

    int bad_af = 0;
    double w_af = 0;
    const int af_instances = std::max(instances / 10, 10);
    for (int i = 0; i < af_instances; ++i) {
        const LinkGains g{db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30)),
                          db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30))};
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const AfSolution opt = maximize_af(g, conf);
        const AfSolution grid = oracles::af_grid(g, conferencing_noise(g, conf));
        w_af = std::max(w_af, grid.rate - opt.rate);
        if (opt.rate < grid.rate - 1e-4) ++bad_af;
    }
    std::cout << (bad_af == 0 ? "[PASS] " : "[FAIL] ") << "AF optimizer vs grid oracle: " << bad_af
              << "/" << af_instances << " mismatches, worst " << w_af << "\n";
    if (bad_af != 0) ++failures;

    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity bounds and DF/AF achievable rates for the alternative-relaying "
                 "diamond channel with conferencing links"};
    app.require_subcommand(1);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
    std::string config_path, axis, range, out_path = "-", quantities_arg;
    std::vector<std::string> fixes;
    sweep_cmd->add_option("--config", config_path, "key = value config file");
    sweep_cmd->add_option("--axis", axis, "axis parameter (overrides config)");
    sweep_cmd->add_option("--range", range, "axis range start:stop:step");
    sweep_cmd->add_option("--fix", fixes, "fixed parameter key=value (repeatable)");
    sweep_cmd->add_option("--quantities", quantities_arg, "comma-separated quantity list");
    sweep_cmd->add_option("--out", out_path, "output CSV path, - for stdout");

    auto* advise_cmd = app.add_subcommand("advise", "report rates and link choice for one channel");
    double g1 = 0, g2 = 0, gt1 = 0, gt2 = 0, c12 = 0, c21 = 0;
    advise_cmd->add_option("--g1", g1, "source->relay1 SNR, dB")->required();
    advise_cmd->add_option("--g2", g2, "source->relay2 SNR, dB")->required();
    advise_cmd->add_option("--gt1", gt1, "relay1->destination SNR, dB")->required();
    advise_cmd->add_option("--gt2", gt2, "relay2->destination SNR, dB")->required();
    advise_cmd->add_option("--c12", c12, "relay1->relay2 conferencing rate, bits/s/Hz")->required();
    advise_cmd->add_option("--c21", c21, "relay2->relay1 conferencing rate, bits/s/Hz")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the oracle-equivalence suites");
    int selftest_n = 500;
    selftest_cmd->add_option("--instances", selftest_n, "random instances per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (sweep_cmd->parsed()) {
            diamond::SweepSpec spec;
            spec.quantities = {diamond::Quantity::upper_I, diamond::Quantity::upper_II,
                               diamond::Quantity::df_I_lp, diamond::Quantity::df_II};
            std::map<std::string, std::string> kv;
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw std::invalid_argument("cannot open config file " + config_path);
                kv = diamond::parse_config(f);
            }
            // flags override file keys
            if (!axis.empty()) kv["axis"] = axis;
            if (!range.empty()) kv["range"] = range;
            if (!quantities_arg.empty()) kv["quantities"] = quantities_arg;
            for (const auto& fix : fixes) {
                const auto eq = fix.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--fix expects key=value, got '" + fix + "'");
                kv[fix.substr(0, eq)] = fix.substr(eq + 1);
            }
            diamond::apply_config(kv, spec);
            const diamond::SweepOutput out = diamond::run_sweep(spec);
            if (out_path == "-") {
                std::cout << out.csv;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot open output file " + out_path);
                f << out.csv;
            }
            if (out.annotated_rows > 0) {
                std::cerr << out.annotated_rows
                          << " row(s) annotated with NaN after engine failures\n";
                return 2;
            }
            return 0;
        }
        if (advise_cmd->parsed()) {
            std::cout << diamond::advise(g1, g2, gt1, gt2, c12, c21);
            return 0;
        }
        return run_selftest(selftest_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
