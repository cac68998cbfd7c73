#include "qcadp/cli/commands.hpp"
#include "qcadp/common/version.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qcadp;

int main(int argc, char** argv) {
    CLI::App app{"Polynomial value-function synthesis and online policies for a quadcopter"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path;
    cli::CliOptions opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "experiment configuration file")->required();
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_flag("--force", opt.force, "overwrite existing outputs");
        sub->add_option("--seed", opt.seed, "seed for sampled diagnostics");
        sub->add_option("--jobs", opt.jobs, "worker threads for independent cells");
    };

    auto* fit = app.add_subcommand("fit", "fit the value-function family");
    add_common(fit);
    auto* simulate = app.add_subcommand("simulate", "run one closed-loop simulation");
    add_common(simulate);
    auto* compare = app.add_subcommand("compare", "run the policy comparison on the step task");
    add_common(compare);
    compare->add_flag("--assert-ordering", opt.assert_ordering,
                      "exit 3 if the ADP terminal loses to the Riccati terminal at N=1");
    auto* bench = app.add_subcommand("bench", "closed-loop solve-time benchmark");
    add_common(bench);
    auto* cut = app.add_subcommand("cut", "export 1-D value-function slices");
    add_common(cut);

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = cli::load_config(config_path);
        if (fit->parsed()) return cli::cmd_fit(cfg, opt);
        if (simulate->parsed()) return cli::cmd_simulate(cfg, opt);
        if (compare->parsed()) return cli::cmd_compare(cfg, opt);
        if (bench->parsed()) return cli::cmd_bench(cfg, opt);
        if (cut->parsed()) return cli::cmd_cut(cfg, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return cli::kExitUsage;
}
