#pragma once

#include "qcadp/cli/config.hpp"

namespace qcadp::cli {

struct CliOptions {
    std::filesystem::path out_dir = "out";
    bool force = false;
    unsigned seed = 0;
    int jobs = 1;
    bool assert_ordering = false; ///< compare: exit 3 on Fig-7 ordering violation
};

// Exit codes: 0 success, 1 usage/config, 2 solver failure, 3 ordering violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitOrdering = 3;

int cmd_fit(const ExperimentConfig& cfg, const CliOptions& opt);
int cmd_simulate(const ExperimentConfig& cfg, const CliOptions& opt);
int cmd_compare(const ExperimentConfig& cfg, const CliOptions& opt);
int cmd_bench(const ExperimentConfig& cfg, const CliOptions& opt);
int cmd_cut(const ExperimentConfig& cfg, const CliOptions& opt);

} // namespace qcadp::cli
