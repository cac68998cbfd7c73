#pragma once

#include "qcadp/adp/fitter.hpp"
#include "qcadp/control/policies.hpp"
#include "qcadp/sim/closed_loop.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qcadp::cli {

/// Parsed experiment configuration. The file is JSON with strict unknown-key
/// rejection; missing required keys raise errors naming the field.
struct ExperimentConfig {
    std::string model = "full"; ///< "full" or "planar"
    std::filesystem::path model_params; ///< optional; built-in defaults when empty
    model::QuadcopterParams params;

    adp::StageCost cost;
    adp::WeightFamily weights;
    adp::FitOptions fit;
    double state_ball_radius = 3.0;

    std::vector<control::PolicyConfig> policies;
    std::vector<int> horizons{1};

    sim::SimConfig sim;

    std::filesystem::path family_file; ///< consumed by compare/bench/cut

    double bench_budget_ms = 20.0;
    int bench_max_horizon = 96;
    double bench_duration = 2.0;

    std::string canonical_text; ///< normalized serialization used for hashing
    std::uint64_t hash = 0;
};

ExperimentConfig load_config(const std::filesystem::path& file);

} // namespace qcadp::cli
