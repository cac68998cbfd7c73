#include "qcadp/cli/config.hpp"

#include "qcadp/common/hash.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <stdexcept>

namespace qcadp::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    if (!j.is_object()) throw std::runtime_error("config: " + where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw std::runtime_error("config: unknown key '" + key + "' in " + where);
        }
    }
}

Eigen::VectorXd vec_from(const json& j, const std::string& field, int expected = -1) {
    if (!j.is_array()) throw std::runtime_error("config: field '" + field + "' must be an array");
    Eigen::VectorXd v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
    if (expected >= 0 && v.size() != expected) {
        throw std::runtime_error("config: field '" + field + "' must have " +
                                 std::to_string(expected) + " entries");
    }
    return v;
}

} // namespace

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("config: cannot open " + file.string());
    json j = json::parse(in);

    reject_unknown(j,
                   {"model", "model_params", "stage_cost", "weights", "fit", "policies",
                    "horizons", "sim", "family_file", "bench"},
                   "the top level");

    ExperimentConfig cfg;
    if (!j.contains("model")) throw std::runtime_error("config: missing required field 'model'");
    cfg.model = j.at("model").get<std::string>();
    if (cfg.model != "full" && cfg.model != "planar") {
        throw std::runtime_error("config: 'model' must be \"full\" or \"planar\"");
    }
    const bool planar = cfg.model == "planar";
    const int nx = planar ? 4 : 6;
    const int nu = planar ? 2 : 4;

    if (j.contains("model_params")) {
        cfg.model_params = j.at("model_params").get<std::string>();
        if (!std::filesystem::exists(cfg.model_params)) {
            throw std::runtime_error("config: model_params file does not exist: " +
                                     cfg.model_params.string());
        }
        cfg.params = model::load_params(cfg.model_params);
    } else {
        cfg.params.validate();
    }

    cfg.cost = planar ? adp::StageCost::defaults_planar() : adp::StageCost::defaults_full();
    if (j.contains("stage_cost")) {
        const auto& sc = j.at("stage_cost");
        reject_unknown(sc, {"q", "r", "discount"}, "stage_cost");
        if (sc.contains("q")) cfg.cost.q_diag = vec_from(sc.at("q"), "stage_cost.q", nx);
        if (sc.contains("r")) cfg.cost.r_diag = vec_from(sc.at("r"), "stage_cost.r", nu);
        if (sc.contains("discount")) cfg.cost.discount = sc.at("discount").get<double>();
        if (!(cfg.cost.discount >= 0 && cfg.cost.discount < 1)) {
            throw std::runtime_error("config: stage_cost.discount must lie in [0, 1)");
        }
    }

    cfg.weights = planar ? adp::WeightFamily::defaults_planar() : adp::WeightFamily::defaults_full();
    if (j.contains("weights")) {
        const auto& w = j.at("weights");
        reject_unknown(w, {"sigma0", "scales"}, "weights");
        if (w.contains("sigma0")) cfg.weights.sigma0 = vec_from(w.at("sigma0"), "weights.sigma0", nx);
        if (w.contains("scales")) {
            cfg.weights.scales.clear();
            for (const auto& s : w.at("scales")) cfg.weights.scales.push_back(s.get<double>());
        }
    }

    // Convex-combination multipliers default to degree 2; the 6-state model
    // overrides to degree 0 to keep the certificate Gram tractable.
    cfg.fit.theta_degree = planar ? 2 : 0;
    if (j.contains("fit")) {
        const auto& f = j.at("fit");
        reject_unknown(f,
                       {"threshold", "max_iterations", "lambda_degree", "theta_degree",
                        "multiplier_mode", "jobs", "prune_basis", "state_ball_radius"},
                       "fit");
        if (f.contains("threshold")) cfg.fit.improvement_threshold = f.at("threshold").get<double>();
        if (f.contains("max_iterations")) cfg.fit.max_iterations = f.at("max_iterations").get<int>();
        if (f.contains("lambda_degree")) cfg.fit.lambda_degree = f.at("lambda_degree").get<int>();
        if (f.contains("theta_degree")) cfg.fit.theta_degree = f.at("theta_degree").get<int>();
        if (f.contains("prune_basis")) cfg.fit.prune_basis = f.at("prune_basis").get<bool>();
        if (f.contains("jobs")) cfg.fit.jobs = f.at("jobs").get<int>();
        if (f.contains("state_ball_radius")) {
            cfg.state_ball_radius = f.at("state_ball_radius").get<double>();
        }
        if (f.contains("multiplier_mode")) {
            const auto mode = f.at("multiplier_mode").get<std::string>();
            if (mode == "per-constraint") {
                cfg.fit.multiplier_mode = sos::MultiplierMode::PerConstraint;
            } else if (mode == "shared-sum") {
                cfg.fit.multiplier_mode = sos::MultiplierMode::SharedSum;
            } else {
                throw std::runtime_error(
                    "config: fit.multiplier_mode must be \"per-constraint\" or \"shared-sum\"");
            }
        }
    }

    if (j.contains("policies")) {
        for (const auto& pj : j.at("policies")) {
            reject_unknown(pj, {"kind", "horizon", "discounted_riccati"}, "policies[]");
            control::PolicyConfig pc;
            if (!pj.contains("kind")) {
                throw std::runtime_error("config: missing required field 'kind' in policies[]");
            }
            pc.kind = control::policy_kind_from(pj.at("kind").get<std::string>());
            if (pj.contains("horizon")) pc.horizon = pj.at("horizon").get<int>();
            if (pj.contains("discounted_riccati")) {
                pc.discounted_riccati = pj.at("discounted_riccati").get<bool>();
            }
            pc.cost = cfg.cost;
            cfg.policies.push_back(pc);
        }
    }

    if (j.contains("horizons")) {
        cfg.horizons.clear();
        for (const auto& h : j.at("horizons")) cfg.horizons.push_back(h.get<int>());
    }

    if (j.contains("sim")) {
        const auto& s = j.at("sim");
        reject_unknown(s,
                       {"duration", "inner_rate", "outer_rate", "integrator_step", "initial_px",
                        "initial_pz", "setpoint", "seed"},
                       "sim");
        if (s.contains("duration")) cfg.sim.duration = s.at("duration").get<double>();
        if (s.contains("inner_rate")) cfg.sim.inner_rate = s.at("inner_rate").get<double>();
        if (s.contains("outer_rate")) cfg.sim.outer_rate = s.at("outer_rate").get<double>();
        if (s.contains("integrator_step")) {
            cfg.sim.integrator_step = s.at("integrator_step").get<double>();
        }
        if (s.contains("initial_px")) cfg.sim.initial.p[0] = s.at("initial_px").get<double>();
        if (s.contains("initial_pz")) cfg.sim.initial.p[2] = s.at("initial_pz").get<double>();
        if (s.contains("setpoint")) {
            auto sp = vec_from(s.at("setpoint"), "sim.setpoint", 3);
            cfg.sim.setpoint = Eigen::Vector3d(sp[0], sp[1], sp[2]);
        }
        if (s.contains("seed")) cfg.sim.seed = s.at("seed").get<unsigned>();
        cfg.sim.validate();
    }

    if (j.contains("family_file")) cfg.family_file = j.at("family_file").get<std::string>();

    if (j.contains("bench")) {
        const auto& b = j.at("bench");
        reject_unknown(b, {"budget_ms", "max_horizon", "duration"}, "bench");
        if (b.contains("budget_ms")) cfg.bench_budget_ms = b.at("budget_ms").get<double>();
        if (b.contains("max_horizon")) cfg.bench_max_horizon = b.at("max_horizon").get<int>();
        if (b.contains("duration")) cfg.bench_duration = b.at("duration").get<double>();
    }

    cfg.canonical_text = j.dump();
    cfg.hash = fnv1a64(cfg.canonical_text);
    return cfg;
}

} // namespace qcadp::cli
