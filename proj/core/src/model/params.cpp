#include "qcadp/model/params.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace qcadp::model {

void QuadcopterParams::validate() const {
    if (!(mass > 0)) throw std::invalid_argument("params: mass must be positive");
    if (!(gravity > 0)) throw std::invalid_argument("params: gravity must be positive");
    for (int i = 0; i < 3; ++i) {
        if (!(inertia_diag[i] > 0)) throw std::invalid_argument("params: inertia must be positive");
    }
    if (!(thrust_min < thrust_max)) {
        throw std::invalid_argument("params: thrust bounds must satisfy lb < ub");
    }
    if (!(max_tilt > 0 && max_tilt < 1.5707963267948966)) {
        throw std::invalid_argument("params: max tilt must lie in (0, pi/2)");
    }
}

namespace {

using nlohmann::json;

const char* const kKeys[] = {"mass_kg",      "gravity_mps2",  "inertia_diag_kgm2",
                             "rotor_x_m",    "rotor_y_m",     "rotor_tau_m",
                             "thrust_min_n", "thrust_max_n",  "max_tilt_rad",
                             "motor_margin", "description"};

void check_keys(const json& j) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : kKeys) {
            if (key == k) known = true;
        }
        if (!known) throw std::runtime_error("params: unknown key '" + key + "'");
    }
}

} // namespace

QuadcopterParams load_params(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("params: cannot open " + file.string());
    json j = json::parse(in);
    check_keys(j);
    QuadcopterParams p;
    p.mass = j.at("mass_kg").get<double>();
    p.gravity = j.at("gravity_mps2").get<double>();
    auto inertia = j.at("inertia_diag_kgm2").get<std::array<double, 3>>();
    p.inertia_diag = Eigen::Vector3d(inertia[0], inertia[1], inertia[2]);
    p.rotor_x = j.at("rotor_x_m").get<std::array<double, 4>>();
    p.rotor_y = j.at("rotor_y_m").get<std::array<double, 4>>();
    p.rotor_tau = j.at("rotor_tau_m").get<std::array<double, 4>>();
    p.thrust_min = j.at("thrust_min_n").get<double>();
    p.thrust_max = j.at("thrust_max_n").get<double>();
    p.max_tilt = j.at("max_tilt_rad").get<double>();
    if (j.contains("motor_margin")) p.motor_margin = j.at("motor_margin").get<double>();
    p.validate();
    return p;
}

void save_params(const std::filesystem::path& file, const QuadcopterParams& p) {
    json j;
    j["description"] =
        "nano-quadcopter nominal parameters; inertia/arm/torque values are "
        "non-published defaults for a symmetric X configuration";
    j["mass_kg"] = p.mass;
    j["gravity_mps2"] = p.gravity;
    j["inertia_diag_kgm2"] = {p.inertia_diag[0], p.inertia_diag[1], p.inertia_diag[2]};
    j["rotor_x_m"] = p.rotor_x;
    j["rotor_y_m"] = p.rotor_y;
    j["rotor_tau_m"] = p.rotor_tau;
    j["thrust_min_n"] = p.thrust_min;
    j["thrust_max_n"] = p.thrust_max;
    j["max_tilt_rad"] = p.max_tilt;
    j["motor_margin"] = p.motor_margin;
    std::ofstream out(file);
    if (!out) throw std::runtime_error("params: cannot write " + file.string());
    out << j.dump(2) << "\n";
}

} // namespace qcadp::model
