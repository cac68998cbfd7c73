#pragma once

#include "qcadp/sim/sweep.hpp"

#include <cstdint>
#include <filesystem>

namespace qcadp::sim {

/// Trace CSV: one row per outer tick with columns
///   t, px, py, pz, vx, vy, vz, roll, pitch, yaw, wx, wy, wz,
///   u_roll, u_pitch, u_yaw, u_thrust, m1, m2, m3, m4, solve_ms, g_theta, g_f
void write_trace_csv(const std::filesystem::path& path, const SimTrace& trace,
                     std::uint64_t config_hash);

/// Metrics CSV: one row per (policy, horizon) sweep cell.
void write_metrics_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells,
                       std::uint64_t config_hash);

} // namespace qcadp::sim
