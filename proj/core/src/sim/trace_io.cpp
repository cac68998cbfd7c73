#include "qcadp/sim/trace_io.hpp"

#include "qcadp/common/csv.hpp"

namespace qcadp::sim {

void write_trace_csv(const std::filesystem::path& path, const SimTrace& trace,
                     std::uint64_t config_hash) {
    CsvWriter csv(path, config_hash,
                  {"t",      "px",      "py",    "pz",    "vx",    "vy",       "vz",
                   "roll",   "pitch",   "yaw",   "wx",    "wy",    "wz",       "u_roll",
                   "u_pitch", "u_yaw",  "u_thrust", "m1", "m2",    "m3",       "m4",
                   "solve_ms", "g_theta", "g_f"});
    for (std::size_t k = 0; k < trace.ticks(); ++k) {
        const auto& s = trace.state[k];
        const auto& u = trace.input[k];
        const auto& mm = trace.motors[k];
        csv.row({trace.t[k], s.p[0],   s.p[1],   s.p[2],   s.v[0],     s.v[1],
                 s.v[2],     s.psi[0], s.psi[1], s.psi[2], s.omega[0], s.omega[1],
                 s.omega[2], u.roll,   u.pitch,  u.yaw,    u.thrust,   mm[0],
                 mm[1],      mm[2],    mm[3],    trace.solve_ms[k],    trace.g_theta[k],
                 trace.g_f[k]});
    }
}

void write_metrics_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells,
                       std::uint64_t config_hash) {
    CsvWriter csv(path, config_hash,
                  {"policy", "horizon", "cost", "converged", "convergence_tick", "solve_ms_min",
                   "solve_ms_q1", "solve_ms_median", "solve_ms_q3", "solve_ms_max",
                   "violations", "ok"});
    for (const auto& c : cells) {
        csv.row_mixed({control::to_string(c.kind), std::to_string(c.horizon),
                       CsvWriter::num(c.metrics.cost), std::to_string(c.metrics.converged ? 1 : 0),
                       std::to_string(c.metrics.convergence_tick),
                       CsvWriter::num(c.solve_ms_min), CsvWriter::num(c.solve_ms_q1),
                       CsvWriter::num(c.solve_ms_median), CsvWriter::num(c.solve_ms_q3),
                       CsvWriter::num(c.solve_ms_max),
                       std::to_string(c.metrics.constraint_violations),
                       std::to_string(c.ok ? 1 : 0)});
    }
}

} // namespace qcadp::sim
