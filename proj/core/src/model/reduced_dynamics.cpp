#include "qcadp/model/reduced_dynamics.hpp"

#include <stdexcept>

namespace qcadp::model {

namespace {

using poly::Exponent;
using poly::Polynomial;

Exponent mono(std::size_t arity, std::initializer_list<std::pair<int, int>> powers) {
    Exponent e(arity);
    for (const auto& [idx, pw] : powers) e[idx] = static_cast<std::uint8_t>(pw);
    return e;
}

} // namespace

std::vector<poly::Polynomial> taylor_dynamics(const QuadcopterParams& params) {
    const std::size_t n = 10; // (p, v) + (roll, pitch, yaw, thrust)
    const int vx = 3, vy = 4, vz = 5, g_ = 6, b_ = 7, a_ = 8, f_ = 9;
    const double m = params.mass;
    const double mg = m * params.gravity;

    std::vector<Polynomial> f(6, Polynomial(n));
    // position rows
    f[0].add_term(mono(n, {{vx, 1}}), 1.0);
    f[1].add_term(mono(n, {{vy, 1}}), 1.0);
    f[2].add_term(mono(n, {{vz, 1}}), 1.0);

    // x acceleration: (1/m)(beta f - (1/2) m g alpha^2 beta + f alpha gamma
    //                       - (1/6) m g beta^3 - (1/2) m g beta gamma^2)
    f[3].add_term(mono(n, {{b_, 1}, {f_, 1}}), 1.0 / m);
    f[3].add_term(mono(n, {{a_, 2}, {b_, 1}}), -0.5 * mg / m);
    f[3].add_term(mono(n, {{a_, 1}, {g_, 1}, {f_, 1}}), 1.0 / m);
    f[3].add_term(mono(n, {{b_, 3}}), -mg / (6.0 * m));
    f[3].add_term(mono(n, {{b_, 1}, {g_, 2}}), -0.5 * mg / m);

    // y acceleration: (1/m)(-gamma f + f alpha beta + (1/2) m g alpha^2 gamma
    //                       + (1/6) m g gamma^3)
    f[4].add_term(mono(n, {{g_, 1}, {f_, 1}}), -1.0 / m);
    f[4].add_term(mono(n, {{a_, 1}, {b_, 1}, {f_, 1}}), 1.0 / m);
    f[4].add_term(mono(n, {{a_, 2}, {g_, 1}}), 0.5 * mg / m);
    f[4].add_term(mono(n, {{g_, 3}}), mg / (6.0 * m));

    // z acceleration: (1/m)((f - m g) - (1/2) f beta^2 - (1/2) f gamma^2)
    f[5].add_term(mono(n, {{f_, 1}}), 1.0 / m);
    f[5].add_term(mono(n, {}), -params.gravity);
    f[5].add_term(mono(n, {{f_, 1}, {b_, 2}}), -0.5 / m);
    f[5].add_term(mono(n, {{f_, 1}, {g_, 2}}), -0.5 / m);

    return f;
}

std::vector<poly::Polynomial> planar_taylor_dynamics(const QuadcopterParams& params) {
    const std::size_t n = 6; // (p_x, p_z, v_x, v_z) + (pitch, thrust)
    const int vx = 2, vz = 3, b_ = 4, f_ = 5;
    const double m = params.mass;
    const double mg = m * params.gravity;

    std::vector<Polynomial> f(4, Polynomial(n));
    f[0].add_term(mono(n, {{vx, 1}}), 1.0);
    f[1].add_term(mono(n, {{vz, 1}}), 1.0);

    f[2].add_term(mono(n, {{b_, 1}, {f_, 1}}), 1.0 / m);
    f[2].add_term(mono(n, {{b_, 3}}), -mg / (6.0 * m));

    f[3].add_term(mono(n, {{f_, 1}}), 1.0 / m);
    f[3].add_term(mono(n, {}), -params.gravity);
    f[3].add_term(mono(n, {{f_, 1}, {b_, 2}}), -0.5 / m);

    return f;
}

std::vector<poly::Polynomial> discretize_euler(const std::vector<poly::Polynomial>& cont,
                                               double dt) {
    if (!(dt > 0)) throw std::invalid_argument("discretize_euler: dt must be positive");
    std::vector<poly::Polynomial> disc;
    disc.reserve(cont.size());
    for (std::size_t i = 0; i < cont.size(); ++i) {
        poly::Polynomial next = cont[i] * dt;
        next += poly::Polynomial::variable(cont[i].arity(), i);
        disc.push_back(std::move(next));
    }
    return disc;
}

} // namespace qcadp::model
