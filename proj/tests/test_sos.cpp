#include "qcadp/sos/program.hpp"
#include "qcadp/sos/sprocedure.hpp"

#include <doctest.h>

#include <random>

using namespace qcadp;
using namespace qcadp::sos;

namespace {

poly::Exponent exp2d(int a, int b) {
    poly::Exponent e(2);
    e[0] = static_cast<std::uint8_t>(a);
    e[1] = static_cast<std::uint8_t>(b);
    return e;
}

} // namespace

TEST_CASE("(x+y)^2 over basis {x, y} gives the all-ones Gram") {
    SosProgram prog(2);
    AffinePoly target(2);
    target.add_term(exp2d(2, 0), LinearCoeff(1.0));
    target.add_term(exp2d(1, 1), LinearCoeff(2.0));
    target.add_term(exp2d(0, 2), LinearCoeff(1.0));

    poly::MonomialBasis basis({exp2d(1, 0), exp2d(0, 1)});
    auto h = prog.compile_sos(target, basis);
    auto res = prog.solve();
    REQUIRE(res.status == conic::SolveStatus::Optimal);

    auto cert = extract_certificate(prog, res, h, target);
    CHECK(cert.gram(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cert.gram(0, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cert.gram(1, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cert.min_eigenvalue > -1e-8);
    CHECK(cert.reconstruction_residual < 1e-7);
}

TEST_CASE("x^2 - y^2 is not a sum of squares") {
    SosProgram prog(2);
    AffinePoly target(2);
    target.add_term(exp2d(2, 0), LinearCoeff(1.0));
    target.add_term(exp2d(0, 2), LinearCoeff(-1.0));
    prog.compile_sos(target, poly::MonomialBasis({exp2d(1, 0), exp2d(0, 1)}));
    auto res = prog.solve();
    CHECK(res.status == conic::SolveStatus::Infeasible);
}

TEST_CASE("2x^4 + 5y^4 - x^2 y^2 is SOS") {
    // Oracle: over z = (x^2, y^2, xy) the Gram family is
    //   [[2, t, 0], [t, 5, 0], [0, 0, -1-2t]],
    // PSD for t in [-sqrt(10), -1/2]; scanning the one free direction
    // confirms feasibility (e.g. t = -1).
    SosProgram prog(2);
    AffinePoly target(2);
    target.add_term(exp2d(4, 0), LinearCoeff(2.0));
    target.add_term(exp2d(0, 4), LinearCoeff(5.0));
    target.add_term(exp2d(2, 2), LinearCoeff(-1.0));
    auto h = prog.compile_sos(
        target, poly::basis_up_to_degree_support(2, 2, target.support()));
    auto res = prog.solve();
    REQUIRE(res.status == conic::SolveStatus::Optimal);
    auto cert = extract_certificate(prog, res, h, target);
    CHECK(cert.min_eigenvalue > -1e-8);
    CHECK(cert.reconstruction_residual < 1e-6);
}

TEST_CASE("coverage failure reports the uncovered monomials") {
    SosProgram prog(2);
    AffinePoly target(2);
    target.add_term(exp2d(6, 0), LinearCoeff(1.0)); // x^6 needs degree-3 basis
    CHECK_THROWS_WITH_AS(
        prog.compile_sos(target, poly::MonomialBasis({exp2d(1, 0), exp2d(0, 1)})),
        doctest::Contains("cannot represent"), std::runtime_error);
}

TEST_CASE("s-procedure: certify 1 - x^2 on {1 - x^2 >= 0}") {
    // lambda = 1 leaves (1-x^2) - 1*(1-x^2) = 0, which is trivially SOS.
    poly::Polynomial g(1);
    {
        poly::Exponent e0(1), e2(1);
        e2[0] = 2;
        g.add_term(e0, 1.0);
        g.add_term(e2, -1.0);
    }
    AffinePoly b(1);
    b.add_poly(g);

    SosProgram prog(1);
    auto blk = compile_sprocedure(prog, b, {g});
    auto res = prog.solve();
    REQUIRE(res.status == conic::SolveStatus::Optimal);

    // soundness: certificate value >= -tol on the constraint set
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    poly::Polynomial cert_poly = blk.certificate_target.instantiate(res.raw.x);
    poly::Polynomial lam = blk.multiplier_polys[0].instantiate(res.raw.x);
    for (int k = 0; k < 1000; ++k) {
        const std::vector<double> x{u(rng)};
        CHECK(cert_poly.evaluate(x) >= -1e-6);
        CHECK(lam.evaluate(x) >= -1e-8);
    }
}

TEST_CASE("s-procedure: certify 2 - x^2 on {1 - x^2 >= 0}") {
    poly::Polynomial g(1);
    poly::Exponent e0(1), e2(1);
    e2[0] = 2;
    g.add_term(e0, 1.0);
    g.add_term(e2, -1.0);

    AffinePoly b(1);
    b.add_poly(g);
    b.add_poly(poly::Polynomial::constant(1, 1.0)); // 2 - x^2

    for (auto mode : {MultiplierMode::PerConstraint, MultiplierMode::SharedSum}) {
        SosProgram prog(1);
        SProcedureOptions opt;
        opt.mode = mode;
        auto blk = compile_sprocedure(prog, b, {g}, opt);
        auto res = prog.solve();
        REQUIRE(res.status == conic::SolveStatus::Optimal);

        std::mt19937 rng(5);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        poly::Polynomial cert_poly = blk.certificate_target.instantiate(res.raw.x);
        for (int k = 0; k < 500; ++k) {
            CHECK(cert_poly.evaluate(std::vector<double>{u(rng)}) >= -1e-6);
        }
    }
}

TEST_CASE("s-procedure: certify x on the half-line {x >= 0}") {
    poly::Polynomial g(1);
    poly::Exponent e1(1);
    e1[0] = 1;
    g.add_term(e1, 1.0);

    AffinePoly b(1);
    b.add_poly(g);

    SosProgram prog(1);
    SProcedureOptions opt;
    opt.multiplier_degree = 0;
    auto blk = compile_sprocedure(prog, b, {g}, opt);
    auto res = prog.solve();
    REQUIRE(res.status == conic::SolveStatus::Optimal);
    // lambda = 1 with zero residual is the unique certificate here.
    poly::Polynomial lam = blk.multiplier_polys[0].instantiate(res.raw.x);
    CHECK(lam.evaluate(std::vector<double>{0.0}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("random sum of squares recompiles with small residual") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 3; ++rep) {
        // p = q1^2 + q2^2 with random quadratics over 2 vars
        poly::Polynomial p(2);
        for (int s = 0; s < 2; ++s) {
            poly::Polynomial q(2);
            auto full = poly::basis_up_to_degree(2, 2);
            for (const auto& e : full.entries()) q.add_term(e, u(rng));
            p += q * q;
        }
        AffinePoly target(2);
        target.add_poly(p);
        SosProgram prog(2);
        auto h = prog.compile_sos(target, poly::basis_up_to_degree(2, 2));
        auto res = prog.solve();
        REQUIRE(res.status == conic::SolveStatus::Optimal);
        auto cert = extract_certificate(prog, res, h, target);
        CHECK(cert.reconstruction_residual < 1e-7);
        CHECK(cert.min_eigenvalue > -1e-8);
    }
}

TEST_CASE("maximization objective drives coefficients") {
    // maximize c subject to x^2 + 1 - c in SOS  =>  c* = 1.
    SosProgram prog(1);
    const int c = prog.add_coeff_vars(1);
    AffinePoly target(1);
    poly::Exponent e0(1), e2(1);
    e2[0] = 2;
    target.add_term(e2, LinearCoeff(1.0));
    target.add_term(e0, LinearCoeff(1.0).add(c, -1.0));
    prog.compile_sos(target, poly::basis_up_to_degree(1, 1));
    LinearCoeff obj;
    obj.add(c, 1.0);
    prog.set_maximize(obj);
    auto res = prog.solve();
    REQUIRE(res.status == conic::SolveStatus::Optimal);
    CHECK(res.objective == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(res.coeffs[c] == doctest::Approx(1.0).epsilon(1e-6));
}
