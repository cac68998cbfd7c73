#include "qcadp/poly/gaussian.hpp"
#include "qcadp/poly/io.hpp"
#include "qcadp/poly/monomial_basis.hpp"
#include "qcadp/poly/newton_polytope.hpp"
#include "qcadp/poly/polynomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

using namespace qcadp::poly;

namespace {

Polynomial random_poly(std::size_t arity, int degree, std::mt19937& rng, int n_terms = 12) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(arity) - 1);
    std::uniform_int_distribution<int> deg(0, degree);
    Polynomial p(arity);
    for (int t = 0; t < n_terms; ++t) {
        Exponent e(arity);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
        p.add_term(e, coeff(rng));
    }
    return p;
}

std::vector<double> random_point(std::size_t arity, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> x(arity);
    for (auto& v : x) v = u(rng);
    return x;
}

// Term-by-term evaluation with std::pow, independent of Polynomial::evaluate.
double naive_eval(const Polynomial& p, const std::vector<double>& x) {
    double total = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double m = c;
        for (std::size_t i = 0; i < p.arity(); ++i) m *= std::pow(x[i], e[i]);
        total += m;
    }
    return total;
}

} // namespace

TEST_CASE("multiply: difference of squares and identities") {
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);
    auto prod = (x + y) * (x - y);
    auto expected = x * x - y * y;
    CHECK(prod.same_terms(expected, 1e-15));

    auto p = (Polynomial::constant(2, 1.0) + x * 2.0);
    CHECK((p * Polynomial::constant(2, 1.0)).same_terms(p, 0.0));

    // (1 + 2x) * 3x^2 = 3x^2 + 6x^3
    auto q = p * (x * x * 3.0);
    Polynomial want(2);
    Exponent e2(2), e3(2);
    e2[0] = 2;
    e3[0] = 3;
    want.add_term(e2, 3.0);
    want.add_term(e3, 6.0);
    CHECK(q.same_terms(want, 1e-15));
}

TEST_CASE("multiply: arity mismatch throws") {
    CHECK_THROWS(Polynomial::variable(2, 0) * Polynomial::variable(3, 0));
}

TEST_CASE("compose: binomial, degree growth, identity") {
    // p(y) = y^2 composed with y := x + 1
    Polynomial p(1);
    Exponent e(1);
    e[0] = 2;
    p.add_term(e, 1.0);
    auto sub = Polynomial::variable(1, 0) + Polynomial::constant(1, 1.0);
    std::vector<Polynomial> subs{sub};
    auto comp = p.compose(subs);
    auto x = Polynomial::variable(1, 0);
    auto want = x * x + 2.0 * x + Polynomial::constant(1, 1.0);
    CHECK(comp.same_terms(want, 1e-15));

    // quadratic composed with cubic substitutions has degree 6
    std::mt19937 rng(7);
    Polynomial quad = random_poly(2, 2, rng);
    std::vector<Polynomial> cubics{random_poly(3, 3, rng), random_poly(3, 3, rng)};
    CHECK(quad.compose(cubics).degree() <= 6);

    // identity substitution returns the same polynomial exactly
    Polynomial r = random_poly(3, 3, rng);
    std::vector<Polynomial> id;
    for (int i = 0; i < 3; ++i) id.push_back(Polynomial::variable(3, i));
    CHECK(r.compose(id).same_terms(r, 0.0));

    // p(y) = y composed with q gives q
    Polynomial lin(1);
    Exponent e1(1);
    e1[0] = 1;
    lin.add_term(e1, 1.0);
    std::vector<Polynomial> q{random_poly(2, 3, rng)};
    CHECK(lin.compose(q).same_terms(q[0], 0.0));
}

TEST_CASE("evaluate: examples and naive oracle") {
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);
    auto p = x * x + y;
    std::vector<double> pt{2.0, 1.0};
    CHECK(p.evaluate(pt) == doctest::Approx(5.0));

    CHECK(Polynomial(2).evaluate(pt) == 0.0);

    std::mt19937 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial r = random_poly(3, 3, rng);
        for (int k = 0; k < 10; ++k) {
            auto z = random_point(3, rng);
            CHECK(std::abs(r.evaluate(z) - naive_eval(r, z)) < 1e-10);
        }
    }
}

TEST_CASE("ring property: distributivity at random points") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 5; ++rep) {
        auto p = random_poly(3, 2, rng);
        auto q = random_poly(3, 2, rng);
        auto r = random_poly(3, 2, rng);
        auto lhs = (p + q) * r;
        auto rhs = p * r + q * r;
        for (int k = 0; k < 20; ++k) {
            auto z = random_point(3, rng);
            CHECK(std::abs(lhs.evaluate(z) - rhs.evaluate(z)) < 1e-10);
        }
    }
}

TEST_CASE("gaussian expectation: moments") {
    GaussianMeasure mu({0.5, 2.0});
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);

    CHECK(gaussian_expectation(x * x, mu) == doctest::Approx(0.5));
    CHECK(gaussian_expectation(x * x * x * y, mu) == doctest::Approx(0.0));
    CHECK(gaussian_expectation(x * x * x * x, mu) == doctest::Approx(3.0 * 0.5 * 0.5));
}

TEST_CASE("gaussian expectation: Monte Carlo agreement") {
    std::mt19937 rng(17);
    GaussianMeasure mu({0.7, 1.3, 0.4});
    std::normal_distribution<double> g0(0.0, std::sqrt(0.7));
    std::normal_distribution<double> g1(0.0, std::sqrt(1.3));
    std::normal_distribution<double> g2(0.0, std::sqrt(0.4));

    for (int rep = 0; rep < 3; ++rep) {
        Polynomial p = random_poly(3, 6, rng, 10);
        const double exact = gaussian_expectation(p, mu);
        const int n = 2'000'000;
        double sum = 0.0, sumsq = 0.0;
        for (int k = 0; k < n; ++k) {
            std::vector<double> z{g0(rng), g1(rng), g2(rng)};
            const double v = p.evaluate(z);
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / n;
        const double se = std::sqrt((sumsq / n - mean * mean) / n);
        CHECK(std::abs(mean - exact) < 3.0 * se + 1e-9);
    }
}

TEST_CASE("basis sizes match the binomial formula") {
    CHECK(basis_up_to_degree(2, 1).size() == 3);
    CHECK(basis_up_to_degree(10, 3).size() == 286);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int d = 0; d <= 3; ++d) {
            CHECK(basis_up_to_degree(n, d).size() == binomial(n + d, d));
        }
    }
}

TEST_CASE("basis ordering is graded-lex") {
    auto b = basis_up_to_degree(2, 2);
    REQUIRE(b.size() == 6);
    // 1, x, y, x^2, xy, y^2
    CHECK(b[0].degree() == 0);
    CHECK((b[1][0] == 1 && b[1][1] == 0));
    CHECK((b[2][0] == 0 && b[2][1] == 1));
    CHECK((b[3][0] == 2 && b[3][1] == 0));
    CHECK((b[4][0] == 1 && b[4][1] == 1));
    CHECK((b[5][0] == 0 && b[5][1] == 2));
}

namespace {

// Half-Newton-polytope oracle for two variables: brute-force convex hull
// membership by enumerating all hull edge inequalities.
bool in_hull_2d(const std::vector<std::array<double, 2>>& pts, double qx, double qy) {
    // A point is in the hull iff for every pair defining an edge of the hull,
    // the point is on the inner side. With few points, test all lines through
    // pairs: the point is inside iff for each pair-line where all points lie
    // on one side, the query lies on that side too.
    const double tol = 1e-9;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const double ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1];
            bool all_left = true;
            for (const auto& p : pts) {
                const double cross = ax * (p[1] - pts[i][1]) - ay * (p[0] - pts[i][0]);
                if (cross < -tol) {
                    all_left = false;
                    break;
                }
            }
            if (all_left) {
                const double cq = ax * (qy - pts[i][1]) - ay * (qx - pts[i][0]);
                if (cq < -tol) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("newton polytope pruning: x^4 + y^2 keeps {1, x, y, x^2}") {
    Polynomial p(2);
    Exponent x4(2), y2(2);
    x4[0] = 4;
    y2[1] = 2;
    p.add_term(x4, 1.0);
    p.add_term(y2, 1.0);
    auto b = basis_up_to_degree(2, 2, p);
    REQUIRE(b.size() == 4);
    CHECK(b[0].degree() == 0);
    CHECK((b[1][0] == 1 && b[1][1] == 0));
    CHECK((b[2][0] == 0 && b[2][1] == 1));
    CHECK((b[3][0] == 2 && b[3][1] == 0));

    // Cross-check every candidate against the 2-D hull oracle (the pruning
    // hull always includes the origin).
    std::vector<std::array<double, 2>> support{{4, 0}, {0, 2}, {0, 0}};
    const auto full = basis_up_to_degree(2, 2);
    for (const auto& e : full.entries()) {
        const bool kept = std::find_if(b.entries().begin(), b.entries().end(),
                                       [&](const Exponent& k) { return k == e; }) !=
                          b.entries().end();
        CHECK(kept == in_hull_2d(support, 2.0 * e[0], 2.0 * e[1]));
    }
}

TEST_CASE("convex hull membership on simple sets") {
    std::vector<std::vector<double>> tri{{0, 0}, {2, 0}, {0, 2}};
    CHECK(in_convex_hull(tri, {0.5, 0.5}));
    CHECK(in_convex_hull(tri, {1.0, 1.0}));  // on the edge
    CHECK(!in_convex_hull(tri, {1.2, 1.2})); // outside
    CHECK(!in_convex_hull(tri, {-0.1, 0.0}));
}

TEST_CASE("text serialization round-trips bit-exactly") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 5; ++rep) {
        Polynomial p = random_poly(4, 3, rng);
        std::stringstream ss;
        write_polynomial(ss, p);
        Polynomial q = read_polynomial(ss, 4, p.term_count());
        REQUIRE(q.term_count() == p.term_count());
        for (const auto& [e, c] : p.terms()) {
            CHECK(q.coeff(e) == c); // exact, not approximate
        }
    }
}

TEST_CASE("derivative matches finite differences") {
    std::mt19937 rng(29);
    Polynomial p = random_poly(3, 4, rng);
    auto d0 = p.derivative(0);
    for (int k = 0; k < 10; ++k) {
        auto z = random_point(3, rng);
        const double h = 1e-6;
        auto zp = z, zm = z;
        zp[0] += h;
        zm[0] -= h;
        const double fd = (p.evaluate(zp) - p.evaluate(zm)) / (2 * h);
        CHECK(d0.evaluate(z) == doctest::Approx(fd).epsilon(1e-6));
    }
}
