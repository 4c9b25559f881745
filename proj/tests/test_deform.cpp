#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "limset/chebyshev.hpp"
#include "limset/deform.hpp"
#include "limset/errors.hpp"

using namespace limset;

namespace {

Poly constant(double c) { return Poly({c}); }

DeformationFamily thirds_family() {
    // r(t) = 1/3 + t/10 with offsets keeping the right map anchored at 1.
    Poly r({1.0 / 3.0, 0.1});
    Poly o2({2.0 / 3.0, -0.1});
    return DeformationFamily::similarity({r, r}, {constant(0.0), o2},
                                         Interval(-0.5, 0.5));
}

} // namespace

TEST_CASE("similarity family matches the closed-form dimension") {
    DeformationFamily fam = thirds_family();
    DimensionCurve curve = dimension_curve(fam, 16);
    REQUIRE(curve.grid.size() == 16);
    REQUIRE(curve.values.size() == 16);
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        double r = 1.0 / 3.0 + 0.1 * curve.grid[i];
        double expect = std::log(2.0) / std::log(1.0 / r);
        CHECK(std::abs(curve.values[i] - expect) <= 1e-7);
        CHECK(curve.errors[i] >= 0.0);
    }
    // The grid is the first-kind Chebyshev grid, ascending.
    std::vector<double> nodes = cheb_nodes(16, -0.5, 0.5);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        CHECK(curve.grid[i] == doctest::Approx(nodes[i]).epsilon(1e-15));
    for (std::size_t i = 1; i < curve.grid.size(); ++i)
        CHECK(curve.grid[i] > curve.grid[i - 1]);

    AnalyticityReport rep = analyticity_diagnostic(curve);
    CHECK(rep.verdict == "consistent-with-analytic");
    CHECK(rep.rho_fit > 0.0);
    CHECK(rep.rho_fit <= 0.8);
    CHECK(rep.error_floor <= 1e-9);
    CHECK(rep.tail_below_floor);
    CHECK(rep.coefficients.size() == curve.values.size());
}

TEST_CASE("a kink in the curve defeats the coefficient-decay test") {
    // Hand-built curve with values 0.5 + 0.2|t|: the Chebyshev coefficients
    // of |t| decay like 1/k^2, nowhere near geometric.
    DimensionCurve curve;
    curve.trange = Interval(-1.0, 1.0);
    curve.grid = cheb_nodes(24, -1.0, 1.0);
    for (double t : curve.grid) {
        curve.values.push_back(0.5 + 0.2 * std::abs(t));
        curve.errors.push_back(1e-12);
    }
    AnalyticityReport rep = analyticity_diagnostic(curve);
    CHECK(rep.verdict == "inconclusive");
    CHECK_FALSE(rep.tail_below_floor);
    // Even coefficients of |t| are large; odd ones vanish.
    CHECK(std::abs(rep.coefficients[22]) > 1e-4);
    CHECK(std::abs(rep.coefficients[21]) < 1e-10);
}

TEST_CASE("noisy curves are rejected rather than diagnosed") {
    DimensionCurve curve;
    curve.trange = Interval(-1.0, 1.0);
    curve.grid = cheb_nodes(16, -1.0, 1.0);
    for (double t : curve.grid) {
        curve.values.push_back(0.7 + 0.05 * t);
        curve.errors.push_back(1e-4);
    }
    CHECK_THROWS_AS(analyticity_diagnostic(curve), ErrorFloorTooHigh);
}

TEST_CASE("evaluation respects the parameter range and validity") {
    DeformationFamily fam = thirds_family();
    CHECK_THROWS_AS(fam.eval(0.51), ValidityViolated);
    CHECK_THROWS_AS(fam.eval(-0.51), ValidityViolated);
    IfsSystem s = fam.eval(0.0);
    CHECK(s.psi_n(1.0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

    // Interior invalidity: the second map escapes [0,1] once t > 1/3.
    DeformationFamily bad = DeformationFamily::similarity(
        {constant(1.0 / 3.0), constant(1.0 / 3.0)},
        {constant(0.0), Poly({2.0 / 3.0, 1.0})}, Interval(0.0, 1.0));
    CHECK_THROWS_AS(bad.eval(0.4), ValidityViolated);
    // ... and the curve reports the offending node.
    CHECK_THROWS_AS(dimension_curve(bad, 8), ValidityViolated);
}

TEST_CASE("reflection circle families are monotone in the radius") {
    DeformationFamily fam = DeformationFamily::reflection_circles(
        {-2.5, 0.0, 2.5}, {Poly({0.7, 0.2}), Poly({0.7, 0.2}), Poly({0.7, 0.2})},
        Interval(-0.5, 0.5));
    DimensionCurve curve = dimension_curve(fam, 8);
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        CHECK(curve.values[i] > 0.0);
        CHECK(curve.values[i] < 1.0);
        if (i > 0) CHECK(curve.values[i] > curve.values[i - 1]);
    }
}

TEST_CASE("schottky pair families") {
    DeformationFamily fam = DeformationFamily::schottky_pair(
        -1.0, 1.0, Poly({0.1, 0.05}), Interval(-0.5, 0.5));
    IfsSystem s = fam.eval(0.3);
    CHECK(s.cells().size() == 2);
    // Larger circles spread the limit set: dimension grows with t ... but a
    // one-generator pair always carries the two-point limit set, dimension 0.
    DimensionCurve curve = dimension_curve(fam, 4);
    for (double v : curve.values) CHECK(std::abs(v) <= 1e-9);
}

TEST_CASE("tail exponent families move the dimension down as decay speeds up") {
    TailLaw base;
    base.dyadic = true;
    base.k_exponent = 2.0;
    base.alpha = 2.0;
    base.beta = 3.0;
    base.first_index = 0;
    DeformationFamily fam = DeformationFamily::tail_exponent(
        base, Poly({2.0, 1.0}), Poly({3.0, 1.0}), Interval(-0.25, 0.25));
    DimensionCurve curve = dimension_curve(fam, 6);
    for (std::size_t i = 1; i < curve.values.size(); ++i)
        CHECK(curve.values[i] < curve.values[i - 1]);
    for (double v : curve.values) {
        CHECK(v > 0.5);  // theta = 1/2 bounds the dimension from below
        CHECK(v < 1.2);
    }
}

TEST_CASE("degree cap and range validation") {
    std::vector<double> big(10, 0.1);  // degree 9
    CHECK_THROWS_AS(DeformationFamily::similarity({Poly(big), constant(0.3)},
                                                  {constant(0.0), constant(0.7)},
                                                  Interval(0.0, 1.0)),
                    InvalidSystem);
    CHECK_THROWS_AS(DeformationFamily::similarity({constant(0.3)}, {constant(0.0)},
                                                  Interval(1.0, 0.0)),
                    InvalidSystem);
    CHECK_THROWS_AS(dimension_curve(thirds_family(), 1), InsufficientData);
}

TEST_CASE("threading does not change the values") {
    DeformationFamily fam = thirds_family();
    DimensionCurve one = dimension_curve(fam, 12, BowenOptions(), 1);
    DimensionCurve three = dimension_curve(fam, 12, BowenOptions(), 3);
    REQUIRE(one.values.size() == three.values.size());
    for (std::size_t i = 0; i < one.values.size(); ++i) {
        CHECK(one.values[i] == three.values[i]);
        CHECK(one.errors[i] == three.errors[i]);
        CHECK(one.grid[i] == three.grid[i]);
    }
}
