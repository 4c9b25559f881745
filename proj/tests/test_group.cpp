#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "limset/errors.hpp"
#include "limset/group.hpp"
#include "limset/pressure.hpp"

using namespace limset;

namespace {

double word_metric_norm(const MoebiusMap& m) {
    // Hyperbolic translation length of a disk isometry: 2 acosh(|tr|/2).
    Complex tr = m.a + m.d;
    double t = std::abs(tr) / 2.0;
    if (t <= 1.0) return 0.0;
    return 2.0 * std::acosh(t);
}

const OrbitBall::Entry* find_entry(const OrbitBall& ball, const std::string& label) {
    for (const auto& e : ball.entries)
        if (e.label == label) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("cayley checkpoints") {
    GroupPresentation g = GroupPresentation::dyadic_chain_group(3);
    const MoebiusMap& eta = g.cayley();
    CHECK(std::abs(eta.apply(Complex(1.0, 0.0)) - Complex(1.0, 0.0)) == 0.0);
    CHECK(std::abs(eta.apply(Complex(0.0, 0.0)) - Complex(0.0, -1.0)) == 0.0);
    CHECK(std::abs(eta.apply(Complex(0.0, 1.0)) - Complex(0.0, 0.0)) == 0.0);
    // Far field: eta(iy) -> i as y grows.
    CHECK(std::abs(eta.apply(Complex(0.0, 1e9)) - Complex(0.0, 1.0)) <= 1e-8);
}

TEST_CASE("cyclic group orbit is an exact geodesic ladder") {
    const double mu = 4.0;
    GroupPresentation g = GroupPresentation::cyclic_group(mu);
    OrbitBall ball = enumerate_orbit(g, 20);
    // Identity plus g^k and g^-k for k = 1..20.
    CHECK(ball.entries.size() == 41);
    CHECK(ball.entries[0].label.empty());
    CHECK(ball.entries[0].rho == 0.0);
    std::map<int, int> by_len;
    for (const auto& e : ball.entries) {
        by_len[e.length]++;
        // rho(g^k) = k log mu: the orbit runs along the axis of z -> mu z.
        if (e.length > 0)
            CHECK(std::abs(e.rho - e.length * std::log(mu)) <= 1e-9 * e.rho);
    }
    for (int k = 1; k <= 20; ++k) CHECK(by_len[k] == 2);

    DimensionResult delta = critical_exponent_estimate(ball);
    CHECK(std::abs(delta.value) < 0.05);
}

TEST_CASE("reflection triple enumerates reduced words exactly") {
    GroupPresentation g = GroupPresentation::reflection_group(
        {Circle{Complex(-2.5, 0.0), 0.8}, Circle{Complex(0.0, 0.0), 0.8},
         Circle{Complex(2.5, 0.0), 0.8}});
    REQUIRE(g.generators().size() == 3);
    for (const Generator& gen : g.generators()) {
        CHECK(gen.line_map.anti);
        CHECK(gen.inverse == &gen - g.generators().data());  // involutions
    }
    OrbitBall ball = enumerate_orbit(g, 5);
    // Reduced words over an involution alphabet: 3 * 2^(L-1) per length.
    CHECK(ball.entries.size() == 1 + 3 * (1 + 2 + 4 + 8 + 16));
    for (const auto& e : ball.entries) {
        for (std::size_t i = 1; i < e.word.size(); ++i)
            CHECK(e.word[i] != e.word[i - 1]);
        CHECK(e.rho >= 0.0);
        CHECK(e.one_minus_abs > 0.0);
        CHECK(e.one_minus_abs <= 1.0);
    }
    // Breadth-first: lengths never decrease.
    for (std::size_t i = 1; i < ball.entries.size(); ++i)
        CHECK(ball.entries[i].length >= ball.entries[i - 1].length);
}

TEST_CASE("orbit entries satisfy the hyperboloid identity") {
    GroupPresentation g = GroupPresentation::reflection_group(
        {Circle{Complex(-2.5, 0.0), 0.8}, Circle{Complex(0.0, 0.0), 0.8},
         Circle{Complex(2.5, 0.0), 0.8}});
    OrbitBall ball = enumerate_orbit(g, 8);
    for (const auto& e : ball.entries) {
        if (e.word.empty()) continue;
        // rho and u = 1 - |g0| describe the same point: e^rho = (2 - u)/u,
        // both sides stable in this direction.
        double u = e.one_minus_abs;
        double rho_expect = std::log1p(1.0 - u) - std::log(u);
        CHECK(e.rho == doctest::Approx(rho_expect).epsilon(1e-12));
        // The stored point agrees with 1 - |z| up to rounding at this depth.
        double direct = 1.0 - std::abs(e.point);
        CHECK(std::abs(direct - u) <= 1e-12 + 1e-4 * u);
    }
}

TEST_CASE("translation lengths of schottky generators") {
    GroupPresentation g = GroupPresentation::schottky_group(
        {{Circle{Complex(-1.0, 0.0), 0.1}, Circle{Complex(1.0, 0.0), 0.1}}});
    REQUIRE(g.generators().size() == 2);
    const Generator& gen = g.generators()[0];
    CHECK(classify(gen.line_map) == MapClass::hyperbolic);
    double ell = word_metric_norm(project_disk_isometry(gen.disk_map));

    OrbitBall ball = enumerate_orbit(g, 14);
    // rho(g^n) = n * ell exactly on the axis; the orbit of 0 satisfies
    // rho(g^n 0) - rho(g^(n-1) 0) -> ell.  With 14 powers the last gap
    // matches ell to geometric accuracy.
    std::vector<double> rho_by_len(15, 0.0);
    for (const auto& e : ball.entries) {
        bool positive = true;
        for (int idx : e.word) positive = positive && idx == 0;
        if (positive && e.length > 0) rho_by_len[e.length] = e.rho;
    }
    for (int n = 12; n <= 14; ++n) {
        double gap = rho_by_len[n] - rho_by_len[n - 1];
        CHECK(std::abs(gap - ell) <= 1e-9);
    }
}

TEST_CASE("orbit growth rate approximates the bowen dimension") {
    GroupPresentation g = GroupPresentation::schottky_group(
        {{Circle{Complex(-1.0, 0.0), 0.1}, Circle{Complex(1.0, 0.0), 0.1}}});
    OrbitBall ball = enumerate_orbit(g, 14);
    DimensionResult delta = critical_exponent_estimate(ball);
    DimensionResult dim = bowen_dimension(ifs_from_schottky(g));
    CHECK(std::abs(delta.value - dim.value) <= 0.05);
}

TEST_CASE("poincare series probes") {
    GroupPresentation cyc = GroupPresentation::cyclic_group(4.0);
    ConvergenceProbe p1 = convergence_type_probe(cyc, 10, 1.0);
    CHECK(p1.verdict == "appears-convergent");
    CHECK(p1.shell_sums.size() == 10);
    CHECK(p1.partial_sums.size() == 10);
    // Partial sums are cumulative and include the identity term 1.
    CHECK(p1.partial_sums[0] == doctest::Approx(1.0 + p1.shell_sums[0]).epsilon(1e-13));
    for (std::size_t i = 1; i < 10; ++i) {
        CHECK(p1.partial_sums[i] ==
              doctest::Approx(p1.partial_sums[i - 1] + p1.shell_sums[i]).epsilon(1e-13));
    }

    GroupPresentation pair = GroupPresentation::schottky_group(
        {{Circle{Complex(-1.0, 0.0), 0.1}, Circle{Complex(1.0, 0.0), 0.1}}});
    ConvergenceProbe p2 = convergence_type_probe(pair, 12, 1.0);
    CHECK(p2.verdict == "appears-convergent");

    // Tangent triple at exponent 0.5: shells decay too slowly to read as
    // convergent.
    GroupPresentation tri = GroupPresentation::reflection_group(
        {Circle{Complex(-2.0, 0.0), 1.0}, Circle{Complex(0.0, 0.0), 1.0},
         Circle{Complex(2.0, 0.0), 1.0}});
    ConvergenceProbe p3 = convergence_type_probe(tri, 10, 0.5);
    CHECK(p3.verdict == "appears-divergent");

    double direct = poincare_partial_sum(enumerate_orbit(cyc, 10), 1.0);
    CHECK(direct == doctest::Approx(p1.partial_sums.back()).epsilon(1e-13));
}

TEST_CASE("induced ifs of a separated reflection triple") {
    GroupPresentation g = GroupPresentation::reflection_group(
        {Circle{Complex(-2.5, 0.0), 0.8}, Circle{Complex(0.0, 0.0), 0.8},
         Circle{Complex(2.5, 0.0), 0.8}});
    IfsSystem s = ifs_from_schottky(g);
    CHECK(s.cells().size() == 3);
    CHECK(s.branches().size() == 3);
    // A reflection acts everywhere except its own circle.
    CHECK_FALSE(s.admissible_step(0, 0));
    CHECK(s.admissible_step(0, 1));
    CHECK(s.contraction_bound() < 1.0);
    DimensionResult d = bowen_dimension(s);
    CHECK(d.value > 0.0);
    CHECK(d.value < 1.0);
}

TEST_CASE("tangent circles are rejected as an interval ifs") {
    GroupPresentation g = GroupPresentation::reflection_group(
        {Circle{Complex(-2.0, 0.0), 1.0}, Circle{Complex(0.0, 0.0), 1.0},
         Circle{Complex(2.0, 0.0), 1.0}});
    // The group itself is fine; the induced system has parabolic tangencies.
    CHECK(g.generators().size() == 3);
    CHECK_THROWS_AS(ifs_from_schottky(g), InvalidSystem);
}

TEST_CASE("invalid presentations") {
    CHECK_THROWS_AS(GroupPresentation::reflection_group(
                        {Circle{Complex(0.0, 0.0), 1.0}, Circle{Complex(1.0, 0.0), 1.0}}),
                    SeparationViolated);
    CHECK_THROWS_AS(GroupPresentation::schottky_group(
                        {{Circle{Complex(-0.5, 0.0), 1.0}, Circle{Complex(0.5, 0.0), 1.0}}}),
                    SeparationViolated);
    CHECK_THROWS_AS(GroupPresentation::cyclic_group(1.0), InvalidSystem);
    CHECK_THROWS_AS(GroupPresentation::cyclic_group(-2.0), InvalidSystem);
    CHECK_THROWS_AS(GroupPresentation::reflection_group({}), InvalidSystem);
    CHECK_THROWS_AS(GroupPresentation::dyadic_chain_group(0), DepthOutOfRange);
    CHECK_THROWS_AS(GroupPresentation::dyadic_chain_group(25), DepthOutOfRange);
}

TEST_CASE("cyclic groups have no induced interval ifs") {
    GroupPresentation g = GroupPresentation::cyclic_group(3.0);
    CHECK_THROWS_AS(ifs_from_schottky(g), UnsupportedSystem);
}

TEST_CASE("orbit edge cases") {
    GroupPresentation g = GroupPresentation::cyclic_group(2.0);
    OrbitBall tiny = enumerate_orbit(g, 0);
    CHECK(tiny.entries.size() == 1);
    CHECK(poincare_partial_sum(tiny, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(critical_exponent_estimate(tiny), InsufficientData);
    CHECK_THROWS_AS(enumerate_orbit(g, -1), DepthOutOfRange);
    // Words of length ~1500 leave the double range for this multiplier.
    CHECK_THROWS_AS(enumerate_orbit(g, 1500), DepthOutOfRange);
}

TEST_CASE("dyadic chain geometry at depth eight") {
    const int depth = 8;
    GroupPresentation g = GroupPresentation::dyadic_chain_group(depth);
    REQUIRE(g.generators().size() == static_cast<std::size_t>(2 * depth));
    REQUIRE(g.circles().size() == static_cast<std::size_t>(2 * depth));

    // Circle n covers [2^{n-1}, 2^n] (n >= 2), circle 1 covers [0, 2];
    // mirrors sit at the reflected centers.
    for (int n = 1; n <= depth; ++n) {
        const Circle& c = g.circles()[n - 1];
        double lo = (n == 1) ? 0.0 : std::ldexp(1.0, n - 1);
        double hi = std::ldexp(1.0, n);
        CHECK(c.center.real() - c.radius == doctest::Approx(lo).epsilon(1e-13));
        CHECK(c.center.real() + c.radius == doctest::Approx(hi).epsilon(1e-13));
        const Circle& m = g.circles()[depth + n - 1];
        CHECK(m.center.real() == doctest::Approx(-c.center.real()).epsilon(1e-13));
        CHECK(m.radius == doctest::Approx(c.radius).epsilon(1e-13));
    }

    // First generator parabolic (tangency at the origin), rest hyperbolic.
    for (int n = 0; n < 2 * depth; ++n) {
        MapClass cls = classify(g.generators()[n].line_map);
        if (n % depth == 0) CHECK(cls == MapClass::parabolic);
        else CHECK(cls == MapClass::hyperbolic);
        CHECK_FALSE(g.generators()[n].line_map.anti);
    }

    // Cayley images of the defining circles: pairwise disjoint interiors,
    // tangencies exactly where the line circles touch (1 at the origin,
    // depth-1 on each side): 2 depth - 1 pairs in all.
    const MoebiusMap& eta = g.cayley();
    std::vector<Circle> disks;
    for (const Circle& c : g.circles()) disks.push_back(map_circle(eta, c));
    int tangent = 0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            double gap = std::abs(disks[i].center - disks[j].center) -
                         (disks[i].radius + disks[j].radius);
            CHECK(gap >= -1e-9);
            if (std::abs(gap) <= 1e-7) ++tangent;
        }
    }
    CHECK(tangent == 2 * depth - 1);

    // Disk diameters scale like 2^{-n} and the disks march toward i.
    for (int n = 1; n <= depth; ++n) {
        const Circle& d = disks[n - 1];
        double scaled = 2.0 * d.radius * std::ldexp(1.0, n);
        CHECK(scaled >= 1.0);
        CHECK(scaled <= 8.0 + 1e-12);
        double dist = std::abs(d.center - Complex(0.0, 1.0)) - d.radius;
        CHECK(dist > 0.0);
        if (n >= 3) {
            const Circle& prev = disks[n - 2];
            double dist_prev = std::abs(prev.center - Complex(0.0, 1.0)) - prev.radius;
            CHECK(dist <= 0.7 * dist_prev);
        }
    }
}

TEST_CASE("su(1,1) form of long disk words") {
    GroupPresentation g = GroupPresentation::reflection_group(
        {Circle{Complex(-2.5, 0.0), 0.8}, Circle{Complex(0.0, 0.0), 0.8},
         Circle{Complex(2.5, 0.0), 0.8}});
    OrbitBall ball = enumerate_orbit(g, 8);
    const Generator* gens = g.generators().data();
    for (std::size_t k = 0; k < ball.entries.size(); k += 37) {
        const auto& e = ball.entries[k];
        if (e.word.empty()) continue;
        MoebiusMap m = gens[e.word[0]].disk_map;
        for (std::size_t i = 1; i < e.word.size(); ++i)
            m = compose(m, gens[e.word[i]].disk_map);
        double dd = std::norm(m.d), bb = std::norm(m.b);
        CHECK(std::abs(dd - bb - 1.0) <= 1e-10 * (1.0 + dd));
        CHECK(std::abs(m.apply(Complex(0.0, 0.0)) - e.point) <= 1e-12);
    }
}

TEST_CASE("orbit words and labels") {
    GroupPresentation g = GroupPresentation::dyadic_chain_group(2);
    OrbitBall ball = enumerate_orbit(g, 2);
    const auto* e = find_entry(ball, "g1");
    REQUIRE(e != nullptr);
    CHECK(e->length == 1);
    const auto* e2 = find_entry(ball, "g1.g2");
    REQUIRE(e2 != nullptr);
    CHECK(e2->length == 2);
    // G1 is the inverse of g1: their composition is not a reduced word.
    CHECK(find_entry(ball, "g1.G1") == nullptr);
    const auto* inv = find_entry(ball, "G1");
    REQUIRE(inv != nullptr);
    CHECK(std::abs(inv->rho - e->rho) <= 1e-12);
}
