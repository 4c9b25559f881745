#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "limset/errors.hpp"
#include "limset/moebius.hpp"

using namespace limset;

namespace {

// Deterministic LCG so failures reproduce bit-for-bit everywhere.
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    double uniform(double a, double b) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return a + (b - a) * static_cast<double>(s >> 11) * 0x1.0p-53;
    }
    Complex point(double scale) { return Complex(uniform(-scale, scale), uniform(-scale, scale)); }
};

MoebiusMap random_map(Rng& rng, bool anti = false) {
    for (;;) {
        Complex a = rng.point(2.0), b = rng.point(2.0), c = rng.point(2.0), d = rng.point(2.0);
        if (std::abs(a * d - b * c) > 0.1) return MoebiusMap(a, b, c, d, anti);
    }
}

// Independent three-point interpolation oracle working on raw 2x2 arrays:
// the map sending (z1,z2,z3) -> (w1,w2,w3) is B^{-1} A, where A sends the
// z's to (0,1,inf) via the cross ratio and B does the same for the w's.
struct RawMat {
    Complex a, b, c, d;
};

RawMat cross_ratio_mat(Complex z1, Complex z2, Complex z3) {
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

Complex raw_apply(const RawMat& m, Complex z) { return (m.a * z + m.b) / (m.c * z + m.d); }

// Specialized to source triple (inf, 1, 0), where A(z) = (z2-z3)/(z-z3)
// reduces to 1/z; the target triple (w1,w2,w3) is arbitrary.
Complex interpolate_oracle(Complex w1, Complex w2, Complex w3, Complex z) {
    Complex u = Complex(1.0) / z;  // A sends (inf,1,0) -> (0,1,inf)
    RawMat B = cross_ratio_mat(w1, w2, w3);
    RawMat Binv{B.d, -B.b, -B.c, B.a};
    return raw_apply(Binv, u);
}

} // namespace

TEST_CASE("three-point interpolation pins the cayley map") {
    const MoebiusMap eta = cayley_to_disk();
    const Complex I(0.0, 1.0);
    CHECK(std::abs(eta.apply(point_at_infinity()) - I) <= 1e-14);
    CHECK(std::abs(eta.apply(Complex(1.0, 0.0)) - Complex(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(eta.apply(Complex(0.0, 0.0)) + I) <= 1e-14);
    CHECK(std::abs(eta.apply(I)) <= 1e-14);
    // Any other point is then forced: compare with the cross-ratio oracle
    // through (inf, 1, 0) -> (i, 1, -i).
    const Complex probes[] = {Complex(2.0, 0.0), Complex(0.0, 5.0), Complex(-3.0, 0.7),
                              Complex(0.25, 1e3)};
    for (Complex z : probes) {
        Complex expect = interpolate_oracle(I, Complex(1.0, 0.0), -I, z);
        Complex got = eta.apply(z);
        CHECK(std::abs(got - expect) <= 1e-11 * (1.0 + std::abs(expect)));
    }
    // Real axis lands on the unit circle, upper half plane inside.
    for (double x : {-7.0, -0.3, 0.0, 0.9, 42.0})
        CHECK(std::abs(std::abs(eta.apply(Complex(x, 0.0))) - 1.0) <= 1e-13);
    CHECK(std::abs(eta.apply(Complex(0.4, 2.0))) < 1.0);
}

TEST_CASE("apply matches the closed form away from poles") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        MoebiusMap f = random_map(rng);
        Complex z = rng.point(5.0);
        Complex den = f.c * z + f.d;
        if (std::abs(den) < 0.05) continue;
        Complex expect = (f.a * z + f.b) / den;
        CHECK(std::abs(f.apply(z) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("composition acts as function composition") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        MoebiusMap f = random_map(rng, rng.uniform(0, 1) < 0.5);
        MoebiusMap g = random_map(rng, rng.uniform(0, 1) < 0.5);
        MoebiusMap fg = compose(f, g);
        CHECK(fg.anti == (f.anti != g.anti));
        Complex z = rng.point(3.0);
        Complex via = f.apply(g.apply(z));
        if (is_infinity(via) || std::abs(via) > 1e6) continue;
        CHECK(std::abs(fg.apply(z) - via) <= 1e-10 * (1.0 + std::abs(via)));
    }
}

TEST_CASE("composition is associative") {
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        MoebiusMap f = random_map(rng), g = random_map(rng, i % 2 == 0), h = random_map(rng);
        MoebiusMap left = compose(compose(f, g), h);
        MoebiusMap right = compose(f, compose(g, h));
        for (int k = 0; k < 5; ++k) {
            Complex z = rng.point(2.0);
            Complex zl = left.apply(z), zr = right.apply(z);
            if (is_infinity(zl) || std::abs(zl) > 1e8) continue;
            CHECK(std::abs(zl - zr) <= 1e-10 * (1.0 + std::abs(zl)));
        }
    }
}

TEST_CASE("chain rule for derivative moduli") {
    Rng rng(44);
    for (int i = 0; i < 200; ++i) {
        MoebiusMap f = random_map(rng, i % 3 == 0);
        MoebiusMap g = random_map(rng);
        Complex z = rng.point(3.0);
        Complex gz = g.apply(z);
        if (is_infinity(gz) || std::abs(gz) > 1e3) continue;
        if (std::abs(g.c * z + g.d) < 0.05) continue;
        if (std::abs(f.c * gz + f.d) < 0.05) continue;
        if (f.anti && std::abs(std::conj(f.c) * gz + std::conj(f.d)) < 0.05) continue;
        double expect = f.derivative_modulus(gz) * g.derivative_modulus(z);
        double got = compose(f, g).derivative_modulus(z);
        CHECK(got == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("inverse composes to the identity") {
    Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        MoebiusMap f = random_map(rng, i % 2 == 1);
        MoebiusMap fi = f.inverse();
        MoebiusMap id1 = compose(f, fi), id2 = compose(fi, f);
        for (Complex z : {Complex(0.3, 0.1), Complex(-2.0, 0.0), Complex(0.0, 1.5)}) {
            CHECK(std::abs(id1.apply(z) - z) <= 1e-10 * (1.0 + std::abs(z)));
            CHECK(std::abs(id2.apply(z) - z) <= 1e-10 * (1.0 + std::abs(z)));
        }
    }
}

TEST_CASE("degenerate matrices are rejected") {
    CHECK_THROWS_AS(MoebiusMap(Complex(1.0), Complex(2.0), Complex(2.0), Complex(4.0)),
                    DegenerateMap);
    CHECK_THROWS_AS(MoebiusMap(Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)),
                    DegenerateMap);
}

TEST_CASE("extreme entry scales normalize safely") {
    MoebiusMap big(Complex(1e200), Complex(0.0), Complex(0.0), Complex(1e200));
    CHECK(std::abs(big.apply(Complex(3.0, 0.0)) - Complex(3.0, 0.0)) <= 1e-12);
    MoebiusMap tiny(Complex(1e-180), Complex(0.0), Complex(0.0), Complex(1e-180));
    CHECK(std::abs(tiny.apply(Complex(-0.5, 2.0)) - Complex(-0.5, 2.0)) <= 1e-12);
}

TEST_CASE("poles and infinity") {
    MoebiusMap inv(Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0));  // 1/z
    CHECK(is_infinity(inv.apply(Complex(0.0, 0.0))));
    CHECK(std::abs(inv.apply(point_at_infinity())) <= 1e-300);
    CHECK(inv.derivative_modulus(point_at_infinity()) == 0.0);
    CHECK_THROWS_AS(inv.derivative_modulus(Complex(0.0, 0.0)), PoleHit);

    MoebiusMap aff = MoebiusMap::affine(Complex(2.0), Complex(1.0));
    CHECK(is_infinity(aff.apply(point_at_infinity())));
    CHECK(aff.derivative_modulus(Complex(7.0, -3.0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("far points stay accurate through the chart swap") {
    Rng rng(66);
    for (int i = 0; i < 50; ++i) {
        MoebiusMap f = random_map(rng);
        if (std::abs(f.c) < 0.2) continue;
        Complex z(rng.uniform(1e13, 1e14), rng.uniform(1e13, 1e14));
        Complex limit = f.a / f.c;
        Complex got = f.apply(z);
        // f(z) - a/c = -det/(c (cz + d)) with det of modulus 1.
        double correction = 1.0 / (std::abs(f.c) * std::abs(f.c * z + f.d));
        CHECK(std::abs(got - limit) <= 2.0 * correction + 1e-12);
        CHECK(std::abs(got - limit) >= 0.0);
    }
}

TEST_CASE("classification by trace") {
    CHECK(classify(MoebiusMap::identity()) == MapClass::identity);
    CHECK(classify(MoebiusMap(Complex(1.0), Complex(1.0), Complex(0.0), Complex(1.0))) ==
          MapClass::parabolic);
    CHECK(classify(MoebiusMap(Complex(2.0), Complex(0.0), Complex(0.0), Complex(0.5))) ==
          MapClass::hyperbolic);
    double th = 0.4;
    CHECK(classify(MoebiusMap(Complex(std::cos(th)), Complex(-std::sin(th)),
                              Complex(std::sin(th)), Complex(std::cos(th)))) ==
          MapClass::elliptic);
    // Within tolerance of trace 2 the verdict is parabolic, not hyperbolic.
    CHECK(classify(MoebiusMap(Complex(1.0), Complex(1e-30), Complex(0.0),
                              Complex(1.0 + 3e-10))) != MapClass::hyperbolic);
    CHECK_THROWS_AS(classify(MoebiusMap(Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0),
                                        true)),
                    NotAnIsometry);
    // Trace squared strictly negative: conjugate by i, not a real isometry.
    CHECK_THROWS_AS(classify(MoebiusMap(Complex(0.0, 2.0), Complex(0.0), Complex(0.0),
                                        Complex(0.0, -0.5))),
                    NotAnIsometry);
    CHECK(to_string(MapClass::parabolic) == "parabolic");
}

TEST_CASE("reflect inverts the circle") {
    Circle C(Complex(2.0, 0.0), 1.5);
    MoebiusMap R = reflect(C);
    CHECK(R.anti);
    for (int k = 0; k < 8; ++k) {
        double th = 2.0 * M_PI * k / 8.0;
        Complex z = C.center + C.radius * Complex(std::cos(th), std::sin(th));
        CHECK(std::abs(R.apply(z) - z) <= 1e-12);
    }
    CHECK(is_infinity(R.apply(C.center)));
    CHECK(std::abs(R.apply(point_at_infinity()) - C.center) <= 1e-12);
    // |R(z) - c| |z - c| = r^2 and R fixes the ray through z.
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        Complex z = C.center + rng.point(4.0);
        if (std::abs(z - C.center) < 0.05) continue;
        Complex w = R.apply(z);
        CHECK(std::abs(w - C.center) * std::abs(z - C.center) ==
              doctest::Approx(C.radius * C.radius).epsilon(1e-11));
        Complex dir1 = (z - C.center) / std::abs(z - C.center);
        Complex dir2 = (w - C.center) / std::abs(w - C.center);
        CHECK(std::abs(dir1 - dir2) <= 1e-11);
        CHECK(std::abs(compose(R, R).apply(z) - z) <= 1e-10 * (1.0 + std::abs(z)));
    }
    CHECK_THROWS_AS(Circle(Complex(0.0, 0.0), 0.0), InvalidCircle);
    CHECK_THROWS_AS(Circle(Complex(0.0, 0.0), -2.0), InvalidCircle);
}

TEST_CASE("reflect_line mirrors across a vertical") {
    MoebiusMap R = reflect_line(0.7);
    CHECK(R.anti);
    Complex z(0.2, 1.3);
    CHECK(std::abs(R.apply(z) - (Complex(1.4, 0.0) - std::conj(z))) <= 1e-13);
    CHECK(std::abs(R.apply(Complex(0.7, 5.0)) - Complex(0.7, 5.0)) <= 1e-13);
}

namespace {

// Circumcircle through three points via perpendicular-bisector equations,
// independent of the library's symmetric-point construction.
Circle circumcircle(Complex p, Complex q, Complex r) {
    double ax = p.real(), ay = p.imag(), bx = q.real(), by = q.imag();
    double cx = r.real(), cy = r.imag();
    double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                 (cx * cx + cy * cy) * (ay - by)) /
                d;
    double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                 (cx * cx + cy * cy) * (bx - ax)) /
                d;
    Complex center(ux, uy);
    return Circle(center, std::abs(p - center));
}

} // namespace

TEST_CASE("map_circle matches the circumcircle of image points") {
    Rng rng(88);
    int tested = 0;
    while (tested < 50) {
        MoebiusMap f = random_map(rng);
        Circle C(rng.point(2.0), rng.uniform(0.2, 1.5));
        if (std::abs(f.c) > 1e-9) {
            Complex pole = -f.d / f.c;
            if (std::abs(std::abs(pole - C.center) - C.radius) < 1e-2) continue;
        }
        Complex p0 = C.center + C.radius, p1 = C.center - C.radius,
                p2 = C.center + Complex(0.0, C.radius);
        Circle expect = circumcircle(f.apply(p0), f.apply(p1), f.apply(p2));
        if (expect.radius > 1e3) continue;
        Circle got = map_circle(f, C);
        CHECK(std::abs(got.center - expect.center) <= 1e-8 * (1.0 + std::abs(expect.center)));
        CHECK(got.radius == doctest::Approx(expect.radius).epsilon(1e-8));
        ++tested;
    }
}

TEST_CASE("map_circle handles affine maps and poles on the circle") {
    Circle C(Complex(1.0, 0.0), 0.5);
    Circle image = map_circle(MoebiusMap::affine(Complex(2.0), Complex(1.0)), C);
    CHECK(std::abs(image.center - Complex(3.0, 0.0)) <= 1e-13);
    CHECK(image.radius == doctest::Approx(1.0).epsilon(1e-13));

    MoebiusMap inv(Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0));
    CHECK_THROWS_AS(map_circle(inv, Circle(Complex(0.5, 0.0), 0.5)), PoleHit);
}

TEST_CASE("swapping_inversion exchanges the circles") {
    Circle src(Complex(-1.0, 0.0), 0.3), tgt(Complex(2.0, 0.0), 0.5);
    MoebiusMap g = swapping_inversion(src, tgt);
    CHECK(g.anti);
    for (int k = 0; k < 8; ++k) {
        double th = 2.0 * M_PI * k / 8.0;
        Complex zs = src.center + src.radius * Complex(std::cos(th), std::sin(th));
        Complex zt = tgt.center + tgt.radius * Complex(std::cos(th), std::sin(th));
        CHECK(std::abs(std::abs(g.apply(zs) - tgt.center) - tgt.radius) <= 1e-10);
        CHECK(std::abs(std::abs(g.apply(zt) - src.center) - src.radius) <= 1e-10);
        CHECK(std::abs(compose(g, g).apply(zs) - zs) <= 1e-9);
    }

    Circle s2(Complex(-1.0, 0.0), 0.4), t2(Complex(3.0, 0.0), 0.4);
    MoebiusMap h = swapping_inversion(s2, t2);
    CHECK(std::abs(h.apply(Complex(-1.4, 0.0)) - Complex(3.4, 0.0)) <= 1e-10);
    CHECK(std::abs(h.apply(Complex(0.3, 2.0)) - Complex(1.7, 2.0)) <= 1e-10);

    CHECK_THROWS_AS(swapping_inversion(Circle(Complex(0.0, 0.0), 1.0),
                                       Circle(Complex(1.5, 0.0), 1.0)),
                    SeparationViolated);
}

TEST_CASE("project_disk_isometry snaps conjugated isometries") {
    const MoebiusMap eta = cayley_to_disk();
    const MoebiusMap eta_inv = eta.inverse();
    MoebiusMap line = MoebiusMap::affine(Complex(4.0), Complex(0.0));  // z -> 4z on H
    MoebiusMap disk = project_disk_isometry(compose(compose(eta, line), eta_inv));
    CHECK(std::abs(disk.d - std::conj(disk.a)) <= 1e-14);
    CHECK(std::abs(disk.c - std::conj(disk.b)) <= 1e-14);
    CHECK(std::norm(disk.a) - std::norm(disk.b) == doctest::Approx(1.0).epsilon(1e-13));
    MoebiusMap raw = compose(compose(eta, line), eta_inv);
    for (Complex z : {Complex(0.0, 0.0), Complex(0.3, -0.4), Complex(-0.7, 0.1)})
        CHECK(std::abs(disk.apply(z) - raw.apply(z)) <= 1e-11);
    // Unit circle is preserved.
    for (int k = 0; k < 12; ++k) {
        double th = 2.0 * M_PI * k / 12.0;
        Complex z(std::cos(th), std::sin(th));
        CHECK(std::abs(std::abs(disk.apply(z)) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(project_disk_isometry(MoebiusMap::affine(Complex(2.0), Complex(0.0))),
                    NotAnIsometry);
}
