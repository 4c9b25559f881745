#include "limset/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace limset {

namespace {

bool finite_complex(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex guard_finite(const Complex& z) {
    return finite_complex(z) ? z : point_at_infinity();
}

} // namespace

Complex point_at_infinity() {
    return Complex(std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity());
}

bool is_infinity(const Complex& z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

MoebiusMap::MoebiusMap(Complex a_, Complex b_, Complex c_, Complex d_, bool anti_)
    : a(a_), b(b_), c(c_), d(d_), anti(anti_) {
    // Pre-scale so the determinant cannot overflow or underflow.
    double m = std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    if (!std::isfinite(m) || m == 0.0)
        throw DegenerateMap("moebius: non-finite or zero coefficient matrix");
    if (m > 1e100 || m < 1e-100) {
        a /= m; b /= m; c /= m; d /= m;
    }
    Complex det = a * d - b * c;
    double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
    if (std::abs(det) <= 1e-14 * std::max(scale, 1e-300))
        throw DegenerateMap("moebius: determinant vanishes");
    Complex s = std::sqrt(det);
    a /= s; b /= s; c /= s; d /= s;
}

MoebiusMap MoebiusMap::identity() {
    return MoebiusMap();
}

MoebiusMap MoebiusMap::affine(Complex alpha, Complex beta) {
    return MoebiusMap(alpha, beta, Complex(0.0), Complex(1.0));
}

Complex MoebiusMap::apply(const Complex& z) const {
    if (is_infinity(z)) {
        if (std::abs(c) < 1e-300) return point_at_infinity();
        return guard_finite(a / c);
    }
    Complex w = anti ? std::conj(z) : z;
    if (std::abs(w) > 1e12) {
        // Chart swap: evaluate in the coordinate u = 1/w to keep precision.
        Complex u = Complex(1.0) / w;
        Complex den = c + d * u;
        if (std::abs(den) < 1e-300) return point_at_infinity();
        return guard_finite((a + b * u) / den);
    }
    Complex den = c * w + d;
    if (std::abs(den) < 1e-300) return point_at_infinity();
    return guard_finite((a * w + b) / den);
}

double MoebiusMap::derivative_modulus(const Complex& z) const {
    if (is_infinity(z)) {
        if (std::abs(c) > 0.0) return 0.0;
        throw PoleHit("moebius: derivative modulus undefined at infinity for affine maps");
    }
    Complex w = anti ? std::conj(z) : z;
    double den2 = std::norm(c * w + d);
    if (den2 < 1e-300) throw PoleHit("moebius: derivative evaluated at the pole");
    return 1.0 / den2;
}

namespace {

// Assembles entries verbatim, skipping the normalizing constructor.  Both
// composition and inversion of det-1 matrices have det exactly 1, but
// recomputing ad - bc from entries of size ~1e18 is pure cancellation and
// would flag perfectly good deep products as degenerate.
MoebiusMap raw_map(Complex a, Complex b, Complex c, Complex d, bool anti) {
    MoebiusMap f;
    f.a = a; f.b = b; f.c = c; f.d = d; f.anti = anti;
    return f;
}

} // namespace

MoebiusMap MoebiusMap::inverse() const {
    if (!anti) return raw_map(d, -b, -c, a, false);
    return raw_map(std::conj(d), -std::conj(b), -std::conj(c), std::conj(a), true);
}

bool MoebiusMap::is_identity(double tol) const {
    if (anti) return false;
    return std::abs(b) <= tol && std::abs(c) <= tol && std::abs(a - d) <= tol;
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    Complex ga = g.a, gb = g.b, gc = g.c, gd = g.d;
    if (f.anti) {
        ga = std::conj(ga); gb = std::conj(gb);
        gc = std::conj(gc); gd = std::conj(gd);
    }
    return raw_map(f.a * ga + f.b * gc, f.a * gb + f.b * gd,
                   f.c * ga + f.d * gc, f.c * gb + f.d * gd,
                   f.anti != g.anti);
}

std::string to_string(MapClass cls) {
    switch (cls) {
        case MapClass::identity:   return "identity";
        case MapClass::elliptic:   return "elliptic";
        case MapClass::parabolic:  return "parabolic";
        case MapClass::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

MapClass classify(const MoebiusMap& f, double tol) {
    if (f.anti)
        throw NotAnIsometry("classify: anti-conformal map");
    // tr^2 is well defined (the matrix is only fixed up to sign); isometries
    // of the half-plane or disk have real, nonnegative tr^2.
    Complex t2 = f.trace() * f.trace();
    double scale = std::max(1.0, std::abs(t2));
    if (std::abs(t2.imag()) > tol * scale)
        throw NotAnIsometry("classify: trace squared is not real");
    double x = t2.real();
    if (x < -tol * scale)
        throw NotAnIsometry("classify: negative trace squared");
    if (x <= tol) return MapClass::elliptic; // includes the half-turn tr = 0
    double u = std::sqrt(x);
    if (u < 2.0 - tol) return MapClass::elliptic;
    if (u > 2.0 + tol) return MapClass::hyperbolic;
    return f.is_identity(tol) ? MapClass::identity : MapClass::parabolic;
}

Circle::Circle(Complex center_, double radius_) : center(center_), radius(radius_) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !finite_complex(center))
        throw InvalidCircle("circle: radius must be positive and data finite");
}

Circle::Circle(double x, double y, double radius_) : Circle(Complex(x, y), radius_) {}

MoebiusMap reflect(const Circle& C) {
    const Complex& z0 = C.center;
    double r = C.radius;
    // (z0 zbar + r^2 - |z0|^2) / (zbar - conj z0) = z0 + r^2/conj(z - z0).
    return MoebiusMap(z0, Complex(r * r) - z0 * std::conj(z0),
                      Complex(1.0), -std::conj(z0), true);
}

MoebiusMap reflect_line(double x0) {
    return MoebiusMap(Complex(-1.0), Complex(2.0 * x0), Complex(0.0), Complex(1.0), true);
}

MoebiusMap cayley_to_disk() {
    const Complex i(0.0, 1.0);
    return MoebiusMap(i, Complex(1.0), Complex(1.0), i, false);
}

Circle map_circle(const MoebiusMap& f, const Circle& C) {
    if (f.anti) {
        MoebiusMap conformal(f.a, f.b, f.c, f.d, false);
        return map_circle(conformal, Circle(std::conj(C.center), C.radius));
    }
    const Complex z0 = C.center;
    const double r = C.radius;
    if (std::abs(f.c) < 1e-14) {
        // Affine: center maps to center, radius scales by |a/d|.
        return Circle(f.apply(z0), std::abs(f.a / f.d) * r);
    }
    Complex pole = -f.d / f.c;
    double dist = std::abs(pole - z0);
    if (std::abs(dist - r) <= 1e-12 * (dist + r))
        throw PoleHit("map_circle: circle passes through the pole");
    // The point symmetric to the pole w.r.t. C maps to the image center.
    Complex zsym = z0 + Complex(r * r) / std::conj(pole - z0);
    Complex W = f.apply(zsym);
    // Radius from the circle point farthest from the pole (best conditioned).
    Complex best = z0 + Complex(r);
    double bestd = std::abs(best - pole);
    const Complex candidates[3] = {z0 - Complex(r), z0 + Complex(0.0, r), z0 - Complex(0.0, r)};
    for (const Complex& cand : candidates) {
        double dd = std::abs(cand - pole);
        if (dd > bestd) { bestd = dd; best = cand; }
    }
    return Circle(W, std::abs(f.apply(best) - W));
}

MoebiusMap swapping_inversion(const Circle& src, const Circle& tgt) {
    if (std::abs(src.center.imag()) > 1e-12 || std::abs(tgt.center.imag()) > 1e-12)
        throw InvalidCircle("swapping_inversion: circles must be centered on the real line");
    double s = src.center.real(), p = src.radius;
    double t = tgt.center.real(), q = tgt.radius;
    if (std::abs(s - t) < p + q)
        throw SeparationViolated("swapping_inversion: circles overlap");
    if (std::abs(p - q) <= 1e-9 * (p + q))
        return reflect_line(0.5 * (s + t));
    // sigma(x) = m + rho^2/(x - m) with sigma(s -+ p) = t +- q.
    double u = p * (t - s) / (q - p);
    double m = s - u;
    double rho2 = q * (u * u - p * p) / p;
    if (!(rho2 > 0.0))
        throw SeparationViolated("swapping_inversion: no real swapping circle");
    return reflect(Circle(Complex(m, 0.0), std::sqrt(rho2)));
}

MoebiusMap project_disk_isometry(const MoebiusMap& f, double tol) {
    double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d), 1.0});
    double err = std::abs(f.d - std::conj(f.a)) + std::abs(f.c - std::conj(f.b));
    if (err > tol * scale)
        throw NotAnIsometry("project_disk_isometry: map does not preserve the disk");
    Complex ah = 0.5 * (f.a + std::conj(f.d));
    Complex bh = 0.5 * (f.b + std::conj(f.c));
    double n = std::norm(ah) - std::norm(bh);
    if (n <= tol)
        throw NotAnIsometry("project_disk_isometry: |a|^2 - |b|^2 not positive");
    double inv = 1.0 / std::sqrt(n);
    ah *= inv; bh *= inv;
    MoebiusMap out;
    out.a = ah; out.b = bh;
    out.c = std::conj(bh); out.d = std::conj(ah);
    out.anti = f.anti;
    return out;
}

} // namespace limset
