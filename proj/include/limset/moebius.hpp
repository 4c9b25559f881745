#pragma once

#include <complex>
#include <string>

#include "limset/errors.hpp"

namespace limset {

using Complex = std::complex<double>;

// Extended-plane convention: a single sentinel value represents the point at
// infinity.  All finite complex numbers are ordinary points.
Complex point_at_infinity();
bool is_infinity(const Complex& z);

// A Moebius or anti-Moebius transformation of the Riemann sphere,
//
//     z  |->  (a z + b) / (c z + d)            (anti == false)
//     z  |->  (a conj(z) + b) / (c conj(z) + d)  (anti == true)
//
// stored with determinant normalized to 1 (matrices M and -M describe the
// same map).  Degenerate inputs (ad - bc == 0) are rejected at construction.
struct MoebiusMap {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};
    bool anti = false;

    MoebiusMap() = default;
    MoebiusMap(Complex a_, Complex b_, Complex c_, Complex d_, bool anti_ = false);

    static MoebiusMap identity();
    // z -> alpha z + beta with alpha != 0.
    static MoebiusMap affine(Complex alpha, Complex beta);

    Complex apply(const Complex& z) const;
    Complex operator()(const Complex& z) const { return apply(z); }

    // |f'(z)| for conformal maps, |(d/dzbar) f|(z) for anti maps; with the
    // determinant normalized this is 1/|c z + d|^2 (conjugate z first when
    // anti).  Throws PoleHit at the pole and at infinity.
    double derivative_modulus(const Complex& z) const;

    MoebiusMap inverse() const;

    Complex trace() const { return a + d; }
    bool is_identity(double tol = 1e-9) const;
};

// Composition acts as (f o g); the anti flags xor and the matrix of g is
// conjugated entrywise when f is anti.  Result is renormalized.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

enum class MapClass { identity, elliptic, parabolic, hyperbolic };

std::string to_string(MapClass cls);

// Classification of a conformal isometry by |trace| against 2 (tolerance on
// the trace scale).  Anti maps and maps whose squared trace is not real
// (hence not conjugate into PSL(2,R)) raise NotAnIsometry.
MapClass classify(const MoebiusMap& f, double tol = 1e-9);

// Euclidean circle; radius must be strictly positive.
struct Circle {
    Complex center{0.0, 0.0};
    double radius = 1.0;

    Circle() = default;
    Circle(Complex center_, double radius_);
    Circle(double x, double y, double radius_);
};

// Inversion in the circle C: z -> center + r^2 / conj(z - center).
// Anti-conformal, an involution, fixes C pointwise, sends center to the
// point at infinity.
MoebiusMap reflect(const Circle& C);

// Reflection across the vertical line Re z = x0, i.e. z -> 2 x0 - conj(z).
MoebiusMap reflect_line(double x0);

// The Cayley map eta(z) = (i z + 1)/(z + i) from the upper half-plane onto
// the unit disk: eta(infinity) = i, eta(1) = 1, eta(0) = -i, eta(i) = 0.
MoebiusMap cayley_to_disk();

// Image of a circle not passing through the pole of f (PoleHit otherwise).
Circle map_circle(const MoebiusMap& f, const Circle& C);

// For real-centered circles with disjoint closures, the inversion (or line
// reflection, when the radii coincide) that swaps src and tgt.
MoebiusMap swapping_inversion(const Circle& src, const Circle& tgt);

// Snap a disk-preserving map onto the SU(1,1) form (a, b; conj b, conj a)
// with |a|^2 - |b|^2 = 1 (for anti maps the matrix acts on conj z).  Raises
// NotAnIsometry when the input is farther than tol from that shape.
MoebiusMap project_disk_isometry(const MoebiusMap& f, double tol = 1e-6);

} // namespace limset
