#pragma once

#include <vector>

namespace limset {

// Real polynomial in one variable, coefficients in ascending degree order.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<double> coeffs);
    static Poly constant(double c);
    static Poly variable();

    double eval(double t) const;
    int degree() const;  // -1 for the zero polynomial
    const std::vector<double>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(double s) const;

    // Substitute t = alpha * u + beta, returning a polynomial in u.
    Poly compose_affine(double alpha, double beta) const;

private:
    std::vector<double> c_;
    void trim();
};

} // namespace limset
