#include "limset/poly.hpp"

#include <cmath>
#include <cstddef>

namespace limset {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(double c) { return Poly(std::vector<double>{c}); }

Poly Poly::variable() { return Poly(std::vector<double>{0.0, 1.0}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Poly::eval(double t) const {
    double v = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

int Poly::degree() const { return static_cast<int>(c_.size()) - 1; }

Poly Poly::operator+(const Poly& o) const {
    std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(double s) const {
    std::vector<double> r = c_;
    for (double& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::compose_affine(double alpha, double beta) const {
    // Horner in the polynomial ring: p(alpha u + beta).
    Poly lin(std::vector<double>{beta, alpha});
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * lin + Poly::constant(c_[i]);
    return acc;
}

} // namespace limset
