#pragma once

#include <vector>

namespace limset {

// Chebyshev nodes of the first kind mapped to [a, b], in ascending order:
// x_j = mid - half * cos((2j+1) pi / (2n)).  First-kind nodes stay strictly
// inside the interval, which keeps collocation away from cell endpoints.
std::vector<double> cheb_nodes(int n, double a, double b);

// Barycentric weights matching cheb_nodes (up to a common factor).
std::vector<double> cheb_weights(int n);

// Interpolation weights lambda_j(x) with sum 1: value(x) = sum lambda_j f_j.
// Exact-node hits return the corresponding unit row.
std::vector<double> barycentric_row(const std::vector<double>& nodes,
                                    const std::vector<double>& weights,
                                    double x);

double barycentric_eval(const std::vector<double>& nodes,
                        const std::vector<double>& weights,
                        const std::vector<double>& values,
                        double x);

// Coefficients c_k of f ~ sum_{k<n} c_k T_k(u) on [a,b] (u the affine pull
// back to [-1,1]) from values at cheb_nodes(n, a, b); exact Gauss-Chebyshev
// quadrature of the first kind, so degree-(n-1) polynomials round-trip.
std::vector<double> cheb_coefficients(const std::vector<double>& values_at_nodes);

} // namespace limset
