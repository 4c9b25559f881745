#include "limset/chebyshev.hpp"

#include <cmath>

#include "limset/errors.hpp"

namespace limset {

std::vector<double> cheb_nodes(int n, double a, double b) {
    if (n < 1) throw Error("cheb_nodes: need n >= 1");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
        double theta = (2.0 * j + 1.0) * M_PI / (2.0 * n);
        x[j] = mid - half * std::cos(theta);
    }
    return x;
}

std::vector<double> cheb_weights(int n) {
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) {
        double theta = (2.0 * j + 1.0) * M_PI / (2.0 * n);
        w[j] = ((j & 1) ? -1.0 : 1.0) * std::sin(theta);
    }
    return w;
}

std::vector<double> barycentric_row(const std::vector<double>& nodes,
                                    const std::vector<double>& weights,
                                    double x) {
    const std::size_t n = nodes.size();
    std::vector<double> row(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (x == nodes[j]) { row[j] = 1.0; return row; }
    }
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        row[j] = weights[j] / (x - nodes[j]);
        denom += row[j];
    }
    for (std::size_t j = 0; j < n; ++j) row[j] /= denom;
    return row;
}

double barycentric_eval(const std::vector<double>& nodes,
                        const std::vector<double>& weights,
                        const std::vector<double>& values,
                        double x) {
    std::vector<double> row = barycentric_row(nodes, weights, x);
    double v = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) v += row[j] * values[j];
    return v;
}

std::vector<double> cheb_coefficients(const std::vector<double>& values_at_nodes) {
    const int n = static_cast<int>(values_at_nodes.size());
    if (n < 1) throw Error("cheb_coefficients: empty sample");
    std::vector<double> c(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) {
            double theta = (2.0 * m + 1.0) * M_PI / (2.0 * n);
            // values_at_nodes are ascending; index n-1-m sits at cos(theta_m).
            acc += values_at_nodes[n - 1 - m] * std::cos(k * theta);
        }
        c[k] = 2.0 * acc / n;
    }
    c[0] *= 0.5;
    return c;
}

} // namespace limset
