#include "limset/fit.hpp"

#include <cmath>

#include "limset/errors.hpp"

namespace limset {

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw InsufficientData("linear_fit: mismatched sample sizes");
    const int n = static_cast<int>(x.size());
    if (n < 2)
        throw InsufficientData("linear_fit: need at least two points");
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= n; my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0)
        throw InsufficientData("linear_fit: abscissae coincide");
    LinearFit out;
    out.n = n;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = y[i] - (out.intercept + out.slope * x[i]);
        ss += r * r;
    }
    out.rms = std::sqrt(ss / n);
    out.slope_stderr = (n > 2) ? std::sqrt(ss / (n - 2) / sxx) : 0.0;
    return out;
}

} // namespace limset
