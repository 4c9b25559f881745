#pragma once

#include <vector>

namespace limset {

// Ordinary least squares for y ~ intercept + slope * x, with the usual
// standard error of the slope (sqrt of residual variance over Sxx).
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double rms = 0.0;
    int n = 0;
};

// Throws InsufficientData when fewer than two points or all x coincide.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace limset
