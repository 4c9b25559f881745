#pragma once

#include <string>
#include <vector>

#include "limset/ifs.hpp"
#include "limset/poly.hpp"
#include "limset/pressure.hpp"

namespace limset {

// One-parameter analytic family of systems: every defining quantity is a
// real polynomial in the parameter t (degree capped at 8), evaluated to a
// concrete IfsSystem per parameter value.  Evaluation failures (loss of
// contraction, separation, tail validity, parameter outside the range) are
// reported as ValidityViolated.
class DeformationFamily {
public:
    enum class Kind { similarity, reflection_circles, schottky_pair, tail_exponent };

    static DeformationFamily similarity(const std::vector<Poly>& ratios,
                                        const std::vector<Poly>& offsets,
                                        const Interval& trange);

    // Reflection group in circles with fixed real centers and polynomially
    // varying radii, converted to its interval IFS.
    static DeformationFamily reflection_circles(const std::vector<double>& centers,
                                                const std::vector<Poly>& radii,
                                                const Interval& trange);

    // Symmetric two-circle Schottky pair: centers fixed, common radius r(t).
    static DeformationFamily schottky_pair(double center1, double center2,
                                           const Poly& radius, const Interval& trange);

    // Countable synthetic family: the dyadic tail-law exponents vary with t.
    static DeformationFamily tail_exponent(const TailLaw& base, const Poly& alpha,
                                           const Poly& beta, const Interval& trange);

    Kind kind() const { return kind_; }
    const Interval& parameter_range() const { return trange_; }

    IfsSystem eval(double t) const;

private:
    Kind kind_ = Kind::similarity;
    Interval trange_{0.0, 1.0};
    std::vector<Poly> poly_a_, poly_b_;   // per-kind payload
    std::vector<double> centers_;
    TailLaw base_law_;

    DeformationFamily() = default;
    static void check_degree(const Poly& p, const char* what);
};

struct DimensionCurve {
    std::vector<double> grid;    // ascending Chebyshev nodes in the range
    std::vector<double> values;  // Hausdorff dimension at each node
    std::vector<double> errors;  // solver error estimates
    Interval trange{0.0, 1.0};
};

// Dimension along the family at m first-kind Chebyshev nodes; this grid
// makes the Chebyshev coefficients of the curve exactly recoverable.
DimensionCurve dimension_curve(const DeformationFamily& fam, int m,
                               const BowenOptions& opt = BowenOptions(), int threads = 1);

// Coefficient-decay test: an analytic dependence on t forces geometric
// decay of the curve's Chebyshev coefficients down to the solver noise
// floor.  rho_fit estimates the decay ratio from the coefficients above the
// floor; the verdict is "consistent-with-analytic" only when the decay is
// clearly geometric (rho_fit < 0.95) and the trailing coefficients have
// reached the floor, else "inconclusive".  A floor above 1e-8 means the
// curve is too noisy to say anything (ErrorFloorTooHigh).
struct AnalyticityReport {
    std::vector<double> coefficients;
    double error_floor = 0.0;
    double rho_fit = 0.0;
    int fitted_terms = 0;
    bool tail_below_floor = false;
    std::string verdict;
};

AnalyticityReport analyticity_diagnostic(const DimensionCurve& curve);

} // namespace limset
