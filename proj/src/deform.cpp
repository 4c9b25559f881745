#include "limset/deform.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "limset/chebyshev.hpp"
#include "limset/fit.hpp"
#include "limset/group.hpp"

namespace limset {

void DeformationFamily::check_degree(const Poly& p, const char* what) {
    if (p.degree() > 8)
        throw InvalidSystem(std::string("deformation family: ") + what +
                            " polynomial degree exceeds 8");
}

DeformationFamily DeformationFamily::similarity(const std::vector<Poly>& ratios,
                                                const std::vector<Poly>& offsets,
                                                const Interval& trange) {
    if (ratios.empty() || ratios.size() != offsets.size())
        throw InvalidSystem("deformation family: need matching ratio/offset lists");
    for (const Poly& p : ratios) check_degree(p, "ratio");
    for (const Poly& p : offsets) check_degree(p, "offset");
    DeformationFamily f;
    f.kind_ = Kind::similarity;
    f.trange_ = trange;
    f.poly_a_ = ratios;
    f.poly_b_ = offsets;
    return f;
}

DeformationFamily DeformationFamily::reflection_circles(const std::vector<double>& centers,
                                                        const std::vector<Poly>& radii,
                                                        const Interval& trange) {
    if (centers.size() != radii.size() || centers.size() < 2)
        throw InvalidSystem("deformation family: need at least two centered circles");
    for (const Poly& p : radii) check_degree(p, "radius");
    DeformationFamily f;
    f.kind_ = Kind::reflection_circles;
    f.trange_ = trange;
    f.centers_ = centers;
    f.poly_a_ = radii;
    return f;
}

DeformationFamily DeformationFamily::schottky_pair(double center1, double center2,
                                                   const Poly& radius,
                                                   const Interval& trange) {
    check_degree(radius, "radius");
    DeformationFamily f;
    f.kind_ = Kind::schottky_pair;
    f.trange_ = trange;
    f.centers_ = {center1, center2};
    f.poly_a_ = {radius};
    return f;
}

DeformationFamily DeformationFamily::tail_exponent(const TailLaw& base, const Poly& alpha,
                                                   const Poly& beta, const Interval& trange) {
    check_degree(alpha, "alpha");
    check_degree(beta, "beta");
    TailLaw probe = base;
    probe.dyadic = true;
    probe.validate();
    DeformationFamily f;
    f.kind_ = Kind::tail_exponent;
    f.trange_ = trange;
    f.base_law_ = probe;
    f.poly_a_ = {alpha, beta};
    return f;
}

IfsSystem DeformationFamily::eval(double t) const {
    if (!trange_.contains(t, 1e-12 * std::max(1.0, std::abs(t))))
        throw ValidityViolated("deformation family: parameter outside the range");
    try {
        switch (kind_) {
            case Kind::similarity: {
                std::vector<double> r, o;
                for (const Poly& p : poly_a_) r.push_back(p.eval(t));
                for (const Poly& p : poly_b_) o.push_back(p.eval(t));
                return IfsSystem::similarity(r, o);
            }
            case Kind::reflection_circles: {
                std::vector<Circle> circles;
                for (std::size_t i = 0; i < centers_.size(); ++i)
                    circles.emplace_back(Complex(centers_[i], 0.0), poly_a_[i].eval(t));
                return ifs_from_schottky(GroupPresentation::reflection_group(circles));
            }
            case Kind::schottky_pair: {
                double r = poly_a_[0].eval(t);
                Circle src(Complex(centers_[0], 0.0), r);
                Circle tgt(Complex(centers_[1], 0.0), r);
                return ifs_from_schottky(GroupPresentation::schottky_group({{src, tgt}}));
            }
            case Kind::tail_exponent: {
                TailLaw law = base_law_;
                law.alpha = poly_a_[0].eval(t);
                law.beta = poly_a_[1].eval(t);
                law.validate();
                return IfsSystem::analytic_tail(law);
            }
        }
    } catch (const ValidityViolated&) {
        throw;
    } catch (const Error& e) {
        throw ValidityViolated(std::string("deformation family: invalid at t = ") +
                               std::to_string(t) + ": " + e.what());
    }
    throw Error("deformation family: unknown kind");
}

DimensionCurve dimension_curve(const DeformationFamily& fam, int m,
                               const BowenOptions& opt, int threads) {
    if (m < 4)
        throw InsufficientData("dimension_curve: need at least 4 nodes");
    if (m > 256)
        throw DepthOutOfRange("dimension_curve: more than 256 nodes");
    const Interval& tr = fam.parameter_range();
    DimensionCurve curve;
    curve.trange = tr;
    curve.grid = cheb_nodes(m, tr.lo, tr.hi);
    curve.values.assign(m, 0.0);
    curve.errors.assign(m, 0.0);

    auto solve_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            DimensionResult r = bowen_dimension(fam.eval(curve.grid[i]), opt);
            curve.values[i] = r.value;
            curve.errors[i] = r.error;
        }
    };
    threads = std::max(1, std::min(threads, m));
    if (threads == 1) {
        solve_range(0, m);
    } else {
        std::vector<std::future<void>> jobs;
        int per = (m + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            int begin = w * per, end = std::min(m, begin + per);
            if (begin >= end) break;
            jobs.push_back(std::async(std::launch::async, solve_range, begin, end));
        }
        for (auto& j : jobs) j.get();
    }
    return curve;
}

AnalyticityReport analyticity_diagnostic(const DimensionCurve& curve) {
    const int m = static_cast<int>(curve.values.size());
    if (m < 8)
        throw InsufficientData("analyticity_diagnostic: need at least 8 curve nodes");
    AnalyticityReport rep;
    rep.coefficients = cheb_coefficients(curve.values);

    double maxerr = 0.0;
    for (double e : curve.errors) maxerr = std::max(maxerr, e);
    rep.error_floor = std::max(1e-14, 10.0 * maxerr);
    if (rep.error_floor > 1e-8)
        throw ErrorFloorTooHigh("analyticity_diagnostic: solver noise floor above 1e-8");

    // Trailing coefficients must have reached the floor for the decay to be
    // considered resolved.
    int tail_n = std::max(3, m / 8);
    rep.tail_below_floor = true;
    for (int k = m - tail_n; k < m; ++k)
        rep.tail_below_floor = rep.tail_below_floor &&
                               std::abs(rep.coefficients[k]) <= rep.error_floor;

    std::vector<double> ks, logs;
    for (int k = 1; k < m; ++k) {
        if (std::abs(rep.coefficients[k]) > rep.error_floor) {
            ks.push_back(static_cast<double>(k));
            logs.push_back(std::log(std::abs(rep.coefficients[k])));
        }
    }
    rep.fitted_terms = static_cast<int>(ks.size());
    if (rep.fitted_terms <= 2) {
        // Essentially constant or linear in t at solver precision.
        rep.rho_fit = 0.0;
        rep.verdict = rep.tail_below_floor ? "consistent-with-analytic" : "inconclusive";
        return rep;
    }
    LinearFit fit = linear_fit(ks, logs);
    rep.rho_fit = std::exp(fit.slope);
    rep.verdict = (rep.rho_fit < 0.95 && rep.tail_below_floor)
                      ? "consistent-with-analytic"
                      : "inconclusive";
    return rep;
}

} // namespace limset
