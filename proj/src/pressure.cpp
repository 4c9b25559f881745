#include "limset/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "limset/chebyshev.hpp"

namespace limset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PressureEstimate diverged_estimate(double sigma, const std::string& method) {
    PressureEstimate p;
    p.sigma = sigma;
    p.value = p.lower = p.upper = kInf;
    p.n_used = 1;
    p.method = method;
    return p;
}

} // namespace

bool PressureEstimate::diverged() const { return std::isinf(value) && value > 0.0; }

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::finite_alphabet: return "finite-alphabet";
        case Regularity::regular:         return "regular";
        case Regularity::irregular:       return "irregular";
    }
    return "unknown";
}

Regularity regularity_check(const IfsSystem& s) {
    if (!s.countable()) return Regularity::finite_alphabet;
    double theta = s.theta_number();
    return s.tail_converges(theta) ? Regularity::irregular : Regularity::regular;
}

std::vector<PressureEstimate> pressure_direct_grid(const IfsSystem& s,
                                                   const std::vector<double>& sigmas,
                                                   int n_max) {
    if (sigmas.empty()) return {};
    if (s.countable()) {
        // Full shift over per-letter model weights: P = log psi_1 exactly,
        // with the envelope/remainder bracket of the tail sum.
        std::vector<PressureEstimate> out;
        for (double sigma : sigmas) {
            if (!s.tail_converges(sigma)) {
                out.push_back(diverged_estimate(sigma, "direct-tail"));
                continue;
            }
            PsiBracket b = s.psi_bracket(sigma, 1);
            PressureEstimate p;
            p.sigma = sigma;
            p.lower = std::log(b.lower);
            p.upper = std::log(b.upper);
            p.value = std::log(b.value());
            p.n_used = 1;
            p.method = "direct-tail";
            out.push_back(p);
        }
        return out;
    }

    if (n_max < 1 || n_max > 16)
        throw DepthOutOfRange("pressure_direct: n_max must lie in [1,16]");
    double words = 0.0;
    for (int n = 1; n <= n_max; ++n)
        words += std::pow(static_cast<double>(s.letter_count()), n);
    if (words > 4e7)
        throw DepthOutOfRange("pressure_direct: word enumeration too large");

    // Uniform distortion constant: |log|phi_w'(x)| - log|phi_w'(y)|| <=
    // kappa * sum of cylinder diameters <= kappa * D * geometric series.
    double kappa = s.distortion_kappa();
    double D = s.hull_diameter();
    double srate = s.contraction_bound();
    double dist;
    if (srate < 1.0 - 1e-12) dist = kappa * D / (1.0 - srate);
    else dist = 2.0 * kappa * D / (1.0 - s.two_step_contraction());

    const std::size_t C = s.cells().size();
    std::vector<PressureEstimate> out(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        out[i].sigma = sigmas[i];
        out[i].lower = -kInf;
        out[i].upper = kInf;
        out[i].method = "direct";
    }

    for (int n = 1; n <= n_max; ++n) {
        auto rows = s.psi_grid(sigmas, n);
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            double logpsi = std::log(rows[i].total);
            double up = logpsi / n;
            if (up < out[i].upper) { out[i].upper = up; out[i].n_used = n; }
            // Admissibility loss: the worst-case mass of n-blocks that
            // cannot follow a given letter.
            double worst = 0.0;
            for (const Branch& br : s.branches()) {
                double lost = 0.0;
                for (std::size_t c = 0; c < C; ++c)
                    if (!(br.domain >> c & 1)) lost += rows[i].mass_by_first_target[c];
                worst = std::max(worst, lost);
            }
            double keep = 1.0 - worst / rows[i].total;
            double logC = sigmas[i] * dist - (keep > 0.0 ? std::log(keep) : -kInf);
            double lowv = (logpsi - logC) / n;
            out[i].lower = std::max(out[i].lower, lowv);
        }
    }
    for (auto& p : out) {
        p.lower = std::min(p.lower, p.upper);
        p.value = p.upper;
    }
    return out;
}

PressureEstimate pressure_direct(const IfsSystem& s, double sigma, int n_max) {
    return pressure_direct_grid(s, {sigma}, n_max)[0];
}

TransferResult transfer_eigenvalue(const IfsSystem& s, double sigma, int size) {
    if (size < 4 || size > 256)
        throw Error("transfer_eigenvalue: size must lie in [4,256]");
    if (s.letter_count() == 0)
        throw UnsupportedSystem("transfer_eigenvalue: system has no explicit branches");
    for (const Branch& br : s.branches())
        if (br.synthetic)
            throw UnsupportedSystem("transfer_eigenvalue: synthetic branches have no geometry");
    if (s.countable() && !s.tail_converges(sigma))
        throw TailDiverges("transfer_eigenvalue: tail diverges at sigma");

    const std::size_t C = s.cells().size();
    const std::size_t N = C * static_cast<std::size_t>(size);
    if (N > 4096)
        throw Error("transfer_eigenvalue: collocation problem too large");

    std::vector<std::vector<double>> nodes(C);
    for (std::size_t c = 0; c < C; ++c)
        nodes[c] = cheb_nodes(size, s.cells()[c].lo, s.cells()[c].hi);
    std::vector<double> wts = cheb_weights(size);

    // Base matrix: row (c,m) sums over branches acting on cell c an
    // interpolation row at phi_i(x_{c,m}) in the target block.
    std::vector<double> base(N * N, 0.0);
    for (std::size_t c = 0; c < C; ++c) {
        for (int m = 0; m < size; ++m) {
            const std::size_t row = c * size + m;
            const double x = nodes[c][m];
            for (const Branch& br : s.branches()) {
                if (!(br.domain >> c & 1)) continue;
                double w = std::pow(br.map.derivative_modulus(Complex(x)), sigma);
                double y = br.map.apply(Complex(x)).real();
                std::vector<double> lam = barycentric_row(nodes[br.target], wts, y);
                double* dst = &base[row * N + br.target * size];
                for (int j = 0; j < size; ++j) dst[j] += w * lam[j];
            }
        }
    }

    // Countable geometric tails: rank-one envelope evaluated where the tail
    // images accumulate (cell 0 by construction).
    double tail_lo = 0.0, tail_hi = 0.0;
    bool tailed = false;
    if (s.countable()) {
        PsiBracket tb = s.tail_transfer_bracket(sigma);
        tail_lo = tb.lower;
        tail_hi = tb.upper;
        tailed = true;
    }

    auto eigen = [&](double tail_weight) {
        std::vector<double> M = base;
        if (tailed && tail_weight != 0.0) {
            std::vector<double> lam =
                barycentric_row(nodes[0], wts, s.tail_accumulation_point());
            for (std::size_t row = 0; row < N; ++row)
                for (int j = 0; j < size; ++j)
                    M[row * N + j] += tail_weight * lam[j];
        }
        // Power iteration on M^2 (two applications per step) so that
        // 2-periodic transition structures converge as well.
        std::vector<double> h(N, 1.0), v(N), g(N);
        auto matvec = [&](const std::vector<double>& in, std::vector<double>& outv) {
            for (std::size_t r = 0; r < N; ++r) {
                double acc = 0.0;
                const double* mr = &M[r * N];
                for (std::size_t j = 0; j < N; ++j) acc += mr[j] * in[j];
                outv[r] = acc;
            }
        };
        double lam2_prev = kInf;
        int stable = 0;
        for (int it = 1; it <= 10000; ++it) {
            matvec(h, v);
            matvec(v, g);
            std::size_t jmax = 0;
            for (std::size_t j = 1; j < N; ++j)
                if (std::abs(h[j]) > std::abs(h[jmax])) jmax = j;
            if (h[jmax] == 0.0)
                throw NoConvergence("transfer_eigenvalue: iterate collapsed");
            double lam2 = g[jmax] / h[jmax];
            if (!(lam2 > 0.0))
                throw NoConvergence("transfer_eigenvalue: nonpositive squared eigenvalue");
            double scale = 1.0 / std::abs(g[jmax]);
            for (std::size_t j = 0; j < N; ++j) h[j] = g[j] * scale;
            if (std::abs(lam2 - lam2_prev) <= 1e-13 * std::max(1.0, std::abs(lam2))) {
                if (++stable >= 3) return std::pair<double, int>(std::sqrt(lam2), it);
            } else {
                stable = 0;
            }
            lam2_prev = lam2;
        }
        throw NoConvergence("transfer_eigenvalue: power iteration did not stabilize");
    };

    TransferResult out;
    if (!tailed) {
        auto [lam, iters] = eigen(0.0);
        out.lambda = out.lambda_lower = out.lambda_upper = lam;
        out.iterations = iters;
        return out;
    }
    auto [lam_lo, it1] = eigen(tail_lo);
    auto [lam_hi, it2] = eigen(tail_hi);
    auto [lam_mid, it3] = eigen(std::sqrt(tail_lo * tail_hi));
    out.lambda = lam_mid;
    out.lambda_lower = std::min(lam_lo, lam_hi);
    out.lambda_upper = std::max(lam_lo, lam_hi);
    out.iterations = std::max({it1, it2, it3});
    return out;
}

namespace {

struct RootSearch {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool boundary = false;
};

// Bisection for the decreasing function P with a doubling/shrinking hunt
// for the sign change, anchored at theta0 (the left end of the admissible
// sigma range).
template <typename F>
RootSearch bowen_root(F&& pressure, double theta0, double sigma_max, double tol) {
    double start = theta0 + 0.01;
    if (start >= sigma_max) start = 0.5 * (theta0 + sigma_max);
    double a, b;
    double p0 = pressure(start);
    if (p0 > 0.0) {
        a = start;
        double x = start;
        for (;;) {
            x = theta0 + 2.0 * (x - theta0);
            if (x > sigma_max) {
                if (pressure(sigma_max) > 0.0)
                    throw BracketFailure("bowen: pressure still positive at sigma_max");
                x = sigma_max;
            }
            if (pressure(x) <= 0.0) { b = x; break; }
            a = x;
            if (x >= sigma_max)
                throw BracketFailure("bowen: no sign change up to sigma_max");
        }
    } else {
        b = start;
        double gap = start - theta0;
        bool found = false;
        while (gap > 1e-12) {
            gap *= 0.25;
            double x = theta0 + gap;
            if (pressure(x) > 0.0) { a = x; found = true; break; }
            b = x;
        }
        if (!found) {
            // Nonpositive pressure on the whole range: the root sits at the
            // admissible boundary.
            RootSearch r;
            r.lo = theta0;
            r.hi = theta0 + gap;
            r.value = theta0 + 0.5 * gap;
            r.boundary = true;
            return r;
        }
    }
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        double mid = 0.5 * (a + b);
        if (pressure(mid) > 0.0) a = mid; else b = mid;
    }
    RootSearch r;
    r.lo = a;
    r.hi = b;
    r.value = 0.5 * (a + b);
    return r;
}

} // namespace

DimensionResult bowen_dimension(const IfsSystem& s, const BowenOptions& opt) {
    Regularity reg = regularity_check(s);
    if (reg == Regularity::irregular)
        throw NotRegular("bowen_dimension: irregular system, no Bowen root");
    const double theta0 = s.countable() ? s.theta_number() : 0.0;

    DimensionResult out;
    if (!s.countable() || s.tail_has_maps()) {
        const int size = opt.transfer_size;
        auto pressure_mid = [&](double sigma) {
            return std::log(transfer_eigenvalue(s, sigma, size).lambda);
        };
        RootSearch mid = bowen_root(pressure_mid, theta0, opt.sigma_max, opt.sigma_tol);
        out.value = mid.value;
        out.lower = mid.lo;
        out.upper = mid.hi;
        if (s.countable()) {
            auto p_lo = [&](double sigma) {
                return std::log(transfer_eigenvalue(s, sigma, size).lambda_lower);
            };
            auto p_hi = [&](double sigma) {
                return std::log(transfer_eigenvalue(s, sigma, size).lambda_upper);
            };
            RootSearch rlo = bowen_root(p_lo, theta0, opt.sigma_max, opt.sigma_tol);
            RootSearch rhi = bowen_root(p_hi, theta0, opt.sigma_max, opt.sigma_tol);
            out.lower = std::min(rlo.lo, mid.lo);
            out.upper = std::max(rhi.hi, mid.hi);
        }
        out.method = s.countable() ? "bowen-transfer-tail" : "bowen-transfer";
        if (mid.boundary) out.method += "-boundary";
    } else {
        auto p_mid = [&](double sigma) { return pressure_direct(s, sigma, 1).value; };
        auto p_lo = [&](double sigma) { return pressure_direct(s, sigma, 1).lower; };
        auto p_hi = [&](double sigma) { return pressure_direct(s, sigma, 1).upper; };
        RootSearch mid = bowen_root(p_mid, theta0, opt.sigma_max, opt.sigma_tol);
        RootSearch rlo = bowen_root(p_lo, theta0, opt.sigma_max, opt.sigma_tol);
        RootSearch rhi = bowen_root(p_hi, theta0, opt.sigma_max, opt.sigma_tol);
        out.value = mid.value;
        out.lower = std::min(rlo.lo, mid.lo);
        out.upper = std::max(rhi.hi, mid.hi);
        out.method = mid.boundary ? "bowen-direct-boundary" : "bowen-direct";
    }
    out.error = std::max(0.5 * (out.upper - out.lower), opt.sigma_tol * 0.5);
    if (out.value < out.lower) out.value = out.lower;
    if (out.value > out.upper) out.value = out.upper;
    return out;
}

} // namespace limset
