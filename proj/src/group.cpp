#include "limset/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "limset/fit.hpp"

namespace limset {

namespace {

void require_real_center(const Circle& c) {
    if (std::abs(c.center.imag()) > 1e-12 * (1.0 + std::abs(c.center.real())))
        throw InvalidCircle("group: circles must be centered on the real line");
}

} // namespace

void GroupPresentation::finish_generators() {
    cayley_ = cayley_to_disk();
    MoebiusMap inv = cayley_.inverse();
    for (Generator& g : gens_) {
        g.disk_map = project_disk_isometry(compose(compose(cayley_, g.line_map), inv));
        if (g.source_circle >= 0) {
            try {
                g.disk_source = map_circle(cayley_, circles_[g.source_circle]);
                g.disk_target = map_circle(cayley_, circles_[g.target_circle]);
                g.disk_circles_ok = true;
            } catch (const PoleHit&) {
                g.disk_circles_ok = false;
            }
        }
    }
}

void GroupPresentation::check_separation() const {
    const std::size_t n = circles_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist = std::abs(circles_[i].center - circles_[j].center);
            double rr = circles_[i].radius + circles_[j].radius;
            if (dist < rr - 1e-9 * rr)
                throw SeparationViolated("group: circles " + std::to_string(i) + " and " +
                                         std::to_string(j) + " overlap");
        }
    }
    // Ping-pong: every generator must send the other circles (and the
    // basepoint preimage i) into its closed target disk.
    const Complex I(0.0, 1.0);
    for (const Generator& g : gens_) {
        if (g.source_circle < 0) continue;
        const Circle& tgt = circles_[g.target_circle];
        auto inside_target = [&](const Complex& z) {
            Complex w = g.line_map.apply(z);
            if (is_infinity(w)) return false;
            return std::abs(w - tgt.center) <= tgt.radius * (1.0 + 1e-9) + 1e-12;
        };
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) == g.source_circle) continue;
            for (int k = 0; k < 8; ++k) {
                double th = 2.0 * M_PI * k / 8.0;
                Complex z = circles_[j].center +
                            circles_[j].radius * Complex(std::cos(th), std::sin(th));
                if (!inside_target(z))
                    throw SeparationViolated("group: ping-pong fails for generator " + g.label);
            }
        }
        if (!inside_target(I))
            throw SeparationViolated("group: basepoint escapes target of " + g.label);
    }
}

GroupPresentation GroupPresentation::reflection_group(const std::vector<Circle>& circles) {
    if (circles.size() < 2 || circles.size() > 64)
        throw InvalidSystem("reflection group: need between 2 and 64 circles");
    GroupPresentation p;
    p.kind_ = GroupKind::reflection;
    p.circles_ = circles;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        require_real_center(circles[i]);
        Generator g;
        g.label = "s" + std::to_string(i + 1);
        g.line_map = reflect(circles[i]);
        g.inverse = static_cast<int>(i);
        g.source_circle = g.target_circle = static_cast<int>(i);
        p.gens_.push_back(g);
    }
    p.finish_generators();
    p.check_separation();
    return p;
}

GroupPresentation GroupPresentation::schottky_group(
    const std::vector<std::pair<Circle, Circle>>& pairs) {
    if (pairs.empty() || pairs.size() > 16)
        throw InvalidSystem("schottky group: need between 1 and 16 pairs");
    GroupPresentation p;
    p.kind_ = GroupKind::schottky_free;
    const int m = static_cast<int>(pairs.size());
    for (int i = 0; i < m; ++i) {
        require_real_center(pairs[i].first);
        require_real_center(pairs[i].second);
        p.circles_.push_back(pairs[i].first);
        p.circles_.push_back(pairs[i].second);
    }
    for (int i = 0; i < m; ++i) {
        MoebiusMap fwd = compose(reflect(pairs[i].second),
                                 swapping_inversion(pairs[i].first, pairs[i].second));
        Generator g;
        g.label = (m <= 26) ? std::string(1, static_cast<char>('a' + i))
                            : "g" + std::to_string(i + 1);
        g.line_map = fwd;
        g.inverse = m + i;
        g.source_circle = 2 * i;
        g.target_circle = 2 * i + 1;
        p.gens_.push_back(g);
    }
    for (int i = 0; i < m; ++i) {
        Generator g;
        g.label = (m <= 26) ? std::string(1, static_cast<char>('A' + i))
                            : "G" + std::to_string(i + 1);
        g.line_map = p.gens_[i].line_map.inverse();
        g.inverse = i;
        g.source_circle = 2 * i + 1;
        g.target_circle = 2 * i;
        p.gens_.push_back(g);
    }
    p.finish_generators();
    p.check_separation();
    return p;
}

GroupPresentation GroupPresentation::cyclic_group(double multiplier) {
    if (!(multiplier > 0.0) || multiplier == 1.0)
        throw InvalidSystem("cyclic group: multiplier must be positive and not 1");
    if (multiplier < 1.0) multiplier = 1.0 / multiplier;
    GroupPresentation p;
    p.kind_ = GroupKind::cyclic;
    Generator g;
    g.label = "g";
    g.line_map = MoebiusMap::affine(Complex(multiplier), Complex(0.0));
    g.inverse = 1;
    p.gens_.push_back(g);
    Generator gi;
    gi.label = "G";
    gi.line_map = g.line_map.inverse();
    gi.inverse = 0;
    p.gens_.push_back(gi);
    p.finish_generators();
    return p;
}

GroupPresentation GroupPresentation::dyadic_chain_group(int depth) {
    if (depth < 1 || depth > 24)
        throw DepthOutOfRange("dyadic chain: depth must lie in [1,24]");
    GroupPresentation p;
    p.kind_ = GroupKind::schottky_free;
    // D*_1 on [0,2], D*_n on [2^{n-1}, 2^n]; mirrors across the imaginary axis.
    for (int n = 1; n <= depth; ++n) {
        double lo = (n == 1) ? 0.0 : std::ldexp(1.0, n - 1);
        double hi = std::ldexp(1.0, n);
        p.circles_.emplace_back(Complex(0.5 * (lo + hi), 0.0), 0.5 * (hi - lo));
    }
    for (int n = 0; n < depth; ++n) {
        const Circle& c = p.circles_[n];
        p.circles_.emplace_back(-c.center, c.radius);
    }
    MoebiusMap tau = reflect_line(0.0);
    for (int n = 0; n < depth; ++n) {
        Generator g;
        g.label = "g" + std::to_string(n + 1);
        g.line_map = compose(tau, reflect(p.circles_[n]));
        g.inverse = depth + n;
        g.source_circle = n;
        g.target_circle = depth + n;
        p.gens_.push_back(g);
    }
    for (int n = 0; n < depth; ++n) {
        Generator g;
        g.label = "G" + std::to_string(n + 1);
        g.line_map = p.gens_[n].line_map.inverse();
        g.inverse = n;
        g.source_circle = depth + n;
        g.target_circle = n;
        p.gens_.push_back(g);
    }
    p.finish_generators();
    p.check_separation();
    return p;
}

OrbitBall enumerate_orbit(const GroupPresentation& g, int max_len) {
    if (max_len < 0 || max_len > 64)
        throw DepthOutOfRange("enumerate_orbit: max_len out of range");
    const auto& gens = g.generators();
    const double m = static_cast<double>(gens.size());
    double projected = 1.0;
    double shell = 1.0;
    for (int L = 1; L <= max_len; ++L) {
        shell *= (L == 1) ? m : std::max(m - 1.0, 1.0);
        projected += shell;
        if (projected > 2e6)
            throw DepthOutOfRange("enumerate_orbit: ball exceeds 2e6 words");
    }

    OrbitBall ball;
    ball.max_len = max_len;
    struct Node {
        MoebiusMap mat;
        int last = -1;
        int length = 0;
    };
    std::deque<Node> frontier;
    std::deque<std::size_t> frontier_entry;

    auto push_entry = [&](const MoebiusMap& mat, const Word& w, const std::string& label,
                          int length) {
        OrbitBall::Entry e;
        e.word = w;
        e.label = label;
        e.length = length;
        // SU(1,1) structure: |d|^2 - |b|^2 = 1, so 1 - |g0|^2 = 1/|d|^2.
        double abs_b = std::abs(mat.b), abs_d = std::abs(mat.d);
        double r = abs_b / abs_d;
        e.point = mat.b / mat.d;
        e.one_minus_abs = 1.0 / (abs_d * abs_d * (1.0 + r));
        e.rho = 2.0 * (std::log(abs_d) + std::log1p(r));
        if (!std::isfinite(e.rho))
            throw DepthOutOfRange("enumerate_orbit: word leaves double range, lower max_len");
        ball.entries.push_back(std::move(e));
    };

    push_entry(MoebiusMap::identity(), {}, "", 0);
    frontier.push_back(Node{MoebiusMap::identity(), -1, 0});
    frontier_entry.push_back(0);

    while (!frontier.empty()) {
        Node node = frontier.front();
        frontier.pop_front();
        std::size_t idx = frontier_entry.front();
        frontier_entry.pop_front();
        if (node.length == max_len) continue;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (node.last >= 0 && static_cast<int>(j) == gens[node.last].inverse) continue;
            Node child;
            child.mat = compose(node.mat, gens[j].disk_map);
            child.last = static_cast<int>(j);
            child.length = node.length + 1;
            Word w = ball.entries[idx].word;
            w.push_back(static_cast<int>(j));
            std::string label = ball.entries[idx].label;
            if (!label.empty()) label += '.';
            label += gens[j].label;
            push_entry(child.mat, w, label, child.length);
            frontier.push_back(std::move(child));
            frontier_entry.push_back(ball.entries.size() - 1);
        }
    }
    return ball;
}

double poincare_partial_sum(const OrbitBall& ball, double t) {
    double s = 0.0;
    for (const auto& e : ball.entries) s += std::pow(e.one_minus_abs, t);
    return s;
}

DimensionResult critical_exponent_estimate(const OrbitBall& ball) {
    if (ball.entries.size() < 5)
        throw InsufficientData("critical_exponent_estimate: ball too small");
    // Distance shells (1e-9 resolution) with cumulative counts.
    std::map<long long, int> shells;
    for (const auto& e : ball.entries)
        shells[static_cast<long long>(std::llround(e.rho * 1e9))] += 1;
    std::vector<double> rho, logN;
    double cum = 0.0;
    double rho_max = 0.0;
    for (const auto& [key, cnt] : shells) rho_max = std::max(rho_max, key * 1e-9);
    for (const auto& [key, cnt] : shells) {
        cum += cnt;
        double r = key * 1e-9;
        if (r >= 0.5 * rho_max) {
            rho.push_back(r);
            logN.push_back(std::log(cum));
        }
    }
    if (rho.size() < 4)
        throw InsufficientData("critical_exponent_estimate: fewer than 4 usable shells");
    LinearFit fit = linear_fit(rho, logN);
    DimensionResult out;
    out.value = std::max(fit.slope, 0.0);
    out.lower = std::max(fit.slope - 2.0 * fit.slope_stderr, 0.0);
    out.upper = std::max(fit.slope + 2.0 * fit.slope_stderr, out.value);
    out.lower = std::min(out.lower, out.value);
    out.error = std::max(0.5 * (out.upper - out.lower), 1e-12);
    out.method = "orbit-counting";
    return out;
}

ConvergenceProbe convergence_type_probe(const GroupPresentation& g, int max_len, double t) {
    if (!(t > 0.0))
        throw Error("convergence_type_probe: exponent must be positive");
    OrbitBall ball = enumerate_orbit(g, max_len);
    ConvergenceProbe probe;
    probe.exponent = t;
    probe.shell_sums.assign(static_cast<std::size_t>(std::max(max_len, 0)), 0.0);
    for (const auto& e : ball.entries)
        if (e.length >= 1) probe.shell_sums[e.length - 1] += std::pow(e.one_minus_abs, t);
    double cum = 1.0;  // identity term
    for (double s : probe.shell_sums) {
        cum += s;
        probe.partial_sums.push_back(cum);
    }
    for (std::size_t L = 1; L < probe.shell_sums.size(); ++L) {
        if (probe.shell_sums[L - 1] <= 0.0) break;
        probe.ratios.push_back(probe.shell_sums[L] / probe.shell_sums[L - 1]);
    }
    if (probe.ratios.size() < 3) {
        probe.verdict = "inconclusive";
        return probe;
    }
    std::size_t K = std::min<std::size_t>(5, probe.ratios.size());
    bool all_high = true, all_low = true;
    for (std::size_t i = probe.ratios.size() - K; i < probe.ratios.size(); ++i) {
        all_high = all_high && probe.ratios[i] > 0.9;
        all_low = all_low && probe.ratios[i] < 0.6;
    }
    probe.verdict = all_high ? "appears-divergent"
                  : all_low  ? "appears-convergent"
                             : "inconclusive";
    return probe;
}

IfsSystem ifs_from_schottky(const GroupPresentation& g) {
    if (g.circles().empty())
        throw UnsupportedSystem("ifs_from_schottky: presentation has no circle data");
    std::vector<Interval> cells;
    for (const Circle& c : g.circles())
        cells.emplace_back(c.center.real() - c.radius, c.center.real() + c.radius);
    std::uint64_t all = (g.circles().size() == 64)
                            ? ~std::uint64_t(0)
                            : ((std::uint64_t(1) << g.circles().size()) - 1);
    std::vector<Branch> branches;
    for (const Generator& gen : g.generators()) {
        Branch br;
        br.map = gen.line_map;
        br.target = gen.target_circle;
        br.domain = all & ~(std::uint64_t(1) << gen.source_circle);
        br.label = gen.label;
        branches.push_back(br);
    }
    return IfsSystem::finite(std::move(cells), std::move(branches));
}

} // namespace limset
