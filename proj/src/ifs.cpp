#include "limset/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "limset/fit.hpp"

namespace limset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// --- analytic tail summation -------------------------------------------

// Convergence of sum_k k^{-a} log^{-b}(k+1).
bool k_series_converges_ab(double a, double b) {
    if (a > 1.0 + 1e-13) return true;
    if (a < 1.0 - 1e-13) return false;
    return b > 1.0 + 1e-13;
}

double k_term(double a, double b, double k) {
    double t = std::pow(k, -a);
    if (b != 0.0) t *= std::pow(std::log(k + 1.0), -b);
    return t;
}

struct SumBracket {
    double lo = 0.0;
    double hi = 0.0;
};

// sum_{k >= from} k^{-a} log^{-b}(k+1); requires convergence, from >= 1.
// b == 0 uses Euler-Maclaurin (essentially exact); b > 0 sums explicitly and
// carries the integral-test remainder as bracket width.
SumBracket k_series_sum(double a, double b, int from) {
    SumBracket out;
    if (b == 0.0) {
        const long long K = std::max<long long>(from, 4096);
        double s = 0.0;
        for (long long k = K - 1; k >= from; --k) s += std::pow(static_cast<double>(k), -a);
        const double x = static_cast<double>(K);
        double tail = std::pow(x, 1.0 - a) / (a - 1.0)
                    + 0.5 * std::pow(x, -a)
                    + a * std::pow(x, -a - 1.0) / 12.0
                    - a * (a + 1.0) * (a + 2.0) * std::pow(x, -a - 3.0) / 720.0;
        double err = (a + 4.0) * (a + 3.0) * (a + 2.0) * (a + 1.0) * a
                   * std::pow(x, -a - 5.0) / 30240.0;
        err = std::abs(err) + 1e-16 * (s + tail);
        out.lo = s + tail - err;
        out.hi = s + tail + err;
        return out;
    }
    const long long K = std::max<long long>(from, 1LL << 21);
    double s = 0.0;
    for (long long k = K - 1; k >= from; --k) s += k_term(a, b, static_cast<double>(k));
    const double x = static_cast<double>(K);
    double rem = k_term(a, b, x)
               + std::pow(std::log(x + 1.0), -b) * std::pow(x, 1.0 - a) / (a - 1.0);
    out.lo = s;
    out.hi = s + rem;
    return out;
}

// Geometric generation factor sum_{n>=1} 2^{-n x}.
double dyadic_factor(double x) {
    return 1.0 / std::expm1(x * std::log(2.0));
}

bool near_real(const Complex& z, double tol) {
    return std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real()));
}

} // namespace

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

void TailLaw::validate() const {
    if (!(k_exponent > 1.0))
        throw InvalidSystem("tail law: k exponent must exceed 1");
    if (log_exponent < 0.0)
        throw InvalidSystem("tail law: log exponent must be nonnegative");
    if (!(A > 0.0) || !(B >= A))
        throw InvalidSystem("tail law: need 0 < A <= B");
    if (multiplicity < 1)
        throw InvalidSystem("tail law: multiplicity must be at least 1");
    if (dyadic) {
        if (!(alpha > 0.0) || !(beta >= alpha))
            throw InvalidSystem("tail law: need 0 < alpha <= beta");
        if (first_index < 0)
            throw InvalidSystem("tail law: first index must be nonnegative");
    } else if (first_index < 1) {
        throw InvalidSystem("tail law: plain tails start at index 1 or later");
    }
}

double PsiBracket::value() const {
    if (std::isinf(upper)) return upper;
    if (lower <= 0.0) return 0.5 * (lower + upper);
    return std::sqrt(lower * upper);
}

// --- construction -------------------------------------------------------

double IfsSystem::branch_norm_on_cell(const Branch& br, const Interval& cell) const {
    const MoebiusMap& f = br.map;
    if (std::abs(f.c) < 1e-14)
        return 1.0 / std::norm(f.d);
    Complex pole = -f.d / f.c;
    if (near_real(pole, 1e-9)) {
        double px = pole.real();
        if (cell.strictly_inside(px, 1e-12 * cell.width()))
            throw PoleInDomain("branch pole inside a domain cell near x = " + std::to_string(px));
        return std::max(f.derivative_modulus(Complex(cell.lo)),
                        f.derivative_modulus(Complex(cell.hi)));
    }
    // Complex pole: |c x + d|^2 is a positive parabola; check its vertex too.
    double vx = pole.real();
    double best = std::max(f.derivative_modulus(Complex(cell.lo)),
                           f.derivative_modulus(Complex(cell.hi)));
    if (cell.contains(vx)) best = std::max(best, f.derivative_modulus(Complex(vx)));
    return best;
}

double IfsSystem::branch_norm(const Branch& br) const {
    if (br.synthetic) return br.synthetic_norm;
    double best = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c)
        if (br.domain >> c & 1)
            best = std::max(best, branch_norm_on_cell(br, cells_[c]));
    return best;
}

void IfsSystem::validate_finite_part() {
    const std::size_t C = cells_.size();
    if (C == 0 || C > 64)
        throw InvalidSystem("ifs: need between 1 and 64 cells");
    std::vector<Interval> sorted = cells_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
    for (std::size_t i = 1; i < C; ++i)
        if (sorted[i].lo < sorted[i - 1].hi - 1e-12)
            throw InvalidSystem("ifs: cells overlap");

    for (const Branch& br : branches_) {
        if (br.synthetic)
            throw InvalidSystem("ifs: synthetic branches belong to countable tails only");
        if (br.target < 0 || static_cast<std::size_t>(br.target) >= C)
            throw InvalidSystem("ifs: branch target out of range");
        if (br.domain == 0)
            throw InvalidSystem("ifs: branch with empty domain");
        if (C < 64 && (br.domain >> C) != 0)
            throw InvalidSystem("ifs: branch domain references missing cells");
        const Interval& tgt = cells_[br.target];
        for (std::size_t c = 0; c < C; ++c) {
            if (!(br.domain >> c & 1)) continue;
            const Interval& cell = cells_[c];
            branch_norm_on_cell(br, cell);  // pole screening
            Complex ylo = br.map.apply(Complex(cell.lo));
            Complex yhi = br.map.apply(Complex(cell.hi));
            if (!near_real(ylo, 1e-9) || !near_real(yhi, 1e-9))
                throw InvalidSystem("ifs: branch does not preserve the real line");
            double lo = std::min(ylo.real(), yhi.real());
            double hi = std::max(ylo.real(), yhi.real());
            double tol = 1e-9 * std::max(1.0, tgt.width());
            if (lo < tgt.lo - tol || hi > tgt.hi + tol)
                throw InvalidSystem("ifs: branch image escapes its target cell");
        }
    }

    // Images of distinct branches into a common target must not overlap
    // (tangency allowed).
    auto image_on = [&](const Branch& br, const Interval& cell) {
        double u = br.map.apply(Complex(cell.lo)).real();
        double v = br.map.apply(Complex(cell.hi)).real();
        return std::pair<double, double>(std::min(u, v), std::max(u, v));
    };
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        for (std::size_t j = i + 1; j < branches_.size(); ++j) {
            if (branches_[i].target != branches_[j].target) continue;
            double tol = 1e-9 * std::max(1.0, cells_[branches_[i].target].width());
            for (std::size_t ci = 0; ci < C; ++ci) {
                if (!(branches_[i].domain >> ci & 1)) continue;
                auto u = image_on(branches_[i], cells_[ci]);
                for (std::size_t cj = 0; cj < C; ++cj) {
                    if (!(branches_[j].domain >> cj & 1)) continue;
                    auto v = image_on(branches_[j], cells_[cj]);
                    if (u.first < v.second - tol && v.first < u.second - tol)
                        throw SeparationViolated("ifs: branch images overlap inside cell " +
                                                 std::to_string(branches_[i].target));
                }
            }
        }
    }

    // Contraction: one-step norms may touch 1 only if every admissible
    // two-step word contracts strictly (rules out parabolic tangencies).
    std::vector<double> norms(branches_.size());
    contraction_ = 0.0;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        norms[i] = branch_norm(branches_[i]);
        contraction_ = std::max(contraction_, norms[i]);
    }
    if (contraction_ > 1.0 + 1e-12)
        throw InvalidSystem("ifs: a branch is expanding on its domain");
    two_step_contraction_ = 0.0;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        for (std::size_t j = 0; j < branches_.size(); ++j) {
            if (!admissible_step(static_cast<int>(i), static_cast<int>(j))) continue;
            MoebiusMap m = compose(branches_[i].map, branches_[j].map);
            double s2 = 0.0;
            for (std::size_t c = 0; c < C; ++c) {
                if (!(branches_[j].domain >> c & 1)) continue;
                Branch tmp;
                tmp.map = m;
                s2 = std::max(s2, branch_norm_on_cell(tmp, cells_[c]));
            }
            two_step_contraction_ = std::max(two_step_contraction_, s2);
        }
    }
    if (!branches_.empty() && two_step_contraction_ >= 1.0 - 1e-9)
        throw InvalidSystem(
            "ifs: not eventually contracting (parabolic tangency); "
            "model such systems through a countable tail law instead");
}

IfsSystem IfsSystem::finite(std::vector<Interval> cells, std::vector<Branch> branches) {
    if (branches.empty())
        throw InvalidSystem("ifs: no branches");
    IfsSystem s;
    s.cells_ = std::move(cells);
    s.branches_ = std::move(branches);
    s.validate_finite_part();
    return s;
}

IfsSystem IfsSystem::similarity(const std::vector<double>& ratios,
                                const std::vector<double>& offsets) {
    if (ratios.size() != offsets.size() || ratios.empty())
        throw InvalidSystem("similarity ifs: need matching, nonempty ratio/offset lists");
    std::vector<Branch> branches;
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        double r = ratios[k], o = offsets[k];
        if (!(r > 0.0) || r >= 1.0 - 1e-12)
            throw InvalidSystem("similarity ifs: ratios must lie in (0,1)");
        if (o < -1e-12 || o + r > 1.0 + 1e-12)
            throw InvalidSystem("similarity ifs: image escapes [0,1]");
        Branch br;
        br.map = MoebiusMap::affine(Complex(r), Complex(o));
        br.target = 0;
        br.domain = 1;
        br.label = std::to_string(k);
        branches.push_back(br);
    }
    return finite({Interval(0.0, 1.0)}, std::move(branches));
}

IfsSystem IfsSystem::continued_fraction(const std::vector<int>& digits) {
    if (digits.empty())
        throw InvalidSystem("continued fraction ifs: empty digit set");
    std::vector<int> ds = digits;
    std::sort(ds.begin(), ds.end());
    if (std::unique(ds.begin(), ds.end()) != ds.end() || ds.front() < 1)
        throw InvalidSystem("continued fraction ifs: digits must be distinct and >= 1");
    // Smallest invariant hull: iterate [lo,hi] -> [phi_max(hi), phi_min(lo)].
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 2000; ++it) {
        double nlo = 1.0 / (ds.back() + hi);
        double nhi = 1.0 / (ds.front() + lo);
        if (std::abs(nlo - lo) + std::abs(nhi - hi) < 1e-16) { lo = nlo; hi = nhi; break; }
        lo = nlo; hi = nhi;
    }
    if (!(lo < hi))
        throw InvalidSystem("continued fraction ifs: degenerate hull (one digit?)");
    std::vector<Branch> branches;
    for (int k : ds) {
        Branch br;
        br.map = MoebiusMap(Complex(0.0), Complex(1.0), Complex(1.0), Complex(k));
        br.target = 0;
        br.domain = 1;
        br.label = std::to_string(k);
        branches.push_back(br);
    }
    return finite({Interval(lo, hi)}, std::move(branches));
}

IfsSystem IfsSystem::gauss_tail(int head_letters) {
    if (head_letters < 1)
        throw InvalidSystem("gauss tail ifs: need at least one explicit digit");
    IfsSystem s;
    s.cells_ = {Interval(0.0, 1.0)};
    for (int k = 1; k <= head_letters; ++k) {
        Branch br;
        br.map = MoebiusMap(Complex(0.0), Complex(1.0), Complex(1.0), Complex(k));
        br.target = 0;
        br.domain = 1;
        br.label = std::to_string(k);
        s.branches_.push_back(br);
    }
    TailLaw law;
    law.k_exponent = 2.0;
    law.first_index = head_letters + 1;
    law.validate();
    s.tail_ = law;
    s.tail_map_ = [](int k) {
        return MoebiusMap(Complex(0.0), Complex(1.0), Complex(1.0), Complex(k));
    };
    s.tail_accumulation_ = 0.0;
    s.contraction_ = 1.0;  // ||phi_1'|| = 1 at x = 0
    s.two_step_contraction_ = 0.25;
    return s;
}

IfsSystem IfsSystem::analytic_tail(const TailLaw& law) {
    law.validate();
    IfsSystem s;
    s.cells_ = {Interval(0.0, 1.0)};
    s.tail_ = law;
    s.contraction_ = 0.0;
    s.two_step_contraction_ = 0.0;
    return s;
}

// --- geometry helpers ----------------------------------------------------

double IfsSystem::hull_diameter() const {
    double lo = kInf, hi = -kInf;
    for (const Interval& c : cells_) { lo = std::min(lo, c.lo); hi = std::max(hi, c.hi); }
    return hi - lo;
}

double IfsSystem::distortion_kappa() const {
    // |phi''/phi'| = 2|c|/|c x + d| for Moebius branches, monotone off the
    // pole, so cell endpoints dominate.
    double kappa = 0.0;
    for (const Branch& br : branches_) {
        if (br.synthetic) continue;
        const MoebiusMap& f = br.map;
        if (std::abs(f.c) < 1e-14) continue;
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            if (!(br.domain >> c & 1)) continue;
            for (double x : {cells_[c].lo, cells_[c].hi}) {
                double den = std::abs(f.c * Complex(x) + f.d);
                if (den < 1e-150) throw PoleInDomain("distortion: pole on a cell boundary");
                kappa = std::max(kappa, 2.0 * std::abs(f.c) / den);
            }
        }
    }
    return kappa;
}

bool IfsSystem::admissible_step(int first, int second) const {
    const Branch& f = branches_.at(first);
    const Branch& g = branches_.at(second);
    return (f.domain >> g.target & 1) != 0;
}

bool IfsSystem::admissible(const Word& w) const {
    for (int letter : w)
        if (letter < 0 || letter >= letter_count()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!admissible_step(w[i], w[i + 1])) return false;
    return true;
}

MoebiusMap IfsSystem::cylinder_map(const Word& w) const {
    if (!admissible(w))
        throw InadmissibleWord("cylinder_map: inadmissible word " + word_to_string(w));
    MoebiusMap m = MoebiusMap::identity();
    for (int letter : w) {
        if (branches_[letter].synthetic)
            throw UnsupportedSystem("cylinder_map: synthetic letter has no geometry");
        m = compose(m, branches_[letter].map);
    }
    return m;
}

double IfsSystem::derivative_norm(const Word& w) const {
    if (!admissible(w))
        throw InadmissibleWord("derivative_norm: inadmissible word " + word_to_string(w));
    if (w.empty()) return 1.0;
    bool synthetic = false;
    for (int letter : w) synthetic = synthetic || branches_[letter].synthetic;
    if (synthetic) {
        // Distortion-free model: per-letter norms multiply.
        double prod = 1.0;
        for (int letter : w) prod *= branch_norm(branches_[letter]);
        return prod;
    }
    MoebiusMap m = cylinder_map(w);
    const Branch& last = branches_[w.back()];
    Branch tmp;
    tmp.map = m;
    double best = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c)
        if (last.domain >> c & 1)
            best = std::max(best, branch_norm_on_cell(tmp, cells_[c]));
    return best;
}

// --- partition sums ------------------------------------------------------

std::vector<IfsSystem::PsiGridRow> IfsSystem::psi_grid(const std::vector<double>& sigmas,
                                                       int n) const {
    if (countable())
        throw UnsupportedSystem("psi_grid: finite alphabets only");
    if (n < 1) throw DepthOutOfRange("psi_grid: n must be positive");
    const int L = letter_count();
    const std::size_t C = cells_.size();
    std::vector<PsiGridRow> rows(sigmas.size());
    for (auto& r : rows) r.mass_by_first_target.assign(C, 0.0);

    // Iterative DFS over admissible words w[0..n-1], composing matrices on
    // the way down; the norm at a leaf is evaluated on the innermost
    // letter's domain cells.
    std::vector<int> word(n, -1);
    std::vector<MoebiusMap> mats(n);
    int depth = 0;
    while (depth >= 0) {
        int next = ++word[depth];
        if (next >= L) {
            word[depth] = -1;
            --depth;
            continue;
        }
        if (depth > 0 && !admissible_step(word[depth - 1], next)) continue;
        mats[depth] = (depth == 0) ? branches_[next].map
                                   : compose(mats[depth - 1], branches_[next].map);
        if (depth + 1 < n) { ++depth; continue; }

        Branch tmp;
        tmp.map = mats[depth];
        const Branch& last = branches_[word[depth]];
        double norm = 0.0;
        for (std::size_t c = 0; c < C; ++c)
            if (last.domain >> c & 1)
                norm = std::max(norm, branch_norm_on_cell(tmp, cells_[c]));
        double ln = std::log(norm);
        int ftarget = branches_[word[0]].target;
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            double wgt = std::exp(sigmas[i] * ln);
            rows[i].total += wgt;
            rows[i].mass_by_first_target[ftarget] += wgt;
        }
    }
    return rows;
}

PsiBracket IfsSystem::psi_bracket(double sigma, int n) const {
    if (n < 1) throw DepthOutOfRange("psi_bracket: n must be positive");
    if (!countable()) {
        auto rows = psi_grid({sigma}, n);
        return PsiBracket{rows[0].total, rows[0].total};
    }
    const TailLaw& law = *tail_;
    double head = 0.0;
    for (const Branch& br : branches_)
        head += std::pow(branch_norm(br), sigma);
    if (!tail_converges(sigma))
        return PsiBracket{kInf, kInf};
    double a = law.k_exponent * sigma, b = law.log_exponent * sigma;
    SumBracket S = k_series_sum(a, b, std::max(law.first_index, 1));
    double k0 = (law.dyadic && law.first_index == 0) ? 1.0 : 0.0;
    double lo, hi;
    if (law.dyadic) {
        lo = std::pow(law.A, sigma) * dyadic_factor(law.beta * sigma)
           * (k0 + law.multiplicity * S.lo);
        hi = std::pow(law.B, sigma) * dyadic_factor(law.alpha * sigma)
           * (k0 + law.multiplicity * S.hi);
    } else {
        lo = std::pow(law.A, sigma) * law.multiplicity * S.lo;
        hi = std::pow(law.B, sigma) * law.multiplicity * S.hi;
    }
    // Full shift over the model weights: psi_n factorizes exactly.
    return PsiBracket{std::pow(head + lo, n), std::pow(head + hi, n)};
}

double IfsSystem::psi_n(double sigma, int n) const {
    return psi_bracket(sigma, n).value();
}

double IfsSystem::theta_number() const {
    if (!countable()) return -kInf;
    return 1.0 / tail_->k_exponent;
}

bool IfsSystem::tail_converges(double sigma) const {
    if (!countable()) return true;
    if (sigma <= 0.0) return false;
    return k_series_converges_ab(tail_->k_exponent * sigma, tail_->log_exponent * sigma);
}

PsiBracket IfsSystem::tail_transfer_bracket(double sigma) const {
    if (!countable() || !tail_map_)
        throw UnsupportedSystem("tail_transfer_bracket: needs a geometric countable tail");
    if (!tail_converges(sigma))
        throw TailDiverges("tail_transfer_bracket: tail series diverges at sigma");
    const TailLaw& law = *tail_;
    double a = law.k_exponent * sigma, b = law.log_exponent * sigma;
    SumBracket above = k_series_sum(a, b, law.first_index);
    SumBracket below = k_series_sum(a, b, law.first_index + 1);
    return PsiBracket{std::pow(law.A, sigma) * law.multiplicity * below.lo,
                      std::pow(law.B, sigma) * law.multiplicity * above.hi};
}

// --- sampling ------------------------------------------------------------

std::vector<double> IfsSystem::limit_set_sample(int depth, int tail_cutoff) const {
    if (depth < 1 || depth > 32)
        throw DepthOutOfRange("limit_set_sample: depth out of range");
    std::vector<Branch> letters = branches_;
    if (countable()) {
        if (!tail_map_)
            throw UnsupportedSystem("limit_set_sample: synthetic tails have no geometry");
        for (int k = tail_->first_index; k <= tail_cutoff; ++k) {
            Branch br;
            br.map = tail_map_(k);
            br.target = 0;
            br.domain = 1;
            br.label = std::to_string(k);
            letters.push_back(br);
        }
    }
    const int L = static_cast<int>(letters.size());
    if (L < 1) throw UnsupportedSystem("limit_set_sample: no letters");
    double expected = std::pow(static_cast<double>(L), depth);
    if (expected > 2e7)
        throw DepthOutOfRange("limit_set_sample: sample would exceed 2e7 points");

    auto step_ok = [&](int i, int j) { return (letters[i].domain >> letters[j].target & 1) != 0; };
    std::vector<double> anchors(L);
    for (int j = 0; j < L; ++j) {
        for (std::size_t c = 0; c < cells_.size(); ++c)
            if (letters[j].domain >> c & 1) { anchors[j] = cells_[c].mid(); break; }
    }

    std::vector<double> out;
    std::vector<int> word(depth, -1);
    std::vector<MoebiusMap> mats(depth);
    int d = 0;
    while (d >= 0) {
        int next = ++word[d];
        if (next >= L) { word[d] = -1; --d; continue; }
        if (d > 0 && !step_ok(word[d - 1], next)) continue;
        mats[d] = (d == 0) ? letters[next].map : compose(mats[d - 1], letters[next].map);
        if (d + 1 < depth) { ++d; continue; }
        out.push_back(mats[d].apply(Complex(anchors[next])).real());
    }
    return out;
}

IfsSystem IfsSystem::conjugated(const MoebiusMap& h) const {
    if (countable())
        throw UnsupportedSystem("conjugated: finite alphabets only");
    if (h.anti)
        throw UnsupportedSystem("conjugated: conformal conjugators only");
    double lo = kInf, hi = -kInf;
    for (const Interval& c : cells_) { lo = std::min(lo, c.lo); hi = std::max(hi, c.hi); }
    if (std::abs(h.c) > 1e-14) {
        Complex pole = -h.d / h.c;
        if (near_real(pole, 1e-9) && pole.real() >= lo - 1e-9 && pole.real() <= hi + 1e-9)
            throw UnsupportedSystem("conjugated: conjugator pole meets the system hull");
    }
    std::vector<Interval> cells;
    for (const Interval& c : cells_) {
        Complex u = h.apply(Complex(c.lo)), v = h.apply(Complex(c.hi));
        if (!near_real(u, 1e-9) || !near_real(v, 1e-9))
            throw UnsupportedSystem("conjugated: conjugator does not preserve the real line");
        cells.emplace_back(std::min(u.real(), v.real()), std::max(u.real(), v.real()));
    }
    MoebiusMap hinv = h.inverse();
    std::vector<Branch> branches = branches_;
    for (Branch& br : branches) br.map = compose(h, compose(br.map, hinv));
    return finite(std::move(cells), std::move(branches));
}

// --- box dimension -------------------------------------------------------

BoxDimension box_dimension_estimate(const std::vector<double>& points,
                                    const std::vector<double>& scales) {
    if (points.size() < 100)
        throw InsufficientData("box_dimension_estimate: need at least 100 points");
    if (scales.size() < 4)
        throw InsufficientData("box_dimension_estimate: need at least 4 scales");
    for (double s : scales)
        if (!(s > 0.0)) throw InsufficientData("box_dimension_estimate: scales must be positive");
    std::vector<double> pts = points;
    std::sort(pts.begin(), pts.end());
    const double x0 = pts.front();

    BoxDimension out;
    std::vector<double> xs, ys;
    for (double eps : scales) {
        std::size_t count = 0;
        long long prev_bin = -1;
        bool first = true;
        for (double p : pts) {
            long long bin = static_cast<long long>(std::floor((p - x0) / eps));
            if (first || bin != prev_bin) { ++count; prev_bin = bin; first = false; }
        }
        out.scales.push_back(eps);
        out.counts.push_back(count);
        xs.push_back(std::log(1.0 / eps));
        ys.push_back(std::log(static_cast<double>(count)));
    }
    LinearFit fit = linear_fit(xs, ys);
    out.value = fit.slope;
    out.stderr_slope = fit.slope_stderr;
    out.lower = fit.slope - 2.0 * fit.slope_stderr;
    out.upper = fit.slope + 2.0 * fit.slope_stderr;
    return out;
}

} // namespace limset
