#pragma once

#include <string>
#include <utility>
#include <vector>

#include "limset/ifs.hpp"
#include "limset/moebius.hpp"
#include "limset/pressure.hpp"

namespace limset {

enum class GroupKind { schottky_free, reflection, cyclic };

// One generator of a Fuchsian presentation, kept in both models: the
// half-plane action it was built from and its Cayley conjugate on the disk
// (snapped to SU(1,1) so long products keep |d|^2 - |b|^2 = 1 to rounding).
struct Generator {
    std::string label;
    MoebiusMap line_map;
    MoebiusMap disk_map;
    int inverse = 0;         // index of the inverse generator (self for reflections)
    int source_circle = -1;  // indices into GroupPresentation::circles()
    int target_circle = -1;
    // Cayley images of the source/target circles.  A circle through the
    // Cayley pole -i maps to a diameter line instead; disk_circles_ok is
    // false then and the two fields keep their unit-circle defaults.
    bool disk_circles_ok = false;
    Circle disk_source{Complex(0.0, 0.0), 1.0};
    Circle disk_target{Complex(0.0, 0.0), 1.0};
};

// Finitely generated group of hyperbolic isometries given by circle data on
// the real line.  Reduced words with respect to the obvious cancellation
// rule (no letter followed by its inverse; reflections are involutions)
// biject with group elements for all three kinds.
class GroupPresentation {
public:
    // Reflection group generated by inversions in pairwise disjoint
    // (tangency allowed) circles centered on the real line.
    static GroupPresentation reflection_group(const std::vector<Circle>& circles);

    // Free Schottky group: one generator per (source, target) pair, built as
    // reflect(target) composed with the inversion swapping the two circles;
    // it maps the exterior of source onto the interior of target.
    static GroupPresentation schottky_group(
        const std::vector<std::pair<Circle, Circle>>& pairs);

    // Cyclic hyperbolic group generated by z -> multiplier * z.
    static GroupPresentation cyclic_group(double multiplier);

    // Reflection-pair chain over the dyadic disks D*_1 on [0,2] and D*_n on
    // [2^{n-1}, 2^n], paired with their mirror images across the imaginary
    // axis; generators are tau o sigma_n with tau(z) = -conj(z).  Their
    // Cayley images accumulate at i; the first generator is parabolic
    // (tangency at 0), the rest hyperbolic.
    static GroupPresentation dyadic_chain_group(int depth);

    GroupKind kind() const { return kind_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Circle>& circles() const { return circles_; }
    const MoebiusMap& cayley() const { return cayley_; }
    Complex basepoint() const { return Complex(0.0, 0.0); }

private:
    GroupKind kind_ = GroupKind::schottky_free;
    std::vector<Generator> gens_;
    std::vector<Circle> circles_;
    MoebiusMap cayley_;

    void finish_generators();
    void check_separation() const;
};

// Ball of reduced words in the disk model, breadth-first (identity first,
// then by word length, letters in generator order).
struct OrbitBall {
    struct Entry {
        Word word;           // generator indices
        std::string label;   // dotted generator labels
        Complex point;       // g(0) in the disk
        double rho;          // hyperbolic distance to the basepoint
        double one_minus_abs;  // 1 - |g(0)| computed without cancellation
        int length = 0;
    };
    std::vector<Entry> entries;
    int max_len = 0;
};

OrbitBall enumerate_orbit(const GroupPresentation& g, int max_len);

// Partial Poincare sum over the ball: sum (1 - |g(0)|)^t, identity included.
double poincare_partial_sum(const OrbitBall& ball, double t);

// Least-squares slope of log N(R) against R over the distance shells in the
// upper half of the observed range (the early shells are dominated by
// transients).  Needs at least 4 shells there.
DimensionResult critical_exponent_estimate(const OrbitBall& ball);

// Growth table of the series sum (1 - |g(0)|)^t by word length, with the
// shell-ratio verdict: the last few ratios all above 0.9 reads as divergent
// growth, all below 0.6 as convergent, anything else inconclusive.
struct ConvergenceProbe {
    double exponent = 1.0;
    std::vector<double> shell_sums;    // index L-1 holds word length L
    std::vector<double> partial_sums;  // cumulative, identity term included
    std::vector<double> ratios;
    std::string verdict;
};

ConvergenceProbe convergence_type_probe(const GroupPresentation& g, int max_len, double t = 1.0);

// The induced interval IFS of a circle-backed presentation: one cell per
// circle, one branch per generator acting on every cell except its source.
IfsSystem ifs_from_schottky(const GroupPresentation& g);

} // namespace limset
