#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "limset/interval.hpp"
#include "limset/moebius.hpp"

namespace limset {

// A word over the branch alphabet; w[0] is the outermost letter, so the
// associated map is phi_{w[0]} o phi_{w[1]} o ... o phi_{w[n-1]}.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

// Asymptotic law for the derivative sup-norms of a countable tail of
// branches.  The k-th tail letter has modeled norm
//
//     norm(k)   = const * k^{-p} * log^{-q}(k+1)           (plain tail)
//     norm(n,k) = const * 2^{-n e} * k^{-p} * log^{-q}(k+1) (dyadic tail)
//
// with the constant between A and B and, in the dyadic case, the exponent e
// between alpha and beta.  first_index = 0 adds a unit k = 0 term to each
// dyadic generation; multiplicity counts symmetric copies of each index.
struct TailLaw {
    double k_exponent = 2.0;    // p > 1
    double log_exponent = 0.0;  // q >= 0
    bool dyadic = false;
    double alpha = 1.0;         // upper envelope exponent, 0 < alpha <= beta
    double beta = 1.0;          // lower envelope exponent
    double A = 1.0;             // lower envelope constant, 0 < A <= B
    double B = 1.0;             // upper envelope constant
    int multiplicity = 1;
    int first_index = 1;

    void validate() const;
};

// One inverse branch: a Moebius map defined on a union of cells (bitmask)
// that sends each of them into the target cell.  Synthetic branches carry a
// modeled norm but no geometry.
struct Branch {
    MoebiusMap map;
    int target = 0;
    std::uint64_t domain = 0;
    std::string label;
    bool synthetic = false;
    double synthetic_norm = 0.0;
};

// Two-sided estimate of a partition sum; finite systems have lower == upper.
struct PsiBracket {
    double lower = 0.0;
    double upper = 0.0;
    double value() const;
};

// Conformal iterated function system on a finite union of closed real
// intervals, with either a finite alphabet or a finite head plus a countable
// tail described by a TailLaw.  Admissibility is Markov: letter j may follow
// letter i exactly when the target cell of j lies in the domain of i.
class IfsSystem {
public:
    // Generic finite-alphabet constructor; validates that every branch maps
    // each of its domain cells into its target cell, that images of distinct
    // branches with a common target have disjoint interiors, that no pole
    // falls inside a domain cell, and that the system is (at worst two-step)
    // uniformly contracting.
    static IfsSystem finite(std::vector<Interval> cells, std::vector<Branch> branches);

    // Affine maps x -> r_k x + o_k on the single cell [0,1].
    static IfsSystem similarity(const std::vector<double>& ratios,
                                const std::vector<double>& offsets);

    // Inverse branches x -> 1/(k + x) of the Gauss map for the given digit
    // set, on the smallest invariant hull.
    static IfsSystem continued_fraction(const std::vector<int>& digits);

    // Full continued-fraction alphabet: explicit digits 1..head_letters plus
    // the exact analytic tail (norms k^{-2}).
    static IfsSystem gauss_tail(int head_letters);

    // Purely synthetic countable system whose letters are the tail law
    // itself (no geometry, full shift).
    static IfsSystem analytic_tail(const TailLaw& law);

    bool countable() const { return tail_.has_value(); }
    int letter_count() const { return static_cast<int>(branches_.size()); }
    const std::vector<Interval>& cells() const { return cells_; }
    const std::vector<Branch>& branches() const { return branches_; }
    const std::optional<TailLaw>& tail() const { return tail_; }

    // Max one-step derivative sup-norm over explicit letters; systems where
    // this equals 1 (tangencies) are accepted when all two-step norms
    // contract, and two_step_contraction() reports that bound.
    double contraction_bound() const { return contraction_; }
    double two_step_contraction() const { return two_step_contraction_; }
    double hull_diameter() const;
    // Bounded distortion rate: sup |phi''/phi'| over explicit branches.
    double distortion_kappa() const;

    bool admissible_step(int first, int second) const;
    bool admissible(const Word& w) const;

    // Composite map of an admissible word (explicit letters only).
    MoebiusMap cylinder_map(const Word& w) const;

    // Exact sup of |phi_w'| over the cells the word acts on.
    double derivative_norm(const Word& w) const;

    // Partition sum psi_n(sigma) = sum over admissible n-words of
    // ||phi_w'||^sigma.  Finite alphabets: exact sup-norms via depth-first
    // enumeration.  Countable alphabets: per-letter model weights (head
    // norms exact, tail summed analytically), full shift, so psi_n is the
    // n-th power of psi_1.  Returns +infinity when the tail diverges.
    PsiBracket psi_bracket(double sigma, int n) const;
    double psi_n(double sigma, int n) const;

    // One depth-first pass evaluating psi_n on a whole sigma grid; also
    // reports, per sigma, the mass split by the target cell of the first
    // letter (used for superadditive pressure bounds).  Finite only.
    struct PsiGridRow {
        double total = 0.0;
        std::vector<double> mass_by_first_target;
    };
    std::vector<PsiGridRow> psi_grid(const std::vector<double>& sigmas, int n) const;

    // inf{sigma : psi_1(sigma) < inf}; -infinity for finite alphabets.
    double theta_number() const;
    bool tail_converges(double sigma) const;

    // Sum over tail letters of inf/sup of |phi_k'|^sigma, for folding the
    // tail into a transfer operator as a rank-one envelope.  Requires a
    // geometric tail (tail letters with actual maps).
    PsiBracket tail_transfer_bracket(double sigma) const;
    bool tail_has_maps() const { return static_cast<bool>(tail_map_); }
    double tail_accumulation_point() const { return tail_accumulation_; }

    // One representative point per admissible word of the given depth (the
    // image of a fixed anchor in the innermost letter's domain).  Countable
    // systems with geometric tails instantiate tail letters up to
    // tail_cutoff first; synthetic systems are rejected.
    std::vector<double> limit_set_sample(int depth, int tail_cutoff = 0) const;

    // Conjugate a finite system by a real Moebius map (pole off the hull).
    IfsSystem conjugated(const MoebiusMap& h) const;

private:
    std::vector<Interval> cells_;
    std::vector<Branch> branches_;
    std::optional<TailLaw> tail_;
    std::function<MoebiusMap(int)> tail_map_;  // geometric tails only
    double tail_accumulation_ = 0.0;
    double contraction_ = 0.0;
    double two_step_contraction_ = 0.0;

    IfsSystem() = default;
    void validate_finite_part();
    double branch_norm_on_cell(const Branch& br, const Interval& cell) const;
    double branch_norm(const Branch& br) const;
};

// Least-squares box-counting estimate from a 1-d point sample: slope of
// log N(eps) against log(1/eps) with its two-standard-error bracket.
struct BoxDimension {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double stderr_slope = 0.0;
    std::vector<double> scales;
    std::vector<std::size_t> counts;
};

BoxDimension box_dimension_estimate(const std::vector<double>& points,
                                    const std::vector<double>& scales);

} // namespace limset
