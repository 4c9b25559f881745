#pragma once

#include <string>
#include <vector>

#include "limset/ifs.hpp"

namespace limset {

// Estimate of the topological pressure P(sigma) with a two-sided bracket.
// Direct estimates: upper = min_n (1/n) log psi_n (subadditivity), lower =
// max_n (1/n)(log psi_n - log C_n) where C_n absorbs bounded distortion and
// the admissibility loss when concatenating n-blocks.  A diverging tail
// reports +infinity in all three fields.
struct PressureEstimate {
    double sigma = 0.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int n_used = 0;
    std::string method;

    bool diverged() const;
};

struct DimensionResult {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double error = 0.0;  // at least half the bracket width
    std::string method;
};

enum class Regularity { finite_alphabet, regular, irregular };

std::string to_string(Regularity r);

// Countable systems are regular when psi(theta) = +infinity (the partition
// sum still diverges at the finiteness threshold).
Regularity regularity_check(const IfsSystem& s);

PressureEstimate pressure_direct(const IfsSystem& s, double sigma, int n_max);

// Shared-enumeration variant: one depth-first pass per level serves the
// whole sigma grid.
std::vector<PressureEstimate> pressure_direct_grid(const IfsSystem& s,
                                                   const std::vector<double>& sigmas,
                                                   int n_max);

// Leading eigenvalue of the transfer operator L_sigma h = sum_i
// |phi_i'|^sigma (h o phi_i) on per-cell Chebyshev collocation with `size`
// nodes per cell.  exp P(sigma) is this eigenvalue.  Countable geometric
// tails are folded in as a rank-one perturbation using the TailLaw envelope,
// which widens [lambda_lower, lambda_upper].
struct TransferResult {
    double lambda = 0.0;
    double lambda_lower = 0.0;
    double lambda_upper = 0.0;
    int iterations = 0;
};

TransferResult transfer_eigenvalue(const IfsSystem& s, double sigma, int size);

struct BowenOptions {
    int transfer_size = 24;
    double sigma_tol = 1e-11;
    double sigma_max = 2.0;
};

// Unique root of P(sigma) = 0 by bisection: spectral pressure for systems
// with geometry, direct (model) pressure for synthetic countable systems.
// Irregular systems are rejected (NotRegular); if the pressure is still
// positive at sigma_max the hunt fails (BracketFailure); systems whose
// pressure is nonpositive on the whole admissible range report the boundary
// value (dimension at the finiteness threshold).
DimensionResult bowen_dimension(const IfsSystem& s, const BowenOptions& opt = {});

} // namespace limset
