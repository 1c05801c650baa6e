#pragma once

#include <tuple>
#include <utility>

#include "dpda/numkit.hpp"

namespace dpda::gradalign {

using numkit::ParamVector;

enum class AlignKind { NoAlign, PCGrad, GradVac, CAGrad };

// Selects the alignment method and carries its hyperparameters. Unused
// fields are ignored by the other methods.
struct AlignmentMethod {
    AlignKind kind = AlignKind::NoAlign;
    double gradvac_beta = 0.01;     // EMA rate for the target similarity, (0, 1]
    double gradvac_phi_init = 0.0;  // initial target similarity, [0, 1)
    double cagrad_c = 0.5;          // constraint radius fraction, [0, 1)

    void validate() const; // throws ConfigError on out-of-range values
};

// Adaptive target similarity, updated as an EMA of the positive observed
// cosine similarities. Stays in [0, 1).
struct GradVacState {
    double phi_target = 0.0;
};

struct AlignmentOutcome {
    ParamVector g_final;
    bool conflict_detected = false;
    bool alignment_applied = false;
    double cosine_before = 0.0; // raw-pair cosine, 0 if either norm is zero
    double cosine_after = 0.0;  // cosine of the (possibly corrected) pair
};

// Conflict criterion: strictly negative inner product.
bool is_conflict(const ParamVector& g_x, const ParamVector& g_xt);

// Projects g_a onto the normal plane of g_b when the pair conflicts;
// returns g_a unchanged otherwise:
//   g_a' = g_a - (<g_a,g_b>/|g_b|^2) g_b    if <g_a,g_b> < 0
// Throws DegenerateGradientError when g_b is zero.
ParamVector pcgrad_project(const ParamVector& g_a, const ParamVector& g_b);

// Applies pcgrad_project in both directions, each computed from the
// original unmodified pair.
std::pair<ParamVector, ParamVector> align_pcgrad(const ParamVector& g_x,
                                                 const ParamVector& g_xt);

// When the observed cosine phi falls below state.phi_target, corrects both
// gradients (symmetrically, from the original pair) via
//   g_x' = g_x + |g_x| (phiT sqrt(1-phi^2) - phi sqrt(1-phiT^2))
//                / (|g_xt| sqrt(1-phiT^2)) * g_xt
// so that cosine(g_x', g_xt) == phi_target. The target is then EMA-updated
// with rate beta using only strictly positive observed similarities.
// beta = 0 freezes the target. Throws DegenerateGradientError on a zero
// gradient.
std::tuple<ParamVector, ParamVector, GradVacState> align_gradvac(
    const ParamVector& g_x, const ParamVector& g_xt, const GradVacState& state,
    double beta);

// Conflict-averse update: with g0 = (g_x + g_xt)/2, solves
//   max_g min{<g_x,g>, <g_xt,g>}  s.t.  |g - g0| <= c |g0|
// through its 1-D dual: minimize F(w) = <g_w,g0> + c|g0||g_w| over the
// mixing weight w in [0,1] with g_w = w g_x + (1-w) g_xt, then return
//   g = g0 + (c|g0|/|g_w*|) g_w*.
// Returns g0 when c = 0 or |g_w*| < 1e-12. Throws ConfigError for
// c outside [0, 1).
ParamVector align_cagrad(const ParamVector& g_x, const ParamVector& g_xt,
                         double c);

// Dispatches on method.kind and combines the per-path gradients into the
// final update direction: the mean of the aligned pair for
// NoAlign/PCGrad/GradVac, the align_cagrad output for CAGrad. `state` is
// read and updated only by GradVac.
AlignmentOutcome align(const ParamVector& g_x, const ParamVector& g_xt,
                       const AlignmentMethod& method, GradVacState& state);

} // namespace dpda::gradalign
