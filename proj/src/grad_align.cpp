#include "dpda/grad_align.hpp"

#include <algorithm>
#include <cmath>

#include "dpda/errors.hpp"

namespace dpda::gradalign {

using numkit::axpy;
using numkit::dot;
using numkit::lincomb;
using numkit::mean_pair;
using numkit::norm;

namespace {

// cosine that maps degenerate inputs to 0 instead of throwing; used only
// for telemetry fields, never for correction math.
double safe_cosine(const ParamVector& a, const ParamVector& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

} // namespace

void AlignmentMethod::validate() const {
    if (kind == AlignKind::GradVac) {
        if (!(gradvac_beta > 0.0 && gradvac_beta <= 1.0))
            throw ConfigError("AlignmentMethod: gradvac_beta must be in (0, 1]");
        if (!(gradvac_phi_init >= 0.0 && gradvac_phi_init < 1.0))
            throw ConfigError("AlignmentMethod: gradvac_phi_init must be in [0, 1)");
    }
    if (kind == AlignKind::CAGrad) {
        if (!(cagrad_c >= 0.0 && cagrad_c < 1.0))
            throw ConfigError("AlignmentMethod: cagrad_c must be in [0, 1)");
    }
}

bool is_conflict(const ParamVector& g_x, const ParamVector& g_xt) {
    return dot(g_x, g_xt) < 0.0;
}

ParamVector pcgrad_project(const ParamVector& g_a, const ParamVector& g_b) {
    const double nb2 = dot(g_b, g_b);
    if (nb2 == 0.0)
        throw DegenerateGradientError("pcgrad_project: zero reference gradient");
    const double d = dot(g_a, g_b);
    if (d >= 0.0) return g_a;
    return lincomb(1.0, g_a, -d / nb2, g_b);
}

std::pair<ParamVector, ParamVector> align_pcgrad(const ParamVector& g_x,
                                                 const ParamVector& g_xt) {
    // both projections use the original unmodified pair
    return {pcgrad_project(g_x, g_xt), pcgrad_project(g_xt, g_x)};
}

std::tuple<ParamVector, ParamVector, GradVacState> align_gradvac(
    const ParamVector& g_x, const ParamVector& g_xt, const GradVacState& state,
    double beta) {
    const double nx = norm(g_x);
    const double nxt = norm(g_xt);
    if (nx == 0.0 || nxt == 0.0)
        throw DegenerateGradientError("align_gradvac: zero gradient");
    const double phi = std::clamp(dot(g_x, g_xt) / (nx * nxt), -1.0, 1.0);

    ParamVector gx_out = g_x;
    ParamVector gxt_out = g_xt;
    if (phi < state.phi_target) {
        const double target = state.phi_target;
        const double root_target = std::sqrt(1.0 - target * target);
        const double root_phi = std::sqrt(std::max(0.0, 1.0 - phi * phi));
        const double shared = target * root_phi - phi * root_target;
        gx_out = lincomb(1.0, g_x, nx * shared / (nxt * root_target), g_xt);
        gxt_out = lincomb(1.0, g_xt, nxt * shared / (nx * root_target), g_x);
    }

    GradVacState next = state;
    if (phi > 0.0) {
        // clamp keeps the target strictly below 1 even after long runs of
        // phi == 1 observations
        next.phi_target =
            std::min((1.0 - beta) * state.phi_target + beta * phi, 1.0 - 1e-9);
    }
    return {std::move(gx_out), std::move(gxt_out), next};
}

ParamVector align_cagrad(const ParamVector& g_x, const ParamVector& g_xt,
                         double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw ConfigError("align_cagrad: c must be in [0, 1)");
    ParamVector g0 = mean_pair(g_x, g_xt);
    const double n0 = norm(g0);
    if (c == 0.0 || n0 == 0.0) return g0;

    // F(w) reduces to a scalar expression in five precomputed products
    const double xx = dot(g_x, g_x);
    const double tt = dot(g_xt, g_xt);
    const double xt = dot(g_x, g_xt);
    const double x0 = dot(g_x, g0);
    const double t0 = dot(g_xt, g0);
    auto objective = [&](double w) {
        const double lin = w * x0 + (1.0 - w) * t0;
        const double quad = w * w * xx + 2.0 * w * (1.0 - w) * xt +
                            (1.0 - w) * (1.0 - w) * tt;
        return lin + c * n0 * std::sqrt(std::max(quad, 0.0));
    };
    const double w_star = numkit::minimize_scalar(objective, 0.0, 1.0, 1e-8);

    ParamVector gw = lincomb(w_star, g_x, 1.0 - w_star, g_xt);
    const double ngw = norm(gw);
    if (ngw < 1e-12) return g0;
    axpy(c * n0 / ngw, gw, g0);
    return g0;
}

AlignmentOutcome align(const ParamVector& g_x, const ParamVector& g_xt,
                       const AlignmentMethod& method, GradVacState& state) {
    if (g_x.size() != g_xt.size())
        throw DimensionError("align: gradient length mismatch");
    if (!numkit::all_finite(g_x) || !numkit::all_finite(g_xt))
        throw NumericError("align: non-finite gradient");
    method.validate();

    AlignmentOutcome out;
    out.conflict_detected = is_conflict(g_x, g_xt);
    out.cosine_before = safe_cosine(g_x, g_xt);

    switch (method.kind) {
        case AlignKind::NoAlign:
            out.g_final = mean_pair(g_x, g_xt);
            out.alignment_applied = false;
            out.cosine_after = out.cosine_before;
            break;
        case AlignKind::PCGrad: {
            auto [ax, axt] = align_pcgrad(g_x, g_xt);
            out.g_final = mean_pair(ax, axt);
            out.alignment_applied = out.conflict_detected;
            out.cosine_after = safe_cosine(ax, axt);
            break;
        }
        case AlignKind::GradVac: {
            const double phi = numkit::cosine(g_x, g_xt);
            const bool fires = phi < state.phi_target;
            auto [ax, axt, next] =
                align_gradvac(g_x, g_xt, state, method.gradvac_beta);
            state = next;
            out.g_final = mean_pair(ax, axt);
            out.alignment_applied = fires;
            out.cosine_after = safe_cosine(ax, axt);
            break;
        }
        case AlignKind::CAGrad:
            out.g_final = align_cagrad(g_x, g_xt, method.cagrad_c);
            // CAGrad rebuilds g from the raw pair rather than correcting it
            out.alignment_applied = method.cagrad_c > 0.0;
            out.cosine_after = out.cosine_before;
            break;
    }
    return out;
}

} // namespace dpda::gradalign
