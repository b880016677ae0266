#ifndef PGROW_CONSTRUCT_HPP
#define PGROW_CONSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"
#include "pgrow/limits.hpp"
#include "pgrow/model.hpp"
#include "pgrow/proximate.hpp"

namespace pgrow {

/// The order of A relative to M: limsup ln(1 + A(r)) / ln M(r).
struct OrderEstimate {
    double rho_star = 0.0; // NaN when not finite
    bool finite = false;
    Track track; // ln(1+A)/ln M over the usable subgrid
    LimitEstimate limsup;
    bool window_warning = false; // tail-half and tail-quarter maxima disagree
};

struct ConstructOptions {
    double touch_tol = 1e-3;     // A/V >= 1 - touch_tol counts as a touch point
    double construct_tol = 1e-2; // success thresholds on A/V
    double smooth_frac = 0.02;   // slope-mollification window, relative in s; 0 disables
    LimitOptions limits;         // also sets the limsup window for the order estimate
    bool force_numeric_derivatives = false;
    double rho_agree_floor = 2e-2;
};

/// Output of the proximate-majorant construction.
struct ConstructionResult {
    explicit ConstructionResult(LogLogSample env) : v(std::move(env)) {}

    LogLogSample v;   // ln V over the usable x subgrid
    RhoTrack rho_m;   // of V relative to M
    std::vector<std::size_t> touch_indices; // subgrid indices with A/V >= 1 - touch_tol
    double q_upper = 0.0;  // max A/V over the whole subgrid (<= 1 by construction)
    double q_touch = 0.0;  // max A/V over the last half
    ProximateVerdict proximate;
    double rho_star = 0.0;
    double rho_gap = 0.0;      // |rho - rho_star| when the limit converged
    double terminal_slope = 0.0;
    double lift = 0.0;         // uniform lift applied after slope smoothing
    bool used_ray = false;     // anchored-ray candidate vs plain hull fallback
    bool window_warning = false;
    bool success = false;
    std::size_t offset = 0;    // index into the model grid where the subgrid starts
};

/// Checks that A is increasing and strictly positive, and estimates its
/// order relative to M. Throws InfiniteOrderError when the limsup diverges;
/// finite is false when the tail maxima have not stabilized.
OrderEstimate order_estimate(const GrowthInput& A, const ModelGrowth& M,
                             const ConstructOptions& opts = {});

/// Builds a proximate growth function V relative to M that majorizes A on
/// the grid (A/V <= 1) and touches it in the tail (max A/V over the last
/// half close to 1).
///
/// Both steps run in the transformed coordinates s = ln M, phi = ln A. The
/// primary candidate augments phi with a ray of slope rho_star anchored at
/// the tail point maximizing phi - rho_star s, then takes the upper concave
/// hull; this pins the terminal slope to rho_star, which oscillating inputs
/// need. When the ray candidate misses the touching requirement (monotone
/// inputs whose window-limsup overshoots the terminal slope), the plain hull
/// of phi is used instead. Hull slopes are mollified over relative windows
/// and re-integrated from the right; a final uniform lift restores exact
/// majorization.
ConstructionResult construct_proximate(const GrowthInput& A, const ModelGrowth& M,
                                       const ConstructOptions& opts = {});

/// Upper concave majorant of the points (s_i, v_i), evaluated back on every
/// s_i. s must be strictly increasing.
std::vector<double> upper_concave_hull(const std::vector<double>& s,
                                       const std::vector<double>& v);

} // namespace pgrow

#endif
