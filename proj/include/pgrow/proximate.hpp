#ifndef PGROW_PROXIMATE_HPP
#define PGROW_PROXIMATE_HPP

#include <optional>
#include <utility>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"
#include "pgrow/limits.hpp"
#include "pgrow/model.hpp"

namespace pgrow {

struct ProximateOptions {
    LimitOptions limits;
    bool force_numeric_derivatives = false;
};

/// Verdict on whether V is a proximate growth function relative to M:
/// the track M V'/(M' V) must converge to a nonnegative limit rho.
struct ProximateVerdict {
    bool is_proximate = false;
    LimitEstimate rho;
    Track l1; // M V'/(M' V) over the grid, formed as dlog V / dlog M
};

/// The candidate order rho_M = ln V / ln M and its x-derivative, on the
/// subgrid where ln M has grown past 0.1.
struct RhoTrack {
    std::vector<double> xs;
    std::vector<double> rho_m;
    std::vector<double> rho_m_prime;
    std::size_t offset = 0; // index into the model grid where the subgrid starts
};

struct EquivalenceReport {
    ProximateVerdict verdict_I;
    LimitEstimate limit_3;       // lim rho_M
    LimitEstimate limit_4;       // lim (M/M') rho_M' ln M
    bool limit_4_zero = false;
    double identity6_max_residual = 0.0;
    std::optional<double> rho_agreement; // |rho from (I) - rho from the ratio| when both exist
    bool statement_II = false;
    bool theorem_consistent = false;
};

/// The track M V'/(M' V) = (d/dx ln V)/(d/dx ln M) on the model's grid.
Track l1_track(const GrowthInput& V, const ModelGrowth& M, const ProximateOptions& opts = {});

ProximateVerdict check_proximate(const GrowthInput& V, const ModelGrowth& M,
                                 const ProximateOptions& opts = {});

RhoTrack rho_track(const GrowthInput& V, const ModelGrowth& M,
                   const ProximateOptions& opts = {});

/// The two limits of the equivalent statement: lim rho_M and
/// lim (M/M') rho_M' ln M (the latter written in x as ln M * rho_M' / dlog M).
std::pair<LimitEstimate, LimitEstimate> limits_3_and_4(const GrowthInput& V,
                                                       const ModelGrowth& M,
                                                       const ProximateOptions& opts = {});

/// Max residual of the differentiation identity
///   M V'/(M' V) = rho_M + (M/M') rho_M' ln M
/// over the interior subgrid. Algebraically zero with exact derivatives.
double identity6_residual(const GrowthInput& V, const ModelGrowth& M,
                          const ProximateOptions& opts = {});

EquivalenceReport equivalence_report(const GrowthInput& V, const ModelGrowth& M,
                                     const ProximateOptions& opts = {});

/// A candidate order given as a closed form (values, with exact derivative)
/// or as a plain value track over x.
using RhoInput = std::variant<AnalyticFamily, Track>;

struct ValironVerdict {
    bool is_valiron = false;
    LimitEstimate rho_limit;  // lim rho(r)
    LimitEstimate decay_limit; // lim r rho'(r) ln r  =  lim x drho/dx
};

/// Classical proximate-order test: rho(r) >= 0 differentiable with
/// lim rho(r) finite and lim r rho'(r) ln r = 0.
ValironVerdict check_valiron(const RhoInput& rho, const GridSpec& grid,
                             const ProximateOptions& opts = {});

struct ValironBridgeReport {
    ValironVerdict valiron;
    ProximateVerdict proximate; // of V(r) = r^{rho(r)} relative to id
    bool agree = false;
    std::optional<double> rho_gap;
    double rho_tolerance = 0.0;
};

/// Builds V(r) = r^{rho(r)} and checks that proximateness relative to the
/// identity model agrees with the classical test: same verdict, same rho.
ValironBridgeReport valiron_bridge(const RhoInput& rho, const GridSpec& grid,
                                   const ProximateOptions& opts = {});

} // namespace pgrow

#endif
