#include "pgrow/proximate.hpp"

#include <cmath>
#include <string>

#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"

namespace pgrow {

namespace {

// First index where ln M has grown past 0.1; rho_M is only meaningful there.
std::size_t rho_start(const ModelGrowth& M) {
    const auto& ym = M.ym();
    std::size_t i = 0;
    while (i < ym.size() && ym[i] < 0.1) ++i;
    if (ym.size() - i < 8)
        throw DomainError("ln M stays below 0.1 on almost the whole grid; "
                          "start the grid at a larger x0");
    return i;
}

struct VTracks {
    std::vector<double> yv;
    std::vector<double> dv;
    bool exact = false;
};

VTracks v_tracks(const GrowthInput& V, const ModelGrowth& M, const ProximateOptions& opts) {
    VTracks t;
    const LogLogSample s = sample_of(V, M.xs());
    t.yv = s.ys();
    t.exact = has_exact_dlog(V) && !opts.force_numeric_derivatives;
    t.dv = dlog_track_of(V, M.xs(), opts.force_numeric_derivatives);
    return t;
}

void check_model_derivative(const ModelGrowth& M, std::size_t i) {
    if (M.dlog()[i] == 0.0)
        throw SingularityError("d/dx ln M vanishes at x=" + std::to_string(M.xs()[i]),
                               M.xs()[i]);
}

} // namespace

Track l1_track(const GrowthInput& V, const ModelGrowth& M, const ProximateOptions& opts) {
    const VTracks t = v_tracks(V, M, opts);
    Track out;
    out.xs = M.xs();
    out.values.resize(out.xs.size());
    for (std::size_t i = 0; i < out.xs.size(); ++i) {
        check_model_derivative(M, i);
        out.values[i] = t.dv[i] / M.dlog()[i];
    }
    return out;
}

ProximateVerdict check_proximate(const GrowthInput& V, const ModelGrowth& M,
                                 const ProximateOptions& opts) {
    ProximateVerdict verdict;
    verdict.l1 = l1_track(V, M, opts);
    verdict.rho = estimate_limit(verdict.l1, opts.limits);
    // A converged negative limit is not proximate: the limit must land in
    // [0, infinity). rho = 0 is accepted.
    verdict.is_proximate = verdict.rho.converged() && *verdict.rho.value >= 0.0;
    return verdict;
}

RhoTrack rho_track(const GrowthInput& V, const ModelGrowth& M, const ProximateOptions& opts) {
    const VTracks t = v_tracks(V, M, opts);
    const std::size_t start = rho_start(M);

    RhoTrack rt;
    rt.offset = start;
    const std::size_t n = M.xs().size() - start;
    rt.xs.resize(n);
    rt.rho_m.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        rt.xs[k] = M.xs()[start + k];
        rt.rho_m[k] = t.yv[start + k] / M.ym()[start + k];
    }

    rt.rho_m_prime.resize(n);
    if (t.exact && M.exact_derivative()) {
        // rho_M' = (yV' yM - yV yM') / yM^2, all ingredients exact.
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = start + k;
            const double ym = M.ym()[i];
            rt.rho_m_prime[k] = (t.dv[i] * ym - t.yv[i] * M.dlog()[i]) / (ym * ym);
        }
    } else {
        LogLogSample rs(rt.xs, rt.rho_m);
        rt.rho_m_prime = dlog_track(rs);
    }
    return rt;
}

std::pair<LimitEstimate, LimitEstimate> limits_3_and_4(const GrowthInput& V,
                                                       const ModelGrowth& M,
                                                       const ProximateOptions& opts) {
    const RhoTrack rt = rho_track(V, M, opts);

    Track t3{rt.xs, rt.rho_m};

    // (M/M') rho_M' ln M rewritten in x: ln M * rho_M'(x) / dlog M.
    Track t4;
    t4.xs = rt.xs;
    t4.values.resize(rt.xs.size());
    for (std::size_t k = 0; k < rt.xs.size(); ++k) {
        const std::size_t i = rt.offset + k;
        check_model_derivative(M, i);
        t4.values[k] = M.ym()[i] * rt.rho_m_prime[k] / M.dlog()[i];
    }

    return {estimate_limit(t3, opts.limits), estimate_limit(t4, opts.limits)};
}

double identity6_residual(const GrowthInput& V, const ModelGrowth& M,
                          const ProximateOptions& opts) {
    const Track l1 = l1_track(V, M, opts);
    const RhoTrack rt = rho_track(V, M, opts);

    double res = 0.0;
    for (std::size_t k = 1; k + 1 < rt.xs.size(); ++k) {
        const std::size_t i = rt.offset + k;
        const double rhs = rt.rho_m[k] + (M.ym()[i] / M.dlog()[i]) * rt.rho_m_prime[k];
        res = std::max(res, std::fabs(l1.values[i] - rhs));
    }
    return res;
}

EquivalenceReport equivalence_report(const GrowthInput& V, const ModelGrowth& M,
                                     const ProximateOptions& opts) {
    EquivalenceReport rep;
    rep.verdict_I = check_proximate(V, M, opts);
    auto [l3, l4] = limits_3_and_4(V, M, opts);
    rep.limit_3 = l3;
    rep.limit_4 = l4;
    rep.limit_4_zero = converged_to_zero(l4, opts.limits);
    rep.identity6_max_residual = identity6_residual(V, M, opts);

    rep.statement_II = l3.converged() && *l3.value >= 0.0 && rep.limit_4_zero;

    bool consistent = rep.verdict_I.is_proximate == rep.statement_II;
    if (rep.verdict_I.is_proximate && l3.converged()) {
        rep.rho_agreement = std::fabs(*rep.verdict_I.rho.value - *l3.value);
        consistent = consistent && *rep.rho_agreement <=
                                       rep.verdict_I.rho.tail_residual + l3.tail_residual;
    }
    rep.theorem_consistent = consistent;
    return rep;
}

namespace {

struct RhoTracks {
    Track values; // rho(e^x) over the grid
    Track decay;  // x * d rho/dx  ( = r rho'(r) ln r )
};

RhoTracks rho_tracks(const RhoInput& rho, const GridSpec& grid) {
    RhoTracks out;
    if (const auto* fam = std::get_if<AnalyticFamily>(&rho)) {
        out.values.xs = grid.points();
        out.values.values.resize(out.values.xs.size());
        out.decay.xs = out.values.xs;
        out.decay.values.resize(out.values.xs.size());
        for (std::size_t i = 0; i < out.values.xs.size(); ++i) {
            const double x = out.values.xs[i];
            out.values.values[i] = fam->eval_checked(x);
            out.decay.values[i] = x * fam->dlog_checked(x);
        }
        return out;
    }
    const auto& tr = std::get<Track>(rho);
    if (tr.size() < 32)
        throw DomainError("candidate-order track too short: " + std::to_string(tr.size()));
    out.values = tr;
    // reuse the derivative engine; it only needs finite values over increasing xs
    LogLogSample s(tr.xs, tr.values);
    const std::vector<double> d = dlog_track(s);
    out.decay.xs = tr.xs;
    out.decay.values.resize(tr.xs.size());
    for (std::size_t i = 0; i < tr.xs.size(); ++i)
        out.decay.values[i] = tr.xs[i] * d[i];
    return out;
}

void require_nonnegative(const Track& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values.values[i] < 0.0)
            throw PreconditionError("candidate order is negative at x=" +
                                    std::to_string(values.xs[i]) +
                                    " (rho=" + std::to_string(values.values[i]) + ")");
}

} // namespace

ValironVerdict check_valiron(const RhoInput& rho, const GridSpec& grid,
                             const ProximateOptions& opts) {
    const RhoTracks t = rho_tracks(rho, grid);
    require_nonnegative(t.values);

    ValironVerdict v;
    v.rho_limit = estimate_limit(t.values, opts.limits);
    v.decay_limit = estimate_limit(t.decay, opts.limits);
    v.is_valiron = v.rho_limit.converged() && *v.rho_limit.value >= 0.0 &&
                   converged_to_zero(v.decay_limit, opts.limits);
    return v;
}

ValironBridgeReport valiron_bridge(const RhoInput& rho, const GridSpec& grid,
                                   const ProximateOptions& opts) {
    ValironBridgeReport rep;
    rep.valiron = check_valiron(rho, grid, opts);

    // V(r) = r^{rho(r)}: ln V(e^x) = rho(e^x) * x.
    GrowthInput V = [&]() -> GrowthInput {
        if (const auto* fam = std::get_if<AnalyticFamily>(&rho))
            return family_from_rho(*fam);
        const auto& tr = std::get<Track>(rho);
        std::vector<double> yv(tr.size());
        for (std::size_t i = 0; i < tr.size(); ++i) yv[i] = tr.values[i] * tr.xs[i];
        return LogLogSample(tr.xs, yv);
    }();

    ModelOptions mopts;
    mopts.limits = opts.limits;
    const ModelGrowth id_model = make_model(GrowthInput{make_id()},
                                            std::get_if<Track>(&rho)
                                                ? std::get<Track>(rho).xs
                                                : grid.points(),
                                            mopts);
    rep.proximate = check_proximate(V, id_model, opts);

    rep.agree = rep.valiron.is_valiron == rep.proximate.is_proximate;
    if (rep.valiron.is_valiron && rep.proximate.is_proximate) {
        rep.rho_gap = std::fabs(*rep.valiron.rho_limit.value - *rep.proximate.rho.value);
        rep.rho_tolerance = std::max(2.0 * opts.limits.tol,
                                     rep.valiron.rho_limit.tail_residual +
                                         rep.proximate.rho.tail_residual);
        rep.agree = rep.agree && *rep.rho_gap <= rep.rho_tolerance;
    }
    return rep;
}

} // namespace pgrow
