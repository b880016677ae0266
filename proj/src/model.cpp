#include "pgrow/model.hpp"

#include <cmath>
#include <sstream>

#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"

namespace pgrow {

namespace {

// Cap above which exp(y) is not formed; e^700 is near the double ceiling.
constexpr double kExpCap = 700.0;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Convexity of m(x) = e^{y(x)} at interior point i. Where the values are
// representable this is the literal slope test on the m-track. For huge y it
// switches to the equivalent log-domain test m''/m = y'' + (y')^2 >= 0,
// discretized to second order.
bool convex_at(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t i,
               double tol, std::string* detail) {
    const double xl = xs[i - 1], xc = xs[i], xr = xs[i + 1];
    const double yl = ys[i - 1], yc = ys[i], yr = ys[i + 1];
    const double big = std::max({std::fabs(yl), std::fabs(yc), std::fabs(yr)});

    if (big <= kExpCap) {
        const double vl = std::exp(yl), vc = std::exp(yc), vr = std::exp(yr);
        const double sl = (vc - vl) / (xc - xl);
        const double sr = (vr - vc) / (xr - xc);
        const double scale = std::max({1.0, vl, vc, vr}) / std::min(xc - xl, xr - xc);
        if (sr - sl >= -tol * scale) return true;
        if (detail)
            *detail = "m-track slope drops from " + fmt(sl) + " to " + fmt(sr);
        return false;
    }

    const double ypp = 2.0 * ((yr - yc) / (xr - xc) - (yc - yl) / (xc - xl)) / (xr - xl);
    const double yp = (yr - yl) / (xr - xl);
    const double q = ypp + yp * yp;
    if (q >= -tol * std::max(1.0, yp * yp)) return true;
    if (detail)
        *detail = "log-curvature y'' + (y')^2 = " + fmt(q) + " < 0";
    return false;
}

} // namespace

ValidationReport validate_model(const GrowthInput& candidate, const GridSpec& grid,
                                const ModelOptions& opts) {
    return validate_model(candidate, grid.points(), opts);
}

ValidationReport validate_model(const GrowthInput& candidate, const std::vector<double>& xs,
                                const ModelOptions& opts) {
    const LogLogSample s = sample_of(candidate, xs);
    const std::vector<double> d =
        dlog_track_of(candidate, xs, opts.force_numeric_derivatives);

    ValidationReport rep;

    // Positivity: in log storage M = e^y, so finite y is exactly M > 0.
    rep.positive = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.y(i))) {
            rep.positive = false;
            rep.witnesses.push_back({s.x(i), "ln M not finite"});
        }
    }

    rep.derivative_positive = true;
    const bool exact = has_exact_dlog(candidate) && !opts.force_numeric_derivatives;
    const std::size_t lo = exact ? 0 : 1;
    const std::size_t hi = exact ? s.size() : s.size() - 1;
    for (std::size_t i = lo; i < hi; ++i) {
        if (!(d[i] > 0.0)) {
            rep.derivative_positive = false;
            rep.witnesses.push_back({s.x(i), "d/dx ln M(e^x) = " + fmt(d[i]) + " <= 0"});
            if (rep.witnesses.size() > 16) break;
        }
    }

    rep.log_convex = true;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        std::string detail;
        if (!convex_at(s.xs(), s.ys(), i, opts.tol_convex, &detail)) {
            rep.log_convex = false;
            rep.witnesses.push_back({s.x(i), detail});
            if (rep.witnesses.size() > 32) break;
        }
    }

    Track ytrack{s.xs(), s.ys()};
    const LimitEstimate div = estimate_limit(ytrack, opts.limits);
    rep.divergence_status = div.status;
    rep.divergent = div.diverged();
    if (!rep.divergent)
        rep.witnesses.push_back(
            {s.xs().back(), "ln M did not diverge (status " + to_string(div.status) + ")"});

    return rep;
}

bool is_model_subharmonic_radial(const GrowthInput& candidate, const GridSpec& grid,
                                 const ModelOptions& opts) {
    const std::vector<double> xs = grid.points();
    const LogLogSample s = sample_of(candidate, xs);
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        if (!convex_at(s.xs(), s.ys(), i, opts.tol_convex, nullptr)) return false;
    return true;
}

ModelGrowth make_model(const GrowthInput& candidate, const GridSpec& grid,
                       const ModelOptions& opts) {
    return make_model(candidate, grid.points(), opts);
}

ModelGrowth make_model(const GrowthInput& candidate, const std::vector<double>& xs,
                       const ModelOptions& opts) {
    ValidationReport rep = validate_model(candidate, xs, opts);
    if (!rep.passing()) {
        std::string why;
        if (!rep.positive) why = "positivity";
        else if (!rep.derivative_positive) why = "derivative positivity";
        else if (!rep.log_convex) why = "convexity relative to ln";
        else why = "divergence";
        std::string at = rep.witnesses.empty()
                             ? ""
                             : " (first witness at x=" + fmt(rep.witnesses.front().x) + ": " +
                                   rep.witnesses.front().detail + ")";
        throw PreconditionError("candidate is not a model growth function: " + why +
                                " fails" + at);
    }

    ModelGrowth m;
    m.xs_ = xs;
    const LogLogSample s = sample_of(candidate, xs);
    m.ym_ = s.ys();
    m.exact_dlog_ = has_exact_dlog(candidate) && !opts.force_numeric_derivatives;
    m.dlog_ = dlog_track_of(candidate, xs, opts.force_numeric_derivatives);
    m.report_ = std::move(rep);
    if (const auto* fam = std::get_if<AnalyticFamily>(&candidate)) m.family_ = *fam;
    return m;
}

} // namespace pgrow
