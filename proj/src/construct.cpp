#include "pgrow/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"

namespace pgrow {

namespace {

double softplus(double t) {
    // ln(1 + e^t), stable on both sides
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

struct Transformed {
    std::vector<double> xs;  // x subgrid (ln M >= 0.1)
    std::vector<double> s;   // ln M
    std::vector<double> phi; // ln A
    std::size_t offset = 0;
};

Transformed transform(const GrowthInput& A, const ModelGrowth& M) {
    const LogLogSample sa = sample_of(A, M.xs());

    std::size_t start = 0;
    while (start < M.ym().size() && M.ym()[start] < 0.1) ++start;
    if (M.xs().size() - start < 64)
        throw DomainError("degenerate grid: fewer than 64 points remain where ln M >= 0.1");

    Transformed t;
    t.offset = start;
    const std::size_t n = M.xs().size() - start;
    t.xs.assign(M.xs().begin() + start, M.xs().end());
    t.s.assign(M.ym().begin() + start, M.ym().end());
    t.phi.assign(sa.ys().begin() + start, sa.ys().end());

    for (std::size_t i = 1; i < n; ++i) {
        const double slack = 1e-12 * std::max(1.0, std::fabs(t.phi[i]));
        if (t.phi[i] < t.phi[i - 1] - slack)
            throw PreconditionError("A is not increasing: ln A drops at x=" +
                                    std::to_string(t.xs[i]));
        if (!(t.s[i] > t.s[i - 1]))
            throw DomainError("ln M not strictly increasing at x=" + std::to_string(t.xs[i]));
    }
    return t;
}

// Linear interpolation of the hull (piecewise linear through every grid
// value) at an arbitrary abscissa, clamped to the span.
double interp(const std::vector<double>& s, const std::vector<double>& v, double at) {
    if (at <= s.front()) return v.front();
    if (at >= s.back()) return v.back();
    const auto it = std::upper_bound(s.begin(), s.end(), at);
    const std::size_t k = static_cast<std::size_t>(it - s.begin()) - 1;
    const double w = (at - s[k]) / (s[k + 1] - s[k]);
    return v[k] + w * (v[k + 1] - v[k]);
}

} // namespace

std::vector<double> upper_concave_hull(const std::vector<double>& s,
                                       const std::vector<double>& v) {
    const std::size_t n = s.size();
    if (n != v.size() || n < 2) throw DomainError("hull requires two equal-length arrays");

    // Monotone chain, upper hull: keep right turns only.
    std::vector<std::size_t> hull;
    hull.reserve(64);
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            const double cross =
                (s[b] - s[a]) * (v[i] - v[a]) - (v[b] - v[a]) * (s[i] - s[a]);
            if (cross >= 0.0)
                hull.pop_back(); // b is below or on the chord a->i
            else
                break;
        }
        hull.push_back(i);
    }

    std::vector<double> env(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 2 < hull.size() && s[hull[seg + 1]] <= s[i]) ++seg;
        const std::size_t a = hull[seg], b = hull[seg + 1];
        if (i == a || i == b) {
            env[i] = v[i]; // hull vertices keep their exact values
            continue;
        }
        const double w = (s[i] - s[a]) / (s[b] - s[a]);
        env[i] = v[a] + w * (v[b] - v[a]);
    }
    return env;
}

OrderEstimate order_estimate(const GrowthInput& A, const ModelGrowth& M,
                             const ConstructOptions& opts) {
    const Transformed t = transform(A, M);

    OrderEstimate oe;
    oe.track.xs = t.xs;
    oe.track.values.resize(t.xs.size());
    for (std::size_t i = 0; i < t.xs.size(); ++i)
        oe.track.values[i] = softplus(t.phi[i]) / t.s[i];

    oe.limsup = estimate_limsup(oe.track, opts.limits);
    if (oe.limsup.diverged())
        throw InfiniteOrderError("A has infinite order relative to M: "
                                 "ln(1+A)/ln M diverges on the grid");
    oe.finite = oe.limsup.converged();
    oe.rho_star =
        oe.finite ? *oe.limsup.value : std::numeric_limits<double>::quiet_NaN();

    // Compare against a narrower window; a drifting maximum means the window
    // may not capture the oscillation crest.
    LimitOptions narrow = opts.limits;
    narrow.window_fraction = opts.limits.window_fraction * 0.5;
    const LimitEstimate quarter = estimate_limsup(oe.track, narrow);
    if (oe.finite && quarter.converged())
        oe.window_warning = std::fabs(*quarter.value - oe.rho_star) > opts.limits.tol;
    return oe;
}

namespace {

struct Candidate {
    std::vector<double> env; // ln V on the subgrid
    double lift = 0.0;
    double terminal_slope = 0.0;
    bool used_ray = false;
};

Candidate build_candidate(const Transformed& t, double rho_star, bool use_ray,
                          const ConstructOptions& opts) {
    const std::size_t n = t.s.size();
    Candidate cand;
    cand.used_ray = use_ray;

    std::vector<double> data = t.phi;
    if (use_ray) {
        // Anchor at the tail-half point maximizing phi - rho* s; extend a ray
        // of slope rho* through it and majorize phi with it pointwise.
        const double x_mid = t.xs.front() + 0.5 * (t.xs.back() - t.xs.front());
        std::size_t i_star = n - 1;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (t.xs[i] < x_mid) continue;
            const double g = t.phi[i] - rho_star * t.s[i];
            if (g >= best) {
                best = g;
                i_star = i;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            data[i] = std::max(t.phi[i], t.phi[i_star] + rho_star * (t.s[i] - t.s[i_star]));
    }

    const std::vector<double> env = upper_concave_hull(t.s, data);

    if (opts.smooth_frac <= 0.0) {
        cand.env = env;
    } else {
        // Mollify the slope field over windows proportional to s, then
        // re-integrate from the right end. Averaging the hull's derivative
        // over [a, b] is just a difference quotient of the hull itself.
        std::vector<double> smooth(n);
        smooth[n - 1] = env[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) {
            const double mid = 0.5 * (t.s[k] + t.s[k + 1]);
            const double w = opts.smooth_frac * std::fabs(mid);
            double a = mid - 0.5 * w, b = mid + 0.5 * w;
            a = std::max(a, t.s.front());
            b = std::min(b, t.s.back());
            double slope;
            if (b - a > 1e-300)
                slope = (interp(t.s, env, b) - interp(t.s, env, a)) / (b - a);
            else
                slope = (env[k + 1] - env[k]) / (t.s[k + 1] - t.s[k]);
            smooth[k] = smooth[k + 1] - slope * (t.s[k + 1] - t.s[k]);
        }
        cand.env = std::move(smooth);
    }

    double deficit = 0.0;
    for (std::size_t i = 0; i < n; ++i) deficit = std::max(deficit, t.phi[i] - cand.env[i]);
    cand.lift = std::max(0.0, deficit);
    if (cand.lift > 0.0)
        for (double& e : cand.env) e += cand.lift;

    cand.terminal_slope =
        (cand.env[n - 1] - cand.env[n - 2]) / (t.s[n - 1] - t.s[n - 2]);
    return cand;
}

ConstructionResult evaluate_candidate(const Candidate& cand, const Transformed& t,
                                      const OrderEstimate& oe, const ModelGrowth& M,
                                      const ConstructOptions& opts) {
    const std::size_t n = t.s.size();

    ConstructionResult res(LogLogSample(t.xs, cand.env));
    res.offset = t.offset;
    res.rho_star = oe.rho_star;
    res.window_warning = oe.window_warning;
    res.used_ray = cand.used_ray;
    res.lift = cand.lift;
    res.terminal_slope = cand.terminal_slope;

    const double x_mid = t.xs.front() + 0.5 * (t.xs.back() - t.xs.front());
    double gap_all = -std::numeric_limits<double>::infinity();
    double gap_tail = -std::numeric_limits<double>::infinity();
    const double touch_gap = std::log1p(-opts.touch_tol); // ln(1 - touch_tol)
    for (std::size_t i = 0; i < n; ++i) {
        const double g = t.phi[i] - cand.env[i]; // ln(A/V) <= 0
        gap_all = std::max(gap_all, g);
        if (t.xs[i] >= x_mid) gap_tail = std::max(gap_tail, g);
        if (g >= touch_gap) res.touch_indices.push_back(i);
    }
    res.q_upper = std::exp(gap_all);
    res.q_touch = std::exp(gap_tail);

    // Proximateness of the constructed V (numeric derivatives on the stored
    // envelope), using the restricted grid for the model as well.
    ModelOptions mopts;
    mopts.limits = opts.limits;
    mopts.force_numeric_derivatives = opts.force_numeric_derivatives;
    const ModelGrowth m_sub = [&] {
        if (M.family()) return make_model(GrowthInput{*M.family()}, t.xs, mopts);
        LogLogSample my(t.xs, std::vector<double>(M.ym().begin() + t.offset, M.ym().end()));
        return make_model(GrowthInput{std::move(my)}, t.xs, mopts);
    }();

    ProximateOptions popts;
    popts.limits = opts.limits;
    res.proximate = check_proximate(GrowthInput{res.v}, m_sub, popts);
    res.rho_m = rho_track(GrowthInput{res.v}, m_sub, popts);

    res.rho_gap = res.proximate.rho.converged()
                      ? std::fabs(*res.proximate.rho.value - res.rho_star)
                      : std::numeric_limits<double>::infinity();
    const double rho_tol =
        std::max(opts.rho_agree_floor,
                 3.0 * (res.proximate.rho.tail_residual + oe.limsup.tail_residual));

    res.success = res.proximate.is_proximate && res.rho_gap <= rho_tol &&
                  res.q_upper <= 1.0 + opts.construct_tol &&
                  res.q_touch >= 1.0 - opts.construct_tol;
    return res;
}

} // namespace

ConstructionResult construct_proximate(const GrowthInput& A, const ModelGrowth& M,
                                       const ConstructOptions& opts) {
    const Transformed t = transform(A, M);
    const OrderEstimate oe = order_estimate(A, M, opts);
    if (!oe.finite)
        throw PreconditionError("order of A relative to M did not stabilize on the tail "
                                "window (status " +
                                to_string(oe.limsup.status) + "); widen the window");

    const Candidate ray = build_candidate(t, oe.rho_star, true, opts);
    ConstructionResult res = evaluate_candidate(ray, t, oe, M, opts);
    if (res.success) return res;

    // Fallback: the hull of phi alone. For inputs whose order track decays,
    // the window limsup overshoots the terminal slope and the anchored ray
    // pulls V away from A in the tail; the plain hull keeps the touching.
    const Candidate plain = build_candidate(t, oe.rho_star, false, opts);
    ConstructionResult alt = evaluate_candidate(plain, t, oe, M, opts);
    if (alt.success || alt.q_touch > res.q_touch) return alt;
    return res;
}

} // namespace pgrow
