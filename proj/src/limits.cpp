#include "pgrow/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"

namespace pgrow {

std::string to_string(LimitStatus s) {
    switch (s) {
        case LimitStatus::converged: return "converged";
        case LimitStatus::diverged_to_infinity: return "diverged-to-infinity";
        case LimitStatus::oscillating: return "oscillating";
        case LimitStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

constexpr std::size_t kEighths = 8;

struct WindowStats {
    double lo = 0.0, hi = 0.0;
    std::size_t first = 0; // first index inside the window
    double amp[kEighths] = {};
    double mean[kEighths] = {};
    double maxv[kEighths] = {};
    double scale = 0.0; // max |value| over the window
};

WindowStats window_stats(const Track& t, double window_fraction) {
    if (t.size() < 32)
        throw DomainError("track too short for limit estimation: " + std::to_string(t.size()) +
                          " points (need at least 32)");
    if (t.xs.size() != t.values.size())
        throw DomainError("track arrays differ in length");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw DomainError("window fraction must lie in (0, 1]");

    WindowStats w;
    const double x_lo = t.xs.front(), x_hi = t.xs.back();
    w.lo = x_hi - window_fraction * (x_hi - x_lo);
    w.hi = x_hi;
    const double bin = (w.hi - w.lo) / static_cast<double>(kEighths);

    std::size_t count[kEighths] = {};
    double mn[kEighths], mx[kEighths], sum[kEighths] = {};
    std::fill(std::begin(mn), std::end(mn), std::numeric_limits<double>::infinity());
    std::fill(std::begin(mx), std::end(mx), -std::numeric_limits<double>::infinity());

    w.first = t.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = t.xs[i];
        if (x < w.lo) continue;
        if (w.first == t.size()) w.first = i;
        auto j = static_cast<std::size_t>((x - w.lo) / bin);
        if (j >= kEighths) j = kEighths - 1;
        const double v = t.values[i];
        if (!std::isfinite(v))
            throw DomainError("non-finite track value at x=" + std::to_string(x));
        mn[j] = std::min(mn[j], v);
        mx[j] = std::max(mx[j], v);
        sum[j] += v;
        ++count[j];
        w.scale = std::max(w.scale, std::fabs(v));
    }
    for (std::size_t j = 0; j < kEighths; ++j) {
        if (count[j] < 2)
            throw DomainError("tail window under-resolved: eighth " + std::to_string(j) +
                              " holds fewer than 2 points");
        w.amp[j] = mx[j] - mn[j];
        w.mean[j] = sum[j] / static_cast<double>(count[j]);
        w.maxv[j] = mx[j];
    }
    return w;
}

double max_deviation(const Track& t, std::size_t first, double value) {
    double dev = 0.0;
    for (std::size_t i = first; i < t.size(); ++i)
        dev = std::max(dev, std::fabs(t.values[i] - value));
    return dev;
}

} // namespace

LimitEstimate estimate_limit(const Track& track, const LimitOptions& opts) {
    const WindowStats w = window_stats(track, opts.window_fraction);

    LimitEstimate e;
    e.window_lo = w.lo;
    e.window_hi = w.hi;

    bool means_up = true, means_down = true;
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < kEighths; ++j) {
        const double d = w.mean[j] - w.mean[j - 1];
        means_up = means_up && d > 0.0;
        means_down = means_down && d < 0.0;
        min_step = std::min(min_step, std::fabs(d));
    }

    if (means_up && (min_step > opts.tol || w.mean[kEighths - 1] > opts.divergence_threshold)) {
        e.status = LimitStatus::diverged_to_infinity;
        e.tail_residual = w.amp[kEighths - 1];
        return e;
    }

    const double slack = std::max(1e-12, 1e-9 * w.scale);
    bool amp_monotone = true;
    double amp_max = 0.0;
    for (std::size_t j = 0; j < kEighths; ++j) {
        amp_max = std::max(amp_max, w.amp[j]);
        if (j > 0 && w.amp[j] > w.amp[j - 1] + slack) amp_monotone = false;
    }
    const double amp_last = w.amp[kEighths - 1];

    if (amp_last <= opts.tol && (amp_monotone || amp_max <= opts.tol)) {
        e.status = LimitStatus::converged;
        e.value = w.mean[kEighths - 1];
        e.tail_residual = max_deviation(track, w.first, *e.value);
        return e;
    }

    const bool decayed = amp_last <= std::max(opts.tol, 0.5 * w.amp[0]);
    const bool steady_drift = (means_up || means_down) && min_step > opts.tol;
    if (!decayed && !steady_drift) {
        e.status = LimitStatus::oscillating;
        e.tail_residual = amp_last;
        return e;
    }

    e.status = LimitStatus::inconclusive;
    e.tail_residual = amp_last;
    return e;
}

LimitEstimate estimate_limsup(const Track& track, const LimitOptions& opts) {
    const WindowStats w = window_stats(track, opts.window_fraction);

    LimitEstimate e;
    e.window_lo = w.lo;
    e.window_hi = w.hi;

    double running[kEighths];
    running[0] = w.maxv[0];
    for (std::size_t j = 1; j < kEighths; ++j)
        running[j] = std::max(running[j - 1], w.maxv[j]);

    bool all_rising = true;
    for (std::size_t j = 1; j < kEighths; ++j)
        all_rising = all_rising && (running[j] - running[j - 1] > opts.tol);
    if (all_rising || running[kEighths - 1] > opts.divergence_threshold) {
        e.status = LimitStatus::diverged_to_infinity;
        e.tail_residual = running[kEighths - 1] - running[kEighths - 2];
        return e;
    }

    const double late_rise = running[kEighths - 1] - running[kEighths - 4];
    if (late_rise <= opts.tol) {
        e.status = LimitStatus::converged;
        e.value = running[kEighths - 1];
        e.tail_residual = late_rise;
        return e;
    }

    e.status = LimitStatus::inconclusive;
    e.tail_residual = late_rise;
    return e;
}

bool converged_to_zero(const LimitEstimate& e, const LimitOptions& opts) {
    return e.converged() && std::fabs(*e.value) <= std::max(opts.tol, 3.0 * e.tail_residual);
}

LhopitalReport verify_lhopital(const LhopitalCase& c, const GridSpec& grid,
                               const LimitOptions& opts) {
    const std::vector<double> xs = grid.points();
    std::vector<double> fv(xs.size()), gv(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fv[i] = c.f.eval_checked(xs[i]);
        gv[i] = c.g.eval_checked(xs[i]);
    }

    Track absg{xs, {}};
    absg.values.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) absg.values[i] = std::fabs(gv[i]);
    const LimitEstimate ge = estimate_limit(absg, opts);

    LhopitalReport rep;
    rep.precondition_ok = ge.diverged();
    if (!rep.precondition_ok)
        throw PreconditionError("|g| does not diverge on the grid (status " +
                                to_string(ge.status) + "); the rule does not apply");

    // The ratio of derivatives is the same in x as in r: the chain-rule
    // factors dx/dr cancel.
    const GrowthInput fin{c.f}, gin{c.g};
    const std::vector<double> fd = dlog_track_of(fin, xs);
    const std::vector<double> gd = dlog_track_of(gin, xs);

    // Restrict the value ratio to where |g| has grown away from zero.
    std::size_t start = 0;
    while (start < xs.size() && std::fabs(gv[start]) < 0.1) ++start;
    if (xs.size() - start < 32)
        throw PreconditionError("|g| stays below 0.1 on almost the whole grid");

    Track dr, vr;
    for (std::size_t i = start; i < xs.size(); ++i) {
        if (gd[i] == 0.0)
            throw SingularityError("g' vanishes at x=" + std::to_string(xs[i]), xs[i]);
        dr.xs.push_back(xs[i]);
        dr.values.push_back(fd[i] / gd[i]);
        vr.xs.push_back(xs[i]);
        vr.values.push_back(fv[i] / gv[i]);
    }

    rep.derivative_ratio = estimate_limit(dr, opts);
    rep.value_ratio = estimate_limit(vr, opts);

    if (rep.derivative_ratio.converged() && rep.value_ratio.converged()) {
        rep.discrepancy = std::fabs(*rep.derivative_ratio.value - *rep.value_ratio.value);
        rep.tolerance =
            3.0 * (rep.derivative_ratio.tail_residual + rep.value_ratio.tail_residual);
        rep.passes = rep.discrepancy <= rep.tolerance;
    } else if (rep.derivative_ratio.diverged() && rep.value_ratio.diverged()) {
        rep.passes = true; // both limits +infinity: the rule holds in the extended sense
    }
    return rep;
}

} // namespace pgrow
