#include "pgrow/deriv.hpp"

#include <cmath>
#include <string>

#include "pgrow/error.hpp"

namespace pgrow {

double dlog_numeric(const LogLogSample& s, std::size_t i, bool one_sided_ok) {
    const std::size_t n = s.size();
    if (i >= n)
        throw DomainError("derivative index " + std::to_string(i) + " out of range (size " +
                          std::to_string(n) + ")");
    const auto& xs = s.xs();
    const auto& ys = s.ys();
    if (i == 0 || i == n - 1) {
        if (!one_sided_ok)
            throw DomainError("derivative index " + std::to_string(i) +
                              " is a boundary point; one-sided differences must be requested "
                              "explicitly");
        // second-order one-sided difference on a locally uniform stencil
        if (i == 0) {
            const double h0 = xs[1] - xs[0], h1 = xs[2] - xs[1];
            if (std::fabs(h1 - h0) < 1e-9 * h0)
                return (-3.0 * ys[0] + 4.0 * ys[1] - ys[2]) / (2.0 * h0);
            return (ys[1] - ys[0]) / h0;
        }
        const double h0 = xs[n - 1] - xs[n - 2], h1 = xs[n - 2] - xs[n - 3];
        if (std::fabs(h1 - h0) < 1e-9 * h0)
            return (3.0 * ys[n - 1] - 4.0 * ys[n - 2] + ys[n - 3]) / (2.0 * h0);
        return (ys[n - 1] - ys[n - 2]) / h0;
    }
    return (ys[i + 1] - ys[i - 1]) / (xs[i + 1] - xs[i - 1]);
}

std::vector<double> dlog_track(const LogLogSample& s, const DerivOptions& opts) {
    const std::size_t n = s.size();
    const auto& xs = s.xs();
    const auto& ys = s.ys();
    std::vector<double> d(n);
    d[0] = dlog_numeric(s, 0, true);
    d[n - 1] = dlog_numeric(s, n - 1, true);
    if (opts.five_point && s.uniform() && n >= 5) {
        const double h = xs[1] - xs[0];
        for (std::size_t i = 2; i + 2 < n; ++i)
            d[i] = (ys[i - 2] - 8.0 * ys[i - 1] + 8.0 * ys[i + 1] - ys[i + 2]) / (12.0 * h);
        d[1] = dlog_numeric(s, 1);
        d[n - 2] = dlog_numeric(s, n - 2);
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = dlog_numeric(s, i);
    return d;
}

double dlog_exact(const AnalyticFamily& family, double x) {
    return family.dlog_checked(x);
}

bool has_exact_dlog(const GrowthInput& input) {
    if (const auto* fam = std::get_if<AnalyticFamily>(&input))
        return fam->has_dlog();
    return false;
}

LogLogSample sample_of(const GrowthInput& input, const std::vector<double>& xs) {
    if (const auto* fam = std::get_if<AnalyticFamily>(&input))
        return sample(*fam, xs);
    const auto& s = std::get<LogLogSample>(input);
    if (s.xs().size() != xs.size())
        throw DomainError("sampled input does not cover the requested grid (" +
                          std::to_string(s.size()) + " vs " + std::to_string(xs.size()) +
                          " points)");
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::fabs(s.x(i) - xs[i]) > 1e-9 * std::max(1.0, std::fabs(xs[i])))
            throw DomainError("sampled input grid mismatch at index " + std::to_string(i));
    return s;
}

std::vector<double> dlog_track_of(const GrowthInput& input, const std::vector<double>& xs,
                                  bool force_numeric, const DerivOptions& opts) {
    if (!force_numeric) {
        if (const auto* fam = std::get_if<AnalyticFamily>(&input); fam && fam->has_dlog()) {
            std::vector<double> d(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                d[i] = fam->dlog_checked(xs[i]);
            return d;
        }
    }
    return dlog_track(sample_of(input, xs), opts);
}

} // namespace pgrow
