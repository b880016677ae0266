#include "pgrow/grid.hpp"

#include <cmath>
#include <string>

#include "pgrow/error.hpp"

namespace pgrow {

GridSpec::GridSpec(double lo, double hi, std::size_t count) : x0(lo), x1(hi), n(count) {
    if (!(std::isfinite(lo) && std::isfinite(hi)))
        throw DomainError("grid endpoints must be finite");
    if (!(lo < hi))
        throw DomainError("grid requires x0 < x1, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    if (count < 8)
        throw DomainError("grid requires at least 8 points, got " + std::to_string(count));
}

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(n);
    const double h = step();
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = x0 + h * static_cast<double>(i);
    xs.back() = x1;
    return xs;
}

LogLogSample::LogLogSample(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size())
        throw DomainError("sample arrays differ in length: " + std::to_string(xs_.size()) +
                          " vs " + std::to_string(ys_.size()));
    if (xs_.size() < 8)
        throw DomainError("sample requires at least 8 points, got " +
                          std::to_string(xs_.size()));
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
            throw DomainError("non-finite sample entry at index " + std::to_string(i));
        if (i > 0 && !(xs_[i] > xs_[i - 1]))
            throw DomainError("sample xs not strictly increasing at index " +
                              std::to_string(i) + " (x=" + std::to_string(xs_[i]) + ")");
    }

    const double h0 = xs_[1] - xs_[0];
    uniform_ = true;
    for (std::size_t i = 2; i < xs_.size(); ++i) {
        if (std::fabs((xs_[i] - xs_[i - 1]) - h0) > 1e-9 * std::max(1.0, std::fabs(h0))) {
            uniform_ = false;
            break;
        }
    }
}

} // namespace pgrow
