#ifndef PGROW_GRID_HPP
#define PGROW_GRID_HPP

#include <cstddef>
#include <vector>

namespace pgrow {

/// A ray [x0, +inf) in the log coordinate x = ln r.
struct Ray {
    double x0 = 0.0;

    bool contains(double x) const { return x >= x0; }
};

/// Uniform grid in x = ln r (hence geometric in r).
struct GridSpec {
    double x0 = 1.0;
    double x1 = 1.0e4;
    std::size_t n = 4096;

    GridSpec() = default;
    GridSpec(double lo, double hi, std::size_t count);

    double step() const { return (x1 - x0) / static_cast<double>(n - 1); }
    std::vector<double> points() const;
};

/// A positive function F on a ray stored in log coordinates:
/// xs[i] = ln r_i (strictly increasing), ys[i] = ln F(r_i).
class LogLogSample {
public:
    LogLogSample(std::vector<double> xs, std::vector<double> ys);

    std::size_t size() const { return xs_.size(); }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    double x(std::size_t i) const { return xs_[i]; }
    double y(std::size_t i) const { return ys_[i]; }

    /// True when the x spacing is uniform to within a small relative slack.
    bool uniform() const { return uniform_; }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    bool uniform_ = false;
};

} // namespace pgrow

#endif
