#ifndef PGROW_DERIV_HPP
#define PGROW_DERIV_HPP

#include <cstddef>
#include <vector>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"

namespace pgrow {

struct DerivOptions {
    bool five_point = false; // 5-point stencil on uniform grids instead of central
};

/// Central difference (y_{i+1}-y_{i-1})/(x_{i+1}-x_{i-1}) at an interior point.
/// Boundary points are rejected unless one_sided_ok is set, in which case a
/// second-order one-sided difference is used.
double dlog_numeric(const LogLogSample& s, std::size_t i, bool one_sided_ok = false);

/// Derivative at every grid point: central differences in the interior,
/// second-order one-sided differences at the two ends.
std::vector<double> dlog_track(const LogLogSample& s, const DerivOptions& opts = {});

/// Exact derivative d/dx ln F(e^x); throws CapabilityError when the family
/// carries none.
double dlog_exact(const AnalyticFamily& family, double x);

/// Derivative track of a growth input: exact when the family provides one
/// (unless force_numeric), numeric otherwise.
std::vector<double> dlog_track_of(const GrowthInput& input, const std::vector<double>& xs,
                                  bool force_numeric = false,
                                  const DerivOptions& opts = {});

/// True when the input carries an exact derivative.
bool has_exact_dlog(const GrowthInput& input);

/// Samples a growth input on the given xs (families are evaluated, samples
/// must match the requested xs exactly).
LogLogSample sample_of(const GrowthInput& input, const std::vector<double>& xs);

} // namespace pgrow

#endif
