#ifndef PGROW_LIMITS_HPP
#define PGROW_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"

namespace pgrow {

/// A plain value track over x (no log transform on the values).
struct Track {
    std::vector<double> xs;
    std::vector<double> values;

    std::size_t size() const { return xs.size(); }
};

enum class LimitStatus { converged, diverged_to_infinity, oscillating, inconclusive };

std::string to_string(LimitStatus s);

/// Result of a tail limit / limsup estimation.
struct LimitEstimate {
    LimitStatus status = LimitStatus::inconclusive;
    std::optional<double> value;  // present iff status == converged
    double tail_residual = 0.0;   // max deviation of the track from value over the window
    double window_lo = 0.0;
    double window_hi = 0.0;

    bool converged() const { return status == LimitStatus::converged; }
    bool diverged() const { return status == LimitStatus::diverged_to_infinity; }
};

struct LimitOptions {
    double tol = 1e-2;                  // convergence tolerance on the tail amplitude
    double window_fraction = 0.5;       // tail window = last fraction of the x-domain
    double divergence_threshold = 1e6;
};

/// Examines the tail window (last half of the domain by default), split into
/// eighths. Converged when the per-eighth oscillation amplitudes decay
/// monotonically to at most tol; the value is then the mean of the last
/// eighth. Steady growth of the per-eighth means flags divergence;
/// non-decaying amplitude flags oscillation.
LimitEstimate estimate_limit(const Track& track, const LimitOptions& opts = {});

/// Tail limsup: the running maximum over successive eighths of the window.
/// Converged when the running maximum stops rising (last increments within
/// tol); steadily rising maxima flag divergence. Never reports oscillating.
LimitEstimate estimate_limsup(const Track& track, const LimitOptions& opts = {});

/// True when the estimate converged to a value within tol of zero (allowing
/// 3x the tail residual for slowly decaying tracks).
bool converged_to_zero(const LimitEstimate& e, const LimitOptions& opts = {});

struct LhopitalCase {
    AnalyticFamily f; // the track f(x); derivatives taken in x
    AnalyticFamily g;
    std::optional<double> expected_L;
};

struct LhopitalReport {
    bool precondition_ok = false; // |g| -> +infinity on the grid
    LimitEstimate derivative_ratio; // lim f'/g'
    LimitEstimate value_ratio;      // lim f/g
    double discrepancy = 0.0;
    double tolerance = 0.0;
    bool passes = false;
};

/// Checks that lim f/g agrees with lim f'/g' whenever |g| diverges. The
/// ratio of x-derivatives equals the ratio of r-derivatives, so both limits
/// are formed on the grid in x. Throws PreconditionError when |g| does not
/// diverge. Both limits diverging to +infinity also counts as agreement.
LhopitalReport verify_lhopital(const LhopitalCase& c, const GridSpec& grid,
                               const LimitOptions& opts = {});

} // namespace pgrow

#endif
