#ifndef PGROW_MODEL_HPP
#define PGROW_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"
#include "pgrow/limits.hpp"

namespace pgrow {

struct Witness {
    double x;
    std::string detail;
};

/// Clause-by-clause result of model validation: M > 0, M' > 0, M convex
/// relative to ln, and M -> +infinity along the sampled ray.
struct ValidationReport {
    bool positive = false;
    bool derivative_positive = false;
    bool log_convex = false;
    bool divergent = false;
    std::vector<Witness> witnesses;
    LimitStatus divergence_status = LimitStatus::inconclusive;

    bool passing() const { return positive && derivative_positive && log_convex && divergent; }
};

struct ModelOptions {
    double tol_convex = 1e-9; // scaled by the local magnitude
    LimitOptions limits;
    bool force_numeric_derivatives = false;
};

/// Checks the four defining clauses of a model growth function on the grid.
/// Validation is necessarily restricted to the sampled ray; reports say so.
ValidationReport validate_model(const GrowthInput& candidate, const GridSpec& grid,
                                const ModelOptions& opts = {});
ValidationReport validate_model(const GrowthInput& candidate, const std::vector<double>& xs,
                                const ModelOptions& opts = {});

/// Radial subharmonicity outside some disk is exactly convexity of
/// x -> M(e^x); this returns that single clause.
bool is_model_subharmonic_radial(const GrowthInput& candidate, const GridSpec& grid,
                                 const ModelOptions& opts = {});

/// A validated model growth function M, pinned to the grid it was validated
/// on, with its ln M track and derivative track precomputed. Constructible
/// only through make_model, which requires a passing report.
class ModelGrowth {
public:
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ym() const { return ym_; }     // ln M(e^x)
    const std::vector<double>& dlog() const { return dlog_; } // d/dx ln M(e^x) > 0
    const ValidationReport& report() const { return report_; }
    const std::optional<AnalyticFamily>& family() const { return family_; }
    bool exact_derivative() const { return exact_dlog_; }

    friend ModelGrowth make_model(const GrowthInput&, const std::vector<double>&,
                                  const ModelOptions&);

private:
    ModelGrowth() = default;
    std::vector<double> xs_, ym_, dlog_;
    ValidationReport report_;
    std::optional<AnalyticFamily> family_;
    bool exact_dlog_ = false;
};

/// Validates and packages a model; throws PreconditionError (with the first
/// failing clause) when the candidate is not a model growth function.
ModelGrowth make_model(const GrowthInput& candidate, const std::vector<double>& xs,
                       const ModelOptions& opts = {});
ModelGrowth make_model(const GrowthInput& candidate, const GridSpec& grid,
                       const ModelOptions& opts = {});

} // namespace pgrow

#endif
