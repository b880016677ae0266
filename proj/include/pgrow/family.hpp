#ifndef PGROW_FAMILY_HPP
#define PGROW_FAMILY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pgrow/grid.hpp"

namespace pgrow {

/// A named closed-form function on the ray, stored through the change of
/// variable x = ln r: eval(x) = ln F(e^x). When available, dlog(x) is the
/// exact derivative d/dx ln F(e^x).
///
/// The same type also carries plain value tracks (e.g. candidate orders
/// rho(r) evaluated at x = ln r); in that case eval is the value itself,
/// not its logarithm. Which convention applies is fixed by the catalog the
/// family came from.
struct AnalyticFamily {
    std::string name;
    std::map<std::string, double> params;
    std::function<double(double)> eval;
    std::function<double(double)> dlog; // empty when no exact derivative
    double domain_lo = -1e300;          // eval defined on [domain_lo, domain_hi]
    double domain_hi = 1e300;

    bool has_dlog() const { return static_cast<bool>(dlog); }
    bool in_domain(double x) const { return x >= domain_lo && x <= domain_hi; }

    /// Evaluates with domain and finiteness checks; throws EvaluationError.
    double eval_checked(double x) const;
    /// Exact derivative; throws CapabilityError when absent.
    double dlog_checked(double x) const;
};

/// Either a closed-form family or sampled data.
using GrowthInput = std::variant<AnalyticFamily, LogLogSample>;

/// Evaluates a family on a grid. Throws EvaluationError naming the offending
/// x when the family is undefined or produces a non-finite value there.
LogLogSample sample(const AnalyticFamily& family, const GridSpec& grid);
LogLogSample sample(const AnalyticFamily& family, const std::vector<double>& xs);

// --- growth-function catalog (eval is ln F(e^x)) ---------------------------

AnalyticFamily make_pow(double rho);                //  r^rho
AnalyticFamily make_powlog(double rho, double b);   //  r^rho (ln r)^b
AnalyticFamily make_powloglog(double rho, double b); // r^(rho + b lnln r/ln r), same values as powlog
AnalyticFamily make_osc(double rho, double a);      //  r^(rho + a sin ln r)
AnalyticFamily make_oscslow(double rho, double a);  //  r^(rho + a sin lnln r)
AnalyticFamily make_powsinlog(double rho);          //  r^(rho + sin(ln r)/ln r)
AnalyticFamily make_expo(double c);                 //  e^(c r)
AnalyticFamily make_sqrtlog();                      //  e^sqrt(ln r)
AnalyticFamily make_id();                           //  r
AnalyticFamily make_log();                          //  ln r
AnalyticFamily make_expinvlog();                    //  e^(1 + 1/ln r), i.e. ln F = 1 + 1/ln r

/// c * F for c > 0: shifts ln F by ln c, derivative unchanged.
AnalyticFamily scale_family(const AnalyticFamily& f, double c);
/// F^a for a != 0.
AnalyticFamily power_family(const AnalyticFamily& f, double a);

// --- candidate-order catalog (eval is the value rho(e^x), not a log) -------

AnalyticFamily make_rho_const(double value);           // rho(r) = value
AnalyticFamily make_rho_loglog(double rho, double b);  // rho + b lnln r / ln r
AnalyticFamily make_rho_sinlog(double rho);            // rho + sin(ln r)/ln r

/// Growth function V(r) = r^{rho(r)} built from a candidate order, as a
/// closed form when the order has an exact derivative.
AnalyticFamily family_from_rho(const AnalyticFamily& rho);

// --- registry lookup for text specs ----------------------------------------

/// Builds a growth family by catalog name; throws DomainError for unknown
/// names or bad/missing/unknown parameters.
AnalyticFamily lookup_growth(const std::string& name,
                             const std::map<std::string, double>& params);
/// Same for candidate-order families.
AnalyticFamily lookup_rho(const std::string& name,
                          const std::map<std::string, double>& params);

std::vector<std::string> growth_catalog_names();
std::vector<std::string> rho_catalog_names();

} // namespace pgrow

#endif
