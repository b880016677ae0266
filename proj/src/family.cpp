#include "pgrow/family.hpp"

#include <cmath>
#include <sstream>

#include "pgrow/error.hpp"

namespace pgrow {

namespace {

std::string describe(const AnalyticFamily& f) {
    std::ostringstream os;
    os << f.name;
    if (!f.params.empty()) {
        os << ":";
        bool first = true;
        for (const auto& [k, v] : f.params) {
            if (!first) os << ",";
            os << k << "=" << v;
            first = false;
        }
    }
    return os.str();
}

void require_params(const std::string& name, const std::map<std::string, double>& given,
                    const std::vector<std::string>& expected) {
    for (const auto& [k, v] : given) {
        bool known = false;
        for (const auto& e : expected)
            if (k == e) known = true;
        if (!known)
            throw DomainError("unknown parameter '" + k + "' for family '" + name + "'");
    }
    for (const auto& e : expected)
        if (given.find(e) == given.end())
            throw DomainError("family '" + name + "' requires parameter '" + e + "'");
}

} // namespace

double AnalyticFamily::eval_checked(double x) const {
    if (!in_domain(x)) {
        std::ostringstream os;
        os << "family '" << describe(*this) << "' is undefined at x=" << x << " (domain ["
           << domain_lo << ", " << domain_hi << "])";
        throw EvaluationError(os.str(), x);
    }
    const double v = eval(x);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "family '" << describe(*this) << "' produced a non-finite value at x=" << x;
        throw EvaluationError(os.str(), x);
    }
    return v;
}

double AnalyticFamily::dlog_checked(double x) const {
    if (!has_dlog())
        throw CapabilityError("family '" + describe(*this) + "' has no exact derivative");
    if (!in_domain(x)) {
        std::ostringstream os;
        os << "family '" << describe(*this) << "' is undefined at x=" << x;
        throw EvaluationError(os.str(), x);
    }
    return dlog(x);
}

LogLogSample sample(const AnalyticFamily& family, const GridSpec& grid) {
    return sample(family, grid.points());
}

LogLogSample sample(const AnalyticFamily& family, const std::vector<double>& xs) {
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        ys[i] = family.eval_checked(xs[i]);
    return LogLogSample(xs, ys);
}

AnalyticFamily make_pow(double rho) {
    AnalyticFamily f;
    f.name = "pow";
    f.params = {{"rho", rho}};
    f.eval = [rho](double x) { return rho * x; };
    f.dlog = [rho](double) { return rho; };
    return f;
}

AnalyticFamily make_powlog(double rho, double b) {
    AnalyticFamily f;
    f.name = "powlog";
    f.params = {{"rho", rho}, {"b", b}};
    f.eval = [rho, b](double x) { return rho * x + b * std::log(x); };
    f.dlog = [rho, b](double x) { return rho + b / x; };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily make_powloglog(double rho, double b) {
    // r^(b lnln r / ln r) = (ln r)^b, so the values coincide with powlog.
    AnalyticFamily f = make_powlog(rho, b);
    f.name = "powloglog";
    return f;
}

AnalyticFamily make_osc(double rho, double a) {
    AnalyticFamily f;
    f.name = "osc";
    f.params = {{"rho", rho}, {"a", a}};
    f.eval = [rho, a](double x) { return (rho + a * std::sin(x)) * x; };
    f.dlog = [rho, a](double x) { return rho + a * std::sin(x) + a * x * std::cos(x); };
    return f;
}

AnalyticFamily make_oscslow(double rho, double a) {
    AnalyticFamily f;
    f.name = "oscslow";
    f.params = {{"rho", rho}, {"a", a}};
    f.eval = [rho, a](double x) { return (rho + a * std::sin(std::log(x))) * x; };
    f.dlog = [rho, a](double x) {
        const double t = std::log(x);
        return rho + a * std::sin(t) + a * std::cos(t);
    };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily make_powsinlog(double rho) {
    AnalyticFamily f;
    f.name = "powsinlog";
    f.params = {{"rho", rho}};
    f.eval = [rho](double x) { return rho * x + std::sin(x); };
    f.dlog = [rho](double x) { return rho + std::cos(x); };
    return f;
}

AnalyticFamily make_expo(double c) {
    AnalyticFamily f;
    f.name = "expo";
    f.params = {{"c", c}};
    f.eval = [c](double x) { return c * std::exp(x); };
    f.dlog = [c](double x) { return c * std::exp(x); };
    // ln F = c e^x must stay representable.
    f.domain_hi = std::log(1e300 / std::max(std::fabs(c), 1e-300));
    return f;
}

AnalyticFamily make_sqrtlog() {
    AnalyticFamily f;
    f.name = "sqrtlog";
    f.eval = [](double x) { return std::sqrt(x); };
    f.dlog = [](double x) { return 0.5 / std::sqrt(x); };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily make_id() {
    AnalyticFamily f;
    f.name = "id";
    f.eval = [](double x) { return x; };
    f.dlog = [](double) { return 1.0; };
    return f;
}

AnalyticFamily make_log() {
    AnalyticFamily f;
    f.name = "log";
    f.eval = [](double x) { return std::log(x); };
    f.dlog = [](double x) { return 1.0 / x; };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily make_expinvlog() {
    AnalyticFamily f;
    f.name = "expinvlog";
    f.eval = [](double x) { return 1.0 + 1.0 / x; };
    f.dlog = [](double x) { return -1.0 / (x * x); };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily scale_family(const AnalyticFamily& f, double c) {
    if (!(c > 0.0))
        throw DomainError("scale factor must be positive");
    AnalyticFamily g = f;
    g.name = f.name + "_scaled";
    const double lnc = std::log(c);
    auto base = f.eval;
    g.eval = [base, lnc](double x) { return base(x) + lnc; };
    return g; // dlog unchanged: d/dx ln(cF) = d/dx ln F
}

AnalyticFamily power_family(const AnalyticFamily& f, double a) {
    if (a == 0.0)
        throw DomainError("power exponent must be nonzero");
    AnalyticFamily g = f;
    g.name = f.name + "_pow";
    auto base = f.eval;
    g.eval = [base, a](double x) { return a * base(x); };
    if (f.has_dlog()) {
        auto bd = f.dlog;
        g.dlog = [bd, a](double x) { return a * bd(x); };
    }
    return g;
}

AnalyticFamily make_rho_const(double value) {
    AnalyticFamily f;
    f.name = "rhoconst";
    f.params = {{"value", value}};
    f.eval = [value](double) { return value; };
    f.dlog = [](double) { return 0.0; };
    return f;
}

AnalyticFamily make_rho_loglog(double rho, double b) {
    AnalyticFamily f;
    f.name = "rhologlog";
    f.params = {{"rho", rho}, {"b", b}};
    f.eval = [rho, b](double x) { return rho + b * std::log(x) / x; };
    f.dlog = [b](double x) { return b * (1.0 - std::log(x)) / (x * x); };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily make_rho_sinlog(double rho) {
    AnalyticFamily f;
    f.name = "rhosinlog";
    f.params = {{"rho", rho}};
    f.eval = [rho](double x) { return rho + std::sin(x) / x; };
    f.dlog = [](double x) { return (x * std::cos(x) - std::sin(x)) / (x * x); };
    f.domain_lo = 1e-300;
    return f;
}

AnalyticFamily family_from_rho(const AnalyticFamily& rho) {
    AnalyticFamily f;
    f.name = rho.name + "_growth";
    f.params = rho.params;
    f.domain_lo = rho.domain_lo;
    f.domain_hi = rho.domain_hi;
    auto re = rho.eval;
    f.eval = [re](double x) { return re(x) * x; }; // ln V(e^x) = rho(e^x) * x
    if (rho.has_dlog()) {
        auto rd = rho.dlog;
        f.dlog = [re, rd](double x) { return re(x) + x * rd(x); };
    }
    return f;
}

namespace {

double need(const std::map<std::string, double>& p, const std::string& key) {
    return p.at(key);
}

} // namespace

AnalyticFamily lookup_growth(const std::string& name,
                             const std::map<std::string, double>& params) {
    if (name == "pow") {
        require_params(name, params, {"rho"});
        return make_pow(need(params, "rho"));
    }
    if (name == "powlog") {
        require_params(name, params, {"rho", "b"});
        return make_powlog(need(params, "rho"), need(params, "b"));
    }
    if (name == "powloglog") {
        require_params(name, params, {"rho", "b"});
        return make_powloglog(need(params, "rho"), need(params, "b"));
    }
    if (name == "osc") {
        require_params(name, params, {"rho", "a"});
        return make_osc(need(params, "rho"), need(params, "a"));
    }
    if (name == "oscslow") {
        require_params(name, params, {"rho", "a"});
        return make_oscslow(need(params, "rho"), need(params, "a"));
    }
    if (name == "powsinlog") {
        require_params(name, params, {"rho"});
        return make_powsinlog(need(params, "rho"));
    }
    if (name == "expo") {
        require_params(name, params, {"c"});
        return make_expo(need(params, "c"));
    }
    if (name == "sqrtlog") {
        require_params(name, params, {});
        return make_sqrtlog();
    }
    if (name == "id") {
        require_params(name, params, {});
        return make_id();
    }
    if (name == "log") {
        require_params(name, params, {});
        return make_log();
    }
    if (name == "expinvlog") {
        require_params(name, params, {});
        return make_expinvlog();
    }
    throw DomainError("unknown growth family '" + name + "'");
}

AnalyticFamily lookup_rho(const std::string& name,
                          const std::map<std::string, double>& params) {
    if (name == "rhoconst") {
        require_params(name, params, {"value"});
        return make_rho_const(need(params, "value"));
    }
    if (name == "rhologlog") {
        require_params(name, params, {"rho", "b"});
        return make_rho_loglog(need(params, "rho"), need(params, "b"));
    }
    if (name == "rhosinlog") {
        require_params(name, params, {"rho"});
        return make_rho_sinlog(need(params, "rho"));
    }
    throw DomainError("unknown candidate-order family '" + name + "'");
}

std::vector<std::string> growth_catalog_names() {
    return {"pow",  "powlog",  "powloglog", "osc", "oscslow", "powsinlog",
            "expo", "sqrtlog", "id",        "log", "expinvlog"};
}

std::vector<std::string> rho_catalog_names() {
    return {"rhoconst", "rhologlog", "rhosinlog"};
}

} // namespace pgrow
