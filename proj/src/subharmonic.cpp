#include "pgrow/subharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pgrow/error.hpp"

namespace pgrow {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    return t < 0.0 ? t + kTwoPi : t;
}

// Angles (mod 2pi) of declared singularities lying on the circle of radius r.
std::vector<double> singular_angles_on(const PlaneFunction& u, double r) {
    std::vector<double> out;
    for (const auto& s : u.singularities) {
        const double rs = std::hypot(s.re, s.im);
        if (std::fabs(rs - r) <= 1e-12 * std::max(1.0, r))
            out.push_back(wrap_angle(std::atan2(s.im, s.re)));
    }
    return out;
}

} // namespace

std::string to_string(Normalization n) {
    return n == Normalization::area ? "area" : "paper";
}

double circle_mean(const PlaneFunction& u, double r, std::size_t n_quad) {
    if (!(r > 0.0)) throw DomainError("circle mean requires r > 0");
    if (n_quad < 16 || !power_of_two(n_quad))
        throw DomainError("n_quad must be a power of two >= 16, got " +
                          std::to_string(n_quad));

    const double h = kTwoPi / static_cast<double>(n_quad);
    const std::vector<double> bad = singular_angles_on(u, r);

    double offset = 0.0;
    for (double t : bad) {
        const double frac = t / h - std::floor(t / h);
        if (std::min(frac, 1.0 - frac) < 0.25) {
            offset = 0.5;
            break;
        }
    }

    double sum = 0.0;
    for (std::size_t j = 0; j < n_quad; ++j) {
        const double t = h * (static_cast<double>(j) + offset);
        const double v = u.eval(r, t);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrand of '" << u.name << "' non-finite on |z|=" << r
               << " at angle t=" << t;
            throw SingularityError(os.str(), t);
        }
        sum += v;
    }
    return sum / static_cast<double>(n_quad);
}

namespace {

// Composite Simpson of s * C_u(s) over [a, b] with n intervals (even). The
// s=0 endpoint evaluates to 0: s C_u(s) -> 0 for integrable (log-type)
// singularities at the origin.
double radial_simpson(const PlaneFunction& u, double a, double b, std::size_t n,
                      std::size_t n_quad) {
    const double h = (b - a) / static_cast<double>(n);
    auto f = [&](double s) { return s == 0.0 ? 0.0 : s * circle_mean(u, s, n_quad); };
    double sum = f(a) + f(b);
    for (std::size_t k = 1; k < n; ++k)
        sum += (k % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(k));
    return sum * h / 3.0;
}

} // namespace

double disk_mean(const PlaneFunction& u, double r, Normalization norm, std::size_t n_quad,
                 std::size_t n_radial) {
    if (!(r > 0.0)) throw DomainError("disk mean requires r > 0");
    if (n_radial < 16 || n_radial % 2 != 0)
        throw DomainError("n_radial must be even and >= 16, got " + std::to_string(n_radial));

    // C_u has a slope kink at every radius where the circle crosses a
    // declared singularity; split the integral there so each Simpson piece
    // sees a smooth integrand.
    std::vector<double> cuts{0.0};
    for (const auto& s : u.singularities) {
        const double rs = std::hypot(s.re, s.im);
        if (rs > 1e-12 && rs < r * (1.0 - 1e-12)) cuts.push_back(rs);
    }
    cuts.push_back(r);
    std::sort(cuts.begin(), cuts.end());

    double integral = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double a = cuts[p], b = cuts[p + 1];
        if (b - a <= 1e-12 * r) continue;
        auto n = static_cast<std::size_t>(
            std::ceil(static_cast<double>(n_radial) * (b - a) / r));
        n = std::max<std::size_t>(16, n + (n % 2));
        integral += radial_simpson(u, a, b, n, n_quad);
    }

    if (norm == Normalization::area) return 2.0 / (r * r) * integral;
    return 2.0 / (kPi * r * r) * integral;
}

double sup_on_circle(const PlaneFunction& u, double r, std::size_t n_scan,
                     double refine_tol) {
    if (!(r > 0.0)) throw DomainError("circle sup requires r > 0");
    if (n_scan < 8) throw DomainError("n_scan must be at least 8");

    for (const auto& s : u.singularities) {
        if (s.positive &&
            std::fabs(std::hypot(s.re, s.im) - r) <= 1e-12 * std::max(1.0, r))
            throw SingularityError("'" + u.name + "' is unbounded on the circle |z|=" +
                                       std::to_string(r),
                                   wrap_angle(std::atan2(s.im, s.re)));
    }

    const double h = kTwoPi / static_cast<double>(n_scan);
    double best = -std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (std::size_t j = 0; j < n_scan; ++j) {
        const double t = h * static_cast<double>(j);
        const double v = u.eval(r, t);
        if (std::isnan(v)) continue; // skip singular nodes (log-poles give -inf)
        if (v > best) {
            best = v;
            best_t = t;
        }
    }

    // Golden-section maximization on the bracket around the best scan angle.
    const double gr = 0.6180339887498948482;
    double a = best_t - h, b = best_t + h;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = u.eval(r, c), fd = u.eval(r, d);
    while (b - a > refine_tol) {
        if (!(fc < fd)) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = u.eval(r, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = u.eval(r, d);
        }
        if (std::isnan(fc) || std::isnan(fd)) break;
    }
    for (double v : {fc, fd})
        if (std::isfinite(v)) best = std::max(best, v);
    if (!std::isfinite(best))
        throw SingularityError("'" + u.name + "' has no finite value on |z|=" +
                                   std::to_string(r),
                               0.0);
    return best;
}

std::vector<double> RadiiSpec::points() const {
    if (!(r_min > 0.0 && r_max > r_min))
        throw DomainError("radii require 0 < r_min < r_max");
    if (count < 2) throw DomainError("radii count must be at least 2");
    std::vector<double> rs(count);
    if (geometric) {
        const double q = std::log(r_max / r_min) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            rs[i] = r_min * std::exp(q * static_cast<double>(i));
    } else {
        const double q = (r_max - r_min) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            rs[i] = r_min + q * static_cast<double>(i);
    }
    rs.back() = r_max;
    return rs;
}

MeansSeries means_series(const PlaneFunction& u, const std::vector<double>& radii,
                         const MeansOptions& opts) {
    if (radii.size() < 2) throw DomainError("means series needs at least 2 radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw DomainError("radii must be strictly increasing");
    }
    const std::size_t dq = opts.disk_quad == 0 ? opts.n_quad : opts.disk_quad;

    MeansSeries out;
    out.normalization = opts.normalization;
    out.rs = radii;
    out.c.reserve(radii.size());
    out.b.reserve(radii.size());
    out.m.reserve(radii.size());
    for (double r : radii) {
        out.c.push_back(circle_mean(u, r, opts.n_quad));
        out.b.push_back(disk_mean(u, r, opts.normalization, dq, opts.n_radial));
        out.m.push_back(sup_on_circle(u, r, opts.n_scan, opts.refine_tol));
    }
    return out;
}

LogLogSample export_component(const MeansSeries& series, char component, double shift) {
    const std::vector<double>* vals = nullptr;
    switch (component) {
        case 'c': vals = &series.c; break;
        case 'b': vals = &series.b; break;
        case 'm': vals = &series.m; break;
        default: throw DomainError(std::string("unknown series component '") + component + "'");
    }
    std::vector<double> xs(series.rs.size()), ys(series.rs.size());
    for (std::size_t i = 0; i < series.rs.size(); ++i) {
        const double v = (*vals)[i] + shift;
        if (!(v > 0.0))
            throw DomainError("component '" + std::string(1, component) +
                              "' is not positive at r=" + std::to_string(series.rs[i]) +
                              " (value " + std::to_string(v) +
                              "); export with a positive shift");
        xs[i] = std::log(series.rs[i]);
        ys[i] = std::log(v);
    }
    return LogLogSample(std::move(xs), std::move(ys));
}

PlaneFunction rotate_plane(const PlaneFunction& u, double theta) {
    PlaneFunction v = u;
    v.name = u.name + "_rot";
    auto base = u.eval;
    v.eval = [base, theta](double r, double t) { return base(r, t + theta); };
    for (auto& s : v.singularities) {
        // singular points move by -theta
        const double rs = std::hypot(s.re, s.im);
        const double a = std::atan2(s.im, s.re) - theta;
        s.re = rs * std::cos(a);
        s.im = rs * std::sin(a);
    }
    return v;
}

PlaneFunction make_log_abs() {
    PlaneFunction u;
    u.name = "logabs";
    u.eval = [](double r, double) { return std::log(r); };
    u.singularities = {{0.0, 0.0, false}};
    return u;
}

PlaneFunction make_log_shift(double ax, double ay) {
    PlaneFunction u;
    u.name = "logshift";
    u.params = {{"ax", ax}, {"ay", ay}};
    u.eval = [ax, ay](double r, double t) {
        const double dx = r * std::cos(t) - ax;
        const double dy = r * std::sin(t) - ay;
        return 0.5 * std::log(dx * dx + dy * dy);
    };
    u.singularities = {{ax, ay, false}};
    return u;
}

PlaneFunction make_abs2() {
    PlaneFunction u;
    u.name = "abs2";
    u.eval = [](double r, double) { return r * r; };
    return u;
}

PlaneFunction make_re() {
    PlaneFunction u;
    u.name = "re";
    u.eval = [](double r, double t) { return r * std::cos(t); };
    return u;
}

PlaneFunction make_re_plus() {
    PlaneFunction u;
    u.name = "replus";
    u.eval = [](double r, double t) { return std::max(r * std::cos(t), 0.0); };
    return u;
}

PlaneFunction make_log_pair(double d) {
    PlaneFunction u;
    u.name = "logpair";
    u.params = {{"d", d}};
    u.eval = [d](double r, double t) {
        const double x = r * std::cos(t), y = r * std::sin(t);
        const double p = (x - d) * (x - d) + y * y;
        const double q = (x + d) * (x + d) + y * y;
        return 0.5 * std::log(std::max(p, q));
    };
    u.singularities = {{d, 0.0, false}, {-d, 0.0, false}};
    return u;
}

PlaneFunction lookup_plane(const std::string& name,
                           const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    auto reject_unknown = [&](std::initializer_list<std::string> known) {
        for (const auto& [k, v] : params) {
            bool ok = false;
            for (const auto& e : known)
                if (k == e) ok = true;
            if (!ok)
                throw DomainError("unknown parameter '" + k + "' for plane function '" +
                                  name + "'");
        }
    };
    if (name == "logabs") {
        reject_unknown({});
        return make_log_abs();
    }
    if (name == "logshift") {
        reject_unknown({"ax", "ay"});
        return make_log_shift(get("ax", 1.0), get("ay", 0.0));
    }
    if (name == "abs2") {
        reject_unknown({});
        return make_abs2();
    }
    if (name == "re") {
        reject_unknown({});
        return make_re();
    }
    if (name == "replus") {
        reject_unknown({});
        return make_re_plus();
    }
    if (name == "logpair") {
        reject_unknown({"d"});
        return make_log_pair(get("d", 1.0));
    }
    throw DomainError("unknown plane function '" + name + "'");
}

std::vector<std::string> plane_catalog_names() {
    return {"logabs", "logshift", "abs2", "re", "replus", "logpair"};
}

} // namespace pgrow
