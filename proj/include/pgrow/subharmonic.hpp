#ifndef PGROW_SUBHARMONIC_HPP
#define PGROW_SUBHARMONIC_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgrow/grid.hpp"

namespace pgrow {

/// An isolated singular point of a plane function. Log-poles of subharmonic
/// functions go to -infinity; positive poles make circle sups unbounded.
struct PlaneSingularity {
    double re = 0.0;
    double im = 0.0;
    bool positive = false; // true when u -> +infinity there
};

/// A function u on the complex plane evaluated in polar form: eval(r, t) is
/// u(r e^{it}). Quadrature avoids the declared singular set by node placement.
struct PlaneFunction {
    std::string name;
    std::map<std::string, double> params;
    std::function<double(double, double)> eval;
    std::vector<PlaneSingularity> singularities;
};

enum class Normalization { area, paper };

std::string to_string(Normalization n);

struct MeansOptions {
    std::size_t n_quad = 512;     // circle nodes, power of two >= 16
    std::size_t n_radial = 64;    // Simpson intervals for the disk mean (even >= 16)
    std::size_t n_scan = 256;     // initial sup scan
    double refine_tol = 1e-9;     // golden-section angle width
    Normalization normalization = Normalization::area;
    std::size_t disk_quad = 0;    // circle nodes inside the disk mean; 0 = n_quad
};

/// (1/2pi) integral of u(r e^{it}) dt by the periodic trapezoid rule; nodes
/// are offset by half a step when a declared singularity sits on a node.
double circle_mean(const PlaneFunction& u, double r, std::size_t n_quad);

/// Areal average over the disk of radius r: (2/r^2) * integral of C_u(s) s ds
/// under the area normalization, (2/(pi r^2)) * the same integral under the
/// paper normalization.
double disk_mean(const PlaneFunction& u, double r, Normalization norm, std::size_t n_quad,
                 std::size_t n_radial);

/// sup of u on the circle |z| = r: coarse scan plus golden-section refinement
/// around the best angle.
double sup_on_circle(const PlaneFunction& u, double r, std::size_t n_scan,
                     double refine_tol);

struct MeansSeries {
    std::vector<double> rs;
    std::vector<double> c;
    std::vector<double> b;
    std::vector<double> m;
    Normalization normalization = Normalization::area;
};

/// Radii grid, geometric by default.
struct RadiiSpec {
    double r_min = 1.0;
    double r_max = 100.0;
    std::size_t count = 64;
    bool geometric = true;

    std::vector<double> points() const;
};

MeansSeries means_series(const PlaneFunction& u, const std::vector<double>& radii,
                         const MeansOptions& opts = {});

/// Exports one component of a series as a growth sample in log coordinates.
/// Values must be positive after the optional shift u -> u + shift.
LogLogSample export_component(const MeansSeries& series, char component,
                              double shift = 0.0);

/// u rotated by angle theta: z -> u(z e^{i theta}).
PlaneFunction rotate_plane(const PlaneFunction& u, double theta);

// --- built-in subharmonic catalog -------------------------------------------

PlaneFunction make_log_abs();                      // ln|z|
PlaneFunction make_log_shift(double ax, double ay); // ln|z - a|
PlaneFunction make_abs2();                         // |z|^2
PlaneFunction make_re();                           // Re z
PlaneFunction make_re_plus();                      // max(Re z, 0)
PlaneFunction make_log_pair(double d);             // max(ln|z-d|, ln|z+d|)

PlaneFunction lookup_plane(const std::string& name,
                           const std::map<std::string, double>& params);
std::vector<std::string> plane_catalog_names();

} // namespace pgrow

#endif
