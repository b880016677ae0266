// proxgrow: growth analysis relative to model growth functions.
//
// Exit codes: 0 = success / analysis consistent, 2 = analysis negative,
// 1 = usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgrow/construct.hpp"
#include "pgrow/csv.hpp"
#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"
#include "pgrow/family.hpp"
#include "pgrow/funcspec.hpp"
#include "pgrow/limits.hpp"
#include "pgrow/model.hpp"
#include "pgrow/proximate.hpp"
#include "pgrow/report.hpp"
#include "pgrow/subharmonic.hpp"

namespace {

using pgrow::Json;

struct GridFlags {
    double x0 = 1.0;
    double x1 = 1.0e4;
    std::size_t n = 4096;

    pgrow::GridSpec spec() const { return pgrow::GridSpec(x0, x1, n); }
    Json echo() const { return Json{{"x0", x0}, {"x1", x1}, {"n", n}}; }
};

struct CommonFlags {
    GridFlags grid;
    double tol = 1e-2;
    double window = 0.5;
    std::string json_path;
    bool numeric = false;

    pgrow::LimitOptions limits() const {
        pgrow::LimitOptions o;
        o.tol = tol;
        o.window_fraction = window;
        return o;
    }
    Json echo() const {
        Json j = grid.echo();
        j["tol"] = tol;
        j["window"] = window;
        j["numeric_derivatives"] = numeric;
        return j;
    }
};

void add_grid_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--x0", f.grid.x0, "grid start in x = ln r")->capture_default_str();
    cmd->add_option("--x1", f.grid.x1, "grid end in x = ln r")->capture_default_str();
    cmd->add_option("--n", f.grid.n, "grid points")->capture_default_str();
    cmd->add_option("--tol", f.tol, "tail convergence tolerance")->capture_default_str();
    cmd->add_option("--window", f.window, "tail window fraction")->capture_default_str();
    cmd->add_flag("--numeric", f.numeric, "force numeric derivatives");
    cmd->add_option("--json", f.json_path, "also write the report to this file");
}

pgrow::GrowthInput resolve_growth(const std::string& text) {
    const pgrow::FunctionSpec spec = pgrow::parse_function_spec(text);
    if (spec.kind == pgrow::FunctionSpec::Kind::csv)
        return pgrow::read_sample_file(spec.name, spec.column);
    return pgrow::lookup_growth(spec.name, spec.params);
}

pgrow::RhoInput resolve_rho(const std::string& text) {
    const pgrow::FunctionSpec spec = pgrow::parse_function_spec(text);
    if (spec.kind == pgrow::FunctionSpec::Kind::csv)
        return pgrow::read_track_file(spec.name);
    return pgrow::lookup_rho(spec.name, spec.params);
}

pgrow::PlaneFunction resolve_plane(const std::string& text) {
    const pgrow::FunctionSpec spec = pgrow::parse_function_spec(text);
    if (spec.kind == pgrow::FunctionSpec::Kind::csv)
        throw pgrow::DomainError("plane functions come from the catalog, not CSV");
    return pgrow::lookup_plane(spec.name, spec.params);
}

// When a sampled input is present its xs become the working grid.
std::vector<double> working_grid(const pgrow::GrowthInput& primary, const GridFlags& grid) {
    if (const auto* s = std::get_if<pgrow::LogLogSample>(&primary)) return s->xs();
    return grid.spec().points();
}

void emit(const Json& report, const std::string& json_path) {
    const std::string text = report.dump(2);
    std::cout << text << '\n';
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw pgrow::IoError("cannot write '" + json_path + "'");
        out << text << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"growth analysis relative to model growth functions"};
    app.require_subcommand(1);

    // validate-model
    auto* c_vm = app.add_subcommand("validate-model", "check the model growth clauses");
    CommonFlags vm_flags;
    std::string vm_m;
    c_vm->add_option("--m", vm_m, "candidate model (family spec or csv:)")->required();
    add_grid_flags(c_vm, vm_flags);

    // check
    auto* c_check = app.add_subcommand("check", "proximateness and the equivalence report");
    CommonFlags ck_flags;
    std::string ck_v, ck_m;
    c_check->add_option("--v", ck_v, "growth function V")->required();
    c_check->add_option("--m", ck_m, "model growth function M")->required();
    add_grid_flags(c_check, ck_flags);

    // valiron
    auto* c_val = app.add_subcommand("valiron", "classical proximate-order test and bridge");
    CommonFlags va_flags;
    std::string va_rho;
    c_val->add_option("--rho", va_rho, "candidate order (family spec or csv: track)")
        ->required();
    add_grid_flags(c_val, va_flags);

    // construct
    auto* c_con = app.add_subcommand("construct", "build a proximate majorant of A");
    CommonFlags co_flags;
    std::string co_a, co_m, co_out;
    double co_smooth = 0.02;
    c_con->add_option("--a", co_a, "target function A")->required();
    c_con->add_option("--m", co_m, "model growth function M")->required();
    c_con->add_option("--out", co_out, "CSV output path (x,lnA,lnV,rho_m)");
    c_con->add_option("--smooth", co_smooth, "slope smoothing window fraction")
        ->capture_default_str();
    add_grid_flags(c_con, co_flags);

    // means
    auto* c_means = app.add_subcommand("means", "circle/disk means of a plane function");
    std::string me_u, me_out, me_json, me_norm = "area";
    double me_rmin = 1.0, me_rmax = 100.0;
    std::size_t me_count = 64, me_quad = 512, me_radial = 64, me_scan = 256;
    c_means->add_option("--u", me_u, "plane function")->required();
    c_means->add_option("--rmin", me_rmin, "smallest radius")->capture_default_str();
    c_means->add_option("--rmax", me_rmax, "largest radius")->capture_default_str();
    c_means->add_option("--radii", me_count, "number of radii")->capture_default_str();
    c_means->add_option("--quad", me_quad, "circle quadrature nodes")->capture_default_str();
    c_means->add_option("--radial", me_radial, "radial Simpson intervals")
        ->capture_default_str();
    c_means->add_option("--scan", me_scan, "sup scan nodes")->capture_default_str();
    c_means->add_option("--normalization", me_norm, "area|paper")->capture_default_str();
    c_means->add_option("--out", me_out, "CSV output path (default stdout)");
    c_means->add_option("--json", me_json, "also write the report to this file");

    // limits
    auto* c_lim = app.add_subcommand("limits", "estimate a tail limit or limsup of a track");
    std::string li_track, li_mode = "limit", li_json;
    double li_tol = 1e-2, li_window = 0.5;
    c_lim->add_option("--track", li_track, "CSV track (x,y)")->required();
    c_lim->add_option("--mode", li_mode, "limit|limsup")->capture_default_str();
    c_lim->add_option("--tol", li_tol, "tail convergence tolerance")->capture_default_str();
    c_lim->add_option("--window", li_window, "tail window fraction")->capture_default_str();
    c_lim->add_option("--json", li_json, "also write the report to this file");

    CLI11_PARSE(app, argc, argv);

    if (c_vm->parsed()) {
        const pgrow::GrowthInput m = resolve_growth(vm_m);
        const std::vector<double> xs = working_grid(m, vm_flags.grid);
        pgrow::ModelOptions mopts;
        mopts.limits = vm_flags.limits();
        mopts.force_numeric_derivatives = vm_flags.numeric;
        const pgrow::ValidationReport rep = pgrow::validate_model(m, xs, mopts);
        Json options = vm_flags.echo();
        options["m"] = vm_m;
        emit(pgrow::make_report("validate-model", options, pgrow::to_json(rep)),
             vm_flags.json_path);
        return rep.passing() ? 0 : 2;
    }

    if (c_check->parsed()) {
        const pgrow::GrowthInput v = resolve_growth(ck_v);
        const pgrow::GrowthInput m = resolve_growth(ck_m);
        const std::vector<double> xs = working_grid(v, ck_flags.grid);
        pgrow::ModelOptions mopts;
        mopts.limits = ck_flags.limits();
        mopts.force_numeric_derivatives = ck_flags.numeric;
        const pgrow::ModelGrowth model = pgrow::make_model(m, xs, mopts);
        pgrow::ProximateOptions popts;
        popts.limits = ck_flags.limits();
        popts.force_numeric_derivatives = ck_flags.numeric;
        const pgrow::EquivalenceReport rep = pgrow::equivalence_report(v, model, popts);
        Json options = ck_flags.echo();
        options["v"] = ck_v;
        options["m"] = ck_m;
        emit(pgrow::make_report("check", options, pgrow::to_json(rep)), ck_flags.json_path);
        return rep.theorem_consistent ? 0 : 2;
    }

    if (c_val->parsed()) {
        const pgrow::RhoInput rho = resolve_rho(va_rho);
        pgrow::ProximateOptions popts;
        popts.limits = va_flags.limits();
        popts.force_numeric_derivatives = va_flags.numeric;
        const pgrow::ValironVerdict verdict =
            pgrow::check_valiron(rho, va_flags.grid.spec(), popts);
        const pgrow::ValironBridgeReport bridge =
            pgrow::valiron_bridge(rho, va_flags.grid.spec(), popts);
        Json payload;
        payload["valiron"] = pgrow::to_json(verdict);
        payload["bridge"] = pgrow::to_json(bridge);
        Json options = va_flags.echo();
        options["rho"] = va_rho;
        emit(pgrow::make_report("valiron", options, payload), va_flags.json_path);
        return bridge.agree ? 0 : 2;
    }

    if (c_con->parsed()) {
        const pgrow::GrowthInput a = resolve_growth(co_a);
        const pgrow::GrowthInput m = resolve_growth(co_m);
        const std::vector<double> xs = working_grid(a, co_flags.grid);
        pgrow::ModelOptions mopts;
        mopts.limits = co_flags.limits();
        mopts.force_numeric_derivatives = co_flags.numeric;
        const pgrow::ModelGrowth model = pgrow::make_model(m, xs, mopts);
        pgrow::ConstructOptions copts;
        copts.limits = co_flags.limits();
        copts.smooth_frac = co_smooth;
        copts.force_numeric_derivatives = co_flags.numeric;
        const pgrow::ConstructionResult res = pgrow::construct_proximate(a, model, copts);
        if (!co_out.empty()) {
            std::ofstream out(co_out);
            if (!out) throw pgrow::IoError("cannot write '" + co_out + "'");
            const pgrow::LogLogSample sa = pgrow::sample_of(a, xs);
            std::vector<double> ln_a(sa.ys().begin() + res.offset, sa.ys().end());
            std::vector<double> rho_full(res.v.size(), 0.0);
            for (std::size_t k = 0; k < res.rho_m.xs.size(); ++k)
                rho_full[k + res.rho_m.offset] = res.rho_m.rho_m[k];
            pgrow::write_construction_csv(out, res.v.xs(), ln_a, res.v.ys(), rho_full);
        }
        Json options = co_flags.echo();
        options["a"] = co_a;
        options["m"] = co_m;
        options["smooth"] = co_smooth;
        emit(pgrow::make_report("construct", options, pgrow::to_json(res)),
             co_flags.json_path);
        return res.success ? 0 : 2;
    }

    if (c_means->parsed()) {
        const pgrow::PlaneFunction u = resolve_plane(me_u);
        pgrow::MeansOptions mo;
        mo.n_quad = me_quad;
        mo.n_radial = me_radial;
        mo.n_scan = me_scan;
        if (me_norm == "area")
            mo.normalization = pgrow::Normalization::area;
        else if (me_norm == "paper")
            mo.normalization = pgrow::Normalization::paper;
        else
            throw pgrow::DomainError("--normalization must be 'area' or 'paper'");
        pgrow::RadiiSpec radii{me_rmin, me_rmax, me_count, true};
        const pgrow::MeansSeries series = pgrow::means_series(u, radii.points(), mo);
        if (me_out.empty()) {
            pgrow::write_means_csv(std::cout, series);
        } else {
            std::ofstream out(me_out);
            if (!out) throw pgrow::IoError("cannot write '" + me_out + "'");
            pgrow::write_means_csv(out, series);
        }
        Json options{{"u", me_u},           {"rmin", me_rmin},   {"rmax", me_rmax},
                     {"radii", me_count},   {"quad", me_quad},   {"radial", me_radial},
                     {"scan", me_scan},     {"normalization", me_norm}};
        emit(pgrow::make_report("means", options, pgrow::to_json(series)), me_json);
        return 0;
    }

    if (c_lim->parsed()) {
        const pgrow::Track track = pgrow::read_track_file(li_track);
        pgrow::LimitOptions lo;
        lo.tol = li_tol;
        lo.window_fraction = li_window;
        pgrow::LimitEstimate est;
        if (li_mode == "limit")
            est = pgrow::estimate_limit(track, lo);
        else if (li_mode == "limsup")
            est = pgrow::estimate_limsup(track, lo);
        else
            throw pgrow::DomainError("--mode must be 'limit' or 'limsup'");
        Json options{{"track", li_track}, {"mode", li_mode}, {"tol", li_tol},
                     {"window", li_window}};
        emit(pgrow::make_report("limits", options, pgrow::to_json(est)), li_json);
        return (est.converged() || est.diverged()) ? 0 : 2;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pgrow::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const pgrow::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const pgrow::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const pgrow::Error& e) {
        // precondition violations, singularities, infinite order: the
        // analysis itself says no
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
