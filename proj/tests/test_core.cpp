#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "helpers.hpp"
#include "pgrow/csv.hpp"
#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"
#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"

using namespace pgrow;
using doctest::Approx;

TEST_CASE("grid spec validation") {
    CHECK_THROWS_AS(GridSpec(2.0, 1.0, 100), DomainError);
    CHECK_THROWS_AS(GridSpec(1.0, 2.0, 4), DomainError);
    const GridSpec g(1.0, 10.0, 10);
    const auto xs = g.points();
    CHECK(xs.size() == 10);
    CHECK(xs.front() == 1.0);
    CHECK(xs.back() == 10.0);
    CHECK(xs[1] == Approx(2.0).epsilon(1e-15));
}

TEST_CASE("sample validation rejects bad data") {
    std::vector<double> xs{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<double> ys(8, 1.0);
    CHECK_NOTHROW(LogLogSample(xs, ys));

    auto bad_x = xs;
    bad_x[3] = bad_x[2]; // not strictly increasing
    CHECK_THROWS_AS(LogLogSample(bad_x, ys), DomainError);

    auto bad_y = ys;
    bad_y[5] = std::nan("");
    CHECK_THROWS_AS(LogLogSample(xs, bad_y), DomainError);

    CHECK_THROWS_AS(LogLogSample({1, 2, 3}, {1, 2, 3}), DomainError); // too short
    CHECK_THROWS_AS(LogLogSample(xs, {1, 2, 3}), DomainError);        // length mismatch
}

TEST_CASE("sampling pow is exact") {
    const auto s = sample(make_pow(2.0), GridSpec(1.0, 10.0, 10));
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.y(i) == 2.0 * s.x(i));
}

TEST_CASE("powlog value at x = e") {
    const auto f = make_powlog(3.0, 2.0);
    // ln V = rho x + b ln x at x = e: 3e + 2
    CHECK(f.eval_checked(std::exp(1.0)) == Approx(10.154845485377136).epsilon(1e-15));
}

TEST_CASE("sampling outside the family domain names the offending x") {
    const auto f = pgtest::adhoc("halfline", [](double x) { return x; }, {}, 2.0);
    try {
        sample(f, GridSpec(1.0, 10.0, 16));
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.where() == 1.0);
        CHECK(std::string(e.what()).find("x=1") != std::string::npos);
    }
}

TEST_CASE("sampling is deterministic") {
    const auto a = sample(make_oscslow(2.0, 1.0), pgtest::default_grid());
    const auto b = sample(make_oscslow(2.0, 1.0), pgtest::default_grid());
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.ys().data(), b.ys().data(), a.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(a.xs().data(), b.xs().data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("central difference is exact for linear and quadratic tracks") {
    const GridSpec g(1.0, 9.0, 9);
    const auto lin = sample(make_pow(2.0), g);
    for (std::size_t i = 1; i + 1 < lin.size(); ++i)
        CHECK(dlog_numeric(lin, i) == 2.0);

    const auto quad = sample(pgtest::adhoc("sq", [](double x) { return x * x; }), g);
    for (std::size_t i = 1; i + 1 < quad.size(); ++i)
        CHECK(dlog_numeric(quad, i) == Approx(2.0 * quad.x(i)).epsilon(1e-14));
}

TEST_CASE("central difference of ln x at x=100 with h=0.01") {
    const auto s = sample(make_log(), GridSpec(99.0, 101.0, 201));
    CHECK(s.x(100) == Approx(100.0).epsilon(1e-14));
    CHECK(dlog_numeric(s, 100) == Approx(0.01).epsilon(1e-7));
}

TEST_CASE("boundary derivative needs the explicit flag") {
    const auto s = sample(make_log(), GridSpec(1.0, 10.0, 16));
    CHECK_THROWS_AS(dlog_numeric(s, 0), DomainError);
    CHECK_THROWS_AS(dlog_numeric(s, s.size() - 1), DomainError);
    CHECK_THROWS_AS(dlog_numeric(s, s.size()), DomainError);
    CHECK(dlog_numeric(s, 0, true) == Approx(1.0).epsilon(1e-2));
}

TEST_CASE("exact derivatives match hand values") {
    CHECK(dlog_exact(make_pow(2.0), 7.3) == 2.0);
    CHECK(dlog_exact(make_powlog(3.0, 2.0), 100.0) == Approx(3.02).epsilon(1e-15));
    // r^(2+sin ln r): d/dx (2 + sin x) x = 2 + sin x + x cos x, at x = 2
    CHECK(dlog_exact(make_osc(2.0, 1.0), 2.0) ==
          Approx(2.0770037537313967).epsilon(1e-15));
    const auto sampled = pgtest::adhoc("data", [](double x) { return x; });
    CHECK_THROWS_AS(dlog_exact(sampled, 1.0), CapabilityError);
}

TEST_CASE("halving the step quarters the central-difference error") {
    struct Case {
        AnalyticFamily f;
        double x0, x1;
    };
    const Case cases[] = {
        {make_powlog(3.0, 2.0), 2.0, 34.0}, {make_oscslow(2.0, 1.0), 2.0, 34.0},
        {make_sqrtlog(), 2.0, 34.0},        {make_log(), 2.0, 34.0},
        {make_osc(2.0, 1.0), 2.0, 34.0},    {make_expo(1.0), 1.0, 6.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.f.name);
        const GridSpec coarse(c.x0, c.x1, 129);
        const GridSpec fine(c.x0, c.x1, 257);
        const auto sc = sample(c.f, coarse);
        const auto sf = sample(c.f, fine);
        // compare at shared interior points so both errors sit at the same x
        double ec = 0.0, ef = 0.0;
        for (std::size_t i = 1; i + 1 < sc.size(); ++i) {
            const double exact = c.f.dlog_checked(sc.x(i));
            ec = std::max(ec, std::fabs(dlog_numeric(sc, i) - exact));
            ef = std::max(ef, std::fabs(dlog_numeric(sf, 2 * i) - exact));
        }
        REQUIRE(ec > 1e-12);
        const double ratio = ec / ef;
        CHECK(ratio >= 3.5);
        CHECK(ratio <= 4.5);
    }
}

TEST_CASE("five-point stencil beats central differences on smooth data") {
    const GridSpec g(2.0, 34.0, 129);
    const auto s = sample(make_powlog(3.0, 2.0), g);
    DerivOptions five;
    five.five_point = true;
    const auto d3 = dlog_track(s);
    const auto d5 = dlog_track(s, five);
    double e3 = 0.0, e5 = 0.0;
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
        const double exact = 3.0 + 2.0 / s.x(i);
        e3 = std::max(e3, std::fabs(d3[i] - exact));
        e5 = std::max(e5, std::fabs(d5[i] - exact));
    }
    CHECK(e5 < e3 / 10.0);
}

TEST_CASE("scaling a family leaves its log-derivative untouched") {
    const auto f = make_powlog(3.0, 2.0);
    const auto g = scale_family(f, 17.0);
    CHECK(g.dlog_checked(5.0) == f.dlog_checked(5.0));
    CHECK(g.eval_checked(5.0) == Approx(f.eval_checked(5.0) + std::log(17.0)));
}

TEST_CASE("catalog lookup validates parameters") {
    CHECK_NOTHROW(lookup_growth("powlog", {{"rho", 1.0}, {"b", 1.0}}));
    CHECK_THROWS_AS(lookup_growth("powlog", {{"rho", 1.0}}), DomainError);
    CHECK_THROWS_AS(lookup_growth("powlog", {{"rho", 1.0}, {"b", 1.0}, {"q", 0.0}}),
                    DomainError);
    CHECK_THROWS_AS(lookup_growth("nosuch", {}), DomainError);
    CHECK_THROWS_AS(lookup_rho("pow", {{"rho", 1.0}}), DomainError);
}

TEST_CASE("csv sample round trip") {
    const auto s = sample(make_powlog(2.0, 1.0), GridSpec(1.0, 50.0, 64));
    std::stringstream buf;
    write_sample_csv(buf, s);
    const auto back = read_sample_csv(buf);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(back.x(i) == s.x(i));
        CHECK(back.y(i) == s.y(i));
    }
}

TEST_CASE("csv raw data converts through logs and rejects nonpositive values") {
    std::stringstream ok("r,value\n1,1\n2,4\n3,9\n4,16\n5,25\n6,36\n7,49\n8,64\n");
    const auto s = read_sample_csv(ok);
    CHECK(s.x(1) == Approx(std::log(2.0)));
    CHECK(s.y(1) == Approx(std::log(4.0)));

    std::stringstream neg("r,value\n1,1\n2,-4\n3,9\n4,16\n5,25\n6,36\n7,49\n8,64\n");
    CHECK_THROWS_AS(read_sample_csv(neg), IoError);

    std::stringstream unsorted("x,y\n1,1\n3,2\n2,3\n4,4\n5,5\n6,6\n7,7\n8,8\n");
    CHECK_THROWS_AS(read_sample_csv(unsorted), IoError);

    std::stringstream junk("x,y\n1,1\n2,two\n");
    CHECK_THROWS_AS(read_sample_csv(junk), IoError);

    std::stringstream ragged("x,y\n1,1,7\n");
    CHECK_THROWS_AS(read_sample_csv(ragged), IoError);

    std::stringstream empty("");
    CHECK_THROWS_AS(read_sample_csv(empty), IoError);
}

TEST_CASE("csv multi-column selection") {
    const std::string text =
        "r,c,b,m,normalization\n"
        "1,1,0.5,2,0\n2,2,1,4,0\n3,3,1.5,6,0\n4,4,2,8,0\n"
        "5,5,2.5,10,0\n6,6,3,12,0\n7,7,3.5,14,0\n8,8,4,16,0\n";
    std::stringstream buf(text);
    const auto s = read_sample_csv(buf, "m");
    CHECK(s.y(0) == Approx(std::log(2.0)));

    std::stringstream again(text);
    CHECK_THROWS_AS(read_sample_csv(again), IoError); // ambiguous without a column
    std::stringstream missing(text);
    CHECK_THROWS_AS(read_sample_csv(missing, "zz"), IoError);
}
