#include <doctest.h>

#include <cmath>
#include <cstring>

#include "helpers.hpp"
#include "pgrow/deriv.hpp"
#include "pgrow/error.hpp"
#include "pgrow/model.hpp"
#include "pgrow/proximate.hpp"

using namespace pgrow;
using doctest::Approx;

namespace {

ModelGrowth id_model(const GridSpec& g = pgtest::default_grid()) {
    return make_model(GrowthInput{make_id()}, g);
}

ModelGrowth log_model(const GridSpec& g = pgtest::default_grid()) {
    return make_model(GrowthInput{make_log()}, g);
}

} // namespace

TEST_CASE("the growth ratio track for simple pairs") {
    const auto id = id_model(GridSpec(90.0, 110.0, 21));

    const auto sq = l1_track(GrowthInput{make_pow(2.0)}, id);
    for (double v : sq.values) CHECK(v == 2.0);

    // V = r^3 (ln r)^2: ratio 3 + 2/x, at x = 100 exactly 3.02
    const auto pl = l1_track(GrowthInput{make_powlog(3.0, 2.0)}, id);
    CHECK(pl.xs[10] == 100.0);
    CHECK(pl.values[10] == Approx(3.02).epsilon(1e-15));

    // V = e^(2r) against M = e^r
    const auto expo = make_model(GrowthInput{make_expo(1.0)}, GridSpec(1.0, 600.0, 2048));
    const auto ee = l1_track(GrowthInput{make_expo(2.0)}, expo);
    for (double v : ee.values) CHECK(v == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("proximateness verdicts") {
    const auto id = id_model();

    const auto good = check_proximate(GrowthInput{make_powlog(3.0, 2.0)}, id);
    CHECK(good.is_proximate);
    CHECK(*good.rho.value == Approx(3.0).epsilon(1e-2));

    const auto osc = check_proximate(GrowthInput{make_osc(2.0, 1.0)}, id);
    CHECK_FALSE(osc.is_proximate);
    CHECK(osc.rho.status == LimitStatus::oscillating);

    // V = M: the ratio is identically one
    const auto self = check_proximate(GrowthInput{make_id()}, id);
    CHECK(self.is_proximate);
    CHECK(*self.rho.value == 1.0);
    CHECK(self.rho.tail_residual == 0.0);

    // a converged negative limit is not accepted
    const auto dec = check_proximate(GrowthInput{make_pow(-1.0)}, id);
    CHECK_FALSE(dec.is_proximate);
    REQUIRE(dec.rho.converged());
    CHECK(*dec.rho.value == -1.0);
}

TEST_CASE("candidate order track values") {
    const auto id = id_model(GridSpec(5.0, 15.0, 11));
    const auto rt = rho_track(GrowthInput{make_powlog(3.0, 2.0)}, id);
    // at r = e^10: (3x + 2 ln x)/x with x = 10
    CHECK(rt.xs[5] == 10.0);
    CHECK(rt.rho_m[5] == Approx(3.4605170185988091).epsilon(1e-15));

    const auto sq = rho_track(GrowthInput{make_pow(2.0)}, id);
    for (double v : sq.rho_m) CHECK(v == 2.0);
    for (double v : sq.rho_m_prime) CHECK(v == 0.0);

    const auto self = rho_track(GrowthInput{make_id()}, id);
    for (double v : self.rho_m) CHECK(v == 1.0);
}

TEST_CASE("rho track needs ln M away from zero") {
    // ln M = ln ln r stays tiny on a short ray starting at x = 1
    const auto logm = log_model(GridSpec(1.0, 1.1, 64));
    CHECK_THROWS_AS(rho_track(GrowthInput{make_pow(2.0)}, logm), DomainError);
}

TEST_CASE("the two equivalent limits, frozen interior values") {
    // V = r^3 (ln r)^2, M = id: the second track is x rho_M'(x) with
    // rho_M = 3 + 2 ln x / x, so at x = 100 it equals 2(1 - ln 100)/100
    const auto id = id_model(GridSpec(90.0, 110.0, 21));
    const auto rt = rho_track(GrowthInput{make_powlog(3.0, 2.0)}, id);
    CHECK(rt.rho_m_prime[10] == Approx(-7.2103403719761827e-4).epsilon(1e-12));
    CHECK(100.0 * rt.rho_m_prime[10] == Approx(-0.072103403719761827).epsilon(1e-12));

    // V with rho_M = 2 + lnln r / ln r: track (1 - ln x)/x, at x = 1e4
    const auto id4 = id_model();
    const auto rt2 = rho_track(GrowthInput{make_powloglog(2.0, 1.0)}, id4);
    const double last = rt2.xs.back() * rt2.rho_m_prime.back();
    CHECK(rt2.xs.back() == 1e4);
    CHECK(last == Approx(-8.2103403719761837e-4).epsilon(1e-12));
}

TEST_CASE("limits over the default grid") {
    const auto id = id_model();

    auto [l3a, l4a] = limits_3_and_4(GrowthInput{make_powlog(3.0, 2.0)}, id);
    REQUIRE(l3a.converged());
    CHECK(*l3a.value == Approx(3.0).epsilon(5e-3));
    REQUIRE(l4a.converged());
    CHECK(std::fabs(*l4a.value) < 1e-2);

    auto [l3b, l4b] = limits_3_and_4(GrowthInput{make_pow(2.0)}, id);
    CHECK(*l3b.value == 2.0);
    CHECK(*l4b.value == 0.0);
    CHECK(l4b.tail_residual == 0.0);

    auto [l3c, l4c] = limits_3_and_4(GrowthInput{make_powloglog(2.0, 1.0)}, id);
    CHECK(*l3c.value == Approx(2.0).epsilon(5e-3));
    CHECK(converged_to_zero(l4c));
}

TEST_CASE("identity residual vanishes with exact derivatives") {
    const auto id = id_model();
    const auto logm = log_model();
    const auto pow3 = make_model(GrowthInput{make_pow(3.0)}, pgtest::default_grid());
    const auto pl11 = make_model(GrowthInput{make_powlog(1.0, 1.0)}, pgtest::default_grid());

    const GrowthInput vs_id[] = {
        GrowthInput{make_pow(2.0)},       GrowthInput{make_powlog(3.0, 2.0)},
        GrowthInput{make_powlog(2.0, -1.0)}, GrowthInput{make_powloglog(2.0, 1.0)},
        GrowthInput{make_osc(2.0, 1.0)},  GrowthInput{make_oscslow(2.0, 1.0)},
        GrowthInput{make_powsinlog(2.0)}, GrowthInput{make_sqrtlog()},
        GrowthInput{make_log()},          GrowthInput{make_id()},
    };
    int pairs = 0;
    for (const auto& v : vs_id) {
        CHECK(identity6_residual(v, id) <= 1e-9);
        ++pairs;
    }
    for (const auto& v : {GrowthInput{make_pow(2.0)}, GrowthInput{make_powlog(0.0, 2.0)},
                          GrowthInput{make_sqrtlog()}}) {
        CHECK(identity6_residual(v, logm) <= 1e-9);
        ++pairs;
    }
    CHECK(identity6_residual(GrowthInput{make_pow(2.0)}, pow3) <= 1e-9);
    CHECK(identity6_residual(GrowthInput{make_powlog(3.0, 2.0)}, pl11) <= 1e-9);
    pairs += 2;

    const auto expo = make_model(GrowthInput{make_expo(1.0)}, GridSpec(1.0, 600.0, 2048));
    CHECK(identity6_residual(GrowthInput{make_expo(2.0)}, expo) <= 1e-9);
    ++pairs;
    CHECK(pairs >= 12);
}

TEST_CASE("identity residual stays under the step-size bound numerically") {
    const GridSpec g(1000.0, 1e4, 4096);
    const auto id = id_model(g);
    ProximateOptions numeric;
    numeric.force_numeric_derivatives = true;
    for (const auto& v : {GrowthInput{make_powlog(3.0, 2.0)}, GrowthInput{make_pow(2.0)},
                          GrowthInput{make_powloglog(2.0, 1.0)},
                          GrowthInput{make_sqrtlog()}}) {
        CHECK(identity6_residual(v, id, numeric) <= 1e-5);
    }
}

TEST_CASE("identity residual for V = M is float noise") {
    const auto id = id_model();
    CHECK(identity6_residual(GrowthInput{make_id()}, id) <= 1e-12);
    const auto logm = log_model();
    CHECK(identity6_residual(GrowthInput{make_log()}, logm) <= 1e-12);
}

TEST_CASE("equivalence report: proximate pairs") {
    const auto id = id_model();
    const GrowthInput proximate[] = {
        GrowthInput{make_pow(2.0)},          GrowthInput{make_powlog(3.0, 2.0)},
        GrowthInput{make_powloglog(2.0, 1.0)}, GrowthInput{make_sqrtlog()},
        GrowthInput{make_log()},             GrowthInput{make_id()},
    };
    for (const auto& v : proximate) {
        const auto rep = equivalence_report(v, id);
        CHECK(rep.verdict_I.is_proximate);
        CHECK(rep.statement_II);
        CHECK(rep.theorem_consistent);
        REQUIRE(rep.rho_agreement.has_value());
        CHECK(*rep.rho_agreement <= 2e-2);
    }

    const auto logm = log_model();
    const auto rep = equivalence_report(GrowthInput{make_powlog(0.0, 2.0)}, logm);
    CHECK(rep.theorem_consistent);
    CHECK(*rep.verdict_I.rho.value == 2.0);
    CHECK(*rep.rho_agreement == 0.0);

    const auto expo = make_model(GrowthInput{make_expo(1.0)}, GridSpec(1.0, 600.0, 2048));
    const auto rep2 = equivalence_report(GrowthInput{make_expo(2.0)}, expo);
    CHECK(rep2.theorem_consistent);
    CHECK(*rep2.verdict_I.rho.value == 2.0);
}

TEST_CASE("equivalence report: non-proximate pairs stay consistent") {
    const auto id = id_model();

    const auto osc = equivalence_report(GrowthInput{make_osc(2.0, 1.0)}, id);
    CHECK_FALSE(osc.verdict_I.is_proximate);
    CHECK_FALSE(osc.statement_II);
    CHECK(osc.theorem_consistent);

    // rho_M converges here but the second limit keeps oscillating: statement
    // II must still come out false
    const auto psl = equivalence_report(GrowthInput{make_powsinlog(2.0)}, id);
    CHECK_FALSE(psl.verdict_I.is_proximate);
    REQUIRE(psl.limit_3.converged());
    CHECK(*psl.limit_3.value == Approx(2.0).epsilon(1e-3));
    CHECK(psl.limit_4.status == LimitStatus::oscillating);
    CHECK_FALSE(psl.statement_II);
    CHECK(psl.theorem_consistent);

    const auto oscslow = equivalence_report(GrowthInput{make_oscslow(2.0, 1.0)}, id);
    CHECK_FALSE(oscslow.verdict_I.is_proximate);
    CHECK_FALSE(oscslow.statement_II);
    CHECK(oscslow.theorem_consistent);

    const auto logm = log_model();
    const auto sq = equivalence_report(GrowthInput{make_pow(2.0)}, logm);
    CHECK_FALSE(sq.verdict_I.is_proximate);
    CHECK(sq.verdict_I.rho.diverged());
    CHECK(sq.limit_3.diverged());
    CHECK(sq.theorem_consistent);
}

TEST_CASE("scaling V leaves the ratio track bitwise unchanged") {
    const auto id = id_model();
    const auto base = l1_track(GrowthInput{make_powlog(3.0, 2.0)}, id);
    for (double c : {0.5, 7.0}) {
        const auto scaled =
            l1_track(GrowthInput{scale_family(make_powlog(3.0, 2.0), c)}, id);
        CHECK(std::memcmp(base.values.data(), scaled.values.data(),
                          base.values.size() * sizeof(double)) == 0);
    }
    // and through numeric derivatives: shifting ln V by a constant cancels
    ProximateOptions numeric;
    numeric.force_numeric_derivatives = true;
    const auto b2 = l1_track(GrowthInput{make_powlog(3.0, 2.0)}, id, numeric);
    const auto s2 =
        l1_track(GrowthInput{scale_family(make_powlog(3.0, 2.0), 7.0)}, id, numeric);
    for (std::size_t i = 0; i < b2.values.size(); ++i)
        CHECK(s2.values[i] == Approx(b2.values[i]).epsilon(1e-12));
}

TEST_CASE("raising V to a power scales rho") {
    const auto id = id_model();
    const auto base = check_proximate(GrowthInput{make_powlog(3.0, 2.0)}, id);
    for (double a : {0.5, 2.0, 3.0}) {
        const auto powed =
            check_proximate(GrowthInput{power_family(make_powlog(3.0, 2.0), a)}, id);
        CHECK(powed.is_proximate);
        CHECK(*powed.rho.value == Approx(a * *base.rho.value).epsilon(1e-9));
    }
}

TEST_CASE("every validated model is proximate to itself with rho = 1") {
    const GrowthInput models[] = {GrowthInput{make_id()}, GrowthInput{make_log()},
                                  GrowthInput{make_powlog(1.0, 1.0)},
                                  GrowthInput{make_pow(3.0)}};
    for (const auto& m : models) {
        const auto model = make_model(m, pgtest::default_grid());
        const auto v = check_proximate(m, model);
        CHECK(v.is_proximate);
        CHECK(*v.rho.value == 1.0);
        CHECK(v.rho.tail_residual == 0.0);
    }
    const auto expo = make_model(GrowthInput{make_expo(1.5)}, GridSpec(1.0, 600.0, 2048));
    const auto v = check_proximate(GrowthInput{make_expo(1.5)}, expo);
    CHECK(*v.rho.value == 1.0);
}

TEST_CASE("sampled V goes through numeric derivatives and agrees") {
    const auto id = id_model();
    const auto vs = sample(make_powlog(3.0, 2.0), pgtest::default_grid());
    const auto verdict = check_proximate(GrowthInput{vs}, id);
    CHECK(verdict.is_proximate);
    CHECK(*verdict.rho.value == Approx(3.0).epsilon(1e-2));
}

TEST_CASE("classical proximate orders") {
    const GridSpec g = pgtest::default_grid();

    const auto c2 = check_valiron(RhoInput{make_rho_const(2.0)}, g);
    CHECK(c2.is_valiron);
    CHECK(*c2.rho_limit.value == 2.0);
    CHECK(*c2.decay_limit.value == 0.0);

    for (double b : {1.0, -1.0, 2.0, -2.0}) {
        CAPTURE(b);
        const auto v = check_valiron(RhoInput{make_rho_loglog(2.0, b)}, g);
        CHECK(v.is_valiron);
        CHECK(*v.rho_limit.value == Approx(2.0).epsilon(2e-2));
        CHECK(converged_to_zero(v.decay_limit));
    }

    // rho(r) = 2 + sin(ln r)/ln r: r rho'(r) ln r = cos x - sin x / x keeps
    // oscillating, so this is not a proximate order
    const auto bad = check_valiron(RhoInput{make_rho_sinlog(2.0)}, g);
    CHECK_FALSE(bad.is_valiron);
    CHECK(bad.decay_limit.status == LimitStatus::oscillating);
    CHECK(bad.rho_limit.converged());

    CHECK_THROWS_AS(check_valiron(RhoInput{make_rho_const(-1.0)}, g), PreconditionError);
}

TEST_CASE("the bridge between the classical and relative notions") {
    const GridSpec g = pgtest::default_grid();

    for (double b : {0.0, 1.0, -1.0, 2.0, -2.0}) {
        CAPTURE(b);
        const RhoInput rho = b == 0.0 ? RhoInput{make_rho_const(2.0)}
                                      : RhoInput{make_rho_loglog(2.0, b)};
        const auto rep = valiron_bridge(rho, g);
        CHECK(rep.valiron.is_valiron);
        CHECK(rep.proximate.is_proximate);
        CHECK(rep.agree);
        REQUIRE(rep.rho_gap.has_value());
        CHECK(*rep.rho_gap <= 2e-2);
    }

    const auto rejected = valiron_bridge(RhoInput{make_rho_sinlog(2.0)}, g);
    CHECK_FALSE(rejected.valiron.is_valiron);
    CHECK_FALSE(rejected.proximate.is_proximate);
    CHECK(rejected.agree);
}

TEST_CASE("the bridge accepts a tabulated candidate order") {
    const GridSpec g = pgtest::default_grid();
    const auto fam = make_rho_loglog(2.0, 1.0);
    Track tr;
    for (double x : g.points()) {
        tr.xs.push_back(x);
        tr.values.push_back(fam.eval(x));
    }
    const auto direct = check_valiron(RhoInput{tr}, g);
    CHECK(direct.is_valiron);
    CHECK(*direct.rho_limit.value == Approx(2.0).epsilon(2e-2));

    const auto rep = valiron_bridge(RhoInput{tr}, g);
    CHECK(rep.agree);
    CHECK(rep.proximate.is_proximate);
}
