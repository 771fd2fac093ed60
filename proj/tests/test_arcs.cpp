#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "thomaf/arcs.hpp"
#include "thomaf/budget.hpp"
#include "thomaf/parse.hpp"
#include "thomaf/pipeline.hpp"
#include "thomaf/space.hpp"

using namespace thomaf;

static const vars_t T{"t"};

static space_with_function mk(vars_t y, vars_t z, std::vector<std::string> gs,
                              std::string f, std::size_t c) {
    vars_t amb = y;
    for (auto& v : z) amb.push_back(v);
    std::vector<polynomial> G;
    for (auto& g : gs) G.push_back(parse_polynomial(g, amb));
    std::optional<polynomial> fp;
    if (!f.empty()) fp = parse_polynomial(f, amb);
    return make_space(std::move(y), std::move(z), std::move(G), std::move(fp), c);
}

static arc mkarc(std::vector<std::string> comps) {
    std::vector<polynomial> ps;
    for (auto& c : comps) ps.push_back(parse_polynomial(c, T));
    return make_arc(std::move(ps));
}

static truncated_series ts(const std::string& text, std::size_t prec) {
    return truncated_series::from_polynomial(parse_polynomial(text, T), prec);
}

TEST_CASE("arcs pass through the origin and stay on the variety") {
    CHECK_THROWS_AS(mkarc({"t + 1", "t"}), input_error);

    space_with_function cusp = mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1);
    CHECK(arc_on_variety(cusp, mkarc({"t^2", "t^3"})));
    CHECK(arc_on_variety(cusp, mkarc({"t^2", "-t^3"})));
    CHECK_FALSE(arc_on_variety(cusp, mkarc({"t", "t"})));

    CHECK(pullback(parse_polynomial("w^2 - v^2", cusp.ambient), mkarc({"t^2", "t^3"}), 8)
              .order() == 4);
}

TEST_CASE("arc text lists nonzero components") {
    CHECK(arc_text(mkarc({"t^2", "t^3"}), {"v", "w"}) == "v = t^2, w = t^3");
    CHECK(arc_text(mkarc({"0", "t"}), {"y", "z"}) == "z = t");
    CHECK(arc_text(mkarc({"0", "0"}), {"y", "z"}) == "0");
}

TEST_CASE("limit direction reads the first surviving jet") {
    std::vector<truncated_series> v{ts("2*t^2", 6), ts("-3*t^2 + t^4", 6)};
    CHECK(limit_direction(v) == std::vector<rat>{rat(2), rat(-3)});

    // different orders: only the lowest contributes
    std::vector<truncated_series> w{ts("t^3", 6), ts("5*t", 6)};
    CHECK(limit_direction(w) == std::vector<rat>{rat(0), rat(5)});

    // nothing visible within precision
    std::vector<truncated_series> none{truncated_series::zero(4),
                                       truncated_series::zero(4)};
    CHECK(limit_direction(none).empty());
}

TEST_CASE("series membership: certified refutation at low precision") {
    // target t^2 against the single column t * t^3: the residual coefficient
    // at order 2 sits below everything the column could ever contribute
    std::vector<series_vec> cols{{shift_up(ts("t^3", 3), 1)}};
    series_vec target{ts("t^2", 3)};
    dependence_result r = series_membership(cols, target, 4);
    CHECK(r.status == check_status::fails);
    CHECK(r.witness_row == 0);
    CHECK(r.witness_exponent == 2);
}

TEST_CASE("series membership: margin separates holds from undecided") {
    auto run = [](std::size_t prec) {
        std::vector<series_vec> cols{{shift_up(ts("t", prec), 1)}};
        series_vec target{ts("t^3", prec)};
        return series_membership(cols, target, 4);
    };
    CHECK(run(4).status == check_status::inconclusive);

    dependence_result ok = run(16);
    CHECK(ok.status == check_status::holds);
    CHECK(ok.max_pivot_order == 2);
    CHECK(ok.min_residual_prec == 16);

    // raising precision never flips a verdict, it only sharpens it
    check_status last = check_status::inconclusive;
    for (std::size_t prec = 4; prec <= 40; prec += 4) {
        check_status now = run(prec).status;
        CHECK(now != check_status::fails);
        if (last == check_status::holds) CHECK(now == check_status::holds);
        last = now;
    }
}

TEST_CASE("series membership: empty target is vacuously inside") {
    CHECK(series_membership({}, {}, 4).status == check_status::holds);
}

TEST_CASE("dependence along arcs: tilting levels refuted with a witness") {
    space_with_function s = mk({"y"}, {"z"}, {}, "y*z", 0);
    auto out = af_arcs(s, {mkarc({"t", "t"})});
    CHECK(out.status == check_status::fails);
    CHECK(out.arcs_checked == 1);
    CHECK(out.tests_run == 1);
    REQUIRE(out.exceptions.size() == 1);
    const auto& e = out.exceptions.front();
    CHECK(e.arc == "y = t, z = t");
    CHECK(e.target == "dy");
    CHECK(e.status == check_status::fails);
    CHECK(e.witness_row == 0);
    CHECK(e.witness_exponent == 1);
    CHECK(e.limit_covector == std::vector<rat>{rat(1), rat(1)});

    // the refutation is order-certified: a shallow window reports the same
    auto low = af_arcs(s, {mkarc({"t", "t"})}, 8, 4);
    CHECK(low.status == check_status::fails);
    CHECK(low.exceptions.front().witness_exponent == 1);
}

TEST_CASE("dependence along arcs: product family passes generated arcs") {
    space_with_function s = mk({"y"}, {"z"}, {}, "z^2", 0);
    std::vector<arc> arcs = monomial_arcs_on(s, 2, false);
    CHECK(arcs.size() == 24);
    auto out = af_arcs(s, arcs);
    CHECK(out.status == check_status::holds);
    CHECK(out.arcs_checked == 24);
    CHECK(out.exceptions.empty());
}

TEST_CASE("dependence along arcs: input contracts") {
    CHECK_THROWS_AS(af_arcs(mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1), {}), input_error);
    // axis off the variety
    CHECK_THROWS_AS(af_arcs(mk({"y"}, {"z"}, {"z - y^2"}, "z", 1), {}), input_error);
    // arc off the variety
    space_with_function cusps = mk({"y"}, {"v", "w"}, {"w^2 - v^3"}, "w", 1);
    CHECK_THROWS_AS(af_arcs(cusps, {mkarc({"0", "t", "t"})}), input_error);
}

TEST_CASE("normalization probes of the deformation family") {
    space_with_function s2113 = mk({"y"}, {"v", "w"}, {"w^2 - y*v - v^3"}, "w", 1);
    std::vector<arc> probes = family_probe_arcs(2, 3, s2113);
    REQUIRE(probes.size() == 2);
    CHECK(arc_text(probes[0], s2113.ambient) == "v = t^2, w = t^3");
    CHECK(arc_text(probes[1], s2113.ambient) == "v = t^2, w = -t^3");

    auto bad = af_arcs(s2113, probes);
    CHECK(bad.status == check_status::fails);
    CHECK(bad.exceptions.front().witness_exponent == 2);

    auto fiber_bad = whitney_fiber_check(s2113, probes);
    CHECK(fiber_bad.status == check_status::fails);

    space_with_function s2213 = mk({"y"}, {"v", "w"}, {"w^2 - y^2*v - v^3"}, "w", 1);
    auto fiber_ok = whitney_fiber_check(s2213, family_probe_arcs(2, 3, s2213));
    CHECK(fiber_ok.status == check_status::holds);

    // odd leading exponent: no sign flip branch
    space_with_function s3 = mk({"y"}, {"v", "w"}, {"w^3 - y*v - v^2"}, "w", 1);
    CHECK(family_probe_arcs(3, 2, s3).size() == 1);
}

TEST_CASE("fiber check keeps rows whose restriction vanishes") {
    // X = {y*z = 0}: the special fiber is the whole z-axis but the limiting
    // tangents along it never contain the parameter axis
    space_with_function s = mk({"y"}, {"z"}, {"y*z"}, "y", 1);
    auto out = whitney_fiber_check(s, {mkarc({"0", "t"})});
    CHECK(out.status == check_status::fails);
    REQUIRE(out.exceptions.size() == 1);
    CHECK(out.exceptions.front().witness_exponent == 1);
}

TEST_CASE("closed-form threshold for the deformation family") {
    CHECK_FALSE(family_threshold_condition(2, 1, 1, 3));
    CHECK(family_threshold_condition(2, 2, 1, 3));
    CHECK(family_threshold_condition(2, 1, 2, 3));
    CHECK_FALSE(family_threshold_condition(3, 1, 1, 2));
    CHECK(family_threshold_condition(3, 1, 2, 2));
    CHECK_THROWS_AS(family_threshold_condition(1, 1, 1, 3), input_error);
    CHECK_THROWS_AS(family_threshold_condition(2, 0, 1, 3), input_error);
}

TEST_CASE("monomial arc enumeration on the cuspidal curve") {
    space_with_function cusp = mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1);
    std::vector<arc> arcs = monomial_arcs_on(cusp, 6, false);
    REQUIRE(arcs.size() == 4);
    std::vector<std::string> texts;
    for (const auto& a : arcs) {
        CHECK(arc_on_variety(cusp, a));
        texts.push_back(arc_text(a, cusp.ambient));
    }
    std::sort(texts.begin(), texts.end());
    CHECK(texts == std::vector<std::string>{"v = t^2, w = -t^3", "v = t^2, w = t^3",
                                            "v = t^4, w = -t^6", "v = t^4, w = t^6"});
}

TEST_CASE("two-stage certification pipeline") {
    scoped_budget guard(200'000'000);

    // constant family of cusps: both stages pass, exact route agrees
    space_with_function cusps = mk({"y"}, {"v", "w"}, {"w^2 - v^3"}, "w", 1);
    pipeline_options opt;
    opt.exact_cross_check = true;
    auto ok = main_theorem_pipeline(cusps, {}, opt);
    CHECK(ok.status == check_status::holds);
    CHECK(ok.hypothesis_ok);
    CHECK(ok.fiber_projective_dim == 1);
    CHECK(ok.fiber_ambient_dim == 2);
    CHECK(ok.arcs_generated);
    CHECK(ok.fiber_check.arcs_checked == 4);
    REQUIRE(ok.cross_check);
    CHECK(ok.cross_check->holds);

    // smooth product: certified with a zero-dimensional fiber
    auto smooth = main_theorem_pipeline(mk({"y"}, {"z"}, {}, "z^2", 0), {}, opt);
    CHECK(smooth.status == check_status::holds);
    CHECK(smooth.fiber_projective_dim == 0);
    REQUIRE(smooth.cross_check);
    CHECK(smooth.cross_check->holds);

    // fiber condition passes but the conormal fiber is too big: inconclusive,
    // and rightly so, because the exact certificate refutes the condition
    auto gap = main_theorem_pipeline(
        mk({"y"}, {"v", "w"}, {"w^2 - y^2*v - v^3"}, "w", 1), {}, opt);
    CHECK(gap.status == check_status::inconclusive);
    CHECK_FALSE(gap.hypothesis_ok);
    CHECK(gap.fiber_projective_dim == 2);
    CHECK(gap.fiber_check.status == check_status::holds);
    REQUIRE(gap.cross_check);
    CHECK_FALSE(gap.cross_check->holds);

    // fiber condition itself fails: inconclusive, never a refutation
    auto undecided = main_theorem_pipeline(
        mk({"y"}, {"v", "w"}, {"w^2 - y*v - v^3"}, "w", 1), {}, {});
    CHECK(undecided.status == check_status::inconclusive);
    CHECK(undecided.fiber_check.status == check_status::fails);
}
