#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "thomaf/budget.hpp"
#include "thomaf/conormal.hpp"
#include "thomaf/parse.hpp"
#include "thomaf/space.hpp"

using namespace thomaf;
using namespace thomaf::testing;

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

TEST_CASE("conormal of a smooth line in the plane") {
    scoped_budget guard(200'000'000);
    space_with_function s = mk({"x"}, {"y"}, {"y"}, "", 1);
    bigraded_ideal C = conormal_space(s);
    CHECK(C.I.contains(parse_polynomial("y", C.I.vars())));
    CHECK(C.I.contains(parse_polynomial("dx", C.I.vars())));
    CHECK_FALSE(C.I.contains(parse_polynomial("dy", C.I.vars())));
    CHECK(basis_xi_homogeneous(C));

    // one hyperplane per smooth point: a projective point, dimension zero
    CHECK(projective_dimension_of_cone(fiber_at_origin(C)) == 0);
    CHECK(same_projective_family(C, multiplier_conormal(s)));
}

TEST_CASE("conormal of the ambient space is the zero section") {
    scoped_budget guard(200'000'000);
    space_with_function s = mk({"x"}, {"y"}, {}, "x", 0);
    bigraded_ideal C = conormal_space(s);
    CHECK(C.I.contains(parse_polynomial("dx", C.I.vars())));
    CHECK(C.I.contains(parse_polynomial("dy", C.I.vars())));
    // no projective covectors survive over any point
    CHECK(fiber_at_origin(C).is_unit_ideal());
    CHECK(same_projective_family(C, multiplier_conormal(s)));
}

TEST_CASE("conormal of the cuspidal curve") {
    scoped_budget guard(200'000'000);
    space_with_function s = mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1);
    bigraded_ideal C = conormal_space(s);
    CHECK(basis_xi_homogeneous(C));
    CHECK(same_projective_family(C, multiplier_conormal(s)));

    // the limit covector at the singular point annihilates the v-axis
    // tangent; the fiber ideal carries dv with multiplicity two
    ideal fib = fiber_at_origin(C);
    CHECK(groebner_as_strings(fib) == std::vector<std::string>{"dv^2"});
    CHECK(radical_member(parse_polynomial("dv", fib.vars()), fib));
    CHECK(projective_dimension_of_cone(fib) == 0);

    // over the smooth point (1, 1) the fiber is that point's single hyperplane
    ideal smooth = fiber_at(C, {rat(1), rat(1)});
    CHECK(projective_dimension_of_cone(smooth) == 0);
    // conormal direction there is [dG] = [-3 : 2]
    CHECK(smooth.contains(parse_polynomial("2*dv + 3*dw", smooth.vars())));
}

TEST_CASE("relative conormal against the multiplier route") {
    scoped_budget guard(200'000'000);
    for (auto& s : {mk({"x"}, {"y"}, {}, "x^2 + y^2", 0),
                    mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1),
                    mk({}, {"x", "y", "z"}, {"x^2 - z*y^2"}, "z", 1)}) {
        bigraded_ideal R = relative_conormal(s);
        CHECK(basis_xi_homogeneous(R));
        CHECK(same_projective_family(R, multiplier_relative_conormal(s)));
    }
}

TEST_CASE("relative conormal fiber of a Morse function fills the plane") {
    scoped_budget guard(200'000'000);
    space_with_function s = mk({"x"}, {"y"}, {}, "x^2 + y^2", 0);
    ideal fib = fiber_at_origin(relative_conormal(s));
    CHECK(fib.is_zero_ideal());  // every covector direction is a limit
    CHECK(projective_dimension_of_cone(fib) == 1);
}

TEST_CASE("exceptional image against the blow-up presentation") {
    scoped_budget guard(200'000'000);
    for (auto& s : {mk({"x"}, {"y"}, {}, "x^2 + y^2", 0),
                    mk({"x"}, {"y"}, {}, "x", 0),
                    mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1),
                    mk({}, {"z1", "z2"}, {"z1 - z2^2"}, "z1", 1)}) {
        bigraded_ideal E = exceptional_image(s);
        CHECK(basis_xi_homogeneous(E));
        CHECK(same_projective_family(E, rees_exceptional_image(s)));
        CHECK(radical_equal(fiber_at_origin(E),
                            fiber_at_origin(rees_exceptional_image(s))));
    }
}

TEST_CASE("join of a point with a point set") {
    vars_t cov{"dv", "dw", "du"};
    // line through [1:0:0] and [0:0:1] in the covector plane
    ideal V(cov, {parse_polynomial("dv", cov), parse_polynomial("dw", cov)});
    ideal J = join_point_set(V, {rat(1), rat(0), rat(0)});
    CHECK(groebner_as_strings(J) == std::vector<std::string>{"dw"});

    // the join contains both the point and the set
    CHECK(variety_subset(point_covector_ideal(cov, {rat(1), rat(0), rat(0)}), J));
    CHECK(variety_subset(V, J));

    // joining a point with itself keeps the point
    ideal P = point_covector_ideal(cov, {rat(2), rat(1), rat(0)});
    ideal JJ = join_point_set(P, {rat(2), rat(1), rat(0)});
    CHECK(radical_equal(JJ, P));

    // empty set joins to the single point
    ideal none(cov, {parse_polynomial("1", cov)});
    CHECK(radical_equal(join_point_set(none, {rat(1), rat(0), rat(0)}),
                        point_covector_ideal(cov, {rat(1), rat(0), rat(0)})));

    CHECK_THROWS_AS(join_point_set(V, {rat(0), rat(0), rat(0)}), input_error);
}

TEST_CASE("join in the plane spans everything") {
    vars_t cov{"dv", "dw"};
    // [dw-point] joined with [dv-point] sweeps all of the projective line
    ideal V(cov, {parse_polynomial("dv", cov)});
    ideal J = join_point_set(V, {rat(1), rat(0)});
    CHECK(J.is_zero_ideal());
}

TEST_CASE("decomposition verdicts across the corpus geometries") {
    scoped_budget guard(200'000'000);

    auto circle = verify_decomposition(mk({"x"}, {"y"}, {}, "x^2 + y^2", 0));
    CHECK(circle.verified);
    CHECK(circle.join_dropped);  // df(0) = 0
    CHECK(circle.lhs.empty());   // zero ideal: the fiber is the whole line

    auto plane = verify_decomposition(mk({"x"}, {"y"}, {}, "x", 0));
    CHECK(plane.verified);
    CHECK_FALSE(plane.join_dropped);
    CHECK(plane.lhs == std::vector<std::string>{"dy"});

    auto cusp = verify_decomposition(mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1));
    CHECK(cusp.verified);
    CHECK_FALSE(cusp.join_dropped);

    auto umbrella =
        verify_decomposition(mk({}, {"x", "y", "z"}, {"x^2 - z*y^2"}, "z", 1));
    CHECK(umbrella.verified);
    CHECK(umbrella.lhs == std::vector<std::string>{"dy^2"});

    // df(0) lands exactly on the conormal fiber point: degenerate join
    auto parabola =
        verify_decomposition(mk({}, {"z1", "z2"}, {"z1 - z2^2"}, "z1", 1));
    CHECK(parabola.verified);
    CHECK_FALSE(parabola.join_dropped);
}

TEST_CASE("both easy inclusions hold on every decomposition case") {
    scoped_budget guard(200'000'000);
    for (auto& s : {mk({"x"}, {"y"}, {}, "x^2 + y^2", 0), mk({"x"}, {"y"}, {}, "x", 0),
                    mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1),
                    mk({}, {"x", "y", "z"}, {"x^2 - z*y^2"}, "z", 1),
                    mk({}, {"z1", "z2"}, {"z1 - z2^2"}, "z1", 1)}) {
        ideal lhs = fiber_at_origin(relative_conormal(s));
        ideal e0 = fiber_at_origin(exceptional_image(s));
        CHECK(variety_subset(e0, lhs));
        std::vector<rat> df0 = s.df_at_origin();
        if (!all_zero(df0)) {
            ideal joined = join_point_set(fiber_at_origin(conormal_space(s)), df0);
            CHECK(variety_subset(joined, lhs));
        }
    }
}

TEST_CASE("exact family condition certificates") {
    scoped_budget guard(200'000'000);

    // product family: level sets never tilt
    auto product = af_exact(mk({"y"}, {"z"}, {}, "z^2", 0));
    CHECK(product.holds);
    CHECK(product.failing_covectors.empty());

    // tilting levels: the parameter covector escapes
    auto tilting = af_exact(mk({"y"}, {"z"}, {}, "y*z", 0));
    CHECK_FALSE(tilting.holds);
    CHECK(tilting.failing_covectors == std::vector<std::string>{"dy"});

    // family member whose limit covectors lean into the parameter direction
    auto leaning = af_exact(mk({"y"}, {"v", "w"}, {"w^2 - y*v - v^3"}, "w", 1));
    CHECK_FALSE(leaning.holds);
    CHECK(leaning.failing_covectors == std::vector<std::string>{"dy"});

    // constant family of cusps transverse to the parameter axis
    auto cusps = af_exact(mk({"y"}, {"v", "w"}, {"w^2 - v^3"}, "w", 1));
    CHECK(cusps.holds);

    CHECK_THROWS_AS(af_exact(mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1)), input_error);
}

TEST_CASE("conormal of the parameter axis") {
    space_with_function s = mk({"y"}, {"v", "w"}, {"w^2 - v^3"}, "w", 1);
    bigraded_ideal A = conormal_of_axis(s);
    CHECK(A.I.contains(parse_polynomial("v", A.I.vars())));
    CHECK(A.I.contains(parse_polynomial("w", A.I.vars())));
    CHECK(A.I.contains(parse_polynomial("dy", A.I.vars())));
    CHECK_FALSE(A.I.contains(parse_polynomial("dv", A.I.vars())));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(mk({}, {}, {}, "", 0), input_error);
    CHECK_THROWS_AS(mk({"x"}, {"x"}, {}, "x", 0), input_error);    // duplicate name
    CHECK_THROWS_AS(mk({"x"}, {"dx"}, {}, "x", 0), input_error);   // covector collision
    CHECK_THROWS_AS(mk({"x"}, {"y"}, {"x - 1"}, "x", 1), input_error);  // misses origin
    CHECK_THROWS_AS(mk({"x"}, {"y"}, {}, "x + 1", 0), input_error);     // f(0) != 0

    // a stated codimension that contradicts the variety is caught on use
    space_with_function wrong = mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 2);
    CHECK_THROWS_AS(conormal_space(wrong), input_error);
    CHECK_NOTHROW(validate_codim(mk({}, {"v", "w"}, {"w^2 - v^3"}, "", 1)));
}
