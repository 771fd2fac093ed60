// Acceptance gate: one PASS/FAIL line per criterion, exit code is the number
// of failed criteria. Runs standalone, no test framework, so the output reads
// as a checklist.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "thomaf/arcs.hpp"
#include "thomaf/budget.hpp"
#include "thomaf/conormal.hpp"
#include "thomaf/corpus.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/pipeline.hpp"
#include "thomaf/problem.hpp"
#include "thomaf/rees.hpp"

#include "support/random_ideals.hpp"

#ifndef THOMAF_CORPUS_DIR
#error "THOMAF_CORPUS_DIR must name the corpus directory"
#endif

namespace {

using namespace thomaf;

int failures = 0;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

void criterion(const char* name, double limit_seconds, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > limit_seconds) {
        ok = false;
        detail = "exceeded the " + std::to_string(static_cast<int>(limit_seconds)) +
                 "s time limit";
    }
    std::printf("%s %s (%.1fs%s%s)\n", ok ? "PASS" : "FAIL", name, secs,
                detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

space_with_function mk(vars_t y, vars_t z, const std::vector<std::string>& gs,
                       const std::string& f, int codim) {
    vars_t ambient = y;
    for (const auto& v : z) ambient.push_back(v);
    std::vector<polynomial> G;
    for (const auto& g : gs) G.push_back(parse_polynomial(g, ambient));
    std::optional<polynomial> ff;
    if (!f.empty()) ff = parse_polynomial(f, ambient);
    return make_space(std::move(y), std::move(z), std::move(G), std::move(ff), codim);
}

struct geometry {
    const char* name;
    space_with_function space;
};

std::vector<geometry> five_geometries() {
    std::vector<geometry> out;
    out.push_back({"circle", mk({"x"}, {"y"}, {}, "x^2 + y^2", 0)});
    out.push_back({"plane", mk({"x"}, {"y"}, {}, "x", 0)});
    out.push_back({"cusp", mk({}, {"v", "w"}, {"w^2 - v^3"}, "v", 1)});
    out.push_back({"umbrella", mk({}, {"x", "y", "z"}, {"x^2 - z*y^2"}, "z", 1)});
    out.push_back({"parabola", mk({}, {"z1", "z2"}, {"z1 - z2^2"}, "z1", 1)});
    return out;
}

std::string field(const report& rep, const std::string& key) {
    const auto* v = rep.find(key);
    require(v != nullptr, "report lacks field '" + key + "'");
    return joined(*v);
}

const char* kVerticalRees =
    "yvars: y\nzvars: z\nrank: 1\ngen: z\ngen: y\nd: 1\ne: 1\n";
const char* kSmoothingRees =
    "yvars: u\nzvars: x, y\nG: x^3 - y^2 - u\ncodim: 1\n"
    "rank: 1\ngen: -1\ngen: 3*x^2\ngen: -2*y\nd: 1\ne: 1\n";
const char* kBlowupRees =
    "yvars: s\nzvars: x, y\nrank: 1\ngen: x\ngen: y\nd: 2\ne: 1\n";

rees_setup setup_from(std::string text, const char* locus) {
    if (locus) text += std::string("S: ") + locus + "\n";
    return rees_from(parse_problem(text));
}

std::vector<rat> y_origin(const rees_setup& R) {
    return std::vector<rat>(R.space.yvars.size(), rat(0));
}

void criterion_decomposition() {
    criterion("special fiber of the relative conormal splits into projection and join on five geometries",
              300, [] {
        scoped_budget guard(200'000'000);
        std::string detail;
        for (const auto& g : five_geometries()) {
            decomposition_outcome out = verify_decomposition(g.space);
            require(out.verified, std::string(g.name) + ": decomposition not verified");
            require(out.lhs_in_rhs, std::string(g.name) + ": fiber escapes the union");
            require(out.rhs_in_lhs, std::string(g.name) + ": union escapes the fiber");
            if (!detail.empty()) detail += ", ";
            detail += g.name;
            if (out.join_dropped) detail += " (join dropped)";
        }
        return detail;
    });
}

void criterion_inclusions() {
    criterion("projection and join land inside the special fiber on every geometry", 300, [] {
        scoped_budget guard(200'000'000);
        int joins = 0;
        for (const auto& g : five_geometries()) {
            ideal lhs = fiber_at_origin(relative_conormal(g.space));
            ideal e0 = fiber_at_origin(exceptional_image(g.space));
            require(variety_subset(e0, lhs),
                    std::string(g.name) + ": projected exceptional set escapes the fiber");
            std::vector<rat> df0 = g.space.df_at_origin();
            if (!all_zero(df0)) {
                ideal j = join_point_set(fiber_at_origin(conormal_space(g.space)), df0);
                require(variety_subset(j, lhs),
                        std::string(g.name) + ": join escapes the fiber");
                ++joins;
            }
        }
        return "projection inclusion on 5 geometries, join inclusion on " +
               std::to_string(joins);
    });
}

void criterion_threshold_grid() {
    criterion("arc check of the family fiber matches the closed-form threshold on 200 exponent cases",
              300, [] {
        run_options opt;
        opt.max_steps = 200'000'000;
        int cases = 0, held = 0;
        for (int a = 2; a <= 6; ++a)
            for (int d = 2; d <= 6; ++d)
                for (int b = 1; b <= 2; ++b)
                    for (int c = 1; c <= 4; ++c) {
                        std::string text = "exponents: " + std::to_string(a) + ", " +
                                           std::to_string(b) + ", " + std::to_string(c) +
                                           ", " + std::to_string(d) + "\n";
                        report rep = run_command("trotman", text, opt);
                        require(rep.exit_code == 0,
                                text + " exited " + std::to_string(rep.exit_code));
                        require(field(rep, "agreement") == "true",
                                "disagreement at exponents " + text + "threshold " +
                                    field(rep, "threshold") + ", arcs " +
                                    field(rep, "arc_check"));
                        ++cases;
                        if (field(rep, "arc_check") == "holds") ++held;
                    }
        require(cases == 200, "expected 200 cases, ran " + std::to_string(cases));
        return "200 cases, " + std::to_string(held) + " hold, " +
               std::to_string(200 - held) + " fail, zero inconclusive";
    });
}

void criterion_remark_identity() {
    criterion("family fiber equals the restricted one after removing the bad locus on three modules",
              120, [] {
        scoped_budget guard(200'000'000);
        rees_fiber_comparison vertical =
            [&] { rees_setup R = setup_from(kVerticalRees, "z, y");
                  return remark_identity_check(R, y_origin(R)); }();
        require(vertical.status == check_status::holds, "vertical family: identity fails");
        require(vertical.equal_after_removal, "vertical family: removal did not reconcile");
        require(!vertical.equal_without_removal,
                "vertical family: raw fibers already agree, the removal shows nothing");

        rees_fiber_comparison smoothing =
            [&] { rees_setup R = setup_from(kSmoothingRees, "x, y");
                  return remark_identity_check(R, y_origin(R)); }();
        require(smoothing.status == check_status::holds, "smoothing: identity fails");

        rees_fiber_comparison blowup =
            [&] { rees_setup R = setup_from(kBlowupRees, "x, y");
                  return remark_identity_check(R, y_origin(R)); }();
        require(blowup.status == check_status::holds, "blow-up: identity fails");

        return std::string("vertical family needs the removal, smoothing and blow-up hold");
    });
}

void criterion_components() {
    criterion("component comparison certifies two modules and abstains on the vertical family",
              120, [] {
        scoped_budget guard(200'000'000);
        auto run = [](const char* text) {
            rees_setup R = setup_from(text, nullptr);
            return theorem_components_check(R, y_origin(R));
        };
        rees_components_outcome smoothing = run(kSmoothingRees);
        require(smoothing.status == check_status::holds, "smoothing: not certified");
        require(smoothing.hypothesis_ok && smoothing.equal, "smoothing: wrong shape");

        rees_components_outcome blowup = run(kBlowupRees);
        require(blowup.status == check_status::holds, "blow-up: not certified");
        require(blowup.r == 2, "blow-up: expected r = 2, got " + std::to_string(blowup.r));

        rees_components_outcome vertical = run(kVerticalRees);
        require(vertical.status == check_status::inconclusive,
                std::string("vertical family: expected inconclusive, got ") +
                    to_string(vertical.status));
        require(!vertical.hypothesis_ok, "vertical family: hypothesis should be violated");

        return "smoothing r=" + std::to_string(smoothing.r) + " and blow-up r=" +
               std::to_string(blowup.r) + " certified, vertical family abstains";
    });
}

void criterion_agreement() {
    criterion("exact containment and arc dependence certificates agree on four families", 300, [] {
        scoped_budget guard(200'000'000);
        std::string witness;

        space_with_function product = mk({"y"}, {"z"}, {}, "z^2", 0);
        require(af_exact(product).holds, "product: exact certificate should hold");
        require(af_arcs(product, monomial_arcs_on(product, 8, false)).status ==
                    check_status::holds,
                "product: arc check should hold");

        space_with_function yz = mk({"y"}, {"z"}, {}, "y*z", 0);
        af_exact_outcome yz_exact = af_exact(yz);
        require(!yz_exact.holds, "y*z: exact certificate should fail");
        require(!yz_exact.failing_covectors.empty(), "y*z: no failing covector named");
        arc_dependence_outcome yz_arcs = af_arcs(yz, monomial_arcs_on(yz, 8, false));
        require(yz_arcs.status == check_status::fails, "y*z: arc check should fail");
        require(!yz_arcs.exceptions.empty(), "y*z: no witness arc");
        witness = yz_exact.failing_covectors[0] + " along " + yz_arcs.exceptions[0].arc;

        space_with_function family = mk({"y"}, {"v", "w"}, {"w^2 - y*v - v^3"}, "w", 1);
        require(!af_exact(family).holds, "family (2,1,1,3): exact certificate should fail");
        require(af_arcs(family, family_probe_arcs(2, 3, family)).status == check_status::fails,
                "family (2,1,1,3): probe arcs should fail");

        space_with_function cuspline = mk({"y"}, {"v", "w"}, {"w^2 - v^3"}, "w", 1);
        require(af_exact(cuspline).holds, "cusp line: exact certificate should hold");
        require(af_arcs(cuspline, monomial_arcs_on(cuspline, 8, false)).status ==
                    check_status::holds,
                "cusp line: arc check should hold");

        return "both verdicts match on all four; witness on y*z: " + witness;
    });
}

void criterion_engine_audit() {
    criterion("S-polynomial audit passes on named ideals and 200 random ones with invariants",
              120, [] {
        scoped_budget guard(200'000'000);
        using thomaf::testing::random_ideal;
        using thomaf::testing::spolynomials_reduce_to_zero;

        for (const auto& g : five_geometries()) {
            require(spolynomials_reduce_to_zero(g.space.x_ideal()),
                    std::string(g.name) + ": variety basis fails the criterion");
            require(spolynomials_reduce_to_zero(conormal_space(g.space).I),
                    std::string(g.name) + ": conormal basis fails the criterion");
        }

        std::mt19937 rng(987654321u);
        for (int i = 0; i < 200; ++i) {
            ideal I = random_ideal(rng);
            std::string tag = "random case " + std::to_string(i);
            require(spolynomials_reduce_to_zero(I), tag + ": an S-polynomial escapes");
            for (const auto& g : I.gens())
                require(I.contains(g), tag + ": a generator escapes its own ideal");
            require(radical_equal(I, I), tag + ": radical comparison is not reflexive");

            ideal E = eliminate_vars(I, {I.vars().back()});
            for (const auto& g : E.gens()) {
                polynomial lifted = embed(g, E.vars(), I.vars());
                require(I.contains(lifted), tag + ": elimination left the ideal");
            }

            polynomial x0 = parse_polynomial(I.vars().front(), I.vars());
            ideal S = saturate(I, x0);
            for (const auto& g : I.gens())
                require(S.contains(g), tag + ": saturation lost a generator");
            require(radical_equal(saturate(S, x0), S), tag + ": saturation not idempotent");

            int dim = dimension(I);
            require(dim >= -1 && dim <= static_cast<int>(I.vars().size()),
                    tag + ": dimension out of range");
        }
        return "5 geometry ideals and their conormal ideals audited, 200 random ideals clean";
    });
}

void criterion_corpus() {
    criterion("problem corpus replays fully green with byte-identical summaries", 300, [] {
        corpus_result one = run_corpus(THOMAF_CORPUS_DIR, {}, 1);
        corpus_result two = run_corpus(THOMAF_CORPUS_DIR, {}, 4);
        corpus_result again = run_corpus(THOMAF_CORPUS_DIR, {}, 1);
        if (!one.all_ok()) {
            std::string first;
            if (const auto* lines = one.summary.find("results"))
                for (const auto& l : *lines)
                    if (l.find("MISMATCH") != std::string::npos) {
                        first = l.substr(0, l.find('\n'));
                        break;
                    }
            require(false, std::to_string(one.total - one.passed) + " of " +
                               std::to_string(one.total) + " cases mismatch, first: " + first);
        }
        require(to_text(one.summary) == to_text(two.summary),
                "worker count changed the summary bytes");
        require(to_text(one.summary) == to_text(again.summary),
                "a repeated run changed the summary bytes");
        return std::to_string(one.total) + " cases green, identical bytes across runs and workers";
    });
}

}  // namespace

int main() {
    criterion_decomposition();
    criterion_inclusions();
    criterion_threshold_grid();
    criterion_remark_identity();
    criterion_components();
    criterion_agreement();
    criterion_engine_audit();
    criterion_corpus();
    if (failures == 0) std::printf("all 8 criteria passed\n");
    return failures;
}
