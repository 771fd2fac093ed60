#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "thomaf/arcs.hpp"
#include "thomaf/bigraded.hpp"
#include "thomaf/budget.hpp"
#include "thomaf/conormal.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/pipeline.hpp"
#include "thomaf/problem.hpp"
#include "thomaf/rees.hpp"
#include "thomaf/report.hpp"

namespace thomaf {

struct run_options {
    long long max_steps = default_max_steps;
    std::size_t precision = default_precision;
    std::size_t margin = default_margin;
    int arc_degree_bound = 8;
    bool cross_check = false;  // run the exact certificate alongside the pipeline
};

namespace detail {

inline std::string vars_text(const vars_t& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i];
    }
    return out;
}

inline std::string rat_vector(const std::vector<rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + "]";
}

inline std::string exception_line(const arc_check_detail& d) {
    std::string out = d.target + " along " + d.arc + ": " + to_string(d.status);
    if (d.status == check_status::fails)
        out += " (obstruction at t^" + std::to_string(d.witness_exponent) + ", row " +
               std::to_string(d.witness_row + 1) + ")";
    if (!d.limit_covector.empty()) out += " limit " + rat_vector(d.limit_covector);
    return out;
}

inline void add_arc_outcome(report& rep, const arc_dependence_outcome& out) {
    rep.add("verdict", to_string(out.status));
    rep.add("arcs_checked", std::to_string(out.arcs_checked));
    rep.add("tests_run", std::to_string(out.tests_run));
    if (!out.exceptions.empty()) {
        std::vector<std::string> lines;
        for (const auto& d : out.exceptions) lines.push_back(exception_line(d));
        rep.add("exceptions", std::move(lines));
    }
    rep.exit_code = out.status == check_status::inconclusive ? 3 : 0;
}

inline std::vector<rat> origin_point(std::size_t k) { return std::vector<rat>(k, rat(0)); }

inline space_with_function trotman_family(const std::vector<int>& ex) {
    if (ex.size() != 4) throw input_error("exponents must list a, b, c, d");
    int a = ex[0], b = ex[1], c = ex[2], d = ex[3];
    if (a < 2 || d < 2 || b < 1 || c < 1) throw input_error("family exponents out of range");
    vars_t all{"y", "v", "w"};
    std::string g = "w^" + std::to_string(a) + " - y^" + std::to_string(b) + "*v^" +
                    std::to_string(c) + " - v^" + std::to_string(d);
    return make_space({"y"}, {"v", "w"}, {parse_polynomial(g, all)},
                      parse_polynomial("w", all), 1);
}

}  // namespace detail

// Executes one command against one problem file's text. Exit code in the
// report: 0 a verdict was produced (true or false alike), 1 bad input,
// 2 budget exceeded, 3 the method cannot decide.
inline report run_command(const std::string& command, const std::string& text,
                          const run_options& opt = {}) {
    report rep;
    rep.command = command;
    rep.input_digest = fnv1a64(text);
    scoped_budget guard(opt.max_steps);
    try {
        problem p = parse_problem(text);
        std::size_t prec = p.precision.value_or(opt.precision);

        if (command == "gb") {
            space_with_function s = space_from(p);
            monomial_order ord =
                p.order.value_or("degrevlex") == "lex" ? lex_order() : degrevlex_order();
            ideal I = s.x_ideal().with_order(ord);
            rep.add("vars", detail::vars_text(s.ambient));
            rep.add("order", p.order.value_or("degrevlex"));
            rep.add("basis", groebner_as_strings(I));
        } else if (command == "dim") {
            space_with_function s = space_from(p);
            rep.add("dim", std::to_string(dimension(s.x_ideal())));
        } else if (command == "conormal") {
            space_with_function s = space_from(p);
            bigraded_ideal C = conormal_space(s);
            rep.add("ring", detail::vars_text(C.I.vars()));
            rep.add("ideal", groebner_as_strings(C.I));
        } else if (command == "relconormal") {
            space_with_function s = space_from(p);
            bigraded_ideal C = relative_conormal(s);
            rep.add("ring", detail::vars_text(C.I.vars()));
            rep.add("ideal", groebner_as_strings(C.I));
        } else if (command == "fiber") {
            space_with_function s = space_from(p);
            ideal c0 = fiber_at_origin(conormal_space(s));
            rep.add("conormal_fiber", groebner_as_strings(c0));
            if (s.f) {
                ideal l0 = fiber_at_origin(relative_conormal(s));
                rep.add("relative_fiber", groebner_as_strings(l0));
                rep.add("relative_fiber_projective_dim",
                        std::to_string(projective_dimension_of_cone(l0)));
            }
        } else if (command == "join") {
            space_with_function s = space_from(p);
            std::vector<rat> df0 = s.df_at_origin();
            if (all_zero(df0))
                throw input_error("df vanishes at the origin, the join degenerates");
            ideal c0 = fiber_at_origin(conormal_space(s));
            rep.add("point", detail::rat_vector(df0));
            rep.add("join", groebner_as_strings(join_point_set(c0, df0)));
        } else if (command == "decompose") {
            space_with_function s = space_from(p);
            decomposition_outcome out = verify_decomposition(s);
            rep.add_flag("verified", out.verified);
            rep.add_flag("lhs_in_rhs", out.lhs_in_rhs);
            rep.add_flag("rhs_in_lhs", out.rhs_in_lhs);
            rep.add_flag("join_dropped", out.join_dropped);
            rep.add("lhs", out.lhs);
            rep.add("rhs", out.rhs);
            rep.add("exceptional_fiber", out.exceptional_fiber);
            if (!out.join_dropped) {
                rep.add("conormal_fiber", out.conormal_fiber);
                rep.add("join_term", out.join_term);
            }
        } else if (command == "af-exact") {
            space_with_function s = space_from(p);
            af_exact_outcome out = af_exact(s);
            rep.add_flag("holds", out.holds);
            if (!out.failing_covectors.empty())
                rep.add("failing_covectors", out.failing_covectors);
        } else if (command == "af-arcs") {
            space_with_function s = space_from(p);
            std::vector<arc> arcs = arcs_from(p, s);
            bool generated = arcs.empty();
            if (generated) arcs = monomial_arcs_on(s, opt.arc_degree_bound, false);
            arc_dependence_outcome out = af_arcs(s, arcs, prec, opt.margin);
            rep.add_flag("arcs_generated", generated);
            detail::add_arc_outcome(rep, out);
        } else if (command == "whitney-fiber") {
            space_with_function s = space_from(p);
            std::vector<arc> arcs = arcs_from(p, s);
            bool generated = arcs.empty();
            if (generated) arcs = monomial_arcs_on(s, opt.arc_degree_bound, true);
            arc_dependence_outcome out = whitney_fiber_check(s, arcs, prec, opt.margin);
            rep.add_flag("arcs_generated", generated);
            detail::add_arc_outcome(rep, out);
        } else if (command == "rees-fiber") {
            rees_setup R = rees_from(p);
            ideal K = rees_kernel(R);
            auto y0 = detail::origin_point(R.space.yvars.size());
            rep.add("kernel", groebner_as_strings(K));
            rep.add("family_fiber", groebner_as_strings(t_saturate(family_fiber(R, y0, K), R.tvars)));
            rep.add("restricted", groebner_as_strings(t_saturate(restricted_kernel(R, y0), R.tvars)));
        } else if (command == "remark-check") {
            if (p.bad_locus.empty())
                throw input_error("remark-check needs an S: line naming the locus to remove");
            rees_setup R = rees_from(p);
            rees_fiber_comparison out =
                remark_identity_check(R, detail::origin_point(R.space.yvars.size()));
            rep.add("verdict", to_string(out.status));
            rep.add_flag("equal_after_removal", out.equal_after_removal);
            rep.add_flag("equal_without_removal", out.equal_without_removal);
            rep.add("family_fiber", out.family_fiber);
            rep.add("removed", out.removed);
            rep.add("restricted", out.restricted);
        } else if (command == "components-check") {
            rees_setup R = rees_from(p);
            rees_components_outcome out =
                theorem_components_check(R, detail::origin_point(R.space.yvars.size()));
            rep.add("verdict", to_string(out.status));
            rep.add_flag("hypothesis_ok", out.hypothesis_ok);
            rep.add("fiber_dim_at_origin", std::to_string(out.fiber_dim_at_origin));
            rep.add("r", std::to_string(out.r));
            rep.add_flag("equal", out.equal);
            rep.add("family_fiber", out.family_fiber);
            rep.add("restricted", out.restricted);
            rep.exit_code = out.status == check_status::inconclusive ? 3 : 0;
        } else if (command == "trotman") {
            space_with_function s = detail::trotman_family(p.exponents);
            bool threshold = family_threshold_condition(p.exponents[0], p.exponents[1],
                                                        p.exponents[2], p.exponents[3]);
            std::vector<arc> probes = family_probe_arcs(p.exponents[0], p.exponents[3], s);
            arc_dependence_outcome out = whitney_fiber_check(s, probes, prec, opt.margin);
            std::vector<std::string> ex;
            for (int v : p.exponents) ex.push_back(std::to_string(v));
            rep.add("exponents", ex);
            rep.add_flag("threshold", threshold);
            rep.add("arc_check", to_string(out.status));
            bool agree = (out.status == check_status::holds) == threshold &&
                         out.status != check_status::inconclusive;
            rep.add_flag("agreement", agree);
            rep.exit_code = out.status == check_status::inconclusive ? 3 : 0;
        } else if (command == "pipeline") {
            space_with_function s = space_from(p);
            std::vector<arc> arcs = arcs_from(p, s);
            pipeline_options popt;
            popt.precision = prec;
            popt.margin = opt.margin;
            popt.arc_degree_bound = opt.arc_degree_bound;
            popt.exact_cross_check = opt.cross_check;
            pipeline_outcome out = main_theorem_pipeline(s, std::move(arcs), popt);
            rep.add_flag("certified", out.status == check_status::holds);
            rep.add("fiber_projective_dim", std::to_string(out.fiber_projective_dim));
            rep.add("fiber_ambient_dim", std::to_string(out.fiber_ambient_dim));
            rep.add_flag("hypothesis_ok", out.hypothesis_ok);
            rep.add("fiber_check", to_string(out.fiber_check.status));
            rep.add("arcs_checked", std::to_string(out.fiber_check.arcs_checked));
            rep.add_flag("arcs_generated", out.arcs_generated);
            if (!out.fiber_check.exceptions.empty()) {
                std::vector<std::string> lines;
                for (const auto& d : out.fiber_check.exceptions)
                    lines.push_back(detail::exception_line(d));
                rep.add("exceptions", std::move(lines));
            }
            if (out.cross_check) rep.add_flag("exact_cross_check", out.cross_check->holds);
            rep.exit_code = out.status == check_status::holds ? 0 : 3;
        } else {
            throw input_error("unknown command '" + command + "'");
        }
    } catch (const budget_error& e) {
        rep.add("error", e.what());
        rep.exit_code = 2;
    } catch (const parse_error& e) {
        rep.add("error", e.what());
        rep.exit_code = 1;
    } catch (const input_error& e) {
        rep.add("error", e.what());
        rep.exit_code = 1;
    }
    rep.budget_used = static_cast<std::size_t>(budget().used);
    return rep;
}

struct expectation_file {
    std::string command;
    std::vector<std::pair<std::string, std::string>> expects;  // key, exact value
};

inline expectation_file parse_expectations(const std::string& text) {
    expectation_file out;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = detail::trim(raw);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw input_error("line " + std::to_string(line_no) + ": expected 'key: value'");
        std::string key = detail::trim(line.substr(0, colon));
        std::string val = detail::trim(line.substr(colon + 1));
        if (key == "command") {
            out.command = val;
        } else if (key == "expect") {
            std::size_t eq = val.find('=');
            if (eq == std::string::npos)
                throw input_error("line " + std::to_string(line_no) +
                                  ": expect needs 'field = value'");
            out.expects.emplace_back(detail::trim(val.substr(0, eq)),
                                     detail::trim(val.substr(eq + 1)));
        } else {
            throw input_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (out.command.empty()) throw input_error("expectation file names no command");
    return out;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct corpus_result {
    std::size_t total = 0;
    std::size_t passed = 0;
    report summary;
    bool all_ok() const { return passed == total; }
};

// Runs every *.prob under dir against its .prob.expect sidecar, in filename
// order. Workers split the cases; the assembled summary is independent of
// the worker count and of wall time, so repeated runs print identical bytes.
inline corpus_result run_corpus(const std::string& dir, const run_options& opt = {},
                                unsigned workers = 1) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) throw input_error("not a directory: " + dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".prob")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<std::string> lines(files.size());
    std::vector<char> ok(files.size(), 0);
    std::string digest_feed;

    auto run_case = [&](std::size_t i) {
        const fs::path& path = files[i];
        std::string name = path.filename().string();
        try {
            std::string text = read_file(path);
            expectation_file exp = parse_expectations(read_file(path.string() + ".expect"));
            report rep = run_command(exp.command, text, opt);
            std::vector<std::string> bad;
            for (const auto& [key, want] : exp.expects) {
                std::string got;
                if (key == "exit") {
                    got = std::to_string(rep.exit_code);
                } else if (const auto* v = rep.find(key)) {
                    got = joined(*v);
                } else {
                    bad.push_back(key + ": expected '" + want + "', field absent");
                    continue;
                }
                if (got != want)
                    bad.push_back(key + ": expected '" + want + "', got '" + got + "'");
            }
            if (bad.empty()) {
                lines[i] = name + ": ok";
                ok[i] = 1;
            } else {
                std::string msg = name + ": MISMATCH";
                for (const auto& b : bad) msg += "\n  " + b;
                lines[i] = msg;
            }
        } catch (const input_error& e) {
            lines[i] = name + ": MISMATCH\n  " + e.what();
        }
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) run_case(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= files.size()) return;
                    run_case(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    corpus_result out;
    out.total = files.size();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (ok[i]) ++out.passed;
        digest_feed += files[i].filename().string() + "\n";
    }
    out.summary.command = "corpus";
    out.summary.input_digest = fnv1a64(digest_feed);
    out.summary.add("cases", std::to_string(out.total));
    out.summary.add("passed", std::to_string(out.passed));
    out.summary.add("mismatched", std::to_string(out.total - out.passed));
    if (!files.empty()) out.summary.add("results", lines);
    out.summary.exit_code = out.all_ok() ? 0 : 1;
    return out;
}

}  // namespace thomaf
