#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thomaf/arcs.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/parse.hpp"
#include "thomaf/polynomial.hpp"
#include "thomaf/rees.hpp"
#include "thomaf/space.hpp"

namespace thomaf {

// A problem file is line oriented: "key: value" entries, '#' comments, blank
// lines ignored. Repeatable keys accumulate in file order. Polynomials use
// the expression grammar of parse_polynomial; lists split on commas, which
// the grammar itself never produces.
struct problem {
    vars_t yvars, zvars;
    std::vector<std::string> defining;          // G: lines
    std::optional<std::string> f;               // f:
    std::optional<int> codim;                   // codim:
    std::optional<int> rank;                    // rank: module rows
    std::vector<std::vector<std::string>> gens; // gen: comma separated columns
    std::vector<std::string> bad_locus;         // S: comma separated
    std::optional<int> d, e;                    // fiber dimension, generic rank
    std::vector<std::string> arcs;              // arc: lines, parsed on demand
    std::optional<std::size_t> precision;       // precision:
    std::optional<std::string> order;           // order: lex | degrevlex
    std::vector<int> exponents;                 // exponents: a, b, c, d
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = s.find(',', start);
        std::string piece =
            trim(comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start));
        out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline int parse_int(const std::string& s, std::size_t line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": expected an integer, got '" +
                          s + "'");
    }
}

}  // namespace detail

inline problem parse_problem(const std::string& text) {
    problem p;
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
        if (val.empty())
            throw input_error("line " + std::to_string(line_no) + ": empty value for '" + key +
                              "'");
        if (key == "yvars") {
            for (auto& v : detail::split_list(val)) p.yvars.push_back(v);
        } else if (key == "zvars") {
            for (auto& v : detail::split_list(val)) p.zvars.push_back(v);
        } else if (key == "G") {
            p.defining.push_back(val);
        } else if (key == "f") {
            p.f = val;
        } else if (key == "codim") {
            p.codim = detail::parse_int(val, line_no);
        } else if (key == "rank") {
            p.rank = detail::parse_int(val, line_no);
        } else if (key == "gen") {
            p.gens.push_back(detail::split_list(val));
        } else if (key == "S") {
            for (auto& v : detail::split_list(val)) p.bad_locus.push_back(v);
        } else if (key == "d") {
            p.d = detail::parse_int(val, line_no);
        } else if (key == "e") {
            p.e = detail::parse_int(val, line_no);
        } else if (key == "arc") {
            p.arcs.push_back(val);
        } else if (key == "precision") {
            int v = detail::parse_int(val, line_no);
            if (v < 1) throw input_error("line " + std::to_string(line_no) +
                                         ": precision must be positive");
            p.precision = static_cast<std::size_t>(v);
        } else if (key == "order") {
            if (val != "lex" && val != "degrevlex")
                throw input_error("line " + std::to_string(line_no) +
                                  ": order must be lex or degrevlex");
            p.order = val;
        } else if (key == "exponents") {
            for (auto& v : detail::split_list(val))
                p.exponents.push_back(detail::parse_int(v, line_no));
        } else {
            throw input_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return p;
}

inline space_with_function space_from(const problem& p) {
    vars_t ambient = p.yvars;
    for (const auto& v : p.zvars) ambient.push_back(v);
    if (ambient.empty()) throw input_error("the problem declares no variables");
    std::vector<polynomial> G;
    for (const auto& t : p.defining) G.push_back(parse_polynomial(t, ambient));
    std::optional<polynomial> f;
    if (p.f) f = parse_polynomial(*p.f, ambient);
    int codim = p.codim.value_or(0);
    if (!p.codim && !G.empty())
        throw input_error("codim is required when defining equations are present");
    return make_space(p.yvars, p.zvars, G, f, codim);
}

inline std::vector<arc> arcs_from(const problem& p, const space_with_function& s) {
    std::vector<arc> out;
    vars_t tvar{"t"};
    for (const auto& line : p.arcs) {
        std::vector<polynomial> comp(s.ambient_dim(), polynomial::zero(1));
        std::vector<char> seen(s.ambient_dim(), 0);
        for (const auto& piece : detail::split_list(line)) {
            std::size_t eq = piece.find('=');
            if (eq == std::string::npos)
                throw input_error("arc entry '" + piece + "' is not 'var = expression'");
            std::string name = detail::trim(piece.substr(0, eq));
            std::string expr = detail::trim(piece.substr(eq + 1));
            auto idx = var_index(s.ambient, name);
            if (!idx) throw input_error("arc assigns unknown variable '" + name + "'");
            if (seen[*idx]) throw input_error("arc assigns '" + name + "' twice");
            seen[*idx] = 1;
            comp[*idx] = parse_polynomial(expr, tvar);
        }
        out.push_back(make_arc(std::move(comp)));
    }
    return out;
}

inline presented_module module_from(const problem& p, const space_with_function& s) {
    if (!p.rank) throw input_error("rank is required for module problems");
    if (*p.rank < 1) throw input_error("rank must be positive");
    if (p.gens.empty()) throw input_error("at least one gen line is required");
    presented_module M;
    M.rank = static_cast<std::size_t>(*p.rank);
    for (const auto& col : p.gens) {
        if (col.size() != M.rank)
            throw input_error("a gen line has " + std::to_string(col.size()) +
                              " entries, expected " + std::to_string(M.rank));
        std::vector<polynomial> entries;
        for (const auto& t : col) entries.push_back(parse_polynomial(t, s.ambient));
        M.columns.push_back(std::move(entries));
    }
    return M;
}

inline rees_setup rees_from(const problem& p) {
    space_with_function s = space_from(p);
    presented_module M = module_from(p, s);
    if (!p.d || !p.e) throw input_error("d and e are required for module problems");
    std::vector<polynomial> S;
    for (const auto& t : p.bad_locus) S.push_back(parse_polynomial(t, s.ambient));
    ideal bad(s.ambient, std::move(S));
    return make_rees_setup(std::move(s), std::move(M), std::move(bad), *p.d, *p.e);
}

}  // namespace thomaf
