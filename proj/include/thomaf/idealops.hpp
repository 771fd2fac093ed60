#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/ideal.hpp"
#include "thomaf/order.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Maps a polynomial into a ring whose variable list contains the source ring's
// variables (matched by name, any positions).
inline polynomial embed(const polynomial& p, const vars_t& from, const vars_t& into) {
    std::vector<std::size_t> where(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto idx = var_index(into, from[i]);
        if (!idx) throw input_error("variable '" + from[i] + "' missing from target ring");
        where[i] = *idx;
    }
    return remap(p, where, into.size());
}

inline ideal embed_ideal(const ideal& I, const vars_t& into) {
    std::vector<polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(embed(g, I.vars(), into));
    return ideal(into, std::move(gens));
}

inline vars_t vars_plus(vars_t vars, const std::vector<std::string>& more) {
    for (const auto& name : more) {
        if (var_index(vars, name)) throw input_error("duplicate variable '" + name + "'");
        vars.push_back(name);
    }
    return vars;
}

// Intersection with the subring of the unmasked variables, computed from a
// block-order basis: basis elements free of masked variables generate it.
inline ideal eliminate(const ideal& I, const std::vector<char>& drop) {
    if (drop.size() != I.nvars()) throw input_error("elimination mask has wrong length");
    ideal blocked = I.with_order(elimination_order(drop));
    const auto& gb = blocked.groebner();

    vars_t kept;
    std::vector<std::size_t> where(I.nvars(), 0);
    for (std::size_t i = 0; i < I.nvars(); ++i) {
        if (drop[i]) continue;
        where[i] = kept.size();
        kept.push_back(I.vars()[i]);
    }
    std::vector<polynomial> gens;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t i = 0; i < drop.size() && pure; ++i)
                if (drop[i] && e[i] > 0) pure = false;
            if (!pure) break;
        }
        if (pure) gens.push_back(remap(g, where, kept.size()));
    }
    return ideal(std::move(kept), std::move(gens));
}

inline ideal eliminate_vars(const ideal& I, const std::vector<std::string>& names) {
    std::vector<char> drop(I.nvars(), 0);
    for (const auto& name : names) {
        auto idx = var_index(I.vars(), name);
        if (!idx) throw input_error("cannot eliminate unknown variable '" + name + "'");
        drop[*idx] = 1;
    }
    return eliminate(I, drop);
}

inline ideal intersect(const ideal& I, const ideal& J) {
    if (I.vars() != J.vars()) throw input_error("intersecting ideals of different rings");
    if (I.is_unit_ideal()) return J;
    if (J.is_unit_ideal()) return I;
    vars_t ext = vars_plus(I.vars(), {"@t"});
    polynomial t = polynomial::variable(ext.size(), ext.size() - 1);
    polynomial one_minus_t = polynomial::constant(ext.size(), 1) - t;
    std::vector<polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(t * embed(g, I.vars(), ext));
    for (const auto& h : J.gens()) gens.push_back(one_minus_t * embed(h, J.vars(), ext));
    std::vector<char> drop(I.nvars() + 1, 0);
    drop[I.nvars()] = 1;
    return eliminate(ideal(std::move(ext), std::move(gens)), drop);
}

// I : f^infinity, by eliminating u from I + (1 - u*f).
inline ideal saturate(const ideal& I, const polynomial& f) {
    vars_t ext = vars_plus(I.vars(), {"@u"});
    polynomial u = polynomial::variable(ext.size(), ext.size() - 1);
    std::vector<polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(embed(g, I.vars(), ext));
    gens.push_back(polynomial::constant(ext.size(), 1) - u * embed(f, I.vars(), ext));
    std::vector<char> drop(I.nvars() + 1, 0);
    drop[I.nvars()] = 1;
    return eliminate(ideal(std::move(ext), std::move(gens)), drop);
}

// I : J^infinity = the intersection of I : g^infinity over the generators g
// of J (valid since J is finitely generated). With no nonzero generator the
// result is the unit ideal, matching the closure of V(I) minus V(0).
inline ideal saturate(const ideal& I, const ideal& J) {
    if (I.vars() != J.vars()) throw input_error("saturating across different rings");
    ideal acc(I.vars(), {polynomial::constant(I.nvars(), 1)});
    bool first = true;
    for (const auto& g : J.gens()) {
        ideal s = saturate(I, g);
        acc = first ? s : intersect(acc, s);
        first = false;
    }
    return acc;
}

// f lies in the radical of I iff I + (1 - u*f) is the unit ideal.
inline bool radical_member(const polynomial& f, const ideal& I) {
    vars_t ext = vars_plus(I.vars(), {"@u"});
    polynomial u = polynomial::variable(ext.size(), ext.size() - 1);
    std::vector<polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(embed(g, I.vars(), ext));
    gens.push_back(polynomial::constant(ext.size(), 1) - u * embed(f, I.vars(), ext));
    return ideal(std::move(ext), std::move(gens)).is_unit_ideal();
}

// V(A) is contained in V(B) over the algebraic closure iff every generator of
// B vanishes on V(A), i.e. lies in the radical of A.
inline bool variety_subset(const ideal& A, const ideal& B) {
    if (A.vars() != B.vars()) throw input_error("comparing varieties in different rings");
    for (const auto& g : B.gens())
        if (!radical_member(g, A)) return false;
    return true;
}

inline bool radical_equal(const ideal& I, const ideal& J) {
    return variety_subset(I, J) && variety_subset(J, I);
}

namespace detail {

// Smallest set of variables meeting every support mask; branch and bound.
inline void hitting_rec(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                        std::size_t count, std::size_t& best) {
    if (count >= best) return;
    std::uint64_t unhit = 0;
    bool found = false;
    for (std::uint64_t s : supports) {
        if ((s & chosen) == 0) {
            unhit = s;
            found = true;
            break;
        }
    }
    if (!found) {
        best = count;
        return;
    }
    for (std::size_t v = 0; v < 64; ++v)
        if (unhit & (std::uint64_t(1) << v))
            hitting_rec(supports, chosen | (std::uint64_t(1) << v), count + 1, best);
}

}  // namespace detail

// Krull dimension of the quotient ring, equal to the dimension of the variety
// over the algebraic closure. Computed as the largest set of variables
// independent modulo the leading-term ideal of a degree-compatible basis.
inline int dimension(const ideal& I) {
    if (I.nvars() > 64) throw input_error("dimension supports at most 64 variables");
    ideal J = I.order().kind == order_kind::degrevlex ? I : I.with_order(degrevlex_order());
    if (J.is_unit_ideal()) return -1;
    std::vector<std::uint64_t> supports;
    for (const auto& g : J.groebner()) {
        const expvec& e = leading(g, J.order()).exp;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) m |= std::uint64_t(1) << i;
        supports.push_back(m);
    }
    std::size_t best = I.nvars();
    detail::hitting_rec(supports, 0, 0, best);
    return static_cast<int>(I.nvars() - best);
}

// Specializes some variables to rational values; the result lives in the ring
// of the remaining variables, in their original order.
inline ideal substitute(const ideal& I, const std::vector<std::optional<rat>>& values) {
    if (values.size() != I.nvars()) throw input_error("substitution list has wrong length");
    vars_t kept;
    for (std::size_t i = 0; i < I.nvars(); ++i)
        if (!values[i]) kept.push_back(I.vars()[i]);
    std::vector<polynomial> images(I.nvars());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < I.nvars(); ++i) {
        if (values[i])
            images[i] = polynomial::constant(kept.size(), *values[i]);
        else
            images[i] = polynomial::variable(kept.size(), pos++);
    }
    std::vector<polynomial> gens;
    for (const auto& g : I.gens()) {
        polynomial h = g.compose(kept.size(), images);
        if (!h.is_zero()) gens.push_back(std::move(h));
    }
    return ideal(std::move(kept), std::move(gens));
}

// Dimension of the projectivization of a cone: the ideal must be homogeneous,
// so its affine dimension d means projective dimension d - 1, with the cone
// {0} (d = 0) and the empty cone both giving the empty projective set.
inline int projective_dimension_of_cone(const ideal& I) {
    int d = dimension(I);
    return d <= 0 ? -1 : d - 1;
}

}  // namespace thomaf
