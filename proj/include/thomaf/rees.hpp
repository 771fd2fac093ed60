#pragma once

#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/ideal.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/space.hpp"

namespace thomaf {

// A finitely generated submodule of the free module O^rank over the ambient
// ring, given by its generators (columns).
struct presented_module {
    std::size_t rank = 0;
    std::vector<std::vector<polynomial>> columns;
};

inline presented_module jacobian_module(const std::vector<polynomial>& rows,
                                        std::size_t nvars) {
    presented_module M;
    M.rank = rows.size();
    M.columns.resize(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        M.columns[j].reserve(rows.size());
        for (const auto& g : rows) M.columns[j].push_back(g.derivative(j));
    }
    return M;
}

inline vars_t tvar_names(std::size_t count) {
    vars_t out;
    for (std::size_t i = 0; i < count; ++i) out.push_back("T" + std::to_string(i + 1));
    return out;
}

// Defining ideal of the Rees algebra image: kernel of the map sending T_i to
// the i-th generator, presented inside the symmetric algebra on the free
// module and cut down by eliminating its coordinates.
inline ideal rees_kernel(const ideal& X, const presented_module& M, const vars_t& tvars) {
    if (tvars.size() != M.columns.size())
        throw input_error("one T variable per module generator is required");
    for (const auto& col : M.columns)
        if (col.size() != M.rank) throw input_error("module generator of wrong length");
    vars_t wvars;
    for (std::size_t j = 0; j < M.rank; ++j) wvars.push_back("@w" + std::to_string(j + 1));
    vars_t ring = vars_plus(vars_plus(X.vars(), tvars), wvars);
    std::size_t n = X.nvars(), s = tvars.size();

    std::vector<polynomial> gens;
    for (const auto& g : X.gens()) gens.push_back(embed(g, X.vars(), ring));
    for (std::size_t i = 0; i < s; ++i) {
        polynomial rel = polynomial::variable(ring.size(), n + i);
        for (std::size_t j = 0; j < M.rank; ++j) {
            if (M.columns[i][j].is_zero()) continue;
            rel -= embed(M.columns[i][j], X.vars(), ring) *
                   polynomial::variable(ring.size(), n + s + j);
        }
        gens.push_back(std::move(rel));
    }
    return eliminate_vars(ideal(std::move(ring), std::move(gens)), wvars);
}

// A module over a family: the variety, a module on it, the locus S where the
// generic behaviour may break, and the stated dimensions (d for the variety,
// e for the generic fiber contribution).
struct rees_setup {
    space_with_function space;
    presented_module mod;
    ideal bad_locus;  // in the ambient ring
    int d = 0;
    int e = 0;
    vars_t tvars;

    int r() const { return d + e - 1; }
};

inline rees_setup make_rees_setup(space_with_function space, presented_module mod,
                                  ideal bad_locus, int d, int e) {
    rees_setup out;
    out.space = std::move(space);
    out.mod = std::move(mod);
    out.bad_locus = std::move(bad_locus);
    out.d = d;
    out.e = e;
    if (out.mod.columns.empty()) throw input_error("the module has no generators");
    for (const auto& col : out.mod.columns) {
        if (col.size() != out.mod.rank) throw input_error("module generator of wrong length");
        for (const auto& entry : col)
            if (entry.nvars() != out.space.ambient_dim())
                throw input_error("module entry lives in the wrong ring");
    }
    if (out.bad_locus.vars() != out.space.ambient)
        throw input_error("the bad locus ideal lives in the wrong ring");
    out.tvars = tvar_names(out.mod.columns.size());
    for (const auto& t : out.tvars)
        if (var_index(out.space.ambient, t))
            throw input_error("coordinate '" + t + "' collides with a module variable");
    int fiber_dim = dimension(out.space.x_ideal()) - static_cast<int>(out.space.yvars.size());
    if (out.d != fiber_dim)
        throw input_error("stated d does not match dim X minus the parameter count (" +
                          std::to_string(fiber_dim) + ")");
    if (out.e < 1) throw input_error("e must be at least 1");
    return out;
}

inline ideal rees_kernel(const rees_setup& R) {
    return rees_kernel(R.space.x_ideal(), R.mod, R.tvars);
}

// Fiber of the family over y0 in the parameter block: specialize the kernel.
// Lives in (z, T).
inline ideal family_fiber(const rees_setup& R, const std::vector<rat>& y0, const ideal& K) {
    if (y0.size() != R.space.yvars.size()) throw input_error("fiber point has wrong length");
    std::vector<std::optional<rat>> values(K.nvars());
    for (std::size_t i = 0; i < y0.size(); ++i) values[i] = y0[i];
    return substitute(K, values);
}

// The restricted module's own kernel over X|_{y0}, re-presented from the
// specialized generators as they stand, one T per original generator.
inline ideal restricted_kernel(const rees_setup& R, const std::vector<rat>& y0) {
    std::size_t k = R.space.yvars.size();
    if (y0.size() != k) throw input_error("fiber point has wrong length");
    std::vector<std::optional<rat>> values(R.space.ambient_dim());
    for (std::size_t i = 0; i < k; ++i) values[i] = y0[i];
    ideal X0 = substitute(R.space.x_ideal(), values);
    presented_module M0;
    M0.rank = R.mod.rank;
    for (const auto& col : R.mod.columns) {
        std::vector<std::optional<rat>> vals(R.space.ambient_dim());
        for (std::size_t i = 0; i < k; ++i) vals[i] = y0[i];
        std::vector<polynomial> c0;
        std::vector<polynomial> images(R.space.ambient_dim());
        std::size_t pos = 0;
        for (std::size_t i = 0; i < R.space.ambient_dim(); ++i) {
            if (i < k)
                images[i] = polynomial::constant(X0.nvars(), y0[i]);
            else
                images[i] = polynomial::variable(X0.nvars(), pos++);
        }
        for (const auto& entry : col) c0.push_back(entry.compose(X0.nvars(), images));
        M0.columns.push_back(std::move(c0));
    }
    return rees_kernel(X0, M0, R.tvars);
}

// Strip components supported on the T-irrelevant locus, so ideals compare as
// subsets of base x projective space.
inline ideal t_saturate(const ideal& I, const vars_t& tvars) {
    std::vector<polynomial> irr;
    for (const auto& t : tvars) {
        auto idx = var_index(I.vars(), t);
        if (!idx) throw input_error("missing T variable '" + t + "'");
        irr.push_back(polynomial::variable(I.nvars(), *idx));
    }
    return saturate(I, ideal(I.vars(), std::move(irr)));
}

enum class check_status { holds, fails, inconclusive };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::holds: return "holds";
        case check_status::fails: return "fails";
        case check_status::inconclusive: return "inconclusive";
    }
    return "?";
}

struct rees_fiber_comparison {
    check_status status = check_status::inconclusive;
    bool equal_after_removal = false;   // family fiber minus bad locus vs restricted kernel
    bool equal_without_removal = false;  // raw comparison, reported for contrast
    std::vector<std::string> family_fiber;      // specialized kernel, T-saturated
    std::vector<std::string> removed;           // after also removing the bad locus
    std::vector<std::string> restricted;        // kernel of the restricted module, T-saturated
};

// Fiber identity with the bad locus removed: over y0, the family's fiber
// agrees with the restricted module's space away from V(S), up to radical.
inline rees_fiber_comparison remark_identity_check(const rees_setup& R,
                                                   const std::vector<rat>& y0) {
    ideal K = rees_kernel(R);
    ideal lhs0 = t_saturate(family_fiber(R, y0, K), R.tvars);
    ideal rhs = t_saturate(restricted_kernel(R, y0), R.tvars);

    std::vector<std::optional<rat>> values(R.space.ambient_dim());
    for (std::size_t i = 0; i < y0.size(); ++i) values[i] = y0[i];
    ideal S0 = substitute(R.bad_locus, values);
    ideal lhs = saturate(lhs0, embed_ideal(S0, lhs0.vars()));

    rees_fiber_comparison out;
    out.family_fiber = groebner_as_strings(lhs0);
    out.removed = groebner_as_strings(lhs);
    out.restricted = groebner_as_strings(rhs);
    out.equal_after_removal = radical_equal(lhs, rhs);
    out.equal_without_removal = radical_equal(lhs0, rhs);
    out.status = out.equal_after_removal ? check_status::holds : check_status::fails;
    return out;
}

struct rees_components_outcome {
    check_status status = check_status::inconclusive;
    bool hypothesis_ok = false;
    int fiber_dim_at_origin = 0;  // projective dimension of the fiber over 0 in X
    int r = 0;
    bool equal = false;  // family fiber vs restricted kernel, no removal
    std::vector<std::string> family_fiber;
    std::vector<std::string> restricted;
};

// Under the smallness hypothesis on the fiber over the origin, the family
// fiber has no components to spare: it must agree with the restricted
// module's space outright. A violated hypothesis leaves the identity
// undecided, not refuted.
inline rees_components_outcome theorem_components_check(const rees_setup& R,
                                                        const std::vector<rat>& y0) {
    rees_components_outcome out;
    out.r = R.r();
    ideal K = rees_kernel(R);
    std::vector<std::optional<rat>> origin(K.nvars());
    for (std::size_t i = 0; i < R.space.ambient_dim(); ++i) origin[i] = rat(0);
    out.fiber_dim_at_origin = projective_dimension_of_cone(substitute(K, origin));
    out.hypothesis_ok = out.fiber_dim_at_origin < out.r;

    ideal lhs = t_saturate(family_fiber(R, y0, K), R.tvars);
    ideal rhs = t_saturate(restricted_kernel(R, y0), R.tvars);
    out.family_fiber = groebner_as_strings(lhs);
    out.restricted = groebner_as_strings(rhs);
    out.equal = radical_equal(lhs, rhs);
    if (!out.hypothesis_ok)
        out.status = check_status::inconclusive;
    else
        out.status = out.equal ? check_status::holds : check_status::fails;
    return out;
}

}  // namespace thomaf
