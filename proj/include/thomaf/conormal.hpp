#pragma once

#include <string>
#include <vector>

#include "thomaf/bigraded.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/ideal.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/matrix.hpp"
#include "thomaf/polymap.hpp"
#include "thomaf/space.hpp"

namespace thomaf {

namespace detail {

// Jacobian of the defining equations, embedded into the base + covector ring.
inline poly_matrix embedded_jacobian(const space_with_function& s, const vars_t& ring) {
    std::size_t m = s.ambient_dim();
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    poly_matrix J = jacobian(s.defining, all, m);
    poly_matrix out(J.rows(), J.cols(), ring.size());
    for (std::size_t r = 0; r < J.rows(); ++r)
        for (std::size_t c = 0; c < J.cols(); ++c)
            out.at(r, c) = embed(J.at(r, c), s.ambient, ring);
    return out;
}

inline poly_matrix row_of(const std::vector<polynomial>& entries, std::size_t nvars) {
    poly_matrix R(1, entries.size(), nvars);
    for (std::size_t c = 0; c < entries.size(); ++c) R.at(0, c) = entries[c];
    return R;
}

}  // namespace detail

// Covectors conormal to X: over the smooth locus, (x, xi) with xi vanishing
// on the tangent space of X at x, then closed up. Algebraically: X's
// equations plus the rank condition tying xi to the rows of the Jacobian,
// with the singular locus' contribution removed by saturation.
inline bigraded_ideal conormal_space(const space_with_function& s) {
    validate_codim(s);
    if (s.defining.size() < s.codim)
        throw input_error("need at least codim defining equations");
    std::size_t m = s.ambient_dim();
    vars_t cov = covector_names(s.ambient);
    vars_t ring = vars_plus(s.ambient, cov);

    poly_matrix DG = detail::embedded_jacobian(s, ring);
    std::vector<polynomial> xi;
    for (std::size_t i = 0; i < m; ++i)
        xi.push_back(polynomial::variable(ring.size(), m + i));
    poly_matrix stacked = DG.stacked(detail::row_of(xi, ring.size()));

    std::vector<polynomial> gens;
    for (const auto& g : s.defining) gens.push_back(embed(g, s.ambient, ring));
    for (auto& d : minors(stacked, s.codim + 1)) gens.push_back(std::move(d));

    ideal raw(ring, std::move(gens));
    ideal C = saturate(raw, ideal(ring, minors(DG, s.codim)));
    return make_bigraded(s.ambient, std::move(cov), std::move(C));
}

// Covectors conormal to the fibers of f on X: the rank condition now allows
// xi to mix the Jacobian rows with df, and the saturation keeps the locus
// where f is an honest submersion on the smooth part of X.
inline bigraded_ideal relative_conormal(const space_with_function& s) {
    validate_codim(s);
    if (s.defining.size() < s.codim)
        throw input_error("need at least codim defining equations");
    std::size_t m = s.ambient_dim();
    vars_t cov = covector_names(s.ambient);
    vars_t ring = vars_plus(s.ambient, cov);

    poly_matrix DG = detail::embedded_jacobian(s, ring);
    std::vector<polynomial> df;
    for (auto& d : s.df()) df.push_back(embed(d, s.ambient, ring));
    poly_matrix DGf = DG.stacked(detail::row_of(df, ring.size()));
    std::vector<polynomial> xi;
    for (std::size_t i = 0; i < m; ++i)
        xi.push_back(polynomial::variable(ring.size(), m + i));
    poly_matrix stacked = DGf.stacked(detail::row_of(xi, ring.size()));

    std::vector<polynomial> gens;
    for (const auto& g : s.defining) gens.push_back(embed(g, s.ambient, ring));
    for (auto& d : minors(stacked, s.codim + 2)) gens.push_back(std::move(d));

    ideal raw(ring, std::move(gens));
    ideal C = saturate(raw, ideal(ring, minors(DGf, s.codim + 1)));
    return make_bigraded(s.ambient, std::move(cov), std::move(C));
}

// Image in base x covector space of the exceptional set created by forcing
// the covector u, ranging over the span of the Jacobian rows along X, into
// the section u = df. Three eliminations: multipliers give the span, tau
// gives lines through u - df, and the section slice lands in (x, xi).
inline bigraded_ideal exceptional_image(const space_with_function& s) {
    std::size_t m = s.ambient_dim();
    std::size_t p = s.defining.size();
    std::vector<polynomial> df = s.df();

    vars_t uvars, psis;
    for (std::size_t j = 0; j < m; ++j) uvars.push_back("@u" + std::to_string(j + 1));
    for (std::size_t i = 0; i < p; ++i) psis.push_back("@p" + std::to_string(i + 1));

    // Stage 1: (x, u) with u in the row span of the Jacobian at x.
    vars_t r1 = vars_plus(vars_plus(s.ambient, uvars), psis);
    std::vector<polynomial> g1;
    for (const auto& g : s.defining) g1.push_back(embed(g, s.ambient, r1));
    for (std::size_t j = 0; j < m; ++j) {
        polynomial rel = polynomial::variable(r1.size(), m + j);
        for (std::size_t i = 0; i < p; ++i) {
            polynomial dgij = embed(s.defining[i].derivative(j), s.ambient, r1);
            rel -= polynomial::variable(r1.size(), m + m + i) * dgij;
        }
        g1.push_back(std::move(rel));
    }
    ideal Z = eliminate_vars(ideal(std::move(r1), std::move(g1)), psis);

    // Stage 2: attach the pencil xi = tau * (u - df) and forget tau.
    vars_t cov = covector_names(s.ambient);
    vars_t r2 = vars_plus(vars_plus(Z.vars(), {"@tau"}), cov);
    std::size_t tau_at = Z.nvars();
    std::vector<polynomial> g2;
    for (const auto& g : Z.gens()) g2.push_back(embed(g, Z.vars(), r2));
    for (std::size_t i = 0; i < m; ++i) {
        polynomial diff = polynomial::variable(r2.size(), m + i) -
                          embed(df[i], s.ambient, r2);
        g2.push_back(polynomial::variable(r2.size(), tau_at + 1 + i) -
                     polynomial::variable(r2.size(), tau_at) * diff);
    }
    ideal B = eliminate_vars(ideal(std::move(r2), std::move(g2)), {"@tau"});

    // Stage 3: slice to the section u = df and forget u.
    std::vector<polynomial> g3 = B.gens();
    for (std::size_t i = 0; i < m; ++i)
        g3.push_back(polynomial::variable(B.nvars(), m + i) -
                     embed(df[i], s.ambient, B.vars()));
    ideal sliced = eliminate_vars(ideal(B.vars(), std::move(g3)), uvars);

    std::vector<polynomial> irr;
    vars_t full = vars_plus(s.ambient, cov);
    for (std::size_t i = 0; i < m; ++i)
        irr.push_back(polynomial::variable(full.size(), m + i));
    ideal E = saturate(sliced, ideal(full, std::move(irr)));
    return make_bigraded(s.ambient, std::move(cov), std::move(E));
}

// Cone over the projective point of a nonzero covector P: relations
// xi_i P_j - xi_j P_i.
inline ideal point_covector_ideal(const vars_t& cov, const std::vector<rat>& P) {
    std::size_t m = cov.size();
    std::vector<polynomial> gens;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            polynomial g = polynomial::variable(m, i) * P[j] -
                           polynomial::variable(m, j) * P[i];
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    return ideal(cov, std::move(gens));
}

// Projective join of the point [P] with the cone V: the union of all lines
// through [P] and points of V, as a cone ideal. An empty V joins to the
// single point [P]; a zero P is rejected, callers drop the join instead.
inline ideal join_point_set(const ideal& V, const std::vector<rat>& P) {
    if (P.size() != V.nvars()) throw input_error("join point has wrong dimension");
    if (all_zero(P)) throw input_error("cannot join with the zero covector");
    if (V.is_unit_ideal()) return point_covector_ideal(V.vars(), P);
    std::size_t m = V.nvars();
    vars_t ext = vars_plus(V.vars(), {"@s"});
    std::vector<polynomial> images(m);
    for (std::size_t i = 0; i < m; ++i)
        images[i] = polynomial::variable(ext.size(), i) -
                    polynomial::variable(ext.size(), m) * P[i];
    std::vector<polynomial> gens;
    for (const auto& g : V.gens()) gens.push_back(g.compose(ext.size(), images));
    ideal shifted(ext, std::move(gens));
    ideal joined = eliminate_vars(shifted, {"@s"});
    std::vector<polynomial> irr;
    for (std::size_t i = 0; i < m; ++i) irr.push_back(polynomial::variable(m, i));
    return saturate(joined, ideal(V.vars(), std::move(irr)));
}

// Conormal space of the parameter axis {z = 0}: its ideal together with the
// covectors annihilating it.
inline bigraded_ideal conormal_of_axis(const space_with_function& s) {
    vars_t cov = covector_names(s.ambient);
    vars_t ring = vars_plus(s.ambient, cov);
    std::vector<polynomial> gens;
    for (std::size_t i = s.yvars.size(); i < s.ambient_dim(); ++i)
        gens.push_back(polynomial::variable(ring.size(), i));
    for (std::size_t i = 0; i < s.yvars.size(); ++i)
        gens.push_back(polynomial::variable(ring.size(), s.ambient_dim() + i));
    return make_bigraded(s.ambient, std::move(cov), ideal(std::move(ring), std::move(gens)));
}

struct decomposition_outcome {
    bool verified = false;       // the two covector sets agree over the origin
    bool lhs_in_rhs = false;     // relative conormal fiber inside the union
    bool rhs_in_lhs = false;
    bool join_dropped = false;   // df(0) = 0, the join term degenerates away
    vars_t cov;                  // covector coordinate names
    std::vector<std::string> lhs;                // fiber of the relative conormal
    std::vector<std::string> rhs;                // union of the two pieces
    std::vector<std::string> exceptional_fiber;  // fiber of the exceptional image
    std::vector<std::string> conormal_fiber;     // fiber of the conormal space
    std::vector<std::string> join_term;          // join of df(0) with it, if formed
};

// Compares, over the origin, the covectors conormal to the fibers of f with
// the union of the exceptional image's fiber and the join of df(0) with the
// conormal fiber. All comparisons are up to radical.
inline decomposition_outcome verify_decomposition(const space_with_function& s) {
    decomposition_outcome out;
    bigraded_ideal rel = relative_conormal(s);
    bigraded_ideal con = conormal_space(s);
    bigraded_ideal exc = exceptional_image(s);
    out.cov = rel.cov;

    ideal lhs = fiber_at_origin(rel);
    ideal e0 = fiber_at_origin(exc);
    std::vector<rat> df0 = s.df_at_origin();

    ideal rhs = e0;
    if (all_zero(df0)) {
        out.join_dropped = true;
    } else {
        ideal c0 = fiber_at_origin(con);
        ideal joined = join_point_set(c0, df0);
        out.conormal_fiber = groebner_as_strings(c0);
        out.join_term = groebner_as_strings(joined);
        rhs = intersect(e0, joined);
    }

    out.lhs = groebner_as_strings(lhs);
    out.rhs = groebner_as_strings(rhs);
    out.exceptional_fiber = groebner_as_strings(e0);
    out.lhs_in_rhs = variety_subset(lhs, rhs);
    out.rhs_in_lhs = variety_subset(rhs, lhs);
    out.verified = out.lhs_in_rhs && out.rhs_in_lhs;
    return out;
}

struct af_exact_outcome {
    bool holds = false;
    std::vector<std::string> failing_covectors;  // parameter covectors escaping the radical
    std::vector<std::string> restricted;         // basis of the relative conormal over the axis
};

// Exact certificate: restrict the relative conormal to the parameter axis and
// ask every parameter covector to vanish there up to radical, i.e. limiting
// covectors along the axis are conormal to the axis.
inline af_exact_outcome af_exact(const space_with_function& s) {
    if (s.yvars.empty()) throw input_error("the parameter axis is empty");
    if (!s.axis_contained_in_x()) throw input_error("the parameter axis does not lie on X");
    if (!s.f_vanishes_on_axis()) throw input_error("f does not vanish on the parameter axis");

    bigraded_ideal rel = relative_conormal(s);
    std::size_t m = s.ambient_dim();
    std::vector<polynomial> zgens;
    for (std::size_t i = s.yvars.size(); i < m; ++i)
        zgens.push_back(polynomial::variable(rel.I.nvars(), i));
    ideal A = rel.I.plus(std::move(zgens));

    af_exact_outcome out;
    out.holds = true;
    out.restricted = groebner_as_strings(A);
    for (std::size_t j = 0; j < s.yvars.size(); ++j) {
        polynomial dyj = polynomial::variable(A.nvars(), m + j);
        if (!radical_member(dyj, A)) {
            out.holds = false;
            out.failing_covectors.push_back(rel.cov[j]);
        }
    }
    return out;
}

}  // namespace thomaf
