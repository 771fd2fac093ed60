#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/polynomial.hpp"
#include "thomaf/rees.hpp"
#include "thomaf/series.hpp"
#include "thomaf/space.hpp"

namespace thomaf {

// A rational curve germ through the origin: one univariate polynomial in t
// per ambient coordinate, all with zero constant term.
struct arc {
    std::vector<polynomial> components;
};

inline arc make_arc(std::vector<polynomial> components) {
    for (const auto& c : components) {
        if (c.nvars() != 1) throw input_error("arc components must be univariate");
        std::vector<rat> zero{rat(0)};
        rat v = c.eval(zero);
        if (v != 0) throw input_error("arc does not pass through the origin");
    }
    return arc{std::move(components)};
}

inline bool arc_on_variety(const space_with_function& s, const arc& a) {
    if (a.components.size() != s.ambient_dim())
        throw input_error("arc has wrong number of components");
    for (const auto& g : s.defining)
        if (!g.compose(1, a.components).is_zero()) return false;
    return true;
}

inline truncated_series pullback(const polynomial& p, const arc& a, std::size_t prec) {
    return truncated_series::from_polynomial(p.compose(1, a.components), prec);
}

inline std::string arc_text(const arc& a, const vars_t& vars) {
    std::string out;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += vars[i] + " = " + to_string(a.components[i], {"t"});
    }
    if (out.empty()) out = "0";
    return out;
}

// Direction of the first surviving jet: divide the vector by the smallest t
// power present and read off the coefficients. Empty when nothing is visible
// within the precision.
inline std::vector<rat> limit_direction(const std::vector<truncated_series>& v) {
    std::size_t best = SIZE_MAX;
    for (const auto& s : v) best = std::min(best, s.order());
    std::vector<rat> out;
    for (const auto& s : v) {
        if (best == SIZE_MAX || best >= s.prec) return {};
        out.push_back(s.coeffs[best]);
    }
    bool any = false;
    for (const auto& c : out)
        if (c != 0) any = true;
    return any ? out : std::vector<rat>{};
}

using series_vec = std::vector<truncated_series>;

struct dependence_result {
    check_status status = check_status::inconclusive;
    std::size_t witness_row = 0;       // row of the resisting coefficient, for fails
    std::size_t witness_exponent = 0;  // its t exponent
    std::size_t max_pivot_order = 0;
    std::size_t min_residual_prec = 0;
};

// Decides membership of the target in the C[[t]]-span of the columns, by
// column elimination over the power series ring with explicit precision
// tracking. "fails" is exact: a nonzero residual coefficient is certified
// to lie below every unknown contribution. "holds" means the residual
// vanishes through the tracked precision with at least `margin` spare orders
// beyond the deepest pivot.
inline dependence_result series_membership(std::vector<series_vec> cols, series_vec target,
                                           std::size_t margin) {
    dependence_result out;
    std::size_t p = target.size();
    for (const auto& c : cols)
        if (c.size() != p) throw input_error("column has wrong number of rows");
    if (p == 0) {
        out.status = check_status::holds;
        out.min_residual_prec = SIZE_MAX;
        return out;
    }

    std::vector<char> row_locked(p, 0), col_locked(cols.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

    for (;;) {
        std::size_t br = 0, bc = 0, bord = SIZE_MAX;
        for (std::size_t r = 0; r < p; ++r) {
            if (row_locked[r]) continue;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (col_locked[c] || cols[c][r].known_zero()) continue;
                std::size_t o = cols[c][r].order();
                if (o < bord) {
                    bord = o;
                    br = r;
                    bc = c;
                }
            }
        }
        if (bord == SIZE_MAX) break;

        const truncated_series& piv = cols[bc][br];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c == bc || col_locked[c]) continue;
            const truncated_series& entry = cols[c][br];
            if (std::min(entry.prec, piv.prec) < bord) {
                out.status = check_status::inconclusive;
                return out;
            }
            truncated_series factor = divide(entry, piv);
            for (std::size_t r = 0; r < p; ++r)
                cols[c][r] = cols[c][r] - factor * cols[bc][r];
        }
        row_locked[br] = 1;
        col_locked[bc] = 1;
        pivots.emplace_back(br, bc);
        out.max_pivot_order = std::max(out.max_pivot_order, bord);
    }

    // Any column left unlocked is known-zero in every row; its true entries
    // carry t-orders at least their precision, which bounds below what it
    // could still contribute to a row.
    auto skipped_bound = [&](std::size_t r) {
        std::size_t bound = SIZE_MAX;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!col_locked[c]) bound = std::min(bound, cols[c][r].prec);
        return bound;
    };

    bool precision_short = false;
    // The coefficient on each pivot column is forced by its cleared row, in
    // creation order; impossibility below the pivot order is a refutation.
    for (const auto& [r, c] : pivots) {
        const truncated_series& den = cols[c][r];
        std::size_t dord = den.order();
        const truncated_series& num = target[r];
        for (std::size_t k = 0; k < std::min(num.prec, dord); ++k) {
            if (num.coeffs[k] == 0) continue;
            if (k < skipped_bound(r)) {
                out.status = check_status::fails;
                out.witness_row = r;
                out.witness_exponent = k;
                return out;
            }
            out.status = check_status::inconclusive;
            return out;
        }
        if (std::min(num.prec, den.prec) < dord) {
            out.status = check_status::inconclusive;
            return out;
        }
        truncated_series coeff = divide(num, den);
        for (std::size_t rr = 0; rr < p; ++rr)
            target[rr] = target[rr] - coeff * cols[c][rr];
    }

    out.min_residual_prec = SIZE_MAX;
    for (std::size_t r = 0; r < p; ++r) {
        out.min_residual_prec = std::min(out.min_residual_prec, target[r].prec);
        for (std::size_t k = 0; k < target[r].prec; ++k) {
            if (target[r].coeffs[k] == 0) continue;
            if (k < skipped_bound(r)) {
                out.status = check_status::fails;
                out.witness_row = r;
                out.witness_exponent = k;
                return out;
            }
            precision_short = true;
        }
    }
    if (precision_short) {
        out.status = check_status::inconclusive;
        return out;
    }
    out.status = (out.min_residual_prec >= out.max_pivot_order + margin)
                     ? check_status::holds
                     : check_status::inconclusive;
    return out;
}

inline constexpr std::size_t default_precision = 64;
inline constexpr std::size_t default_margin = 4;

struct arc_check_detail {
    std::string arc;
    std::string target;  // which covector was tested
    check_status status = check_status::inconclusive;
    std::size_t witness_row = 0;
    std::size_t witness_exponent = 0;
    std::vector<rat> limit_covector;  // direction of df along the arc, if visible
};

struct arc_dependence_outcome {
    check_status status = check_status::holds;
    std::size_t arcs_checked = 0;
    std::size_t tests_run = 0;
    std::vector<arc_check_detail> exceptions;  // failing or undecided tests only
};

inline void fold_status(check_status& agg, check_status one) {
    if (one == check_status::fails)
        agg = check_status::fails;
    else if (one == check_status::inconclusive && agg == check_status::holds)
        agg = check_status::inconclusive;
}

namespace detail {

inline series_vec pull_column(const std::vector<polynomial>& col, const arc& a,
                              std::size_t prec) {
    series_vec out;
    out.reserve(col.size());
    for (const auto& e : col) out.push_back(pullback(e, a, prec));
    return out;
}

inline std::vector<series_vec> pull_module_shifted(const presented_module& M, const arc& a,
                                                   std::size_t prec) {
    std::vector<series_vec> cols;
    cols.reserve(M.columns.size());
    for (const auto& col : M.columns) {
        series_vec v = pull_column(col, a, prec);
        for (auto& s : v) s = shift_up(s, 1);
        cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace detail

// Along every given arc on X, each parameter-direction derivative of
// H = (f, defining equations) must fall inside t times the pullback of the
// full derivative module of H. A failing arc is an analytic witness against
// the stratification condition; agreement on all arcs certifies it to the
// explored arc family and precision.
inline arc_dependence_outcome af_arcs(const space_with_function& s,
                                      const std::vector<arc>& arcs,
                                      std::size_t prec = default_precision,
                                      std::size_t margin = default_margin) {
    if (s.yvars.empty()) throw input_error("the parameter axis is empty");
    if (!s.axis_contained_in_x()) throw input_error("the parameter axis does not lie on X");
    if (!s.f_vanishes_on_axis()) throw input_error("f does not vanish on the parameter axis");

    std::vector<polynomial> H;
    H.push_back(s.function());
    for (const auto& g : s.defining) H.push_back(g);
    presented_module M = jacobian_module(H, s.ambient_dim());

    arc_dependence_outcome out;
    for (const arc& a : arcs) {
        if (!arc_on_variety(s, a)) throw input_error("arc does not lie on X");
        ++out.arcs_checked;
        auto cols = detail::pull_module_shifted(M, a, prec);
        std::vector<truncated_series> df_pull;
        for (const auto& d : s.df()) df_pull.push_back(pullback(d, a, prec));
        for (std::size_t j = 0; j < s.yvars.size(); ++j) {
            ++out.tests_run;
            series_vec target = detail::pull_column(M.columns[j], a, prec);
            dependence_result r = series_membership(cols, target, margin);
            fold_status(out.status, r.status);
            if (r.status != check_status::holds) {
                arc_check_detail d;
                d.arc = arc_text(a, s.ambient);
                d.target = "d" + s.yvars[j];
                d.status = r.status;
                d.witness_row = r.witness_row;
                d.witness_exponent = r.witness_exponent;
                d.limit_covector = limit_direction(df_pull);
                out.exceptions.push_back(std::move(d));
            }
        }
    }
    return out;
}

// The same dependence test for the fiber X0 = X restricted to {y = 0}: each
// y-derivative of the defining equations, restricted to the fiber, must fall
// inside t times the fiber's own derivative module along every arc in X0.
inline arc_dependence_outcome whitney_fiber_check(const space_with_function& s,
                                                  const std::vector<arc>& arcs,
                                                  std::size_t prec = default_precision,
                                                  std::size_t margin = default_margin) {
    if (s.yvars.empty()) throw input_error("the parameter axis is empty");
    std::size_t k = s.yvars.size(), n = s.zvars.size(), m = s.ambient_dim();

    // restrict to {y = 0}, into the z-only ring
    std::vector<polynomial> images(m);
    for (std::size_t i = 0; i < k; ++i) images[i] = polynomial::zero(n);
    for (std::size_t i = 0; i < n; ++i) images[k + i] = polynomial::variable(n, i);
    auto to_fiber = [&](const polynomial& p) { return p.compose(n, images); };

    // Rows stay aligned with the defining equations even when a restriction
    // vanishes identically; its y-derivative target can still be nonzero.
    std::vector<polynomial> G0;
    for (const auto& g : s.defining) G0.push_back(to_fiber(g));
    presented_module M = jacobian_module(G0, n);

    arc_dependence_outcome out;
    for (const arc& a : arcs) {
        if (a.components.size() != m) throw input_error("arc has wrong number of components");
        for (std::size_t i = 0; i < k; ++i)
            if (!a.components[i].is_zero())
                throw input_error("fiber arcs must have zero parameter components");
        if (!arc_on_variety(s, a)) throw input_error("arc does not lie on X");
        ++out.arcs_checked;
        arc za;
        za.components.assign(a.components.begin() + static_cast<std::ptrdiff_t>(k),
                             a.components.end());
        auto cols = detail::pull_module_shifted(M, za, prec);
        for (std::size_t j = 0; j < k; ++j) {
            ++out.tests_run;
            std::vector<polynomial> ucol;
            for (const auto& g : s.defining) ucol.push_back(to_fiber(g.derivative(j)));
            series_vec target = detail::pull_column(ucol, za, prec);
            dependence_result r = series_membership(cols, target, margin);
            fold_status(out.status, r.status);
            if (r.status != check_status::holds) {
                arc_check_detail d;
                d.arc = arc_text(a, s.ambient);
                d.target = "d" + s.yvars[j];
                d.status = r.status;
                d.witness_row = r.witness_row;
                d.witness_exponent = r.witness_exponent;
                out.exceptions.push_back(std::move(d));
            }
        }
    }
    return out;
}

// All arcs with each coordinate 0 or a signed power of t up to the degree
// bound, kept when they lie on X exactly. zero_y forces the parameter
// coordinates to 0, restricting to the fiber over the origin.
inline std::vector<arc> monomial_arcs_on(const space_with_function& s, int degree_bound,
                                         bool zero_y) {
    if (degree_bound < 1) throw input_error("the arc degree bound must be positive");
    std::size_t m = s.ambient_dim(), k = s.yvars.size();
    std::size_t free_vars = zero_y ? m - k : m;
    double combos = 1;
    for (std::size_t i = 0; i < free_vars; ++i) combos *= 2.0 * degree_bound + 1;
    if (combos > 200000)
        throw input_error("arc enumeration too large; lower the degree bound or supply arcs");

    std::vector<arc> out;
    std::vector<polynomial> comp(m, polynomial::zero(1));
    std::size_t first = zero_y ? k : 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            bool all_zero_arc = true;
            for (const auto& c : comp)
                if (!c.is_zero()) all_zero_arc = false;
            if (all_zero_arc) return;
            arc a{comp};
            if (arc_on_variety(s, a)) out.push_back(a);
            return;
        }
        comp[i] = polynomial::zero(1);
        self(self, i + 1);
        for (int e = 1; e <= degree_bound; ++e) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                comp[i] = polynomial::term(1, expvec{e}, rat(sign));
                self(self, i + 1);
            }
        }
        comp[i] = polynomial::zero(1);
    };
    rec(rec, first);
    return out;
}

// Exact threshold for the family w^a - y^b v^c - v^d (parameter y): the
// fiber dependence condition checked by whitney_fiber_check holds iff b > 1,
// or b = 1 and c exceeds min(d - 1, d(a-1)/a). It only needs to be tested on
// the branches of the fiber w^a = v^d, which family_probe_arcs supplies.
// Rational arithmetic, no rounding. Note this is weaker than the full
// stratification condition af_arcs probes; the two genuinely differ on this
// family for some exponents.
inline bool family_threshold_condition(int a, int b, int c, int d) {
    if (a < 2 || d < 2 || b < 1 || c < 1) throw input_error("family exponents out of range");
    if (b > 1) return true;
    rat lhs(c);
    rat t1(d - 1);
    rat t2(static_cast<long>(d) * (a - 1), a);
    rat threshold = t1 < t2 ? t1 : t2;
    return lhs > threshold;
}

// The branches of w^a = v^d through the origin used as probe arcs:
// (v, w) = (t^{a/g}, t^{d/g}) and, when a is even, the sign-flipped branch.
inline std::vector<arc> family_probe_arcs(int a, int d, const space_with_function& s) {
    std::size_t m = s.ambient_dim();
    if (m != 3) throw input_error("the probe family lives in a three coordinate space");
    int g = std::gcd(a, d);
    std::vector<arc> out;
    auto build = [&](int sign) {
        std::vector<polynomial> comp(m, polynomial::zero(1));
        comp[1] = polynomial::term(1, expvec{a / g}, rat(1));
        comp[2] = polynomial::term(1, expvec{d / g}, rat(sign));
        return make_arc(std::move(comp));
    };
    out.push_back(build(1));
    if (a % 2 == 0) out.push_back(build(-1));
    return out;
}

}  // namespace thomaf
