#pragma once

#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "thomaf/budget.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/order.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Rescales to an integer polynomial with coprime coefficients and positive
// leading coefficient. Keeps the numbers small across long reduction chains.
inline void make_primitive(polynomial& p, const monomial_order& ord) {
    if (p.is_zero()) return;
    mpz_class den_l(1), num_g(0);
    for (const auto& [e, c] : p.terms()) {
        mpz_class d = c.get_den();
        mpz_class n = c.get_num();
        den_l = lcm(den_l, d);
        num_g = gcd(num_g, n);
    }
    rat scale(den_l, num_g);
    scale.canonicalize();
    if (leading(p, ord).coeff * scale < 0) scale = -scale;
    p = p * scale;
}

namespace detail {

struct gb_row {
    polynomial p;
    expvec lt;
    rat lc;
};

inline gb_row make_row(polynomial p, const monomial_order& ord) {
    leading_term l = leading(p, ord);
    return {std::move(p), std::move(l.exp), std::move(l.coeff)};
}

inline polynomial reduce_rows(polynomial h, const std::vector<gb_row>& rows,
                              const monomial_order& ord) {
    polynomial r(h.nvars());
    while (!h.is_zero()) {
        budget_tick();
        leading_term lt = leading(h, ord);
        bool hit = false;
        for (const auto& row : rows) {
            if (!divides(row.lt, lt.exp)) continue;
            rat c = lt.coeff / row.lc;
            h -= polynomial::term(h.nvars(), exp_div(lt.exp, row.lt), c) * row.p;
            hit = true;
            break;
        }
        if (!hit) {
            r.add_term(lt.exp, lt.coeff);
            h.add_term(lt.exp, -lt.coeff);
        }
    }
    return r;
}

}  // namespace detail

// Full normal form of p against the given polynomials: no term of the result
// is divisible by any of their leading monomials.
inline polynomial reduce_full(const polynomial& p, const std::vector<polynomial>& basis,
                              const monomial_order& ord) {
    std::vector<detail::gb_row> rows;
    rows.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) rows.push_back(detail::make_row(g, ord));
    return detail::reduce_rows(p, rows, ord);
}

inline polynomial spoly(const polynomial& f, const polynomial& g, const monomial_order& ord) {
    leading_term lf = leading(f, ord);
    leading_term lg = leading(g, ord);
    expvec l = exp_lcm(lf.exp, lg.exp);
    polynomial a = polynomial::term(f.nvars(), exp_div(l, lf.exp), rat(1) / lf.coeff) * f;
    polynomial b = polynomial::term(g.nvars(), exp_div(l, lg.exp), rat(1) / lg.coeff) * g;
    return a - b;
}

struct gb_stats {
    std::size_t pairs_total = 0;
    std::size_t pairs_reduced = 0;
    std::size_t discarded_coprime = 0;
    std::size_t discarded_chain = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size = 0;
};

// Buchberger with normal pair selection (smallest lcm first), the coprime
// criterion, and the chain criterion against already-handled pairs. The
// result is the reduced monic basis, which is unique for (ideal, order), so
// the output is deterministic no matter how the computation went.
inline std::vector<polynomial> buchberger(const std::vector<polynomial>& gens,
                                          const monomial_order& ord,
                                          gb_stats* stats = nullptr) {
    std::vector<detail::gb_row> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        polynomial p = g;
        make_primitive(p, ord);
        rows.push_back(detail::make_row(std::move(p), ord));
    }

    struct pending {
        std::size_t i, j;
        expvec lcm;
    };
    std::vector<pending> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push_back({i, j, exp_lcm(rows[i].lt, rows[j].lt)});
    };
    for (std::size_t j = 1; j < rows.size(); ++j) push_pairs(j);

    gb_stats local;
    gb_stats& st = stats ? *stats : local;
    st.pairs_total = queue.size();

    while (!queue.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            if (ord.less(queue[k].lcm, queue[best].lcm) ||
                (queue[k].lcm == queue[best].lcm &&
                 std::make_pair(queue[k].i, queue[k].j) <
                     std::make_pair(queue[best].i, queue[best].j)))
                best = k;
        }
        pending cur = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
        handled.emplace(cur.i, cur.j);

        if (exp_coprime(rows[cur.i].lt, rows[cur.j].lt)) {
            ++st.discarded_coprime;
            continue;
        }
        bool chained = false;
        for (std::size_t k = 0; k < rows.size() && !chained; ++k) {
            if (k == cur.i || k == cur.j) continue;
            if (!divides(rows[k].lt, cur.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(cur.i, k)) && handled.count(key(cur.j, k))) chained = true;
        }
        if (chained) {
            ++st.discarded_chain;
            continue;
        }

        ++st.pairs_reduced;
        polynomial s = spoly(rows[cur.i].p, rows[cur.j].p, ord);
        polynomial r = detail::reduce_rows(std::move(s), rows, ord);
        if (r.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        make_primitive(r, ord);
        rows.push_back(detail::make_row(std::move(r), ord));
        push_pairs(rows.size() - 1);
        st.pairs_total += rows.size() - 1;
    }

    // Minimize: drop rows whose leading monomial another kept row divides.
    std::vector<polynomial> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < rows.size() && !redundant; ++k) {
            if (k == i) continue;
            if (!divides(rows[k].lt, rows[i].lt)) continue;
            if (rows[k].lt == rows[i].lt)
                redundant = k < i;
            else
                redundant = true;
        }
        if (!redundant) basis.push_back(rows[i].p);
    }

    // Tail-reduce each survivor against the others and make it monic.
    // Leading terms never change here, so one pass reaches the reduced basis.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<detail::gb_row> others;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (k != i) others.push_back(detail::make_row(basis[k], ord));
        basis[i] = detail::reduce_rows(basis[i], others, ord);
        leading_term l = leading(basis[i], ord);
        basis[i] = basis[i] * (rat(1) / l.coeff);
    }

    std::sort(basis.begin(), basis.end(), [&](const polynomial& a, const polynomial& b) {
        return ord.less(leading(a, ord).exp, leading(b, ord).exp);
    });
    st.basis_size = basis.size();
    return basis;
}

// Ideal in a named polynomial ring, with its Groebner basis computed once on
// demand and shared across copies.
class ideal {
  public:
    ideal() : cache_(std::make_shared<cache_t>()) {}

    ideal(vars_t vars, std::vector<polynomial> gens, monomial_order ord = degrevlex_order())
        : vars_(std::move(vars)),
          gens_(std::move(gens)),
          ord_(std::move(ord)),
          cache_(std::make_shared<cache_t>()) {
        for (const auto& g : gens_)
            if (g.nvars() != vars_.size())
                throw input_error("ideal generator lives in the wrong ring");
    }

    const vars_t& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<polynomial>& gens() const { return gens_; }
    const monomial_order& order() const { return ord_; }

    ideal with_order(monomial_order ord) const { return ideal(vars_, gens_, std::move(ord)); }

    ideal plus(std::vector<polynomial> more) const {
        std::vector<polynomial> g = gens_;
        for (auto& p : more) g.push_back(std::move(p));
        return ideal(vars_, std::move(g), ord_);
    }

    const std::vector<polynomial>& groebner() const {
        std::call_once(cache_->flag, [&] { cache_->basis = buchberger(gens_, ord_); });
        return cache_->basis;
    }

    polynomial normal_form(const polynomial& p) const {
        if (p.nvars() != vars_.size()) throw input_error("normal form across different rings");
        return reduce_full(p, groebner(), ord_);
    }

    bool contains(const polynomial& p) const { return normal_form(p).is_zero(); }

    bool is_zero_ideal() const { return groebner().empty(); }

    bool is_unit_ideal() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

  private:
    struct cache_t {
        std::once_flag flag;
        std::vector<polynomial> basis;
    };

    vars_t vars_;
    std::vector<polynomial> gens_;
    monomial_order ord_;
    std::shared_ptr<cache_t> cache_;
};

inline std::vector<std::string> gens_as_strings(const ideal& I) {
    std::vector<std::string> out;
    out.reserve(I.gens().size());
    for (const auto& g : I.gens()) out.push_back(to_string(g, I.vars()));
    return out;
}

inline std::vector<std::string> groebner_as_strings(const ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.groebner()) out.push_back(to_string(g, I.vars(), I.order()));
    return out;
}

}  // namespace thomaf
