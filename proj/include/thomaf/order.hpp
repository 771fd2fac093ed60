#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// A monomial order is a strict "less" on exponent vectors. Orders are plain
// comparator objects so ideals can carry them by value.
enum class order_kind { lex, degrevlex, block };

struct monomial_order {
    order_kind kind = order_kind::degrevlex;
    // For block orders: mask[i] != 0 puts variable i in the outer block, which
    // dominates. Each block is compared by its own sub-order.
    std::vector<char> mask;
    order_kind outer = order_kind::degrevlex;
    order_kind inner = order_kind::degrevlex;

    bool less(const expvec& a, const expvec& b) const {
        switch (kind) {
            case order_kind::lex:
                return lex_less(a, b);
            case order_kind::degrevlex:
                return degrevlex_less(a, b);
            case order_kind::block: {
                int c = block_cmp(a, b, true, outer);
                if (c != 0) return c < 0;
                c = block_cmp(a, b, false, inner);
                return c < 0;
            }
        }
        return false;
    }

    bool equal_keys(const expvec& a, const expvec& b) const { return a == b; }

  private:
    static bool lex_less(const expvec& a, const expvec& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }

    static bool degrevlex_less(const expvec& a, const expvec& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        // reverse-lex tie break: larger exponent on the last differing
        // variable means smaller monomial
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }

    // -1/0/+1 comparison restricted to one block of the mask.
    int block_cmp(const expvec& a, const expvec& b, bool outer_block, order_kind sub) const {
        auto in_block = [&](std::size_t i) {
            return outer_block ? mask[i] != 0 : mask[i] == 0;
        };
        if (sub == order_kind::lex) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (!in_block(i)) continue;
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        }
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (in_block(i)) {
                da += a[i];
                db += b[i];
            }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (!in_block(i)) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
};

inline monomial_order lex_order() { return monomial_order{order_kind::lex, {}, {}, {}}; }

inline monomial_order degrevlex_order() {
    return monomial_order{order_kind::degrevlex, {}, {}, {}};
}

// Elimination order for the masked variables: any monomial containing one of
// them beats every monomial in the remaining variables, so a Groebner basis
// element free of masked variables generates part of the elimination ideal.
inline monomial_order elimination_order(std::vector<char> mask) {
    return monomial_order{order_kind::block, std::move(mask), order_kind::degrevlex,
                          order_kind::degrevlex};
}

struct leading_term {
    expvec exp;
    rat coeff;
};

inline leading_term leading(const polynomial& p, const monomial_order& ord) {
    if (p.is_zero()) throw input_error("leading term of the zero polynomial");
    auto it = p.terms().begin();
    const expvec* best = &it->first;
    const rat* coeff = &it->second;
    for (++it; it != p.terms().end(); ++it) {
        if (ord.less(*best, it->first)) {
            best = &it->first;
            coeff = &it->second;
        }
    }
    return {*best, *coeff};
}

inline std::vector<std::pair<expvec, rat>> sorted_terms(const polynomial& p,
                                                        const monomial_order& ord) {
    std::vector<std::pair<expvec, rat>> out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return ord.less(y.first, x.first); });
    return out;
}

inline std::string to_string(const polynomial& p, const vars_t& vars,
                             const monomial_order& ord) {
    return format_terms(sorted_terms(p, ord), vars);
}

}  // namespace thomaf
