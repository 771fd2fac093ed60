#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/rational.hpp"

namespace thomaf {

using vars_t = std::vector<std::string>;
using expvec = std::vector<int>;

inline std::optional<std::size_t> var_index(const vars_t& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

inline int total_degree(const expvec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline bool divides(const expvec& a, const expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline expvec exp_mul(const expvec& a, const expvec& b) {
    expvec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline expvec exp_div(const expvec& a, const expvec& b) {
    expvec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline expvec exp_lcm(const expvec& a, const expvec& b) {
    expvec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

inline bool exp_coprime(const expvec& a, const expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Multivariate polynomial over Q with exact rational coefficients. Terms are
// stored in a map keyed by exponent vector (plain lexicographic key order, not
// a monomial order); no zero coefficients are ever kept.
class polynomial {
  public:
    using term_map = std::map<expvec, rat>;

    polynomial() : nvars_(0) {}
    explicit polynomial(std::size_t nvars) : nvars_(nvars) {}

    static polynomial zero(std::size_t nvars) { return polynomial(nvars); }

    static polynomial constant(std::size_t nvars, const rat& c) {
        polynomial p(nvars);
        if (c != 0) p.terms_[expvec(nvars, 0)] = c;
        return p;
    }

    static polynomial variable(std::size_t nvars, std::size_t i) {
        polynomial p(nvars);
        expvec e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static polynomial term(std::size_t nvars, const expvec& e, const rat& c) {
        polynomial p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    rat constant_value() const {
        if (terms_.empty()) return rat(0);
        return terms_.begin()->second;  // exponent (0,..,0) sorts first
    }

    void add_term(const expvec& e, const rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    polynomial operator-() const {
        polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    polynomial& operator+=(const polynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    polynomial& operator-=(const polynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        a.check_ring(b);
        polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
        return r;
    }

    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend polynomial operator*(const polynomial& a, const rat& c) {
        polynomial r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, q] : a.terms_) r.terms_[e] = q * c;
        return r;
    }

    friend polynomial operator*(const rat& c, const polynomial& a) { return a * c; }

    bool operator==(const polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const polynomial& o) const { return !(*this == o); }

    polynomial pow(unsigned e) const {
        polynomial r = constant(nvars_, 1);
        polynomial base = *this;
        while (e) {
            if (e & 1u) r *= base;
            if (e >>= 1u) base *= base;
        }
        return r;
    }

    polynomial derivative(std::size_t var) const {
        polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            expvec d = e;
            --d[var];
            r.add_term(d, c * e[var]);
        }
        return r;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    int degree_in(std::size_t var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] > 0) return true;
        return false;
    }

    rat eval(const std::vector<rat>& point) const {
        rat sum(0);
        for (const auto& [e, c] : terms_) {
            rat t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i]) t *= rat_pow(point[i], static_cast<unsigned>(e[i]));
            sum += t;
        }
        return sum;
    }

    // Ring homomorphism: variable i maps to images[i], all living in a common
    // target ring. Powers of each image are cached across terms.
    polynomial compose(std::size_t target_nvars, const std::vector<polynomial>& images) const {
        std::vector<std::vector<polynomial>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            powers[i].push_back(polynomial::constant(target_nvars, 1));
        auto power = [&](std::size_t i, int e) -> const polynomial& {
            while (static_cast<int>(powers[i].size()) <= e)
                powers[i].push_back(powers[i].back() * images[i]);
            return powers[i][static_cast<std::size_t>(e)];
        };
        polynomial r(target_nvars);
        for (const auto& [e, c] : terms_) {
            polynomial t = polynomial::constant(target_nvars, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i]) t *= power(i, e[i]);
            r += t;
        }
        return r;
    }

    // Degree in the masked variable block is constant across terms. Used for
    // the covector-homogeneity invariant of bigraded ideals.
    bool homogeneous_in(const std::vector<char>& mask) const {
        bool first = true;
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (mask[i]) d += e[i];
            if (first) {
                deg = d;
                first = false;
            } else if (d != deg) {
                return false;
            }
        }
        return true;
    }

  private:
    void check_ring(const polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw input_error("polynomial arithmetic across different rings");
    }

    std::size_t nvars_;
    term_map terms_;
};

// Reindexes a polynomial into a ring with target_nvars variables; old variable
// i becomes variable where[i]. Exponents of variables sent to the same slot
// add, and slots for variables absent from a term are left untouched.
inline polynomial remap(const polynomial& p, const std::vector<std::size_t>& where,
                        std::size_t target_nvars) {
    polynomial r(target_nvars);
    for (const auto& [e, c] : p.terms()) {
        expvec ne(target_nvars, 0);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (e[i]) ne[where[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

// Canonical text form: "*" between factors, "^" for powers, terms in the
// given descending sequence. parse_polynomial() accepts everything this emits.
inline std::string format_terms(const std::vector<std::pair<expvec, rat>>& terms,
                                const vars_t& vars) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string factors;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += factors;
        }
    }
    return out;
}

// Terms in descending exponent-key order; use the order-aware overload in
// order.hpp when a specific monomial order should lead.
inline std::string to_string(const polynomial& p, const vars_t& vars) {
    std::vector<std::pair<expvec, rat>> terms(p.terms().rbegin(), p.terms().rend());
    return format_terms(terms, vars);
}

}  // namespace thomaf
