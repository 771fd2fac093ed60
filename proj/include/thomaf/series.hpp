#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/polynomial.hpp"
#include "thomaf/rational.hpp"

namespace thomaf {

// Truncated power series in one parameter t: coefficients for t^0..t^(prec-1)
// are known exactly, everything from t^prec on is unknown. Arithmetic tracks
// how far the result stays trustworthy, so a zero answer really means
// "vanishes at least to order prec".
struct truncated_series {
    std::vector<rat> coeffs;  // size == prec
    std::size_t prec = 0;

    static truncated_series zero(std::size_t prec) {
        return truncated_series{std::vector<rat>(prec, rat(0)), prec};
    }

    static truncated_series from_polynomial(const polynomial& p, std::size_t prec) {
        if (p.nvars() != 1) throw input_error("series source must be univariate");
        truncated_series s = zero(prec);
        for (const auto& [e, c] : p.terms()) {
            if (static_cast<std::size_t>(e[0]) < prec)
                s.coeffs[static_cast<std::size_t>(e[0])] = c;
        }
        return s;
    }

    bool known_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    // Smallest exponent with nonzero known coefficient; prec when none.
    std::size_t order() const {
        for (std::size_t i = 0; i < prec; ++i)
            if (coeffs[i] != 0) return i;
        return prec;
    }
};

inline truncated_series operator+(const truncated_series& a, const truncated_series& b) {
    truncated_series r = truncated_series::zero(std::min(a.prec, b.prec));
    for (std::size_t i = 0; i < r.prec; ++i) {
        rat c = a.coeffs[i] + b.coeffs[i];
        r.coeffs[i] = c;
    }
    return r;
}

inline truncated_series operator-(const truncated_series& a, const truncated_series& b) {
    truncated_series r = truncated_series::zero(std::min(a.prec, b.prec));
    for (std::size_t i = 0; i < r.prec; ++i) {
        rat c = a.coeffs[i] - b.coeffs[i];
        r.coeffs[i] = c;
    }
    return r;
}

inline truncated_series operator-(const truncated_series& a) {
    truncated_series r = a;
    for (auto& c : r.coeffs) {
        rat n = -c;
        c = n;
    }
    return r;
}

// Product precision: unknown tail of a (order >= a.prec) first contributes at
// a.prec + ord(b), and symmetrically; whichever bound is smaller wins.
inline truncated_series operator*(const truncated_series& a, const truncated_series& b) {
    std::size_t pa = a.prec + b.order();
    std::size_t pb = b.prec + a.order();
    std::size_t prec = std::min(pa, pb);
    if (a.known_zero() && b.known_zero()) prec = a.prec + b.prec;
    truncated_series r = truncated_series::zero(prec);
    for (std::size_t i = 0; i < a.prec; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.prec && i + j < prec; ++j) {
            if (b.coeffs[j] == 0) continue;
            rat c = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
            r.coeffs[i + j] = c;
        }
    }
    return r;
}

inline truncated_series scale(const truncated_series& a, const rat& c) {
    truncated_series r = a;
    for (auto& x : r.coeffs) {
        rat n = x * c;
        x = n;
    }
    return r;
}

// Multiplication by t^k: exact, shifts knowledge upward.
inline truncated_series shift_up(const truncated_series& a, std::size_t k) {
    truncated_series r = truncated_series::zero(a.prec + k);
    for (std::size_t i = 0; i < a.prec; ++i) r.coeffs[i + k] = a.coeffs[i];
    return r;
}

// Inverse of a series with unit constant term, to the argument's precision.
inline truncated_series invert_unit(const truncated_series& a) {
    if (a.prec == 0 || a.coeffs[0] == 0)
        throw input_error("series inverse needs a unit constant term");
    truncated_series r = truncated_series::zero(a.prec);
    rat inv0 = rat(1) / a.coeffs[0];
    r.coeffs[0] = inv0;
    for (std::size_t k = 1; k < a.prec; ++k) {
        rat acc(0);
        for (std::size_t i = 1; i <= k && i < a.prec; ++i) acc += a.coeffs[i] * r.coeffs[k - i];
        rat c = -acc * inv0;
        r.coeffs[k] = c;
    }
    return r;
}

// Exact division a / b in Q[[t]] where ord(b) <= ord(a) is required for the
// quotient to exist with nonnegative valuation; knowledge of b ends at b.prec,
// so the quotient is known to min(a.prec, b.prec) - ord(b).
inline truncated_series divide(const truncated_series& a, const truncated_series& b) {
    std::size_t ob = b.order();
    if (ob == b.prec) throw input_error("series division by a series with no known term");
    std::size_t cap = std::min(a.prec, b.prec);
    if (ob > cap) throw input_error("series division: precision exhausted");
    for (std::size_t i = 0; i < ob && i < a.prec; ++i)
        if (a.coeffs[i] != 0) throw input_error("series division would need negative valuation");
    std::size_t prec = cap - ob;
    truncated_series num = truncated_series::zero(prec);
    for (std::size_t i = 0; i < prec && ob + i < a.prec; ++i) num.coeffs[i] = a.coeffs[ob + i];
    truncated_series den = truncated_series::zero(prec);
    for (std::size_t i = 0; i < prec && ob + i < b.prec; ++i) den.coeffs[i] = b.coeffs[ob + i];
    return num * invert_unit(den);
}

inline std::string to_string(const truncated_series& s) {
    std::string out;
    for (std::size_t i = 0; i < s.prec; ++i) {
        if (s.coeffs[i] == 0) continue;
        rat a = s.coeffs[i];
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (i == 0)
            out += rat_str(a);
        else {
            if (a != 1) out += rat_str(a) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    out += " + O(t^" + std::to_string(s.prec) + ")";
    return out;
}

}  // namespace thomaf
