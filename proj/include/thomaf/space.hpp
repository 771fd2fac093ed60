#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/ideal.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/polymap.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// An affine variety through the origin, split coordinates (y; z), and an
// optional function f. The y block is the parameter axis used by the
// stratification checks; plain variety problems leave it empty. The ambient
// ring is always y-then-z.
struct space_with_function {
    vars_t yvars;
    vars_t zvars;
    vars_t ambient;                    // yvars followed by zvars
    std::vector<polynomial> defining;  // equations of X, in the ambient ring
    std::optional<polynomial> f;       // in the ambient ring
    std::size_t codim = 0;

    std::size_t ambient_dim() const { return ambient.size(); }

    ideal x_ideal() const { return ideal(ambient, defining); }

    const polynomial& function() const {
        if (!f) throw input_error("this problem has no function f");
        return *f;
    }

    std::vector<polynomial> df() const {
        std::vector<std::size_t> all(ambient.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return gradient(function(), all);
    }

    std::vector<rat> df_at_origin() const {
        std::vector<rat> zero(ambient.size(), rat(0));
        return eval_all(df(), zero);
    }

    // X restricted to {z = 0}, as a polynomial identity test: true when the
    // whole parameter axis lies on X.
    bool axis_contained_in_x() const {
        for (const auto& g : defining)
            if (!restrict_to_axis(g).is_zero()) return false;
        return true;
    }

    bool f_vanishes_on_axis() const { return restrict_to_axis(function()).is_zero(); }

    polynomial restrict_to_axis(const polynomial& p) const {
        std::vector<polynomial> images(ambient.size());
        for (std::size_t i = 0; i < yvars.size(); ++i)
            images[i] = polynomial::variable(ambient.size(), i);
        for (std::size_t i = yvars.size(); i < ambient.size(); ++i)
            images[i] = polynomial::zero(ambient.size());
        return p.compose(ambient.size(), images);
    }
};

inline space_with_function make_space(vars_t yvars, vars_t zvars,
                                      std::vector<polynomial> defining,
                                      std::optional<polynomial> f, std::size_t codim) {
    space_with_function s;
    s.yvars = std::move(yvars);
    s.zvars = std::move(zvars);
    s.ambient = s.yvars;
    for (const auto& v : s.zvars) s.ambient.push_back(v);
    if (s.ambient.empty()) throw input_error("the ambient space has no coordinates");
    for (std::size_t i = 0; i < s.ambient.size(); ++i)
        for (std::size_t j = i + 1; j < s.ambient.size(); ++j)
            if (s.ambient[i] == s.ambient[j])
                throw input_error("duplicate coordinate '" + s.ambient[i] + "'");
    for (const auto& v : s.ambient) {
        if (v.empty() || v[0] == '@')
            throw input_error("coordinate names starting with '@' are reserved");
        if (var_index(s.ambient, "d" + v))
            throw input_error("coordinate 'd" + v + "' collides with the covector of '" + v +
                              "'");
    }
    s.defining = std::move(defining);
    s.f = std::move(f);
    s.codim = codim;
    if (codim > s.ambient.size())
        throw input_error("codimension exceeds the ambient dimension");

    std::vector<rat> origin(s.ambient.size(), rat(0));
    for (const auto& g : s.defining) {
        if (g.nvars() != s.ambient.size())
            throw input_error("defining equation in the wrong ring");
        rat v = g.eval(origin);
        if (v != 0) throw input_error("the origin does not lie on X");
    }
    if (s.f) {
        if (s.f->nvars() != s.ambient.size()) throw input_error("f lives in the wrong ring");
        rat v = s.f->eval(origin);
        if (v != 0) throw input_error("f does not vanish at the origin");
    }
    return s;
}

// The stated codimension must match the variety: X is required to be
// equidimensional of dimension ambient - codim for the conormal construction
// to saturate correctly, and the dimension at least is checkable.
inline void validate_codim(const space_with_function& s) {
    int d = dimension(s.x_ideal());
    if (d != static_cast<int>(s.ambient_dim() - s.codim))
        throw input_error("X has dimension " + std::to_string(d) + ", not ambient - codim = " +
                          std::to_string(s.ambient_dim() - s.codim));
}

}  // namespace thomaf
