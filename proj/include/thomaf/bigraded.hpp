#pragma once

#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/ideal.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Ideal in a ring split into base coordinates and covector coordinates, with
// every generator homogeneous in the covector block. Cuts out a conic subset
// of base x covector space, i.e. a family of projective covector sets.
struct bigraded_ideal {
    vars_t base;
    vars_t cov;
    ideal I;  // lives in base followed by cov
};

inline vars_t covector_names(const vars_t& base) {
    vars_t out;
    out.reserve(base.size());
    for (const auto& v : base) out.push_back("d" + v);
    return out;
}

inline bigraded_ideal make_bigraded(vars_t base, vars_t cov, ideal I) {
    vars_t expect = base;
    for (const auto& v : cov) expect.push_back(v);
    if (I.vars() != expect)
        throw input_error("bigraded ideal ring must be base coordinates then covectors");
    std::vector<char> mask(expect.size(), 0);
    for (std::size_t i = base.size(); i < expect.size(); ++i) mask[i] = 1;
    for (const auto& g : I.gens())
        if (!g.homogeneous_in(mask))
            throw input_error("generator '" + to_string(g, I.vars()) +
                              "' is not homogeneous in the covector block");
    return bigraded_ideal{std::move(base), std::move(cov), std::move(I)};
}

// The covector cone sitting over one base point: substitute the point and
// strip the components supported at the covector origin, so the unit ideal
// means the projectivized fiber is empty.
inline ideal fiber_at(const bigraded_ideal& B, const std::vector<rat>& base_point) {
    if (base_point.size() != B.base.size())
        throw input_error("fiber point has wrong number of coordinates");
    std::vector<std::optional<rat>> values(B.I.nvars());
    for (std::size_t i = 0; i < B.base.size(); ++i) values[i] = base_point[i];
    ideal sub = substitute(B.I, values);
    std::vector<polynomial> irr;
    for (std::size_t i = 0; i < B.cov.size(); ++i)
        irr.push_back(polynomial::variable(B.cov.size(), i));
    return saturate(sub, ideal(B.cov, std::move(irr)));
}

inline ideal fiber_at_origin(const bigraded_ideal& B) {
    return fiber_at(B, std::vector<rat>(B.base.size(), rat(0)));
}

}  // namespace thomaf
