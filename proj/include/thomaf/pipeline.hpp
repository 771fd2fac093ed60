#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thomaf/arcs.hpp"
#include "thomaf/conormal.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/idealops.hpp"
#include "thomaf/space.hpp"

namespace thomaf {

struct pipeline_options {
    std::size_t precision = default_precision;
    std::size_t margin = default_margin;
    int arc_degree_bound = 8;
    bool exact_cross_check = false;
};

struct pipeline_outcome {
    // stage 1: the fiber of the relative conormal over the origin must be
    // projectively small
    int fiber_projective_dim = -1;
    std::size_t fiber_ambient_dim = 0;
    bool hypothesis_ok = false;
    // stage 2: the fiber dependence condition over the chosen arcs
    arc_dependence_outcome fiber_check;
    bool arcs_generated = false;
    // certification: holds means both stages passed, so the stratification
    // condition is certified up to the explored arc family and precision;
    // anything else is inconclusive. The combination never refutes.
    check_status status = check_status::inconclusive;
    std::optional<af_exact_outcome> cross_check;
};

// Two-stage sufficiency test: a small conormal fiber over the origin plus the
// fiber dependence condition along curves in the special fiber together force
// the stratification condition for the pair (smooth part, parameter axis).
// Arcs may be supplied; otherwise monomial arcs inside the special fiber are
// enumerated up to the degree bound.
inline pipeline_outcome main_theorem_pipeline(const space_with_function& s,
                                              std::vector<arc> arcs,
                                              const pipeline_options& opt = {}) {
    if (s.yvars.empty()) throw input_error("the parameter axis is empty");
    if (!s.axis_contained_in_x()) throw input_error("the parameter axis does not lie on X");
    if (!s.f_vanishes_on_axis()) throw input_error("f does not vanish on the parameter axis");

    pipeline_outcome out;
    out.fiber_ambient_dim = s.zvars.size();

    bigraded_ideal rel = relative_conormal(s);
    ideal fiber = fiber_at_origin(rel);
    out.fiber_projective_dim = projective_dimension_of_cone(fiber);
    out.hypothesis_ok =
        out.fiber_projective_dim < static_cast<int>(out.fiber_ambient_dim);

    if (arcs.empty()) {
        arcs = monomial_arcs_on(s, opt.arc_degree_bound, /*zero_y=*/true);
        out.arcs_generated = true;
    }
    out.fiber_check = whitney_fiber_check(s, arcs, opt.precision, opt.margin);

    if (out.hypothesis_ok && out.fiber_check.status == check_status::holds)
        out.status = check_status::holds;
    else
        out.status = check_status::inconclusive;

    if (opt.exact_cross_check) out.cross_check = af_exact(s);
    return out;
}

}  // namespace thomaf
