// Walkthrough of the library API on the cusp x^3 = y^2:
// conormal space, fiber over the origin, and the covector decomposition
// for f = x. Build and run; everything is exact, no flags needed.

#include <iostream>

#include "thomaf/conormal.hpp"
#include "thomaf/parse.hpp"
#include "thomaf/pipeline.hpp"

using namespace thomaf;

int main() {
    vars_t vars{"x", "y"};
    polynomial g = parse_polynomial("x^3 - y^2", vars);
    polynomial f = parse_polynomial("x", vars);
    space_with_function cusp = make_space({}, vars, {g}, f, 1);

    bigraded_ideal C = conormal_space(cusp);
    std::cout << "conormal ring:";
    for (const auto& v : C.I.vars()) std::cout << " " << v;
    std::cout << "\nconormal ideal:\n";
    for (const auto& s : groebner_as_strings(C.I)) std::cout << "  " << s << "\n";

    ideal c0 = fiber_at_origin(C);
    std::cout << "fiber over 0:\n";
    for (const auto& s : groebner_as_strings(c0)) std::cout << "  " << s << "\n";

    decomposition_outcome dec = verify_decomposition(cusp);
    std::cout << "decomposition verified: " << (dec.verified ? "true" : "false")
              << " (join " << (dec.join_dropped ? "dropped" : "formed") << ")\n";

    // a one-parameter family: the same cusp made constant along y1
    vars_t fam{"y1", "x", "y"};
    space_with_function family =
        make_space({"y1"}, {"x", "y"}, {parse_polynomial("x^3 - y^2", fam)},
                   parse_polynomial("x", fam), 1);
    pipeline_outcome pipe = main_theorem_pipeline(family, {});
    std::cout << "family certified: " << (pipe.status == check_status::holds ? "yes" : "no")
              << " with " << pipe.fiber_check.arcs_checked << " arcs\n";
    return 0;
}
