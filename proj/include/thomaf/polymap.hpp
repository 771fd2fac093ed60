#pragma once

#include <vector>

#include "thomaf/matrix.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Jacobian of components with respect to the chosen variables: row i is
// component i, column j is the partial by vars_of[j].
inline poly_matrix jacobian(const std::vector<polynomial>& components,
                            const std::vector<std::size_t>& vars_of, std::size_t nvars) {
    poly_matrix J(components.size(), vars_of.size(), nvars);
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = 0; j < vars_of.size(); ++j)
            J.at(i, j) = components[i].derivative(vars_of[j]);
    return J;
}

inline std::vector<polynomial> gradient(const polynomial& f,
                                        const std::vector<std::size_t>& vars_of) {
    std::vector<polynomial> out;
    out.reserve(vars_of.size());
    for (std::size_t v : vars_of) out.push_back(f.derivative(v));
    return out;
}

inline std::vector<rat> eval_all(const std::vector<polynomial>& ps, const std::vector<rat>& at) {
    std::vector<rat> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        rat v = p.eval(at);
        out.push_back(v);
    }
    return out;
}

}  // namespace thomaf
