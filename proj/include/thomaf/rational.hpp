#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thomaf {

using rat = mpq_class;

inline std::string rat_str(const rat& q) { return q.get_str(); }

inline rat rat_pow(const rat& q, unsigned e) {
    rat r(1);
    rat base = q;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline bool all_zero(const std::vector<rat>& v) {
    for (const rat& q : v)
        if (q != 0) return false;
    return true;
}

}  // namespace thomaf
