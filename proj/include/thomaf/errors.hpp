#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thomaf {

// Malformed expression text. `pos` is a 0-based character offset into the input.
struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// Semantically invalid input: inconsistent codimension, arc off the variety,
// missing problem-file sections, and the like.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The Groebner engine exceeded its reduction-step budget.
struct budget_error : std::runtime_error {
    long long limit;
    explicit budget_error(long long max_steps)
        : std::runtime_error("resource budget exceeded: more than " +
                             std::to_string(max_steps) + " reduction steps"),
          limit(max_steps) {}
};

}  // namespace thomaf
