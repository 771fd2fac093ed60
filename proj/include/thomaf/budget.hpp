#pragma once

#include "thomaf/errors.hpp"

namespace thomaf {

inline constexpr long long default_max_steps = 1'000'000;

// Per-thread reduction-step budget. Every single-term division in the
// Groebner engine ticks it once; exceeding the cap throws budget_error, so a
// runaway example fails cleanly instead of hanging.
struct budget_state {
    long long max_steps = default_max_steps;
    long long used = 0;
};

inline budget_state& budget() {
    thread_local budget_state state;
    return state;
}

inline void budget_tick() {
    budget_state& b = budget();
    if (++b.used > b.max_steps) throw budget_error(b.max_steps);
}

// Installs a fresh budget for the current scope and restores the previous
// counters on exit. Commands and corpus workers each run under their own.
class scoped_budget {
  public:
    explicit scoped_budget(long long max_steps) : saved_(budget()) {
        budget() = budget_state{max_steps, 0};
    }
    ~scoped_budget() { budget() = saved_; }
    scoped_budget(const scoped_budget&) = delete;
    scoped_budget& operator=(const scoped_budget&) = delete;

  private:
    budget_state saved_;
};

}  // namespace thomaf
