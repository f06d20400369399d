#pragma once

// The archimedean filter: membership in Arch(X) and its order <'.

#include <optional>

#include "streak/core.hpp"

namespace streak {

struct ArchAnswer {
  Semi answer = Semi::no_within_budget;
  std::optional<Natural> witness;
};

/// Smallest n <= budget with x < n and 0 < x + n.
inline ArchAnswer arch_member(const Streak& s, const Element& x, Budget budget) {
  s.check_owner(x);
  Element n_elem = s.zero();
  for (Budget n = 0; n <= budget; ++n) {
    if (n > 0) n_elem = s.add(n_elem, s.one());
    if (is_yes(s.above(x, Rational(static_cast<std::int64_t>(n)), budget)) &&
        is_yes(s.below(Rational(0), s.add(x, n_elem), budget)))
      return {Semi::yes, Natural(n)};
  }
  return {};
}

/// a <' b iff n·a + 1 < n·b for some n; searches n <= budget.
inline ArchAnswer arch_lt(const Streak& s, const Element& a, const Element& b, Budget budget) {
  s.check_owner(a);
  s.check_owner(b);
  Element na = s.zero(), nb = s.zero();
  for (Budget n = 0; n <= budget; ++n) {
    if (n > 0) {
      na = s.add(na, a);
      nb = s.add(nb, b);
    }
    if (is_yes(s.less(s.add(na, s.one()), nb, budget))) return {Semi::yes, Natural(n)};
  }
  return {};
}

}  // namespace streak
