#pragma once

// Lower and upper reals: monotone streams of rational bounds.  A lower real
// is the union of the cuts {q | q < approx(k)}; an upper real is dual.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "streak/refined_real.hpp"

namespace streak {

namespace detail {

/// Memoized stream k ↦ optional<Rational>, made monotone by a running
/// max (lower) or min (upper) over the non-BOTTOM entries.  A source that is
/// already monotone after its BOTTOM prefix can skip the running bound, and
/// is then evaluated only at the indices asked for.
class BoundStream {
 public:
  using Source = std::function<std::optional<Rational>(std::uint64_t)>;

  BoundStream(Source source, bool increasing, bool trusted) : state_(std::make_shared<State>()) {
    state_->source = std::move(source);
    state_->increasing = increasing;
    state_->trusted = trusted;
  }

  std::optional<Rational> at(std::uint64_t k) const {
    if (state_->trusted) {
      {
        std::lock_guard<std::mutex> lock(state_->mu);
        if (auto it = state_->sparse.find(k); it != state_->sparse.end()) return it->second;
      }
      std::optional<Rational> v = state_->source(k);
      std::lock_guard<std::mutex> lock(state_->mu);
      return state_->sparse.emplace(k, std::move(v)).first->second;
    }
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& seen = state_->prefix;
    while (seen.size() <= k) {
      std::optional<Rational> v = state_->source(seen.size());
      if (!seen.empty() && seen.back()) {
        if (!v) v = seen.back();
        else if (state_->increasing) v = max(*v, *seen.back());
        else v = min(*v, *seen.back());
      }
      seen.push_back(std::move(v));
    }
    return seen[k];
  }

 private:
  struct State {
    Source source;
    bool increasing = true;
    bool trusted = false;
    std::mutex mu;
    std::vector<std::optional<Rational>> prefix;
    std::map<std::uint64_t, std::optional<Rational>> sparse;
  };
  std::shared_ptr<State> state_;
};

/// Smallest k <= budget with holds(k), for a predicate that stays true once
/// it holds.
template <class Pred>
std::optional<std::uint64_t> first_index(Budget budget, Pred holds) {
  if (!holds(budget)) return std::nullopt;
  std::uint64_t lo = 0, hi = budget;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (holds(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace detail

class LowerReal {
 public:
  using Source = detail::BoundStream::Source;
  explicit LowerReal(Source source) : stream_(std::move(source), true, false) {}
  /// For sources already nondecreasing after their BOTTOM prefix.
  static LowerReal monotone(Source source) { return LowerReal(std::move(source), true); }

  /// The k-th lower bound, or nullopt (BOTTOM) if none is known yet.
  std::optional<Rational> approx(std::uint64_t k) const { return stream_.at(k); }

 private:
  LowerReal(Source source, bool trusted) : stream_(std::move(source), true, trusted) {}
  detail::BoundStream stream_;
};

class UpperReal {
 public:
  using Source = detail::BoundStream::Source;
  explicit UpperReal(Source source) : stream_(std::move(source), false, false) {}
  /// For sources already nonincreasing after their BOTTOM prefix.
  static UpperReal monotone(Source source) { return UpperReal(std::move(source), true); }

  std::optional<Rational> approx(std::uint64_t k) const { return stream_.at(k); }

 private:
  UpperReal(Source source, bool trusted) : stream_(std::move(source), false, trusted) {}
  detail::BoundStream stream_;
};

inline LowerReal lower_from_rational(const Rational& q) {
  return LowerReal::monotone([q](std::uint64_t) { return std::optional<Rational>(q); });
}
inline UpperReal upper_from_rational(const Rational& q) {
  return UpperReal::monotone([q](std::uint64_t) { return std::optional<Rational>(q); });
}

struct OneSidedAnswer {
  Semi answer = Semi::no_within_budget;
  std::optional<std::uint64_t> index;  // first k whose entry witnesses the bound
};

/// q < x: some approx(k), k <= budget, exceeds q.  Streams are monotone,
/// so the first such k is found by bisection.
inline OneSidedAnswer lower_cmp_rat(const Rational& q, const LowerReal& x, Budget budget) {
  auto k = detail::first_index(budget, [&](std::uint64_t i) {
    auto a = x.approx(i);
    return a && q < *a;
  });
  if (!k) return {};
  return {Semi::yes, *k};
}

/// x < q: some approx(k), k <= budget, lies below q.
inline OneSidedAnswer upper_cmp_rat(const UpperReal& x, const Rational& q, Budget budget) {
  auto k = detail::first_index(budget, [&](std::uint64_t i) {
    auto a = x.approx(i);
    return a && *a < q;
  });
  if (!k) return {};
  return {Semi::yes, *k};
}

namespace detail {

inline std::optional<Rational> add_bounds(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

template <class Real>
std::uint64_t positive_index(const Real& x, Budget budget, const char* what) {
  for (std::uint64_t k = 0; k <= budget; ++k)
    if (auto a = x.approx(k); a && a->sign() > 0) return k;
  throw Error(errc::not_eventually_positive, std::string(what) + " operand has no positive entry within budget");
}

}  // namespace detail

inline LowerReal lower_add(const LowerReal& x, const LowerReal& y) {
  return LowerReal::monotone([x, y](std::uint64_t k) { return detail::add_bounds(x.approx(k), y.approx(k)); });
}
inline UpperReal upper_add(const UpperReal& x, const UpperReal& y) {
  return UpperReal::monotone([x, y](std::uint64_t k) { return detail::add_bounds(x.approx(k), y.approx(k)); });
}

/// Pointwise product, BOTTOM until both entries are positive.  Each operand
/// must show a positive entry within `budget`.
inline LowerReal lower_mul_pos(const LowerReal& x, const LowerReal& y, Budget budget = 1024) {
  detail::positive_index(x, budget, "lower_mul_pos");
  detail::positive_index(y, budget, "lower_mul_pos");
  return LowerReal::monotone([x, y](std::uint64_t k) -> std::optional<Rational> {
    auto a = x.approx(k), b = y.approx(k);
    if (!a || !b || a->sign() <= 0 || b->sign() <= 0) return std::nullopt;
    return *a * *b;
  });
}

/// Pointwise product of upper bounds.  Positivity of an upper real cannot be
/// seen from its stream, so the gate only asks for a positive entry; entries
/// at or below 0 later on are clamped to 0.
inline UpperReal upper_mul_pos(const UpperReal& x, const UpperReal& y, Budget budget = 1024) {
  detail::positive_index(x, budget, "upper_mul_pos");
  detail::positive_index(y, budget, "upper_mul_pos");
  return UpperReal::monotone([x, y](std::uint64_t k) -> std::optional<Rational> {
    auto a = x.approx(k), b = y.approx(k);
    if (!a || !b) return std::nullopt;
    return max(*a, Rational(0)) * max(*b, Rational(0));
  });
}

using LowerFamily = std::function<LowerReal(std::uint64_t)>;
using UpperFamily = std::function<UpperReal(std::uint64_t)>;

namespace detail {

template <class Real, class Family, class Pick>
std::function<std::optional<Rational>(std::uint64_t)> diagonal(Family family, Pick pick) {
  auto members = std::make_shared<std::vector<Real>>();
  auto mu = std::make_shared<std::mutex>();
  return [family = std::move(family), pick, members, mu](std::uint64_t k) {
    std::optional<Rational> best;
    for (std::uint64_t i = 0; i <= k; ++i) {
      std::optional<Real> member;
      {
        std::lock_guard<std::mutex> lock(*mu);
        while (members->size() <= i) members->push_back(family(members->size()));
        member = (*members)[i];
      }
      if (auto a = member->approx(k)) best = best ? pick(*best, *a) : *a;
    }
    return best;
  };
}

}  // namespace detail

/// approx(k) = max over i <= k of family(i).approx(k).
inline LowerReal lower_sup(LowerFamily family) {
  return LowerReal::monotone(detail::diagonal<LowerReal>(
      std::move(family), [](const Rational& a, const Rational& b) { return max(a, b); }));
}

/// approx(k) = min over i <= k of family(i).approx(k).
inline UpperReal upper_inf(UpperFamily family) {
  return UpperReal::monotone(detail::diagonal<UpperReal>(
      std::move(family), [](const Rational& a, const Rational& b) { return min(a, b); }));
}

/// Forget one side of each interval; k = 0 is BOTTOM since precisions
/// start at 1.
inline std::pair<LowerReal, UpperReal> real_to_pair(const RefinedReal& x) {
  LowerReal lo([x](std::uint64_t k) -> std::optional<Rational> {
    if (k == 0) return std::nullopt;
    return x.refine(k).lo;
  });
  UpperReal hi([x](std::uint64_t k) -> std::optional<Rational> {
    if (k == 0) return std::nullopt;
    return x.refine(k).hi;
  });
  return {lo, hi};
}

/// Precision n ↦ (lo.approx(k), hi.approx(k)) for the first k <= budget with
/// both entries present and hi - lo <= 2/n.  The search runs when a
/// precision is refined, so NotLocatedWithinBudget is raised there.
inline RefinedReal pair_to_real(const LowerReal& lo, const UpperReal& hi, Budget budget) {
  return RefinedReal([lo, hi, budget](std::uint64_t n) {
    const Rational width(Integer(2), Integer(Natural(n)));
    for (std::uint64_t k = 0; k <= budget; ++k) {
      auto a = lo.approx(k), b = hi.approx(k);
      if (a && b && *b - *a <= width) return Interval{*a, *b};
    }
    throw Error(errc::not_located_within_budget,
                "streams do not come within 2/" + std::to_string(n) + " within budget");
  });
}

}  // namespace streak
