#pragma once

// The reals as a streak, and the locate-driven embedding of any streak into
// them.

#include "streak/refined_real.hpp"

namespace streak {

/// Precision n ↦ ((i-1)/n, (i+1)/n) with i = locate(x, n).  Budget failures
/// surface lazily, when a precision is refined.
inline RefinedReal real_embed(StreakPtr s, const Element& x, Budget budget) {
  s->check_owner(x);
  return RefinedReal([s, x, budget](std::uint64_t n) {
    Integer i = locate(*s, x, Natural(n), budget);
    const Integer k{Natural(n)};
    return Interval{Rational(i - Integer(1), k), Rational(i + Integer(1), k)};
  });
}

class RealStreak final : public Streak {
 public:
  /// `budget` bounds the searches hidden inside total multiplication and
  /// reciprocals.
  explicit RealStreak(Budget budget = 32) : budget_(budget) {}

  std::string name() const override { return "real"; }

  Element wrap(RefinedReal x) const { return make<RefinedReal>(std::move(x)); }
  const RefinedReal& real(const Element& x) const {
    check_owner(x);
    return x.get<RefinedReal>();
  }

  Semi below(const Rational& q, const Element& x, Budget budget) const override {
    return real_cmp_rat(real(x), q, budget).order == Ordering::greater ? Semi::yes : Semi::no_within_budget;
  }
  Semi above(const Element& x, const Rational& q, Budget budget) const override {
    return real_cmp_rat(real(x), q, budget).order == Ordering::less ? Semi::yes : Semi::no_within_budget;
  }
  /// x < y iff 0 < y - x.
  Semi less(const Element& x, const Element& y, Budget budget) const override {
    return real_compare(real(x), real(y), budget) == Ordering::less ? Semi::yes : Semi::no_within_budget;
  }

  Element zero() const override { return wrap(real_from_rational(Rational(0))); }
  Element one() const override { return wrap(real_from_rational(Rational(1))); }
  Element add(const Element& x, const Element& y) const override { return wrap(real_add(real(x), real(y))); }
  Element mul_pos(const Element& x, const Element& y) const override { return mul(x, y); }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override { return wrap(real_neg(real(x))); }
  Element mul(const Element& x, const Element& y) const override {
    return wrap(real_mul_total(real(x), real(y), budget_));
  }

  bool is_field() const override { return true; }
  Element recip(const Element& x, Budget budget) const override {
    auto cert = find_apartness(real(x), budget);
    if (!cert) throw Error(errc::not_apart_from_zero, "sign not decided within budget");
    return wrap(real_recip(real(x), *cert));
  }
  Element from_rational(const Rational& q) const override { return wrap(real_from_rational(q)); }
  Element from_integer(const Integer& n) const override { return from_rational(Rational(n)); }

  bool dense() const override { return true; }
  Element interpolate(const Rational& q, const Rational& r) const override {
    return from_rational((q + r) / Rational(2));
  }

  bool has_meet() const override { return true; }
  Element meet(const Element& x, const Element& y) const override { return wrap(real_inf(real(x), real(y))); }
  bool has_join() const override { return true; }
  Element join(const Element& x, const Element& y) const override { return wrap(real_sup(real(x), real(y))); }

  std::string show(const Element& x) const override {
    Interval iv = real(x).refine(16);
    return "real[" + iv.lo.str() + ", " + iv.hi.str() + "]";
  }

 private:
  Budget budget_;
};

}  // namespace streak
