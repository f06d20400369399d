#pragma once

// The three concrete decidable streaks: N, Z and Q.

#include "streak/core.hpp"

namespace streak {

/// Shared machinery for streaks whose elements are exact rationals of type T.
template <class T>
class ExactStreak : public Streak {
 public:
  bool decidable() const override { return true; }

  Semi below(const Rational& q, const Element& x, Budget) const override {
    check_owner(x);
    return q < value(x) ? Semi::yes : Semi::no_within_budget;
  }
  Semi above(const Element& x, const Rational& q, Budget) const override {
    check_owner(x);
    return value(x) < q ? Semi::yes : Semi::no_within_budget;
  }
  Semi less(const Element& x, const Element& y, Budget) const override {
    check_owner(x);
    check_owner(y);
    return value(x) < value(y) ? Semi::yes : Semi::no_within_budget;
  }

  Element zero() const override { return wrap(T(0)); }
  Element one() const override { return wrap(T(1)); }
  Element add(const Element& x, const Element& y) const override {
    check_owner(x);
    check_owner(y);
    return wrap(x.get<T>() + y.get<T>());
  }
  Element mul_pos(const Element& x, const Element& y) const override {
    check_owner(x);
    check_owner(y);
    return wrap(x.get<T>() * y.get<T>());
  }

  bool has_meet() const override { return true; }
  Element meet(const Element& x, const Element& y) const override { return raw(y) < raw(x) ? y : x; }
  bool has_join() const override { return true; }
  Element join(const Element& x, const Element& y) const override { return raw(x) < raw(y) ? y : x; }

  std::string show(const Element& x) const override { return x.get<T>().str(); }
  std::optional<Rational> to_rational(const Element& x) const override { return value(x); }

  Element wrap(T v) const { return make<T>(std::move(v)); }
  const T& raw(const Element& x) const {
    check_owner(x);
    return x.get<T>();
  }

 protected:
  static Rational value(const Element& x) { return Rational(x.get<T>()); }
};

class NatStreak final : public ExactStreak<Natural> {
 public:
  std::string name() const override { return "nat"; }

  bool has_monus() const override { return true; }
  Element monus(const Element& x, const Element& y) const override {
    check_owner(x);
    check_owner(y);
    return wrap(streak::monus(x.get<Natural>(), y.get<Natural>()));
  }

  bool integral() const override { return true; }
  Integer to_integer(const Element& x) const override { return Integer(raw(x)); }
  Element from_integer(const Integer& n) const override {
    if (n.sign() < 0) throw Error(errc::precondition_failed, "negative integer is not a natural");
    return wrap(n.magnitude());
  }
};

class IntegerStreak final : public ExactStreak<Integer> {
 public:
  std::string name() const override { return "int"; }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override { return wrap(-raw(x)); }
  Element mul(const Element& x, const Element& y) const override { return wrap(raw(x) * raw(y)); }

  bool integral() const override { return true; }
  Integer to_integer(const Element& x) const override { return raw(x); }
  Element from_integer(const Integer& n) const override { return wrap(n); }
};

class RationalStreak final : public ExactStreak<Rational> {
 public:
  std::string name() const override { return "rat"; }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override { return wrap(-raw(x)); }
  Element mul(const Element& x, const Element& y) const override { return wrap(raw(x) * raw(y)); }

  bool is_field() const override { return true; }
  Element recip(const Element& x, Budget) const override {
    if (raw(x).is_zero()) throw Error(errc::not_apart_from_zero, "reciprocal of 0");
    return wrap(Rational(1) / raw(x));
  }
  Element from_rational(const Rational& q) const override { return wrap(q); }
  Element from_integer(const Integer& n) const override { return wrap(Rational(n)); }

  bool dense() const override { return true; }
  Element interpolate(const Rational& q, const Rational& r) const override {
    return wrap((q + r) / Rational(2));
  }
};

inline std::shared_ptr<const NatStreak> nat_streak() {
  static auto s = std::make_shared<const NatStreak>();
  return s;
}
inline std::shared_ptr<const IntegerStreak> int_streak() {
  static auto s = std::make_shared<const IntegerStreak>();
  return s;
}
inline std::shared_ptr<const RationalStreak> rat_streak() {
  static auto s = std::make_shared<const RationalStreak>();
  return s;
}

}  // namespace streak
