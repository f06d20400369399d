#pragma once

// Field(X) = formal fractions over a ring streak, compared by a·d < b·c.

#include "streak/core.hpp"

namespace streak {

struct FormalFraction {
  Element num;
  Element den;  // 0 < den
};

class FieldLift final : public Streak {
 public:
  explicit FieldLift(StreakPtr base) : base_(std::move(base)) {
    if (!base_->is_ring())
      throw Error(errc::precondition_failed, "field lift needs a ring streak, got " + base_->name());
  }

  const Streak& base() const { return *base_; }

  std::string name() const override { return "field:" + base_->name(); }
  bool decidable() const override { return base_->decidable(); }

  Element fraction(const Element& num, const Element& den, Budget budget) const {
    base_->check_owner(num);
    base_->check_owner(den);
    if (!is_yes(base_->below(Rational(0), den, budget)))
      throw Error(errc::precondition_failed, "denominator " + base_->show(den) + " not confirmed positive");
    return canonical(num, den);
  }
  const FormalFraction& parts(const Element& x) const {
    check_owner(x);
    return x.get<FormalFraction>();
  }

  Semi below(const Rational& q, const Element& x, Budget budget) const override {
    // p/e < a/b  iff  p·b < e·a
    const auto& [a, b] = parts(x);
    return base_->less(int_scale(*base_, q.num(), b), nat_scale(*base_, q.den(), a), budget);
  }
  Semi above(const Element& x, const Rational& q, Budget budget) const override {
    const auto& [a, b] = parts(x);
    return base_->less(nat_scale(*base_, q.den(), a), int_scale(*base_, q.num(), b), budget);
  }
  /// (a, b) < (c, d) iff a·d < b·c.
  Semi less(const Element& x, const Element& y, Budget budget) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return base_->less(base_->mul(a, d), base_->mul(b, c), budget);
  }

  Element zero() const override { return make<FormalFraction>({base_->zero(), base_->one()}); }
  Element one() const override { return make<FormalFraction>({base_->one(), base_->one()}); }

  Element add(const Element& x, const Element& y) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return canonical(base_->add(base_->mul(a, d), base_->mul(b, c)), base_->mul(b, d));
  }
  Element mul_pos(const Element& x, const Element& y) const override { return mul(x, y); }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override {
    const auto& [a, b] = parts(x);
    return make<FormalFraction>({base_->neg(a), b});
  }
  Element mul(const Element& x, const Element& y) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return canonical(base_->mul(a, c), base_->mul(b, d));
  }

  bool is_field() const override { return true; }
  /// (a, b)⁻¹ = (b, a) for positive elements, and x⁻¹ = -(-x)⁻¹ for negative ones.
  Element recip(const Element& x, Budget budget) const override {
    const auto& [a, b] = parts(x);
    if (is_yes(base_->below(Rational(0), a, budget))) return canonical(b, a);
    if (is_yes(base_->above(a, Rational(0), budget))) return neg(recip(neg(x), budget));
    throw Error(errc::not_apart_from_zero, show(x) + " not separated from 0 within budget");
  }
  Element from_rational(const Rational& q) const override {
    return canonical(int_scale(*base_, q.num(), base_->one()), nat_scale(*base_, q.den(), base_->one()));
  }
  Element from_integer(const Integer& n) const override { return from_rational(Rational(n)); }

  bool dense() const override { return true; }
  Element interpolate(const Rational& q, const Rational& r) const override {
    return from_rational((q + r) / Rational(2));
  }

  std::string show(const Element& x) const override {
    const auto& [a, b] = parts(x);
    return "(" + base_->show(a) + ", " + base_->show(b) + ")";
  }
  std::optional<Rational> to_rational(const Element& x) const override {
    const auto& [a, b] = parts(x);
    auto va = base_->to_rational(a), vb = base_->to_rational(b);
    if (!va || !vb) return std::nullopt;
    return *va / *vb;
  }

 private:
  /// Over an integer-valued base, reduce by the gcd.
  Element canonical(const Element& a, const Element& b) const {
    if (!base_->integral()) return make<FormalFraction>({a, b});
    Rational q(base_->to_integer(a), base_->to_integer(b));
    return make<FormalFraction>({base_->from_integer(q.num()), base_->from_integer(Integer(q.den()))});
  }

  StreakPtr base_;
};

}  // namespace streak
