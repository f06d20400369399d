#pragma once

// Pos X = X_{>0} ∪ {0}: the positive part with multiplication made total.

#include "streak/core.hpp"

namespace streak {

struct PosValue {
  Element value;  // meaningful only when !is_zero
  bool is_zero = true;
};

class PosPart final : public Streak {
 public:
  explicit PosPart(StreakPtr base) : base_(std::move(base)) {}

  const Streak& base() const { return *base_; }
  const StreakPtr& base_ptr() const { return base_; }

  std::string name() const override { return "pos:" + base_->name(); }
  bool decidable() const override { return base_->decidable(); }

  /// Admits x when 0 < x is confirmed, or when x is decidably equal to 0.
  Element lift(const Element& x, Budget budget) const {
    base_->check_owner(x);
    const Element z = base_->zero();
    if (is_yes(base_->below(Rational(0), x, budget))) return make<PosValue>({x, false});
    if (base_->decidable() && !is_yes(base_->less(x, z, budget))) return zero();
    throw Error(errc::not_positive, base_->show(x) + " is neither positive nor zero");
  }

  /// Lifts an element already known to be positive.
  Element positive(const Element& x) const {
    base_->check_owner(x);
    return make<PosValue>({x, false});
  }

  /// The underlying element of X (the base zero for the tagged zero).
  Element value(const Element& x) const {
    check_owner(x);
    const auto& p = x.get<PosValue>();
    return p.is_zero ? base_->zero() : p.value;
  }
  bool is_zero(const Element& x) const {
    check_owner(x);
    return x.get<PosValue>().is_zero;
  }

  Semi below(const Rational& q, const Element& x, Budget budget) const override {
    if (is_zero(x)) return q.sign() < 0 ? Semi::yes : Semi::no_within_budget;
    return base_->below(q, value(x), budget);
  }
  Semi above(const Element& x, const Rational& q, Budget budget) const override {
    if (is_zero(x)) return q.sign() > 0 ? Semi::yes : Semi::no_within_budget;
    return base_->above(value(x), q, budget);
  }
  Semi less(const Element& x, const Element& y, Budget budget) const override {
    if (is_zero(y)) return Semi::no_within_budget;  // nothing here lies below 0
    if (is_zero(x)) return Semi::yes;               // y is tagged positive
    return base_->less(value(x), value(y), budget);
  }

  Element zero() const override { return make<PosValue>({Element(), true}); }
  Element one() const override { return make<PosValue>({base_->one(), false}); }
  Element add(const Element& x, const Element& y) const override {
    if (is_zero(x)) return y;
    if (is_zero(y)) return x;
    return make<PosValue>({base_->add(value(x), value(y)), false});
  }
  Element mul_pos(const Element& x, const Element& y) const override { return mul(x, y); }

  bool total_mul() const override { return true; }
  /// Total: 0·a = a·0 = 0.
  Element mul(const Element& x, const Element& y) const override {
    if (is_zero(x) || is_zero(y)) return zero();
    return make<PosValue>({base_->mul_pos(value(x), value(y)), false});
  }

  std::string show(const Element& x) const override { return is_zero(x) ? "0" : base_->show(value(x)); }
  std::optional<Rational> to_rational(const Element& x) const override {
    if (is_zero(x)) return Rational(0);
    return base_->to_rational(value(x));
  }

 private:
  StreakPtr base_;
};

}  // namespace streak
