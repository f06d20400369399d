#pragma once

// Ring(X) = formal differences over Pos X, compared by a + d < c + b.

#include <memory>

#include "streak/reflections/pos_part.hpp"

namespace streak {

struct FormalDifference {
  Element pos;  // elements of Pos X; the pair stands for pos - neg
  Element neg;
};

class RingLift final : public Streak {
 public:
  explicit RingLift(StreakPtr base) : pos_(std::make_shared<const PosPart>(std::move(base))) {}

  const PosPart& pos_part() const { return *pos_; }
  const Streak& base() const { return pos_->base(); }

  std::string name() const override { return "ring:" + base().name(); }
  bool decidable() const override { return base().decidable(); }

  /// The pair (a, b) of Pos X elements.
  Element pair(const Element& a, const Element& b) const {
    pos_->check_owner(a);
    pos_->check_owner(b);
    return canonical(a, b);
  }
  const FormalDifference& parts(const Element& x) const {
    check_owner(x);
    return x.get<FormalDifference>();
  }

  /// ρ(x) = (x + n, n) with the smallest n such that 0 < x + n.
  Element rho(const Element& x, Budget budget) const {
    base().check_owner(x);
    const Budget limit = base().decidable() ? (Budget(1) << 40) : budget;
    Element shifted = x;
    for (Budget n = 0; n <= limit; ++n) {
      if (is_yes(base().below(Rational(0), shifted, budget)))
        return canonical(pos_->positive(shifted), nat_elem(*pos_, Natural(n)));
      shifted = base().add(shifted, base().one());
    }
    throw Error(errc::budget_exceeded, "no shift makes " + base().show(x) + " positive");
  }
  /// (x + n, n) for a caller-chosen n with 0 ≤ x + n.
  Element rho_with_shift(const Element& x, const Natural& n, Budget budget) const {
    Element shifted = base().add(x, nat_elem(base(), n));
    return canonical(pos_->lift(shifted, budget), nat_elem(*pos_, n));
  }

  Semi below(const Rational& q, const Element& x, Budget budget) const override {
    // q = p/d < a - b  iff  d·b + p⁺ < d·a + p⁻
    const auto& [a, b] = parts(x);
    auto [plus, minus, d] = split(q);
    return pos_->less(pos_->add(nat_scale(*pos_, d, b), plus), pos_->add(nat_scale(*pos_, d, a), minus), budget);
  }
  Semi above(const Element& x, const Rational& q, Budget budget) const override {
    const auto& [a, b] = parts(x);
    auto [plus, minus, d] = split(q);
    return pos_->less(pos_->add(nat_scale(*pos_, d, a), minus), pos_->add(nat_scale(*pos_, d, b), plus), budget);
  }
  /// (a, b) < (c, d) iff a + d < c + b.
  Semi less(const Element& x, const Element& y, Budget budget) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return pos_->less(pos_->add(a, d), pos_->add(c, b), budget);
  }

  Element zero() const override { return make<FormalDifference>({pos_->zero(), pos_->zero()}); }
  Element one() const override { return make<FormalDifference>({pos_->one(), pos_->zero()}); }

  Element add(const Element& x, const Element& y) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return canonical(pos_->add(a, c), pos_->add(b, d));
  }
  Element mul_pos(const Element& x, const Element& y) const override { return mul(x, y); }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override {
    const auto& [a, b] = parts(x);
    return make<FormalDifference>({b, a});
  }
  /// (a, b)·(c, d) = (ac + bd, ad + bc).
  Element mul(const Element& x, const Element& y) const override {
    const auto& [a, b] = parts(x);
    const auto& [c, d] = parts(y);
    return canonical(pos_->add(pos_->mul(a, c), pos_->mul(b, d)), pos_->add(pos_->mul(a, d), pos_->mul(b, c)));
  }

  bool dense() const override { return base().dense(); }
  Element interpolate(const Rational& q, const Rational& r) const override {
    return rho(base().interpolate(q, r), 64);
  }

  bool integral() const override { return base().integral(); }
  Integer to_integer(const Element& x) const override {
    const auto& [a, b] = parts(x);
    return base().to_integer(pos_->value(a)) - base().to_integer(pos_->value(b));
  }
  Element from_integer(const Integer& n) const override {
    if (base().integral() && base().has_monus()) {
      Element m = base().from_integer(Integer(n.magnitude()));
      Element tagged = n.is_zero() ? pos_->zero() : pos_->positive(m);
      return n.sign() >= 0 ? make<FormalDifference>({tagged, pos_->zero()})
                           : make<FormalDifference>({pos_->zero(), tagged});
    }
    return int_scale(*this, n, one());
  }

  std::string show(const Element& x) const override {
    const auto& [a, b] = parts(x);
    return "(" + pos_->show(a) + ", " + pos_->show(b) + ")";
  }
  std::optional<Rational> to_rational(const Element& x) const override {
    const auto& [a, b] = parts(x);
    auto va = pos_->to_rational(a), vb = pos_->to_rational(b);
    if (!va || !vb) return std::nullopt;
    return *va - *vb;
  }

 private:
  struct Split {
    Element plus, minus;
    Natural den;
  };
  Split split(const Rational& q) const {
    const Integer p = q.num();
    Element plus = p.sign() > 0 ? nat_elem(*pos_, p.magnitude()) : pos_->zero();
    Element minus = p.sign() < 0 ? nat_elem(*pos_, p.magnitude()) : pos_->zero();
    return {plus, minus, q.den()};
  }

  /// Over a base with cutoff subtraction, reduce to (a ∸ b, b ∸ a).
  Element canonical(const Element& a, const Element& b) const {
    if (!base().has_monus()) return make<FormalDifference>({a, b});
    Element va = pos_->value(a), vb = pos_->value(b);
    return make<FormalDifference>(
        {pos_->lift(base().monus(va, vb), 0), pos_->lift(base().monus(vb, va), 0)});
  }

  std::shared_ptr<const PosPart> pos_;
};

}  // namespace streak
