#pragma once

// The halved ring: pairs (x, n) standing for x / 2^n over a ring streak.

#include <algorithm>

#include "streak/core.hpp"

namespace streak {

struct Dyadic {
  Element mantissa;
  std::uint64_t exponent = 0;
};

class HalvedLift final : public Streak {
 public:
  explicit HalvedLift(StreakPtr base) : base_(std::move(base)) {
    if (!base_->is_ring())
      throw Error(errc::precondition_failed, "halved lift needs a ring streak, got " + base_->name());
  }

  const Streak& base() const { return *base_; }

  std::string name() const override { return "halved:" + base_->name(); }
  bool decidable() const override { return base_->decidable(); }

  Element dyadic(const Element& mantissa, std::uint64_t exponent) const {
    base_->check_owner(mantissa);
    return canonical(mantissa, exponent);
  }
  const Dyadic& parts(const Element& x) const {
    check_owner(x);
    return x.get<Dyadic>();
  }

  /// half(x, n) = (x, n + 1).
  Element half(const Element& x) const {
    const auto& d = parts(x);
    return canonical(d.mantissa, d.exponent + 1);
  }

  Semi below(const Rational& q, const Element& x, Budget budget) const override {
    // p/e < a/2^m  iff  p·2^m < e·a
    const auto& d = parts(x);
    Element lhs = int_scale(*base_, q.num() * Integer(pow2(d.exponent)), base_->one());
    return base_->less(lhs, nat_scale(*base_, q.den(), d.mantissa), budget);
  }
  Semi above(const Element& x, const Rational& q, Budget budget) const override {
    const auto& d = parts(x);
    Element rhs = int_scale(*base_, q.num() * Integer(pow2(d.exponent)), base_->one());
    return base_->less(nat_scale(*base_, q.den(), d.mantissa), rhs, budget);
  }
  /// (a, m) < (b, n) iff a·2^(n∸m) < b·2^(m∸n).
  Semi less(const Element& x, const Element& y, Budget budget) const override {
    const auto& [a, m] = parts(x);
    const auto& [b, n] = parts(y);
    return base_->less(shift(a, cutoff(n, m)), shift(b, cutoff(m, n)), budget);
  }

  Element zero() const override { return make<Dyadic>({base_->zero(), 0}); }
  Element one() const override { return make<Dyadic>({base_->one(), 0}); }

  /// (a, m) + (b, n) = (a·2^(k-m) + b·2^(k-n), k) with k = sup{m, n}.
  Element add(const Element& x, const Element& y) const override {
    const auto& [a, m] = parts(x);
    const auto& [b, n] = parts(y);
    std::uint64_t k = std::max(m, n);
    return canonical(base_->add(shift(a, k - m), shift(b, k - n)), k);
  }
  Element mul_pos(const Element& x, const Element& y) const override { return mul(x, y); }

  bool is_ring() const override { return true; }
  Element neg(const Element& x) const override {
    const auto& d = parts(x);
    return make<Dyadic>({base_->neg(d.mantissa), d.exponent});
  }
  Element mul(const Element& x, const Element& y) const override {
    const auto& [a, m] = parts(x);
    const auto& [b, n] = parts(y);
    return canonical(base_->mul(a, b), m + n);
  }
  Element from_integer(const Integer& n) const override {
    return canonical(int_scale(*base_, n, base_->one()), 0);
  }

  bool dense() const override { return true; }
  /// The dyadic j/2^m in (q, r) with the smallest m, where j = ⌊q·2^m⌋ + 1.
  Element interpolate(const Rational& q, const Rational& r) const override {
    for (std::uint64_t m = 0;; ++m) {
      Rational scale(pow2(m));
      Integer j = (q * scale).floor() + Integer(1);
      if (Rational(j) / scale < r) return canonical(int_scale(*base_, j, base_->one()), m);
    }
  }

  std::string show(const Element& x) const override {
    const auto& d = parts(x);
    return "(" + base_->show(d.mantissa) + ", " + std::to_string(d.exponent) + ")";
  }
  std::optional<Rational> to_rational(const Element& x) const override {
    const auto& d = parts(x);
    auto v = base_->to_rational(d.mantissa);
    if (!v) return std::nullopt;
    return *v / Rational(pow2(d.exponent));
  }

 private:
  static std::uint64_t cutoff(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : 0; }

  Element shift(const Element& a, std::uint64_t k) const { return k == 0 ? a : nat_scale(*base_, pow2(k), a); }

  /// Over an integer-valued base, strip factors of two from the mantissa.
  Element canonical(const Element& a, std::uint64_t e) const {
    if (!base_->integral()) return make<Dyadic>({a, e});
    Integer v = base_->to_integer(a);
    if (v.is_zero()) return make<Dyadic>({base_->zero(), 0});
    std::uint64_t strip = std::min<std::uint64_t>(e, mpz_scan1(v.raw().get_mpz_t(), 0));
    if (strip == 0) return make<Dyadic>({a, e});
    mpz_class reduced;
    mpz_fdiv_q_2exp(reduced.get_mpz_t(), v.raw().get_mpz_t(), strip);
    return make<Dyadic>({base_->from_integer(Integer(reduced)), e - strip});
  }

  StreakPtr base_;
};

}  // namespace streak
