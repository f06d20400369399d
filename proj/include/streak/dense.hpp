#pragma once

// The substreak of Q generated by a single z in (-1, 0).  Its elements are
// polynomials in z with natural coefficients, which is everything reachable
// from 0, 1 and z by addition and products of positives.

#include <vector>

#include "streak/core.hpp"

namespace streak {

struct ZPolynomial {
  std::vector<Natural> coeffs;  // coeffs[i] multiplies z^i; no trailing zeros

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

class DenseSubstreak final : public Streak {
 public:
  explicit DenseSubstreak(Rational z) : z_(std::move(z)) {
    if (!(Rational(-1) < z_ && z_ < Rational(0)))
      throw Error(errc::precondition_failed, "generator must lie in (-1, 0)");
  }

  const Rational& generator() const { return z_; }

  std::string name() const override { return "dense(" + z_.str() + ")"; }
  bool decidable() const override { return true; }

  Semi below(const Rational& q, const Element& x, Budget) const override {
    return q < value(x) ? Semi::yes : Semi::no_within_budget;
  }
  Semi above(const Element& x, const Rational& q, Budget) const override {
    return value(x) < q ? Semi::yes : Semi::no_within_budget;
  }
  Semi less(const Element& x, const Element& y, Budget) const override {
    return value(x) < value(y) ? Semi::yes : Semi::no_within_budget;
  }

  Element zero() const override { return poly({}); }
  Element one() const override { return poly({Natural(1)}); }
  /// The generator z itself.
  Element z() const { return poly({Natural(0), Natural(1)}); }

  Element add(const Element& x, const Element& y) const override {
    const auto& a = coeffs(x);
    const auto& b = coeffs(y);
    std::vector<Natural> c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return poly(std::move(c));
  }
  Element mul_pos(const Element& x, const Element& y) const override {
    const auto& a = coeffs(x);
    const auto& b = coeffs(y);
    if (a.empty() || b.empty()) return zero();
    std::vector<Natural> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly(std::move(c));
  }

  std::string show(const Element& x) const override {
    const auto& a = coeffs(x);
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += a[i].str();
      if (i == 1) out += "z";
      if (i > 1) out += "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  std::optional<Rational> to_rational(const Element& x) const override { return value(x); }

  Rational value(const Element& x) const {
    Rational v;
    const auto& a = coeffs(x);
    for (std::size_t i = a.size(); i-- > 0;) v = v * z_ + Rational(a[i]);
    return v;
  }

  const std::vector<Natural>& coeffs(const Element& x) const {
    check_owner(x);
    return x.get<ZPolynomial>().coeffs;
  }

  Element poly(std::vector<Natural> c) const {
    ZPolynomial p{std::move(c)};
    p.trim();
    return make<ZPolynomial>(std::move(p));
  }

  bool dense() const override { return true; }
  Element interpolate(const Rational& q, const Rational& r) const override;

 private:
  Rational z_;
};

/// An element of the substreak in (q, r).  For q >= 0 take h = (z+1)^n with
/// 2h <= r - q and the first multiple (j+1)·h past q.  For q < 0 shift by n·z
/// with n·z < q, locating n·z to precision 1/t and solving the shifted
/// problem, whose lower end is then positive.
inline Element dense_generate(const DenseSubstreak& s, const Rational& q, const Rational& r, Budget budget) {
  if (!(q < r)) throw Error(errc::precondition_failed, "dense_generate needs q < r");
  const Rational& z = s.generator();
  if (q.sign() >= 0) {
    const Rational base = z + Rational(1);
    const Rational room = r - q;
    std::uint64_t n = 0;
    Rational h(1);
    while (room < Rational(2) * h) {
      if (++n > budget) throw Error(errc::budget_exceeded, "no small enough power of z+1");
      h = h * base;
    }
    Integer j = (q / h).ceil();
    // (j+1)·(1+z)^n with binomial coefficients.
    std::vector<Natural> c(n + 1);
    mpz_class binom(1);
    for (std::uint64_t i = 0; i <= n; ++i) {
      c[i] = Natural(mpz_class(binom * (j + Integer(1)).raw()));
      binom = binom * static_cast<unsigned long>(n - i) / static_cast<unsigned long>(i + 1);
    }
    return s.poly(std::move(c));
  }
  const Integer n = (q / z).floor() + Integer(1);          // smallest n with n·z < q
  const Integer t = (Rational(2) / (r - q)).floor() + Integer(1);  // smallest t with 1/t < (r-q)/2
  Element nz = s.poly({Natural(0), n.magnitude()});
  Integer u = locate(s, nz, t.magnitude(), budget);
  Rational shifted_q = q - Rational(u - Integer(1), t);
  Rational shifted_r = r - Rational(u + Integer(1), t);
  return s.add(dense_generate(s, shifted_q, shifted_r, budget), nz);
}

inline Element DenseSubstreak::interpolate(const Rational& q, const Rational& r) const {
  return dense_generate(*this, q, r, 4096);
}

}  // namespace streak
