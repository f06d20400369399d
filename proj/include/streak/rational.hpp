#pragma once

// Exact naturals, integers and rationals backed by GMP.  Every value is kept
// in canonical form, so structural equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "streak/errors.hpp"

namespace streak {

class Integer;
class Rational;

class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)
  explicit Natural(const mpz_class& v) : v_(v) {
    if (sgn(v_) < 0) throw Error(errc::precondition_failed, "negative natural");
  }

  const mpz_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  std::uint64_t to_u64() const { return v_.get_ui(); }
  bool fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
  std::string str() const { return v_.get_str(); }

  friend Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ + b.v_), 0); }
  friend Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ * b.v_), 0); }
  Natural& operator+=(const Natural& b) { v_ += b.v_; return *this; }

  /// Cutoff subtraction: a - b when a >= b, else 0.
  friend Natural monus(const Natural& a, const Natural& b) {
    return a.v_ >= b.v_ ? Natural(mpz_class(a.v_ - b.v_), 0) : Natural();
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

 private:
  Natural(mpz_class v, int) : v_(std::move(v)) {}
  mpz_class v_;
};

Natural monus(const Natural& a, const Natural& b);

class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Integer(const Natural& n) : v_(n.raw()) {}             // NOLINT(implicit)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer parse(std::string_view text);

  const mpz_class& raw() const { return v_; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  Natural magnitude() const { return Natural(mpz_class(abs(v_))); }
  std::string str() const { return v_.get_str(); }
  std::int64_t to_i64() const { return v_.get_si(); }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  /// Floor division.
  friend Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw Error(errc::division_by_zero, "integer division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(q);
  }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.str(); }

 private:
  mpz_class v_;
};

enum class Cmp { lt, eq, gt };

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : v_(static_cast<long>(v)) {}       // NOLINT(implicit)
  Rational(const Integer& v) : v_(v.raw()) {}                   // NOLINT(implicit)
  Rational(const Natural& v) : v_(v.raw()) {}                   // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw Error(errc::division_by_zero, "zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts `[-]digits[/digits]` and `[-]digits.digits`; decimals convert exactly.
  static Rational parse(std::string_view text);

  Integer num() const { return Integer(mpz_class(v_.get_num())); }
  Natural den() const { return Natural(mpz_class(v_.get_den())); }
  const mpq_class& raw() const { return v_; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Integer floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Integer(q);
  }
  Integer ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Integer(q);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), 0); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), 0); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), 0); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(errc::division_by_zero, "rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_), 0);
  }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_), 0); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// `num/den`, or just `num` for integers.
  std::string str() const { return v_.get_str(); }
  /// Decimal expansion truncated toward zero after `digits` fractional digits.
  std::string decimal(std::size_t digits) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  Rational(mpq_class v, int) : v_(std::move(v)) {}  // already canonical
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

enum class RatOp { add, sub, mul, div };

inline Rational rat_arith(RatOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
    case RatOp::div: return a / b;
  }
  return a;
}

inline Cmp rat_cmp(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  return c < 0 ? Cmp::lt : c > 0 ? Cmp::gt : Cmp::eq;
}

/// 2^k as a natural.
inline Natural pow2(std::uint64_t k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Natural(v);
}

inline Rational pow(const Rational& base, std::uint64_t e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

// ---------------------------------------------------------------------------

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline Integer Integer::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (!detail::all_digits(body)) throw SyntaxError(0, "malformed integer '" + std::string(text) + "'");
  mpz_class v(std::string(body), 10);
  return Integer(negative ? mpz_class(-v) : v);
}

inline Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!detail::all_digits(n) || !detail::all_digits(d))
      throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
    result = Rational(Integer(mpz_class(std::string(n), 10)), Integer(mpz_class(std::string(d), 10)));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!detail::all_digits(ip) || !detail::all_digits(fp))
      throw SyntaxError(0, "malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class whole(std::string(ip) + std::string(fp), 10);
    result = Rational(mpq_class(whole, scale));
  } else {
    if (!detail::all_digits(body)) throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
    result = Rational(Integer(mpz_class(std::string(body), 10)));
  }
  return negative ? -result : result;
}

inline std::string Rational::decimal(std::size_t digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = abs(v_.get_num()) * scale;
  mpz_class truncated;
  mpz_tdiv_q(truncated.get_mpz_t(), scaled.get_mpz_t(), v_.get_den_mpz_t());
  std::string body = truncated.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out;
  if (sign() < 0 && truncated != 0) out.push_back('-');
  out.append(body, 0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out.append(body, body.size() - digits, digits);
  }
  return out;
}

}  // namespace streak

template <>
struct std::hash<streak::Rational> {
  std::size_t operator()(const streak::Rational& q) const noexcept {
    return std::hash<std::string>{}(q.str());
  }
};
