#pragma once

// The streak contract: semidecidable comparisons with rationals on both
// sides, addition, and multiplication of positive elements.  Elements are
// type-erased values tagged with the streak that produced them.

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "streak/errors.hpp"
#include "streak/rational.hpp"

namespace streak {

/// Work bound handed to every semidecision.  A YES found at budget b is
/// also found at every larger budget.
using Budget = std::uint64_t;

enum class Semi { yes, no_within_budget };
enum class Tri { yes, no, unknown };
enum class Ordering { less, greater, unknown };
enum class Equivalence { equivalent_within_budget, apart };

inline bool is_yes(Semi s) { return s == Semi::yes; }

inline const char* to_string(Semi s) { return s == Semi::yes ? "YES" : "NO_WITHIN_BUDGET"; }
inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "LESS";
    case Ordering::greater: return "GREATER";
    case Ordering::unknown: return "UNKNOWN";
  }
  return "?";
}

class Streak;

class Element {
 public:
  Element() = default;
  Element(const Streak* owner, std::shared_ptr<const void> data) : owner_(owner), data_(std::move(data)) {}

  const Streak* owner() const { return owner_; }
  bool empty() const { return data_ == nullptr; }

  template <class T>
  const T& get() const {
    return *static_cast<const T*>(data_.get());
  }

 private:
  const Streak* owner_ = nullptr;
  std::shared_ptr<const void> data_;
};

class Streak;
using StreakPtr = std::shared_ptr<const Streak>;

/// Base class for every streak.  Elements keep a raw pointer to their
/// streak, so a streak must outlive its elements.
class Streak {
 public:
  virtual ~Streak() = default;

  virtual std::string name() const = 0;
  /// When set, below/above answer exactly at budget 0 and NO means false.
  virtual bool decidable() const { return false; }

  /// Semidecides q < x.
  virtual Semi below(const Rational& q, const Element& x, Budget budget) const = 0;
  /// Semidecides x < q.
  virtual Semi above(const Element& x, const Rational& q, Budget budget) const = 0;
  /// Semidecides x < y; defaults to the rational witness search.
  virtual Semi less(const Element& x, const Element& y, Budget budget) const;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element add(const Element& x, const Element& y) const = 0;
  /// Defined when 0 < x and 0 < y.
  virtual Element mul_pos(const Element& x, const Element& y) const = 0;

  virtual std::string show(const Element& x) const = 0;

  // Optional structure.  The defaults report the capability as missing.
  virtual bool is_ring() const { return false; }
  virtual Element neg(const Element&) const { throw missing("negation"); }
  virtual Element mul(const Element&, const Element&) const { throw missing("total multiplication"); }
  /// `mul` is defined everywhere (rings, and positive parts).
  virtual bool total_mul() const { return is_ring(); }

  virtual bool is_field() const { return false; }
  /// Reciprocal of an element apart from zero; NotApartFromZero otherwise.
  virtual Element recip(const Element&, Budget) const { throw missing("reciprocal"); }
  virtual Element from_rational(const Rational&) const { throw missing("rational embedding"); }

  virtual bool dense() const { return false; }
  virtual Element interpolate(const Rational&, const Rational&) const {
    throw Error(errc::not_dense, name() + " does not declare density");
  }

  virtual bool has_meet() const { return false; }
  virtual Element meet(const Element&, const Element&) const { throw missing("meet"); }
  virtual bool has_join() const { return false; }
  virtual Element join(const Element&, const Element&) const { throw missing("join"); }

  /// Cutoff subtraction, only on streaks where it is total (the naturals).
  virtual bool has_monus() const { return false; }
  virtual Element monus(const Element&, const Element&) const { throw missing("cutoff subtraction"); }

  /// Every element is an integer and converts exactly.
  virtual bool integral() const { return false; }
  virtual Integer to_integer(const Element&) const { throw missing("integer view"); }
  /// Exact embedding of integers; naturals reject negatives.
  virtual Element from_integer(const Integer&) const { throw missing("integer embedding"); }

  /// Exact rational value, when the streak is a concrete subset of Q.
  virtual std::optional<Rational> to_rational(const Element&) const { return std::nullopt; }

  void check_owner(const Element& x) const {
    if (x.owner() != this)
      throw Error(errc::mixed_streaks, "element does not belong to " + name());
  }

 protected:
  template <class T>
  Element make(T value) const {
    return Element(this, std::make_shared<const T>(std::move(value)));
  }

  Error missing(const std::string& what) const {
    return Error(errc::precondition_failed, name() + " has no " + what);
  }
};

// ---------------------------------------------------------------------------
// Scaling by natural numbers and integers.

/// n·x built from + alone: 0·x = 0, (n+1)·x = n·x + x (evaluated by doubling).
inline Element nat_scale(const Streak& s, const Natural& n, const Element& x) {
  s.check_owner(x);
  Element result = s.zero();
  Element power = x;
  const mpz_class& bits = n.raw();
  std::size_t width = mpz_sizeinbase(bits.get_mpz_t(), 2);
  if (n.is_zero()) return result;
  for (std::size_t i = 0; i < width; ++i) {
    if (mpz_tstbit(bits.get_mpz_t(), i)) result = s.add(result, power);
    if (i + 1 < width) power = s.add(power, power);
  }
  return result;
}

inline Element nat_elem(const Streak& s, const Natural& n) { return nat_scale(s, n, s.one()); }

/// p·x for an integer p; negative p needs a ring streak.
inline Element int_scale(const Streak& s, const Integer& p, const Element& x) {
  if (p.sign() >= 0) return nat_scale(s, p.magnitude(), x);
  return s.neg(nat_scale(s, p.magnitude(), x));
}

// ---------------------------------------------------------------------------
// Fair enumeration of Q.

/// All rationals num/den in lowest terms with max(|num|, den) = height,
/// ordered by denominator, then magnitude, positive before negative.
inline const std::vector<Rational>& rationals_of_height(std::uint64_t height) {
  static std::mutex mu;
  static std::deque<std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() < height) {
    std::uint64_t h = cache.size() + 1;
    std::vector<Rational> level;
    auto push = [&](std::uint64_t num, std::uint64_t den) {
      Rational q(Integer(static_cast<std::int64_t>(num)), Integer(static_cast<std::int64_t>(den)));
      level.push_back(q);
      if (num != 0) level.push_back(-q);
    };
    for (std::uint64_t den = 1; den < h; ++den)
      if (std::gcd(h, den) == 1) push(h, den);
    for (std::uint64_t num = 0; num <= h; ++num)
      if (std::gcd(num, h) == 1) push(num, h);
    cache.push_back(std::move(level));
  }
  return cache[height - 1];
}

struct Decision {
  Ordering order = Ordering::unknown;
  std::optional<Rational> witness;
};

/// x < y iff some rational q has x < q < y.  Searches every rational of
/// height at most `budget`, giving each semidecision the same budget.
inline Decision strict_lt(const Streak& s, const Element& x, const Element& y, Budget budget) {
  s.check_owner(x);
  s.check_owner(y);
  for (std::uint64_t h = 1; h <= budget; ++h) {
    for (const Rational& q : rationals_of_height(h)) {
      if (is_yes(s.above(x, q, budget)) && is_yes(s.below(q, y, budget))) return {Ordering::less, q};
      if (is_yes(s.above(y, q, budget)) && is_yes(s.below(q, x, budget))) return {Ordering::greater, q};
    }
  }
  return {};
}

inline Semi Streak::less(const Element& x, const Element& y, Budget budget) const {
  return strict_lt(*this, x, y, budget).order == Ordering::less ? Semi::yes : Semi::no_within_budget;
}

inline Equivalence approx_eq(const Streak& s, const Element& x, const Element& y, Budget budget) {
  s.check_owner(x);
  s.check_owner(y);
  if (is_yes(s.less(x, y, budget)) || is_yes(s.less(y, x, budget))) return Equivalence::apart;
  return Equivalence::equivalent_within_budget;
}

// ---------------------------------------------------------------------------
// Archimedean searches.

/// Smallest N = 2^j with -N < x < N.  Decidable streaks always resolve, so
/// only semidecidable ones have the number of doublings capped by `budget`.
inline Integer archimedean_bound(const Streak& s, const Element& x, Budget budget) {
  const Budget rounds = s.decidable() ? 4096 : budget;
  Integer n(1);
  for (Budget round = 0; round <= rounds; ++round, n = n * Integer(2)) {
    if (is_yes(s.below(-Rational(n), x, budget)) && is_yes(s.above(x, Rational(n), budget))) return n;
  }
  throw Error(errc::budget_exceeded, "no archimedean bound for " + s.show(x));
}

/// Returns the smallest i found with (i-1)/k < x < (i+1)/k.
inline Integer locate(const Streak& s, const Element& x, const Natural& k, Budget budget) {
  s.check_owner(x);
  if (k.is_zero()) throw Error(errc::precondition_failed, "locate needs k > 0");
  const Integer kk(k);
  auto at = [&](const Integer& m) { return Rational(m, kk); };
  auto lower = [&](const Integer& m) { return is_yes(s.below(at(m), x, budget)); };
  auto upper = [&](const Integer& m) { return is_yes(s.above(x, at(m), budget)); };

  Integer bound = archimedean_bound(s, x, budget) * kk;
  Integer lo = -bound, hi = bound;  // lo/k < x < hi/k
  while (hi - lo > Integer(2)) {
    Integer mid = floor_div(lo + hi, Integer(2));
    if (lower(mid)) {
      lo = mid;
    } else if (upper(mid)) {
      hi = mid;
    } else {
      if (lower(mid - Integer(1)) && upper(mid + Integer(1))) return mid;
      break;
    }
  }
  // Scan with (m-1)/k < x known; the first m with x < (m+1)/k is smallest.
  for (Integer m = lo; m < hi; m = m + Integer(1)) {
    if (upper(m + Integer(1))) return m;
    if (!lower(m)) break;
  }
  throw Error(errc::budget_exceeded, "locate did not resolve within budget");
}

/// Smallest n <= budget with a + n·b < c + n·d, given b < d.
inline Natural archimedean_witness(const Streak& s, const Element& a, const Element& b, const Element& c,
                                   const Element& d, Budget budget) {
  if (strict_lt(s, b, d, budget).order != Ordering::less)
    throw Error(errc::precondition_failed, "b < d not established within budget");
  Element left = a, right = c;
  for (Budget n = 0; n <= budget; ++n) {
    if (strict_lt(s, left, right, budget).order == Ordering::less) return Natural(n);
    left = s.add(left, b);
    right = s.add(right, d);
  }
  throw Error(errc::budget_exceeded, "no archimedean witness within budget");
}

/// An element strictly between q and r.
inline Element interpolate(const Streak& s, const Rational& q, const Rational& r) {
  if (!(q < r)) throw Error(errc::precondition_failed, "interpolate needs q < r");
  if (!s.dense()) throw Error(errc::not_dense, s.name() + " does not declare density");
  return s.interpolate(q, r);
}

}  // namespace streak
