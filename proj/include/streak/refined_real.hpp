#pragma once

// Reals as interval-refinement oracles: precision n ↦ a rational interval
// of width at most 2/n.  Every emitted interval is intersected with all
// earlier ones, so answers are nested in the order they are handed out.

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "streak/core.hpp"

namespace streak {

struct Interval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw Error(errc::budget_exceeded, "precision overflow");
  return a * b;
}

/// ⌈q⌉ as a precision, at least 1.
inline std::uint64_t precision_ceil(const Rational& q) {
  Integer c = q.ceil();
  if (c <= Integer(1)) return 1;
  if (!c.magnitude().fits_u64() || c > Integer(std::numeric_limits<std::int64_t>::max()))
    throw Error(errc::budget_exceeded, "precision overflow");
  return static_cast<std::uint64_t>(c.to_i64());
}

}  // namespace detail

class RefinedReal {
 public:
  using Oracle = std::function<Interval(std::uint64_t)>;

  explicit RefinedReal(Oracle raw) : state_(std::make_shared<State>()) { state_->raw = std::move(raw); }

  /// The interval at precision n >= 1: the raw answer cut down by every
  /// interval emitted so far.  Raw answers are memoized per precision.
  Interval refine(std::uint64_t n) const {
    if (n == 0) throw Error(errc::precondition_failed, "precision must be at least 1");
    std::optional<Interval> cached;
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      if (auto it = state_->raw_memo.find(n); it != state_->raw_memo.end()) cached = it->second;
    }
    Interval fresh = cached ? *cached : state_->raw(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->raw_memo.emplace(n, fresh);
    if (state_->running) {
      fresh.lo = max(fresh.lo, state_->running->lo);
      fresh.hi = min(fresh.hi, state_->running->hi);
    }
    if (fresh.hi < fresh.lo)
      throw Error(errc::precondition_failed,
                  "oracle answer at precision " + std::to_string(n) + " misses the earlier intervals");
    state_->running = fresh;
    return fresh;
  }

  const void* identity() const { return state_.get(); }

 private:
  struct State {
    Oracle raw;
    std::mutex mu;
    std::map<std::uint64_t, Interval> raw_memo;
    std::optional<Interval> running;
  };
  std::shared_ptr<State> state_;
};

enum class Sign { positive, negative };

/// Certificate that |x| > bound, re-checkable at the recorded precision.
struct Apartness {
  Sign sign = Sign::positive;
  Rational bound;
  std::uint64_t precision = 1;
};

inline bool verify(const RefinedReal& x, const Apartness& cert) {
  if (cert.bound.sign() <= 0 || cert.precision == 0) return false;
  Interval iv = x.refine(cert.precision);
  return cert.sign == Sign::positive ? cert.bound < iv.lo : iv.hi < -cert.bound;
}

// ---------------------------------------------------------------------------
// Construction and arithmetic.

/// ψ(q) = (q, q) at every precision.
inline RefinedReal real_from_rational(const Rational& q) {
  return RefinedReal([q](std::uint64_t) { return Interval{q, q}; });
}

inline RefinedReal real_add(const RefinedReal& x, const RefinedReal& y) {
  return RefinedReal([x, y](std::uint64_t n) {
    std::uint64_t p = detail::checked_mul(n, 2);
    Interval a = x.refine(p), b = y.refine(p);
    return Interval{a.lo + b.lo, a.hi + b.hi};
  });
}

inline RefinedReal real_neg(const RefinedReal& x) {
  return RefinedReal([x](std::uint64_t n) {
    Interval a = x.refine(n);
    return Interval{-a.hi, -a.lo};
  });
}

inline RefinedReal real_sub(const RefinedReal& x, const RefinedReal& y) { return real_add(x, real_neg(y)); }

/// c·x for a rational c, querying x at precision ⌈|c|·n⌉.
inline RefinedReal real_scale(const Rational& c, const RefinedReal& x) {
  if (c.is_zero()) return real_from_rational(Rational(0));
  return RefinedReal([c, x](std::uint64_t n) {
    Interval a = x.refine(detail::precision_ceil(abs(c) * Rational(Integer(static_cast<std::int64_t>(n)))));
    Rational l = c * a.lo, h = c * a.hi;
    return c.sign() > 0 ? Interval{l, h} : Interval{h, l};
  });
}

/// inf ↦ (min lo, min hi).
inline RefinedReal real_inf(const RefinedReal& x, const RefinedReal& y) {
  return RefinedReal([x, y](std::uint64_t n) {
    Interval a = x.refine(n), b = y.refine(n);
    return Interval{min(a.lo, b.lo), min(a.hi, b.hi)};
  });
}

/// sup ↦ (max lo, max hi).
inline RefinedReal real_sup(const RefinedReal& x, const RefinedReal& y) {
  return RefinedReal([x, y](std::uint64_t n) {
    Interval a = x.refine(n), b = y.refine(n);
    return Interval{max(a.lo, b.lo), max(a.hi, b.hi)};
  });
}

/// |a| = sup{a, -a}, with the lower end raised to 0 since |a| >= 0.
inline RefinedReal real_abs(const RefinedReal& x) {
  return RefinedReal([x](std::uint64_t n) {
    Interval a = x.refine(n);
    return Interval{max(max(a.lo, -a.hi), Rational(0)), max(a.hi, -a.lo)};
  });
}

/// d(a, b) = |a - b|.
inline RefinedReal real_dist(const RefinedReal& x, const RefinedReal& y) { return real_abs(real_sub(x, y)); }

/// Refines at precisions 1, 2, 4, ... (at most `rounds` doublings) until the
/// sign of x shows, and certifies half of the observed margin.
inline std::optional<Apartness> find_apartness(const RefinedReal& x, Budget rounds) {
  std::uint64_t p = 1;
  for (Budget k = 0; k <= rounds && k < 63; ++k, p *= 2) {
    Interval iv;
    try {
      iv = x.refine(p);
    } catch (const Error& e) {
      // an operand ran out of representable precision: the search ends here
      if (e.code() != errc::budget_exceeded) throw;
      break;
    }
    if (iv.lo.sign() > 0) return Apartness{Sign::positive, iv.lo / Rational(2), p};
    if (iv.hi.sign() < 0) return Apartness{Sign::negative, -iv.hi / Rational(2), p};
  }
  return std::nullopt;
}

/// Endpoint product of positive reals.  Lower endpoints are clamped to the
/// certified bounds, and the operands are queried at n·(B_x + B_y) where B
/// bounds each operand from above.
inline RefinedReal real_mul_pos(const RefinedReal& x, const RefinedReal& y, const Apartness& cx,
                                const Apartness& cy) {
  if (cx.sign != Sign::positive || !verify(x, cx) || cy.sign != Sign::positive || !verify(y, cy))
    throw Error(errc::invalid_certificate, "multiplication needs positive certificates");
  const Rational bound = x.refine(1).hi + y.refine(1).hi;
  const Rational bx = cx.bound, by = cy.bound;
  return RefinedReal([x, y, bound, bx, by](std::uint64_t n) {
    std::uint64_t p = detail::precision_ceil(bound * Rational(Integer(static_cast<std::int64_t>(n))));
    Interval a = x.refine(p), b = y.refine(p);
    return Interval{max(a.lo, bx) * max(b.lo, by), a.hi * b.hi};
  });
}

/// 1/x from an apartness certificate with bound β, querying x at ⌈n/β²⌉.
inline RefinedReal real_recip(const RefinedReal& x, const Apartness& cert) {
  if (!verify(x, cert)) throw Error(errc::invalid_certificate, "apartness certificate does not verify");
  if (cert.sign == Sign::negative) {
    Apartness flipped{Sign::positive, cert.bound, cert.precision};
    return real_neg(real_recip(real_neg(x), flipped));
  }
  const Rational beta = cert.bound;
  return RefinedReal([x, beta](std::uint64_t n) {
    std::uint64_t p = detail::precision_ceil(Rational(Integer(static_cast<std::int64_t>(n))) / (beta * beta));
    Interval a = x.refine(p);
    return Interval{Rational(1) / a.hi, Rational(1) / max(a.lo, beta)};
  });
}

/// (x + m)(y + n) - n·x - m·y - m·n for naturals m, n making both shifted
/// operands positive.
inline RefinedReal real_mul_shifted(const RefinedReal& x, const RefinedReal& y, const Natural& m,
                                    const Natural& n, Budget budget) {
  RefinedReal xs = real_add(x, real_from_rational(Rational(m)));
  RefinedReal ys = real_add(y, real_from_rational(Rational(n)));
  auto cx = find_apartness(xs, budget), cy = find_apartness(ys, budget);
  if (!cx || cx->sign != Sign::positive || !cy || cy->sign != Sign::positive)
    throw Error(errc::budget_exceeded, "shifted operands not certified positive");
  RefinedReal product = real_mul_pos(xs, ys, *cx, *cy);
  RefinedReal result = real_sub(product, real_scale(Rational(n), x));
  result = real_sub(result, real_scale(Rational(m), y));
  return real_sub(result, real_from_rational(Rational(m * n)));
}

/// Smallest natural m with lo(x, p) + m > 0 over probes p = 1, 2, 4, ... <= budget.
inline Natural lower_shift(const RefinedReal& x, Budget budget) {
  std::optional<Natural> best;
  for (std::uint64_t p = 1; p <= budget && p != 0; p *= 2) {
    Rational lo = x.refine(p).lo;
    Natural m = lo.sign() > 0 ? Natural(0) : (-lo).floor().magnitude() + Natural(1);
    if (!best || m < *best) best = m;
    if (p > std::numeric_limits<std::uint64_t>::max() / 2) break;
  }
  if (!best) throw Error(errc::budget_exceeded, "no probe precision within budget");
  return *best;
}

/// Total multiplication through positive shifts.
inline RefinedReal real_mul_total(const RefinedReal& x, const RefinedReal& y, Budget budget) {
  return real_mul_shifted(x, y, lower_shift(x, budget), lower_shift(y, budget), budget);
}

// ---------------------------------------------------------------------------
// Comparison and output.

struct RealComparison {
  Ordering order = Ordering::unknown;
  std::uint64_t precision = 0;  // where the answer was decided
};

/// Refines at 1..budget: LESS once hi < q, GREATER once lo > q.
inline RealComparison real_cmp_rat(const RefinedReal& x, const Rational& q, Budget budget) {
  for (std::uint64_t p = 1; p <= budget; ++p) {
    Interval iv = x.refine(p);
    if (iv.hi < q) return {Ordering::less, p};
    if (q < iv.lo) return {Ordering::greater, p};
  }
  return {};
}

/// Decides x < y or y < x by the sign of x - y.
inline Ordering real_compare(const RefinedReal& x, const RefinedReal& y, Budget budget) {
  return real_cmp_rat(real_sub(x, y), Rational(0), budget).order;
}

struct DecimalResult {
  std::string text;
  Interval interval;
  std::uint64_t precision = 0;

  std::string certificate() const {
    return "interval lo=" + interval.lo.str() + " hi=" + interval.hi.str() +
           " precision=" + std::to_string(precision);
  }
};

/// Doubles the precision (at most `budget` times) until the width is at
/// most 10^-digits, then prints the midpoint truncated toward zero.
inline DecimalResult real_to_decimal(const RefinedReal& x, std::size_t digits, Budget budget) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational target(mpq_class(1, scale));
  std::uint64_t p = 1;
  for (Budget k = 0; k <= budget && k < 63; ++k, p *= 2) {
    Interval iv = x.refine(p);
    if (iv.width() <= target) return {iv.midpoint().decimal(digits), iv, p};
  }
  throw Error(errc::budget_exceeded, "width 10^-" + std::to_string(digits) + " not reached within budget");
}

}  // namespace streak
