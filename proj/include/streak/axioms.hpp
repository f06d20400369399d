#pragma once

// Seeded law checks for streaks, streak maps, and one-sided reals.
//
// Answers are three-valued: YES, a definite NO (from a decidable streak), or
// an inconclusive NO_WITHIN_BUDGET.  A law fails only on a definite
// contradiction, so semidecidable streaks are checked one-sidedly.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "streak/one_sided.hpp"

namespace streak {

using Rng = std::mt19937_64;
using Sampler = std::function<Element(Rng&)>;

/// Uniform p/d with |p| <= max_num and 1 <= d <= max_den.
inline Rational random_rational(Rng& rng, std::int64_t max_num = 12, std::int64_t max_den = 8) {
  std::uniform_int_distribution<std::int64_t> num(-max_num, max_num), den(1, max_den);
  const std::int64_t p = num(rng), d = den(rng);
  return Rational(Integer(p), Integer(d));
}

struct Report {
  std::string law;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // the first few only

  bool passed() const { return failures == 0; }
};

inline bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

struct SuiteConfig {
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  Budget budget = 16;
};

namespace detail {

constexpr std::size_t kMaxCounterexamples = 3;

/// Collects per-law tallies in first-seen order.
class Tally {
 public:
  void check(const std::string& law, bool ok, const std::function<std::string()>& describe) {
    Report& r = find(law);
    ++r.trials;
    if (ok) return;
    ++r.failures;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(describe());
  }
  /// Registers a law whose premise did not hold on this trial.
  void skip(const std::string& law) { find(law); }

  std::vector<Report> take() { return std::move(reports_); }

 private:
  Report& find(const std::string& law) {
    for (auto& r : reports_)
      if (r.law == law) return r;
    reports_.push_back(Report{law, 0, 0, {}});
    return reports_.back();
  }
  std::vector<Report> reports_;
};

/// YES, definite NO, or inconclusive.
inline Tri tri(Semi s, bool decidable) {
  if (s == Semi::yes) return Tri::yes;
  return decidable ? Tri::no : Tri::unknown;
}

inline Rational dyadic_step(std::uint64_t j) { return Rational(Natural(1)) / Rational(pow2(j)); }

}  // namespace detail

/// Checks the streak laws on sampled elements: order against rationals on
/// both sides, the induced strict order, the monoid laws, distributivity,
/// monotonicity, and the archimedean property.
inline std::vector<Report> axiom_suite(const Streak& s, const Sampler& sample, const SuiteConfig& cfg = {}) {
  Rng rng(cfg.seed);
  detail::Tally t;
  const Budget b = cfg.budget;
  const bool dec = s.decidable();
  auto B = [&](const Rational& q, const Element& x) { return detail::tri(s.below(q, x, b), dec); };
  auto A = [&](const Element& x, const Rational& q) { return detail::tri(s.above(x, q, b), dec); };
  auto L = [&](const Element& x, const Element& y) { return detail::tri(s.less(x, y, b), dec); };
  auto show = [&](const Element& x) { return s.show(x); };
  // x ≈ y is contradicted only by a YES in either direction.
  auto apart = [&](const Element& x, const Element& y) { return L(x, y) == Tri::yes || L(y, x) == Tri::yes; };
  auto positive = [&](const Element& x) { return B(Rational(0), x) == Tri::yes; };

  t.check("zero below one", L(s.zero(), s.one()) != Tri::no && B(Rational(0), s.one()) != Tri::no,
          [] { return std::string("0 < 1 refuted"); });

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    // every eighth trial reuses x as y so laws conditioned on x ≈ y are exercised
    const Element x = sample(rng), fresh = sample(rng), z = sample(rng);
    const Element y = trial % 8 == 7 ? x : fresh;
    Rational q = random_rational(rng), r = random_rational(rng);
    if (r < q) std::swap(q, r);
    auto ctx = [&](const std::string& what) {
      return what + " with x=" + show(x) + " y=" + show(y) + " z=" + show(z) + " q=" + q.str() + " r=" + r.str();
    };

    t.check("asymmetry", !(B(q, x) == Tri::yes && A(x, q) == Tri::yes), [&] { return ctx("q < x and x < q"); });

    // Boundedness: some -2^j lies below x and some 2^j above.
    {
      bool lower = false, upper = false;
      for (std::uint64_t j = 0; j <= 64 && !(lower && upper); ++j) {
        Rational p(pow2(j));
        lower = lower || B(-p, x) == Tri::yes;
        upper = upper || A(x, p) == Tri::yes;
      }
      t.check("boundedness", lower && upper, [&] { return ctx("no rational bound found for x"); });
    }

    if (q < r) {
      t.check("cotransitivity", !(B(q, x) == Tri::no && A(x, r) == Tri::no),
              [&] { return ctx("neither q < x nor x < r"); });
      t.check("lower bounds are down-closed", !(B(r, x) == Tri::yes && B(q, x) == Tri::no),
              [&] { return ctx("r < x but not q < x"); });
      t.check("upper bounds are up-closed", !(A(x, q) == Tri::yes && A(x, r) == Tri::no),
              [&] { return ctx("x < q but not x < r"); });
    } else {
      t.skip("cotransitivity");
    }

    // Roundedness: q < x gives q + 2^-j < x for some j, and dually.
    if (B(q, x) == Tri::yes) {
      bool found = false;
      for (std::uint64_t j = 0; j <= 64 && !found; ++j) found = B(q + detail::dyadic_step(j), x) == Tri::yes;
      t.check("roundedness below", found, [&] { return ctx("q < x without a larger lower bound"); });
    } else {
      t.skip("roundedness below");
    }
    if (A(x, r) == Tri::yes) {
      bool found = false;
      for (std::uint64_t j = 0; j <= 64 && !found; ++j) found = A(x, r - detail::dyadic_step(j)) == Tri::yes;
      t.check("roundedness above", found, [&] { return ctx("x < r without a smaller upper bound"); });
    } else {
      t.skip("roundedness above");
    }

    // The strict order is the one induced by rationals.
    t.check("irreflexivity", L(x, x) != Tri::yes, [&] { return ctx("x < x"); });
    t.check("order asymmetry", !(L(x, y) == Tri::yes && L(y, x) == Tri::yes), [&] { return ctx("x < y < x"); });
    t.check("order transitivity", !(L(x, y) == Tri::yes && L(y, z) == Tri::yes && L(x, z) == Tri::no),
            [&] { return ctx("x < y < z but not x < z"); });
    if (L(x, y) == Tri::yes) {
      t.check("order has rational witness", strict_lt(s, x, y, std::max<Budget>(b, 64)).order == Ordering::less,
              [&] { return ctx("x < y without x < q < y"); });
    } else {
      t.skip("order has rational witness");
    }
    t.check("rational witness gives order", !(A(x, q) == Tri::yes && B(q, y) == Tri::yes && L(x, y) == Tri::no),
            [&] { return ctx("x < q < y but not x < y"); });
    if (dec && L(x, y) == Tri::no && L(y, x) == Tri::no) {
      t.check("extensionality", (B(q, x) == B(q, y)) && (A(x, q) == A(y, q)),
              [&] { return ctx("incomparable x, y separated by q"); });
    } else {
      t.skip("extensionality");
    }

    // Additive monoid and compatibility with the order.
    t.check("add associative", !apart(s.add(s.add(x, y), z), s.add(x, s.add(y, z))),
            [&] { return ctx("(x + y) + z apart from x + (y + z)"); });
    t.check("add commutative", !apart(s.add(x, y), s.add(y, x)), [&] { return ctx("x + y apart from y + x"); });
    t.check("add unit", !apart(s.add(x, s.zero()), x), [&] { return ctx("x + 0 apart from x"); });
    t.check("add reflects order", !(L(x, y) == Tri::yes && L(s.add(y, z), s.add(x, z)) == Tri::yes),
            [&] { return ctx("x < y but y + z < x + z"); });
    t.check("add preserves order", !(L(x, y) == Tri::yes && L(s.add(x, z), s.add(y, z)) == Tri::no),
            [&] { return ctx("x < y but not x + z < y + z"); });
    {
      const Element w = sample(rng);
      const bool premise = B(q, x) == Tri::yes && B(r, w) == Tri::yes;
      t.check("add monotone on lower bounds", !(premise && B(q + r, s.add(x, w)) == Tri::no),
              [&] { return ctx("q < x, r < w but not q + r < x + w with w=" + show(w)); });
      const bool upremise = A(x, q) == Tri::yes && A(w, r) == Tri::yes;
      t.check("add monotone on upper bounds", !(upremise && A(s.add(x, w), q + r) == Tri::no),
              [&] { return ctx("x < q, w < r but not x + w < q + r with w=" + show(w)); });
    }

    // Multiplicative monoid on positives, distributivity, monotonicity.
    // Positive operands are drawn by rejection, a few attempts each.
    auto draw_positive = [&]() -> std::optional<Element> {
      for (int attempt = 0; attempt < 16; ++attempt)
        if (Element e = sample(rng); positive(e)) return e;
      return std::nullopt;
    };
    const auto px = draw_positive(), py = draw_positive(), pz = draw_positive();
    if (px && py && pz) {
      auto pctx = [&](const std::string& what) {
        return what + " with x=" + show(*px) + " y=" + show(*py) + " z=" + show(*pz) + " q=" + q.str() +
               " r=" + r.str();
      };
      const Element xy = s.mul_pos(*px, *py);
      t.check("product of positives is positive", B(Rational(0), xy) != Tri::no,
              [&] { return pctx("x·y not positive"); });
      t.check("mul associative", !apart(s.mul_pos(xy, *pz), s.mul_pos(*px, s.mul_pos(*py, *pz))),
              [&] { return pctx("(x·y)·z apart from x·(y·z)"); });
      t.check("mul commutative", !apart(xy, s.mul_pos(*py, *px)), [&] { return pctx("x·y apart from y·x"); });
      t.check("mul unit", !apart(s.mul_pos(*px, s.one()), *px), [&] { return pctx("x·1 apart from x"); });
      t.check("distributivity", !apart(s.mul_pos(*px, s.add(*py, *pz)), s.add(xy, s.mul_pos(*px, *pz))),
              [&] { return pctx("x·(y + z) apart from x·y + x·z"); });
      const Rational quarter = Rational(Natural(1)) / Rational(Natural(4));
      const Rational pq = abs(q) / Rational(Natural(4)) + quarter, pr = abs(r) / Rational(Natural(4)) + quarter;
      const bool premise = B(pq, *px) == Tri::yes && B(pr, *py) == Tri::yes;
      t.check("mul monotone on lower bounds", !(premise && B(pq * pr, xy) == Tri::no),
              [&] { return pctx("p < x, p' < y but not p·p' < x·y"); });
    } else {
      for (const char* law : {"product of positives is positive", "mul associative", "mul commutative", "mul unit",
                              "distributivity", "mul monotone on lower bounds"})
        t.skip(law);
    }

    // Archimedean: x < y gives n with z + n·x < w + n·y, for n a power of two.
    if (L(x, y) == Tri::yes) {
      const Element w = sample(rng);
      bool found = false;
      for (std::uint64_t j = 0; j <= 40 && !found; ++j) {
        const Natural n = pow2(j);
        found = L(s.add(z, nat_scale(s, n, x)), s.add(w, nat_scale(s, n, y))) == Tri::yes;
      }
      t.check("archimedean", found || !dec, [&] { return ctx("no n with z + n·x < w + n·y for w=" + show(w)); });
    } else {
      t.skip("archimedean");
    }
  }
  return t.take();
}

/// Checks that f preserves and reflects comparisons with rationals on both
/// sides, and spot-checks f(a + b) ≈ f(a) + f(b).
inline std::vector<Report> morphism_check(const std::function<Element(const Element&)>& f, const Streak& from,
                                          const Streak& to, const Sampler& sample, const SuiteConfig& cfg = {}) {
  Rng rng(cfg.seed);
  detail::Tally t;
  const Budget b = cfg.budget;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const Element x = sample(rng), y = sample(rng);
    const Element fx = f(x);
    const Rational q = random_rational(rng);
    auto ctx = [&](const std::string& what) { return what + " with x=" + from.show(x) + " q=" + q.str(); };
    auto agree = [](Tri a, Tri c) { return !((a == Tri::yes && c == Tri::no) || (a == Tri::no && c == Tri::yes)); };

    const Tri bx = detail::tri(from.below(q, x, b), from.decidable());
    const Tri bfx = detail::tri(to.below(q, fx, b), to.decidable());
    t.check("preserves lower bounds", agree(bx, bfx), [&] { return ctx("q < x and q < f(x) disagree"); });
    const Tri ax = detail::tri(from.above(x, q, b), from.decidable());
    const Tri afx = detail::tri(to.above(fx, q, b), to.decidable());
    t.check("preserves upper bounds", agree(ax, afx), [&] { return ctx("x < q and f(x) < q disagree"); });

    const Element lhs = f(from.add(x, y)), rhs = to.add(fx, f(y));
    t.check("preserves addition",
            !(is_yes(to.less(lhs, rhs, b)) || is_yes(to.less(rhs, lhs, b))),
            [&] { return ctx("f(x + y) apart from f(x) + f(y) with y=" + from.show(y)); });
  }
  return t.take();
}

using LowerSampler = std::function<LowerReal(Rng&)>;
using UpperSampler = std::function<UpperReal(Rng&)>;

/// Lower-real laws on sampled streams: boundedness, down-closure,
/// roundedness, monotonicity of add and mul, shift invariance, and the
/// least-upper-bound property of countable suprema.
inline std::vector<Report> lower_suite(const LowerSampler& sample, const SuiteConfig& cfg = {}) {
  Rng rng(cfg.seed);
  detail::Tally t;
  const Budget b = cfg.budget;
  auto yes = [&](const Rational& q, const LowerReal& x) { return is_yes(lower_cmp_rat(q, x, b).answer); };
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const LowerReal x = sample(rng), y = sample(rng);
    Rational q = random_rational(rng), r = random_rational(rng);
    if (r < q) std::swap(q, r);
    auto ctx = [&](const std::string& what) { return what + " with q=" + q.str() + " r=" + r.str(); };

    bool bounded = false;
    for (std::uint64_t j = 0; j <= 64 && !bounded; ++j) bounded = yes(-Rational(pow2(j)), x);
    t.check("boundedness", bounded, [&] { return ctx("no lower bound found"); });

    t.check("lower bounds are down-closed", !(yes(r, x) && !yes(q, x)), [&] { return ctx("r < x but not q < x"); });

    if (yes(q, x)) {
      bool found = false;
      for (std::uint64_t j = 0; j <= 64 && !found; ++j) found = yes(q + detail::dyadic_step(j), x);
      t.check("roundedness", found, [&] { return ctx("q < x without a larger lower bound"); });
    } else {
      t.skip("roundedness");
    }

    t.check("add monotone", !(yes(q, x) && yes(r, y) && !yes(q + r, lower_add(x, y))),
            [&] { return ctx("q < x, r < y but not q + r < x + y"); });

    const Rational n(Integer(std::uniform_int_distribution<std::int64_t>(-5, 5)(rng)));
    const LowerReal shifted = lower_add(x, lower_from_rational(n));
    t.check("shift invariance", yes(q, x) == yes(q + n, shifted), [&] { return ctx("shift by " + n.str()); });

    const Rational one(1);
    if (yes(one / Rational(Natural(8)), x) && yes(one / Rational(Natural(8)), y)) {
      const LowerReal xy = lower_mul_pos(x, y, b);
      const Rational pq = abs(q) + one / Rational(Natural(4)), pr = abs(r) + one / Rational(Natural(4));
      t.check("mul monotone", !(yes(pq, x) && yes(pr, y) && !yes(pq * pr, xy)),
              [&] { return ctx("p < x, p' < y but not p·p' < x·y"); });
    } else {
      t.skip("mul monotone");
    }

    // Sup of {x, y, x, y, ...}: members' cuts are contained in the sup's,
    // and a sup bound comes from a member bound.
    const LowerReal s = lower_sup([x, y](std::uint64_t i) { return i % 2 == 0 ? x : y; });
    t.check("sup bounds members", !((yes(q, x) || yes(q, y)) && !is_yes(lower_cmp_rat(q, s, 2 * b + 1).answer)),
            [&] { return ctx("member bound missing from the sup"); });
    t.check("sup is least", !(yes(q, s) && !yes(q, x) && !yes(q, y)),
            [&] { return ctx("sup bound without a member bound"); });
  }
  return t.take();
}

/// The dual laws for upper reals.
inline std::vector<Report> upper_suite(const UpperSampler& sample, const SuiteConfig& cfg = {}) {
  Rng rng(cfg.seed);
  detail::Tally t;
  const Budget b = cfg.budget;
  auto yes = [&](const UpperReal& x, const Rational& q) { return is_yes(upper_cmp_rat(x, q, b).answer); };
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const UpperReal x = sample(rng), y = sample(rng);
    Rational q = random_rational(rng), r = random_rational(rng);
    if (r < q) std::swap(q, r);
    auto ctx = [&](const std::string& what) { return what + " with q=" + q.str() + " r=" + r.str(); };

    bool bounded = false;
    for (std::uint64_t j = 0; j <= 64 && !bounded; ++j) bounded = yes(x, Rational(pow2(j)));
    t.check("boundedness", bounded, [&] { return ctx("no upper bound found"); });

    t.check("upper bounds are up-closed", !(yes(x, q) && !yes(x, r)), [&] { return ctx("x < q but not x < r"); });

    if (yes(x, r)) {
      bool found = false;
      for (std::uint64_t j = 0; j <= 64 && !found; ++j) found = yes(x, r - detail::dyadic_step(j));
      t.check("roundedness", found, [&] { return ctx("x < r without a smaller upper bound"); });
    } else {
      t.skip("roundedness");
    }

    t.check("add monotone", !(yes(x, q) && yes(y, r) && !yes(upper_add(x, y), q + r)),
            [&] { return ctx("x < q, y < r but not x + y < q + r"); });

    const Rational n(Integer(std::uniform_int_distribution<std::int64_t>(-5, 5)(rng)));
    const UpperReal shifted = upper_add(x, upper_from_rational(n));
    t.check("shift invariance", yes(x, q) == yes(shifted, q + n), [&] { return ctx("shift by " + n.str()); });

    const UpperReal s = upper_inf([x, y](std::uint64_t i) { return i % 2 == 0 ? x : y; });
    t.check("inf bounds members", !((yes(x, q) || yes(y, q)) && !is_yes(upper_cmp_rat(s, q, 2 * b + 1).answer)),
            [&] { return ctx("member bound missing from the inf"); });
    t.check("inf is greatest", !(yes(s, q) && !yes(x, q) && !yes(y, q)),
            [&] { return ctx("inf bound without a member bound"); });
  }
  return t.take();
}

}  // namespace streak
