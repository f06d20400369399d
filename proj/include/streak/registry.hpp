#pragma once

// Streaks by name, each with a seeded element sampler, plus the suite runner
// behind `streak_cli check`.

#include <bit>
#include <string>
#include <string_view>

#include "streak/axioms.hpp"
#include "streak/basic.hpp"
#include "streak/cauchy.hpp"
#include "streak/real_streak.hpp"
#include "streak/reflections/field.hpp"
#include "streak/reflections/finset.hpp"
#include "streak/reflections/halved.hpp"
#include "streak/reflections/ring.hpp"

namespace streak {

struct RegisteredStreak {
  StreakPtr streak;
  Sampler sample;
};

namespace detail {

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// a_i = q + (-1)^i / (i + 1); |a_i - a_j| <= 2/(M + 1), so M(n) = 2n.
inline CauchyReal wobbling(const Rational& q) {
  return CauchyReal(
      [q](std::uint64_t i) {
        Rational step(Integer(1), Integer(Natural(i + 1)));
        return i % 2 == 0 ? q + step : q - step;
      },
      [](std::uint64_t n) { return detail::checked_mul(2, n); });
}

inline RegisteredStreak ring_of(const RegisteredStreak& base) {
  auto ring = std::make_shared<const RingLift>(base.streak);
  Sampler sample = [ring, inner = base.sample](Rng& rng) {
    const Element a = ring->rho(inner(rng), 64), b = ring->rho(inner(rng), 64);
    return ring->add(a, ring->neg(b));
  };
  return {ring, sample};
}

inline RegisteredStreak field_of(const RegisteredStreak& base) {
  auto field = std::make_shared<const FieldLift>(base.streak);
  const StreakPtr ring = base.streak;
  Sampler sample = [field, ring, inner = base.sample](Rng& rng) {
    const Element num = inner(rng);
    Element den = inner(rng);
    if (!is_yes(ring->below(Rational(0), den, 64))) den = ring->add(ring->neg(den), ring->one());
    return field->fraction(num, den, 64);
  };
  return {field, sample};
}

template <class Lift>
RegisteredStreak finite_sets_of(const RegisteredStreak& base) {
  auto lift = std::make_shared<const Lift>(base.streak);
  Sampler sample = [lift, inner = base.sample](Rng& rng) {
    std::vector<Element> items;
    for (std::int64_t k = uniform(rng, 1, 4); k > 0; --k) items.push_back(inner(rng));
    return lift->set(std::move(items));
  };
  return {lift, sample};
}

inline RegisteredStreak real_entry() {
  auto reals = std::make_shared<const RealStreak>();
  Sampler sample = [reals](Rng& rng) {
    const Rational q = random_rational(rng);
    switch (uniform(rng, 0, 2)) {
      case 0: return reals->wrap(real_from_rational(q));
      case 1: return reals->wrap(cs_to_real(wobbling(q)));
      default: return reals->wrap(real_embed(rat_streak(), rat_streak()->wrap(q), 64));
    }
  };
  return {reals, sample};
}

}  // namespace detail

/// Resolves `nat`, `int`, `rat`, `dyadic`, `real`, and the prefixes
/// `ring:`, `field:`, `finmeet:`, `finjoin:` applied to any resolvable name.
inline RegisteredStreak resolve_streak(std::string_view name) {
  using detail::uniform;
  if (name == "nat") {
    auto s = nat_streak();
    return {s, [s](Rng& rng) { return s->wrap(Natural(static_cast<std::uint64_t>(uniform(rng, 0, 20)))); }};
  }
  if (name == "int") {
    auto s = int_streak();
    return {s, [s](Rng& rng) { return s->wrap(Integer(uniform(rng, -20, 20))); }};
  }
  if (name == "rat") {
    auto s = rat_streak();
    return {s, [s](Rng& rng) { return s->wrap(random_rational(rng)); }};
  }
  if (name == "dyadic") {
    auto s = std::make_shared<const HalvedLift>(int_streak());
    return {s, [s](Rng& rng) {
              const Element m = int_streak()->wrap(Integer(uniform(rng, -40, 40)));
              return s->dyadic(m, static_cast<std::uint64_t>(uniform(rng, 0, 4)));
            }};
  }
  if (name == "real") return detail::real_entry();

  auto strip = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    return name.substr(prefix.size());
  };
  try {
    if (auto rest = strip("ring:")) return detail::ring_of(resolve_streak(*rest));
    if (auto rest = strip("field:")) return detail::field_of(resolve_streak(*rest));
    if (auto rest = strip("finmeet:")) return detail::finite_sets_of<FinMeet>(resolve_streak(*rest));
    if (auto rest = strip("finjoin:")) return detail::finite_sets_of<FinJoin>(resolve_streak(*rest));
  } catch (const Error& e) {
    if (e.code() == errc::unknown_streak) throw;
    throw Error(errc::unknown_streak, std::string(name) + " cannot be built: " + e.what());
  }
  throw Error(errc::unknown_streak, "no streak named " + std::string(name));
}

inline LowerReal sample_lower(Rng& rng) {
  const Rational q = random_rational(rng);
  const std::uint64_t silent = static_cast<std::uint64_t>(detail::uniform(rng, 0, 3));
  switch (detail::uniform(rng, 0, 2)) {
    case 0: return lower_from_rational(q);
    case 1:
      // q - 1/(k + 1) after a BOTTOM prefix
      return LowerReal([q, silent](std::uint64_t k) -> std::optional<Rational> {
        if (k < silent) return std::nullopt;
        return q - Rational(Integer(1), Integer(Natural(k + 1)));
      });
    default: return real_to_pair(cs_to_real(detail::wobbling(q))).first;
  }
}

inline UpperReal sample_upper(Rng& rng) {
  const Rational q = random_rational(rng);
  const std::uint64_t silent = static_cast<std::uint64_t>(detail::uniform(rng, 0, 3));
  switch (detail::uniform(rng, 0, 2)) {
    case 0: return upper_from_rational(q);
    case 1:
      return UpperReal([q, silent](std::uint64_t k) -> std::optional<Rational> {
        if (k < silent) return std::nullopt;
        return q + Rational(Integer(1), Integer(Natural(k + 1)));
      });
    default: return real_to_pair(cs_to_real(detail::wobbling(q))).second;
  }
}

/// Runs the law suite registered for `name`; `lower` and `upper` get the
/// one-sided suites, everything else the streak axiom suite.
inline std::vector<Report> check_streak(std::string_view name, const SuiteConfig& cfg) {
  if (name == "lower") return lower_suite(sample_lower, cfg);
  if (name == "upper") return upper_suite(sample_upper, cfg);
  RegisteredStreak entry = resolve_streak(name);
  return axiom_suite(*entry.streak, entry.sample, cfg);
}

// ---------------------------------------------------------------------------
// Demo Cauchy constants and families for the expression language.

/// Partial sums of 1 + 1/2 + 1/4 + ...; |a_i - a_j| < 2^-min(i, j), so
/// M(n) = bit width of n.
inline CauchyReal geometric_partial_sums() {
  return CauchyReal(
      [](std::uint64_t i) { return Rational(2) - Rational(Natural(1)) / Rational(pow2(i)); },
      [](std::uint64_t n) { return static_cast<std::uint64_t>(std::bit_width(n)); });
}

/// Named constants usable bare in expressions.
inline std::optional<CauchyReal> find_constant(std::string_view name) {
  if (name == "geom") return geometric_partial_sums();
  return std::nullopt;
}

struct NamedFamily {
  CauchyFamily family;
  CauchyReal::Modulus outer;
};

/// Families usable as lim(name).
///   geom:   k ↦ constant partial sum up to 2^-k, converging to 2
///   shrink: k ↦ (1 + 1/(k + 1) + 1/(i + 1))_i, converging to 1
inline std::optional<NamedFamily> find_family(std::string_view name) {
  if (name == "geom") {
    auto sums = geometric_partial_sums();
    return NamedFamily{[sums](std::uint64_t k) { return cs_const(sums.term(k)); },
                       [](std::uint64_t n) { return static_cast<std::uint64_t>(std::bit_width(n)); }};
  }
  if (name == "shrink") {
    return NamedFamily{[](std::uint64_t k) {
                         const Rational base = Rational(1) + Rational(Integer(1), Integer(Natural(k + 1)));
                         return CauchyReal(
                             [base](std::uint64_t i) { return base + Rational(Integer(1), Integer(Natural(i + 1))); },
                             [](std::uint64_t n) { return n; });
                       },
                       [](std::uint64_t n) { return n; }};
  }
  return std::nullopt;
}

}  // namespace streak
