#pragma once

// Cauchy sequences of rationals with an explicit modulus of convergence M:
// n·a_i < 1 + n·a_j whenever i, j >= M(n).

#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "streak/refined_real.hpp"

namespace streak {

class CauchyReal {
 public:
  using Term = std::function<Rational(std::uint64_t)>;
  using Modulus = std::function<std::uint64_t(std::uint64_t)>;

  CauchyReal(Term term, Modulus modulus) : state_(std::make_shared<State>()) {
    state_->term = std::move(term);
    state_->modulus = std::move(modulus);
  }

  Rational term(std::uint64_t i) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      if (auto it = state_->terms.find(i); it != state_->terms.end()) return it->second;
    }
    Rational v = state_->term(i);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->terms.emplace(i, v);
    return v;
  }

  std::uint64_t modulus(std::uint64_t n) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      if (auto it = state_->moduli.find(n); it != state_->moduli.end()) return it->second;
    }
    std::uint64_t v = state_->modulus(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->moduli.emplace(n, v);
    return v;
  }

  /// a_{M(n)}, the term every later term stays within 1/n of.
  Rational settled(std::uint64_t n) const { return term(modulus(n)); }

 private:
  struct State {
    Term term;
    Modulus modulus;
    std::mutex mu;
    std::map<std::uint64_t, Rational> terms;
    std::map<std::uint64_t, std::uint64_t> moduli;
  };
  std::shared_ptr<State> state_;
};

/// Constant sequence; every map is its modulus, so M = 0.
inline CauchyReal cs_const(const Rational& q) {
  return CauchyReal([q](std::uint64_t) { return q; }, [](std::uint64_t) { return std::uint64_t{0}; });
}

namespace detail {

inline Rational nat_rat(std::uint64_t n) {
  Natural v(n);
  return Rational(v);
}

}  // namespace detail

struct ModulusViolation {
  std::uint64_t n = 0, i = 0, j = 0;
};

struct ValidationReport {
  std::optional<ModulusViolation> violation;

  bool ok() const { return !violation.has_value(); }
  std::string describe() const {
    if (ok()) return "modulus law holds";
    return "violation at n=" + std::to_string(violation->n) + ", i=" + std::to_string(violation->i) +
           ", j=" + std::to_string(violation->j);
  }
};

/// Checks n·a_i < 1 + n·a_j for n <= n_max and M(n) <= i, j <= idx_max and
/// reports the first violation in (n, i, j) order.
inline ValidationReport cs_validate(const CauchyReal& x, std::uint64_t n_max, std::uint64_t idx_max) {
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t start = x.modulus(n);
    if (start > idx_max) continue;
    const Rational nn = detail::nat_rat(n);
    Rational lowest = x.term(start);
    for (std::uint64_t j = start + 1; j <= idx_max; ++j) lowest = min(lowest, x.term(j));
    for (std::uint64_t i = start; i <= idx_max; ++i) {
      if (nn * x.term(i) < Rational(1) + nn * lowest) continue;
      for (std::uint64_t j = start; j <= idx_max; ++j)
        if (!(nn * x.term(i) < Rational(1) + nn * x.term(j))) return {ModulusViolation{n, i, j}};
    }
  }
  return {};
}

struct CauchyComparison {
  Ordering order = Ordering::unknown;
  std::uint64_t n = 0;
};

/// a < b iff n·a_{M(n)} + 2 < n·b_{N(n)} for some n; searches n <= budget.
inline CauchyComparison cs_lt(const CauchyReal& x, const CauchyReal& y, Budget budget) {
  for (std::uint64_t n = 1; n <= budget; ++n) {
    const Rational nn = detail::nat_rat(n);
    const Rational a = nn * x.settled(n), b = nn * y.settled(n);
    if (a + Rational(2) < b) return {Ordering::less, n};
    if (b + Rational(2) < a) return {Ordering::greater, n};
  }
  return {};
}

/// Termwise sum with modulus n ↦ sup{M(2n), N(2n)}.
inline CauchyReal cs_add(const CauchyReal& x, const CauchyReal& y) {
  return CauchyReal([x, y](std::uint64_t i) { return x.term(i) + y.term(i); },
                    [x, y](std::uint64_t n) {
                      const std::uint64_t k = detail::checked_mul(2, n);
                      return std::max(x.modulus(k), y.modulus(k));
                    });
}

struct Positivity {
  Semi answer = Semi::no_within_budget;
  std::optional<std::uint64_t> n;  // n·a_k > 1 for every k >= n
};

/// Searches n <= budget with n·a_k > 1 for all k >= n.  The tail k >= M(m)
/// is covered once m·n·a_{M(m)} >= m + n, since later terms stay above
/// a_{M(m)} - 1/m; the finitely many k in [n, M(m)) are checked directly.
inline Positivity cs_positive(const CauchyReal& x, Budget budget) {
  for (std::uint64_t n = 1; n <= budget; ++n) {
    const Rational nn = detail::nat_rat(n);
    for (std::uint64_t m = 1; m <= budget; ++m) {
      const Rational mm = detail::nat_rat(m);
      if (mm * nn * x.settled(m) < mm + nn) continue;
      bool head_ok = true;
      for (std::uint64_t k = n; k < x.modulus(m) && head_ok; ++k) head_ok = Rational(1) < nn * x.term(k);
      if (head_ok) return {Semi::yes, n};
    }
  }
  return {};
}

/// Termwise product of positive sequences.  With n a common positivity and
/// size bound, the modulus is O(m) = sup{M(2nm), N(2nm), M(1), N(1), n}.
inline CauchyReal cs_mul(const CauchyReal& x, const CauchyReal& y, Budget budget = 64) {
  Positivity px = cs_positive(x, budget), py = cs_positive(y, budget);
  if (!px.n || !py.n) throw Error(errc::not_certified_positive, "cs_mul operands not certified positive");
  auto size_bound = [](const CauchyReal& s) {
    // terms beyond M(1) stay below a_{M(1)} + 1
    return static_cast<std::uint64_t>(((s.settled(1) + Rational(1)).floor() + Integer(1)).to_i64());
  };
  const std::uint64_t n = std::max({*px.n, *py.n, size_bound(x), size_bound(y)});
  return CauchyReal([x, y](std::uint64_t i) { return x.term(i) * y.term(i); },
                    [x, y, n](std::uint64_t m) {
                      std::uint64_t k = detail::checked_mul(detail::checked_mul(2, n), m);
                      return std::max({x.modulus(k), y.modulus(k), x.modulus(1), y.modulus(1), n});
                    });
}

using CauchyFamily = std::function<CauchyReal(std::uint64_t)>;

/// Diagonal limit of a family that is Cauchy with modulus `outer`:
/// s_i = b_{k, N_k(3i)} with k = M*(3i), and O(n) = n, where M* is a
/// nondecreasing bound for `outer`.  For i, j >= n both terms lie within
/// 1/(3n) of members whose limits are within 1/(3n) of each other.
inline CauchyReal cs_limit(CauchyFamily family, CauchyReal::Modulus outer) {
  struct Members {
    CauchyFamily make;
    std::mutex mu;
    std::map<std::uint64_t, CauchyReal> cache;
    CauchyReal at(std::uint64_t i) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(i); it != cache.end()) return it->second;
      }
      CauchyReal b = make(i);
      std::lock_guard<std::mutex> lock(mu);
      return cache.emplace(i, b).first->second;
    }
  };
  auto members = std::make_shared<Members>();
  members->make = std::move(family);
  // max of M(0) and M(2^j) for 2^j up to the first power >= n: nondecreasing
  // in n, and at least M(n) whenever M itself is nondecreasing.
  struct DyadicMax {
    CauchyReal::Modulus raw;
    std::mutex mu;
    std::vector<std::uint64_t> prefix;  // prefix[j] = max(M(0), M(1), ..., M(2^(j-1)))
    std::uint64_t at(std::uint64_t n) {
      if (n > std::uint64_t{1} << 63) throw Error(errc::budget_exceeded, "precision overflow");
      const std::size_t levels = n <= 1 ? n + 1 : static_cast<std::size_t>(std::bit_width(n - 1)) + 2;
      std::lock_guard<std::mutex> lock(mu);
      while (prefix.size() < levels) {
        const std::uint64_t point = prefix.empty() ? 0 : std::uint64_t{1} << (prefix.size() - 1);
        const std::uint64_t v = raw(point);
        prefix.push_back(prefix.empty() ? v : std::max(prefix.back(), v));
      }
      return prefix[levels - 1];
    }
  };
  auto outer_max = std::make_shared<DyadicMax>();
  outer_max->raw = std::move(outer);
  return CauchyReal(
      [members, outer_max](std::uint64_t i) {
        const std::uint64_t precision = detail::checked_mul(3, i);
        CauchyReal b = members->at(outer_max->at(precision));
        return b.term(b.modulus(precision));
      },
      [](std::uint64_t n) { return n; });
}

/// Precision n ↦ [a_{M(n)} - 1/n, a_{M(n)} + 1/n].
inline RefinedReal cs_to_real(const CauchyReal& x) {
  return RefinedReal([x](std::uint64_t n) {
    const Rational centre = x.settled(n);
    const Rational radius = Rational(1) / detail::nat_rat(n);
    return Interval{centre - radius, centre + radius};
  });
}

}  // namespace streak
