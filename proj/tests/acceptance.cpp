// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "streak/axioms.hpp"
#include "streak/basic.hpp"
#include "streak/cauchy.hpp"
#include "streak/dense.hpp"
#include "streak/one_sided.hpp"
#include "streak/real_streak.hpp"
#include "streak/reflections/field.hpp"
#include "streak/reflections/finset.hpp"
#include "streak/reflections/ring.hpp"
#include "streak/registry.hpp"

using namespace streak;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(Integer(p), Integer(d)); }
Rational nat(std::uint64_t n) { return Rational(Natural(n)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

CauchyReal wobbling_cs(const Rational& v) {
  return CauchyReal(
      [v](std::uint64_t i) { return (i % 2 ? v - Rational(1) / nat(i + 1) : v + Rational(1) / nat(i + 1)); },
      [](std::uint64_t n) { return 2 * n; });
}

CauchyReal harmonic_cs(const Rational& offset) {
  return CauchyReal([offset](std::uint64_t i) { return offset + Rational(1) / nat(i + 1); },
                    [](std::uint64_t n) { return n; });
}

RefinedReal wobbling(const Rational& v) { return cs_to_real(wobbling_cs(v)); }

Rational random_q(std::mt19937_64& rng, std::int64_t num_range = 20, std::int64_t max_den = 6) {
  std::uniform_int_distribution<std::int64_t> num(-num_range, num_range), den(1, max_den);
  return q(num(rng), den(rng));
}

bool overlap_upto(const RefinedReal& x, const RefinedReal& y, std::uint64_t upto) {
  for (std::uint64_t p = 1; p <= upto; ++p)
    if (!x.refine(p).overlaps(y.refine(p))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Outcome axiom_suites() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const char* name : {"nat", "int", "ring:nat", "rat", "field:ring:nat", "dyadic", "finmeet:rat", "finjoin:rat"}) {
    for (const auto& r : check_streak(name, {500, 1, 16})) {
      if (r.trials == 0) out.fail(std::string(name) + ": " + r.law + " ran no trials");
      if (!r.passed()) out.fail(std::string(name) + ": " + r.law + " failed " + std::to_string(r.failures) + " times");
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 30) out.fail("took " + std::to_string(seconds) + " s");
  if (out.ok) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << seconds << " s";
    out.detail = s.str();
  }
  return out;
}

Outcome oracle_isomorphisms() {
  Outcome out;
  std::mt19937_64 rng(2);
  auto ring = std::make_shared<const RingLift>(nat_streak());
  std::uniform_int_distribution<std::int64_t> iv(-1000, 1000);
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t x = iv(rng), y = iv(rng);
    const Element a = ring->from_integer(Integer(x)), b = ring->from_integer(Integer(y));
    if (is_yes(ring->less(a, b, 0)) != (x < y) || is_yes(ring->less(b, a, 0)) != (y < x))
      out.fail("ring:nat cmp " + std::to_string(x) + " " + std::to_string(y));
    const Element sum = ring->add(a, b), prod = ring->mul(a, b);
    if (ring->to_integer(sum) != Integer(x + y)) out.fail("ring:nat add");
    if (ring->to_integer(prod) != Integer(x * y)) out.fail("ring:nat mul");
    for (const Element* e : {&sum, &prod}) {
      const auto& [p, m] = ring->parts(*e);
      if (!ring->pos_part().is_zero(p) && !ring->pos_part().is_zero(m)) out.fail("ring:nat not canonical");
    }
  }

  FieldLift field(ring);
  for (int t = 0; t < 1000; ++t) {
    const Rational x = random_q(rng, 60, 15), y = random_q(rng, 60, 15);
    const Element a = field.from_rational(x), b = field.from_rational(y);
    if (is_yes(field.less(a, b, 0)) != (x < y) || is_yes(field.less(b, a, 0)) != (y < x))
      out.fail("field:ring:nat cmp " + x.str() + " " + y.str());
    const Element sum = field.add(a, b), prod = field.mul(a, b);
    if (*field.to_rational(sum) != x + y) out.fail("field:ring:nat add");
    if (*field.to_rational(prod) != x * y) out.fail("field:ring:nat mul");
    for (const Element* e : {&sum, &prod}) {
      const auto& [p, d] = field.parts(*e);
      const Integer num = ring->to_integer(p), den = ring->to_integer(d);
      if (den <= Integer(0) || Rational(num, den).den() != den.magnitude()) out.fail("field:ring:nat not reduced");
    }
  }
  return out;
}

Outcome quantifier_swap() {
  Outcome out;
  const std::vector<Rational> grid{q(-2), q(-1), q(-1, 2), q(0), q(1, 3), q(1), q(5, 2)};
  std::vector<std::vector<Element>> sets;
  for (unsigned mask = 1; mask < (1u << grid.size()); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<Element> s;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask & (1u << i)) s.push_back(rat_streak()->wrap(grid[i]));
    sets.push_back(s);
  }
  FinMeet meet(rat_streak());
  FinJoin join(rat_streak());
  std::size_t checks = 0, disagreements = 0;
  for (const auto& as : sets)
    for (const auto& bs : sets) {
      const Element ma = meet.set(as), mb = meet.set(bs);
      disagreements += is_yes(meet.less(ma, mb, 0)) != meet.less_forall_exists(ma, mb);
      const Element ja = join.set(as), jb = join.set(bs);
      disagreements += is_yes(join.less(ja, jb, 0)) != join.less_forall_exists(ja, jb);
      checks += 2;
    }
  out.detail = std::to_string(checks) + " checks";
  if (disagreements) out.fail(std::to_string(disagreements) + " disagreements in " + out.detail);
  return out;
}

Outcome modulus_validation() {
  Outcome out;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> pos(1, 15), den(1, 5);
  for (int t = 0; t < 200; ++t) {
    const CauchyReal x = wobbling_cs(random_q(rng)), y = wobbling_cs(random_q(rng));
    const ValidationReport add = cs_validate(cs_add(x, y), 32, 256);
    if (!add.ok()) out.fail("cs_add: " + add.describe());
    const CauchyReal a = wobbling_cs(q(pos(rng), den(rng))), b = harmonic_cs(q(pos(rng), den(rng)));
    const ValidationReport mul = cs_validate(cs_mul(a, b), 32, 256);
    if (!mul.ok()) out.fail("cs_mul: " + mul.describe());
    const Rational target = random_q(rng);
    const CauchyReal lim = cs_limit(
        [target](std::uint64_t k) { return wobbling_cs(target + Rational(1) / nat(k + 1)); },
        [](std::uint64_t n) { return n; });
    const ValidationReport l = cs_validate(lim, 32, 256);
    if (!l.ok()) out.fail("cs_limit: " + l.describe());
  }
  return out;
}

Outcome limit_contract() {
  Outcome out;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Rational v = random_q(rng);
    const CauchyReal x = wobbling_cs(v);

    // the limit of the constant family is never apart from its term
    const CauchyReal constant = cs_limit([x](std::uint64_t) { return x; }, [](std::uint64_t n) { return n; });
    for (Budget b : {16, 128, 512})
      if (cs_lt(constant, x, b).order != Ordering::unknown) out.fail("constant limit apart at " + v.str());

    // a_k = v + (-1)^k/(k+1) as reals, outer modulus 2n
    auto member = [v](std::uint64_t k) {
      const Rational step = Rational(1) / nat(k + 1);
      return wobbling_cs(k % 2 ? v - step : v + step);
    };
    const CauchyReal lim = cs_limit(member, [](std::uint64_t n) { return 2 * n; });
    const RefinedReal lim_real = cs_to_real(lim);
    for (std::uint64_t n = 1; n <= 32; ++n) {
      for (std::uint64_t k = 2 * n; k < 2 * n + 8; ++k) {
        const RefinedReal a = cs_to_real(member(k));
        // n·a_k ≤ n·lim + 1 is refuted only by an interval pair that separates them
        for (std::uint64_t p : {1, 4, 16, 64}) {
          if (nat(n) * a.refine(p).lo > nat(n) * lim_real.refine(p).hi + Rational(1))
            out.fail("distance bound at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return out;
}

struct Tree {
  RefinedReal real;
  Rational exact;
};

Tree random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<std::int64_t> num(-6, 6), den(1, 4);
  std::uniform_int_distribution<int> op(0, depth == 0 ? 1 : 9);
  const int pick = op(rng);
  if (pick <= 1) {
    const Rational v = q(num(rng), den(rng));
    return {pick == 0 ? real_from_rational(v) : wobbling(v), v};
  }
  Tree a = random_tree(rng, depth - 1);
  auto other = [&] { return random_tree(rng, depth - 1); };
  switch (pick) {
    case 2: {
      Tree b = other();
      return {real_add(a.real, b.real), a.exact + b.exact};
    }
    case 3:
      return {real_neg(a.real), -a.exact};
    case 4: {
      Tree b = other();
      return {real_sub(a.real, b.real), a.exact - b.exact};
    }
    case 5: {
      Tree b = other();
      return {real_mul_total(a.real, b.real, 64), a.exact * b.exact};
    }
    case 6: {
      Tree b = other();
      return {real_inf(a.real, b.real), min(a.exact, b.exact)};
    }
    case 7: {
      Tree b = other();
      return {real_sup(a.real, b.real), max(a.exact, b.exact)};
    }
    case 8:
      return {real_abs(a.real), abs(a.exact)};
    default: {
      if (a.exact.is_zero()) return a;
      auto cert = find_apartness(a.real, 40);
      if (!cert) return a;
      return {real_recip(a.real, *cert), Rational(1) / a.exact};
    }
  }
}

Outcome interval_soundness() {
  Outcome out;
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    const Tree tree = random_tree(rng, 1 + t % 5);
    std::optional<Interval> previous;
    for (std::uint64_t p = 1; p <= 64; ++p) {
      const Interval iv = tree.real.refine(p);
      const std::string where = "tree " + std::to_string(t) + " precision " + std::to_string(p);
      if (!iv.contains(tree.exact)) out.fail("containment, " + where);
      if (iv.width() > Rational(2) / nat(p)) out.fail("width, " + where);
      if (previous && !previous->contains(iv)) out.fail("nesting, " + where);
      previous = iv;
    }
  }
  return out;
}

Outcome shift_independence() {
  Outcome out;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> extra(1, 5);
  for (int t = 0; t < 200; ++t) {
    const RefinedReal x = wobbling(random_q(rng)), y = wobbling(random_q(rng));
    const Natural m = lower_shift(x, 64), n = lower_shift(y, 64);
    const RefinedReal a = real_mul_shifted(x, y, m, n, 64);
    const RefinedReal b = real_mul_shifted(x, y, m + Natural(extra(rng)), n + Natural(extra(rng)), 64);
    if (!overlap_upto(a, b, 64)) out.fail("disjoint intervals at pair " + std::to_string(t));
    if (real_compare(a, b, 64) != Ordering::unknown) out.fail("apart at pair " + std::to_string(t));
  }
  return out;
}

Outcome morphism_uniqueness() {
  Outcome out;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Rational v = random_q(rng, 50, 9);
    const RefinedReal direct = real_from_rational(v);
    const RefinedReal located = real_embed(rat_streak(), rat_streak()->wrap(v), 64);
    const RefinedReal sequence = cs_to_real(cs_const(v));
    const std::pair<const RefinedReal*, const RefinedReal*> pairs[] = {
        {&direct, &located}, {&located, &sequence}, {&direct, &sequence}};
    for (const auto& [a, b] : pairs) {
      if (!overlap_upto(*a, *b, 64)) out.fail("disjoint embeddings of " + v.str());
      if (real_compare(*a, *b, 64) != Ordering::unknown) out.fail("apart embeddings of " + v.str());
    }
  }
  return out;
}

Outcome dense_substreak() {
  Outcome out;
  const DenseSubstreak s(q(-1, 2));
  if (s.value(dense_generate(s, q(1, 4), q(1, 2), 64)) != q(3, 8)) out.fail("3/8 not produced for (1/4, 1/2)");
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> num(-500, 500), width(1, 400);
  for (int t = 0; t < 100; ++t) {
    const Rational lo = q(num(rng), 100), hi = lo + q(width(rng), 100);
    const Element e = dense_generate(s, lo, hi, 256);
    const Rational v = s.value(e);
    if (!is_yes(s.below(lo, e, 0)) || !is_yes(s.above(e, hi, 0)) || !(lo < v && v < hi))
      out.fail(v.str() + " not in (" + lo.str() + ", " + hi.str() + ")");
  }
  return out;
}

Outcome one_sided_suprema() {
  Outcome out;
  const LowerReal almost_one =
      lower_sup([](std::uint64_t k) { return lower_from_rational(Rational(1) - Rational(1) / nat(k + 1)); });
  std::vector<Rational> below, at_or_above;
  for (std::int64_t d : {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597, 2584, 4181})
    below.push_back(Rational(1) - q(1, d));
  for (std::int64_t v : {-100, -3, -1}) below.push_back(q(v));
  for (std::int64_t d : {3, 7, 11, 1000}) below.push_back(q(d - 1, d) - q(1, 2 * d));
  at_or_above.push_back(q(1));
  for (std::int64_t d : {2, 3, 10, 100, 1000, 10000, 100000}) at_or_above.push_back(Rational(1) + q(1, d));
  for (std::int64_t v : {2, 3, 5, 10, 100, 1000}) at_or_above.push_back(q(v));
  for (std::int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) at_or_above.push_back(Rational(1) + q(d, 7));
  if (below.size() + at_or_above.size() != 50) out.fail("probe set has " + std::to_string(below.size() + at_or_above.size()) + " points");
  for (const auto& v : below)
    if (!is_yes(lower_cmp_rat(v, almost_one, 10000).answer)) out.fail("no YES below 1 at " + v.str());
  for (const auto& v : at_or_above)
    if (is_yes(lower_cmp_rat(v, almost_one, 10000).answer)) out.fail("YES at " + v.str());
  return out;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(STREAK_CLI_PATH) + " " + args;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[512];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_determinism() {
  Outcome out;
  const CliRun first = cli("eval \"1/3 + 1/6\" --digits 6");
  if (first.code != 0) out.fail("exit code " + std::to_string(first.code));
  std::istringstream lines(first.out);
  std::string value, certificate;
  std::getline(lines, value);
  std::getline(lines, certificate);
  if (value != "0.500000") out.fail("printed \"" + value + "\"");
  // certificate line: interval lo=<q> hi=<q> precision=<n>
  const auto lo_at = certificate.find("lo="), hi_at = certificate.find(" hi="), p_at = certificate.find(" precision=");
  if (lo_at == std::string::npos || hi_at == std::string::npos || p_at == std::string::npos) {
    out.fail("no certificate in \"" + certificate + "\"");
  } else {
    const Rational lo = Rational::parse(certificate.substr(lo_at + 3, hi_at - lo_at - 3));
    const Rational hi = Rational::parse(certificate.substr(hi_at + 4, p_at - hi_at - 4));
    if (hi - lo > q(1, 1000000)) out.fail("certificate width " + (hi - lo).str());
    if (!(lo <= q(1, 2) && q(1, 2) <= hi)) out.fail("certificate misses 1/2");
  }
  for (int i = 0; i < 3; ++i)
    if (cli("eval \"1/3 + 1/6\" --digits 6").out != first.out) out.fail("output differs between runs");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suites for every registered streak, 500 trials", axiom_suites},
      {"ring:nat and field:ring:nat match the integer and rational oracles", oracle_isomorphisms},
      {"quantifier swap on a 7-point grid, subsets of size <= 4", quantifier_swap},
      {"cs_add, cs_mul and cs_limit outputs pass modulus validation", modulus_validation},
      {"limit of constants and the distance bound", limit_contract},
      {"interval soundness on 500 random trees", interval_soundness},
      {"total multiplication is independent of the shift", shift_independence},
      {"three embeddings of a rational agree", morphism_uniqueness},
      {"dense_generate lands in (q, r)", dense_substreak},
      {"lower_sup of 1 - 1/(k+1) within budget 10^4", one_sided_suprema},
      {"CLI eval is certified and deterministic", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
