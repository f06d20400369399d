#include <gtest/gtest.h>

#include "streak/axioms.hpp"
#include "streak/registry.hpp"

using namespace streak;

namespace {

/// Rationals, except every lower-bound query answers YES.
class BrokenBelow final : public Streak {
 public:
  std::string name() const override { return "broken"; }
  bool decidable() const override { return true; }
  Element wrap(const Rational& q) const { return make<Rational>(q); }
  const Rational& raw(const Element& x) const { return x.get<Rational>(); }

  Semi below(const Rational&, const Element&, Budget) const override { return Semi::yes; }
  Semi above(const Element& x, const Rational& q, Budget) const override {
    return raw(x) < q ? Semi::yes : Semi::no_within_budget;
  }
  Element zero() const override { return wrap(Rational(0)); }
  Element one() const override { return wrap(Rational(1)); }
  Element add(const Element& x, const Element& y) const override { return wrap(raw(x) + raw(y)); }
  Element mul_pos(const Element& x, const Element& y) const override { return wrap(raw(x) * raw(y)); }
  std::string show(const Element& x) const override { return raw(x).str(); }
};

const Report* find_law(const std::vector<Report>& reports, const std::string& law) {
  for (const auto& r : reports)
    if (r.law == law) return &r;
  return nullptr;
}

std::string failures_of(const std::vector<Report>& reports) {
  std::string out;
  for (const auto& r : reports)
    if (!r.passed()) {
      out += r.law + " (" + std::to_string(r.failures) + "/" + std::to_string(r.trials) + ")";
      for (const auto& c : r.counterexamples) out += "\n  " + c;
      out += "\n";
    }
  return out;
}

}  // namespace

TEST(AxiomSuite, RationalsPass) {
  const auto entry = resolve_streak("rat");
  const auto reports = axiom_suite(*entry.streak, entry.sample, {500, 1, 16});
  EXPECT_TRUE(all_passed(reports)) << failures_of(reports);
  for (const auto& r : reports) EXPECT_GT(r.trials, 0u) << r.law;
  ASSERT_NE(find_law(reports, "asymmetry"), nullptr);
  EXPECT_EQ(find_law(reports, "asymmetry")->trials, 500u);
}

TEST(AxiomSuite, FormalDifferencesOfRationalsPass) {
  const auto entry = resolve_streak("ring:rat");
  const auto reports = axiom_suite(*entry.streak, entry.sample, {500, 2, 16});
  EXPECT_TRUE(all_passed(reports)) << failures_of(reports);
}

TEST(AxiomSuite, PlantedFaultIsCaught) {
  BrokenBelow broken;
  const Sampler sample = [&](Rng& rng) { return broken.wrap(random_rational(rng)); };
  const auto reports = axiom_suite(broken, sample, {100, 3, 16});
  const Report* asym = find_law(reports, "asymmetry");
  ASSERT_NE(asym, nullptr);
  EXPECT_GT(asym->failures, 0u);
  EXPECT_FALSE(asym->counterexamples.empty());
  EXPECT_LE(asym->counterexamples.size(), 3u);
  EXPECT_FALSE(all_passed(reports));
}

TEST(AxiomSuite, DeterministicForASeed) {
  const auto entry = resolve_streak("finmeet:rat");
  const auto a = axiom_suite(*entry.streak, entry.sample, {80, 9, 16});
  const auto b = axiom_suite(*entry.streak, entry.sample, {80, 9, 16});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].law, b[i].law);
    EXPECT_EQ(a[i].trials, b[i].trials);
    EXPECT_EQ(a[i].failures, b[i].failures);
  }
}

TEST(AxiomSuite, EveryRegisteredStreakPasses) {
  for (const char* name : {"nat", "int", "ring:nat", "rat", "field:ring:nat", "field:int", "dyadic", "finmeet:rat",
                           "finjoin:rat", "finmeet:int", "lower", "upper"}) {
    const auto reports = check_streak(name, {120, 5, 16});
    EXPECT_TRUE(all_passed(reports)) << name << "\n" << failures_of(reports);
  }
  const auto reals = check_streak("real", {40, 5, 16});
  EXPECT_TRUE(all_passed(reals)) << failures_of(reals);
}

TEST(Registry, UnknownNames) {
  for (const char* name : {"bogus", "field:nat", "ring:", "finmeet:bogus"}) {
    try {
      resolve_streak(name);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::unknown_streak) << name;
    }
  }
  EXPECT_EQ(resolve_streak("field:ring:nat").streak->name(), "field:ring:nat");
}

TEST(MorphismCheck, InclusionIntoTheReals) {
  auto reals = std::make_shared<const RealStreak>(32);
  const auto rat = resolve_streak("rat");
  const auto reports = morphism_check(
      [&](const Element& x) { return reals->from_rational(rat_streak()->raw(x)); }, *rat.streak, *reals, rat.sample,
      {200, 4, 64});
  EXPECT_TRUE(all_passed(reports)) << failures_of(reports);
}

TEST(MorphismCheck, ShiftIsNotAMorphism) {
  const auto rat = resolve_streak("rat");
  const auto& s = *rat_streak();
  const auto reports =
      morphism_check([&](const Element& x) { return s.add(x, s.one()); }, s, s, rat.sample, {200, 4, 16});
  EXPECT_FALSE(all_passed(reports));
  const Report* lower = find_law(reports, "preserves lower bounds");
  ASSERT_NE(lower, nullptr);
  EXPECT_GT(lower->failures, 0u);
  EXPECT_FALSE(lower->counterexamples.empty());
}

TEST(MorphismCheck, IdentityOnDyadics) {
  const auto dyadic = resolve_streak("dyadic");
  const auto reports = morphism_check([](const Element& x) { return x; }, *dyadic.streak, *dyadic.streak,
                                      dyadic.sample, {200, 6, 16});
  EXPECT_TRUE(all_passed(reports)) << failures_of(reports);
}

TEST(MorphismCheck, EmbeddingOfDyadicsIntoTheReals) {
  auto reals = std::make_shared<const RealStreak>(32);
  const auto dyadic = resolve_streak("dyadic");
  const auto reports = morphism_check(
      [&](const Element& x) { return reals->wrap(real_embed(dyadic.streak, x, 64)); }, *dyadic.streak, *reals,
      dyadic.sample, {100, 8, 64});
  EXPECT_TRUE(all_passed(reports)) << failures_of(reports);
}

TEST(OneSidedSuites, PassOnSampledStreams) {
  const auto lower = lower_suite(sample_lower, {300, 11, 64});
  EXPECT_TRUE(all_passed(lower)) << failures_of(lower);
  const auto upper = upper_suite(sample_upper, {300, 11, 64});
  EXPECT_TRUE(all_passed(upper)) << failures_of(upper);
}

TEST(OneSidedSuites, PlantedFaultIsCaught) {
  // a stream that never emits a bound has an empty lower cut
  const LowerSampler silent = [](Rng&) { return LowerReal([](std::uint64_t) { return std::optional<Rational>(); }); };
  const auto reports = lower_suite(silent, {50, 12, 64});
  const Report* bounded = find_law(reports, "boundedness");
  ASSERT_NE(bounded, nullptr);
  EXPECT_EQ(bounded->failures, 50u);
  // an unbounded stream is the lower real ∞ and breaks nothing
  const LowerSampler infinite = [](Rng&) {
    return LowerReal([](std::uint64_t k) { return std::optional<Rational>(Rational(Natural(k))); });
  };
  EXPECT_TRUE(all_passed(lower_suite(infinite, {50, 12, 64})));
}
