#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <sys/wait.h>

#include "streak/expr.hpp"

using namespace streak;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(Integer(p), Integer(d)); }

using K = Expr::Kind;

ExprPtr lit(std::int64_t p, std::int64_t d = 1) { return make_literal(q(p, d)); }

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the CLI with stderr folded into stdout.
CliRun cli(const std::string& args) {
  const std::string cmd = std::string(STREAK_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[512];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

errc error_of(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return errc::precondition_failed;
}

/// Random expression text built from the grammar.
std::string random_text(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 11);
  std::uniform_int_distribution<std::int64_t> num(0, 30), den(1, 9);
  auto sub = [&] { return random_text(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return std::to_string(num(rng));
    case 1: return std::to_string(num(rng)) + "/" + std::to_string(den(rng));
    case 2: return std::to_string(num(rng)) + "." + std::to_string(den(rng));
    case 3: return "-" + sub();
    case 4: return "abs(" + sub() + ")";
    case 5: return "recip(" + sub() + ")";
    case 6: return sub() + " + " + sub();
    case 7: return sub() + " - " + sub();
    case 8: return sub() + " * " + sub();
    case 9: return "(" + sub() + ") / (" + sub() + ")";
    case 10: return "min(" + sub() + ", " + sub() + ")";
    default: return "max(" + sub() + "," + sub() + ")";
  }
}

}  // namespace

TEST(ParseExpr, GrammarInstance) {
  const ExprPtr e = parse_expr("1/3 + 2*abs(-5/2)");
  const ExprPtr expected =
      make_node(K::add, {lit(1, 3), make_node(K::mul, {lit(2), make_node(K::abs, {make_node(K::neg, {lit(5, 2)})})})});
  EXPECT_EQ(*e, *expected) << print_expr(*e);
}

TEST(ParseExpr, ExactDecimals) {
  EXPECT_EQ(*parse_expr("0.25"), *lit(1, 4));
  EXPECT_EQ(*parse_expr("  17  "), *lit(17));
}

TEST(ParseExpr, Precedence) {
  EXPECT_EQ(*parse_expr("1 - 2 - 3"), *make_node(K::sub, {make_node(K::sub, {lit(1), lit(2)}), lit(3)}));
  EXPECT_EQ(*parse_expr("1 + 2 * 3"), *make_node(K::add, {lit(1), make_node(K::mul, {lit(2), lit(3)})}));
  EXPECT_EQ(*parse_expr("1 / 3"), *make_node(K::div, {lit(1), lit(3)}));
  EXPECT_EQ(*parse_expr("1/3"), *lit(1, 3));
  EXPECT_EQ(*parse_expr("-2 * 3"), *make_node(K::mul, {make_node(K::neg, {lit(2)}), lit(3)}));
  EXPECT_EQ(*parse_expr("lim(geom) + geom"),
            *make_node(K::add, {make_named(K::lim, "geom"), make_named(K::constant, "geom")}));
}

TEST(ParseExpr, SyntaxErrorsCarryOffsets) {
  try {
    parse_expr("min(1,2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 8u);
    EXPECT_EQ(e.code(), errc::syntax_error);
  }
  for (const char* bad : {"", "1 +", "(1", "1 2", "abs 1", "min(1)", "max(1,2,3)", "1/0", "lim(1)", "*3"}) {
    EXPECT_THROW(parse_expr(bad), Error) << bad;
  }
  EXPECT_EQ(error_of("pi + 1"), errc::unknown_constant);
  EXPECT_EQ(error_of("lim(nothing)"), errc::unknown_constant);
}

TEST(ParseExpr, RoundTrip) {
  std::mt19937_64 rng(181);
  for (int t = 0; t < 500; ++t) {
    const std::string text = random_text(rng, 1 + t % 5);
    ExprPtr e;
    try {
      e = parse_expr(text);
    } catch (const Error& err) {
      // division by a literal zero
      EXPECT_EQ(err.code(), errc::division_by_zero) << text;
      continue;
    }
    const std::string printed = print_expr(*e);
    EXPECT_EQ(*parse_expr(printed), *e) << text << " -> " << printed;
    EXPECT_EQ(print_expr(*parse_expr(printed)), printed);
  }
}

TEST(EvalExpr, Examples) {
  EXPECT_EQ(eval_expr(*parse_expr("1/3 + 1/6"), {4, 64, 1}).text, "0.5000");
  EXPECT_EQ(eval_expr(*parse_expr("abs(-2) * max(1, 3/2)"), {2, 64, 1}).text, "3.00");
  try {
    eval_expr(*parse_expr("recip(1 - 1)"), {6, 64, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::apartness_undecided);
  }
  EXPECT_EQ(eval_expr(*parse_expr("1 / 3"), {5, 64, 1}).text, "0.33333");
  EXPECT_EQ(eval_expr(*parse_expr("-7/4"), {2, 64, 1}).text, "-1.75");
}

TEST(EvalExpr, CauchyConstants) {
  const DecimalResult g = eval_expr(*parse_expr("geom"), {4, 64, 1});
  EXPECT_LE(abs(Rational::parse(g.text) - q(2)), q(2, 10000));
  const DecimalResult l = eval_expr(*parse_expr("lim(shrink)"), {3, 64, 1});
  EXPECT_LE(abs(Rational::parse(l.text) - q(1)), q(2, 1000));
}

// The printed value is within 2·10^-digits of the exact rational value.
TEST(EvalExpr, CertifiedAgainstTheRationalOracle) {
  std::mt19937_64 rng(191);
  std::uniform_int_distribution<std::int64_t> num(-40, 40), den(1, 9);
  for (int t = 0; t < 200; ++t) {
    const Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng));
    if (c.is_zero()) continue;
    const std::string text = "(" + a.str() + ") * (" + b.str() + ") - max(" + a.str() + ", " + b.str() + ") / (" +
                             c.str() + ")";
    const Rational exact = a * b - max(a, b) / c;
    const std::size_t digits = static_cast<std::size_t>(t % 7);
    const DecimalResult r = eval_expr(*parse_expr(text), {digits, 64, 1});
    EXPECT_TRUE(r.interval.contains(exact)) << text;
    EXPECT_LE(abs(Rational::parse(r.text) - exact), q(2) * pow(q(1, 10), digits)) << text << " = " << r.text;
  }
}

TEST(EvalExpr, CertificateReverifies) {
  std::mt19937_64 rng(193);
  for (int t = 0; t < 100; ++t) {
    const std::string text = random_text(rng, 1 + t % 4);
    ExprPtr e;
    DecimalResult r;
    try {
      e = parse_expr(text);
      r = eval_expr(*e, {4, 64, 1});
    } catch (const Error&) {
      continue;
    }
    // a fresh evaluation queried only at the recorded precision contains
    // the certified interval
    const Interval fresh = to_real(*e, {4, 64, 1}).refine(r.precision);
    EXPECT_TRUE(fresh.contains(r.interval)) << text;
    EXPECT_LE(r.interval.width(), q(1, 10000));
    // and the same evaluation repeated gives the same bytes
    EXPECT_EQ(eval_expr(*parse_expr(text), {4, 64, 1}).certificate(), r.certificate());
  }
}

// Intervals stay around the known value at every power-of-two precision
// until the precision no longer fits.
TEST(EvalExpr, NamedConstantsStaySound) {
  const std::pair<const char*, Rational> cases[] = {
      {"geom", q(2)},          {"lim(geom)", q(2)},       {"lim(shrink)", q(1)},
      {"lim(geom) * lim(shrink)", q(2)}, {"recip(lim(shrink))", q(1)}, {"geom - lim(geom)", q(0)},
      {"abs(lim(shrink) - geom)", q(1)},
  };
  for (const auto& [text, exact] : cases) {
    const RefinedReal r = to_real(*parse_expr(text), {6, 64, 1});
    for (int k = 0; k < 64; ++k) {
      Interval iv;
      try {
        iv = r.refine(std::uint64_t{1} << k);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::budget_exceeded) << text;
        EXPECT_GE(k, 40) << text;
        break;
      }
      ASSERT_TRUE(iv.contains(exact)) << text << " at 2^" << k;
    }
  }
}

// Random expressions mixing named constants, checked against the same
// expression with each constant replaced by its value.
TEST(EvalExpr, ConstantsAgreeWithTheirValues) {
  std::mt19937_64 rng(197);
  const std::pair<const char*, const char*> constants[] = {{"geom", "2"}, {"lim(geom)", "2"}, {"lim(shrink)", "1"}};
  std::uniform_int_distribution<std::size_t> which(0, 2);
  for (int t = 0; t < 150; ++t) {
    std::string text = random_text(rng, 1 + t % 4), exact_text = text;
    // swap a few literals for constants
    for (int swaps = 0; swaps < 3; ++swaps) {
      const std::size_t at = text.find_first_of("0123456789");
      if (at == std::string::npos) break;
      std::size_t end = text.find_first_not_of("0123456789", at);
      if (end == std::string::npos) end = text.size();
      if (end < text.size() && (text[end] == '/' || text[end] == '.')) break;
      const auto& [name, value] = constants[which(rng)];
      const std::size_t exact_at = exact_text.find(text.substr(at, end - at));
      text.replace(at, end - at, std::string("(") + name + ")");
      exact_text.replace(exact_at, end - at, value);
    }
    RefinedReal approx = real_from_rational(Rational(0)), exact = approx;
    try {
      approx = to_real(*parse_expr(text), {4, 64, 1});
      exact = to_real(*parse_expr(exact_text), {4, 64, 1});
      for (std::uint64_t p = 1; p <= 4096; p *= 2) {
        const Interval a = approx.refine(p), e = exact.refine(p);
        EXPECT_TRUE(a.overlaps(e)) << text << " vs " << exact_text << " at " << p;
      }
    } catch (const Error& e) {
      // recip may fail to certify apartness, and a literal 0 divisor is rejected
      EXPECT_TRUE(e.code() == errc::apartness_undecided || e.code() == errc::division_by_zero ||
                  e.code() == errc::not_apart_from_zero)
          << text << ": " << e.what();
    }
  }
}

TEST(Cli, EvalPrintsResultAndCertificate) {
  const CliRun a = cli("eval \"1/3 + 1/6\" --digits 6");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "0.500000\ninterval lo=1/2 hi=1/2 precision=1\n");
  EXPECT_EQ(cli("eval \"1/3 + 1/6\" --digits 6").out, a.out);
  const CliRun b = cli("eval \"abs(-2) * max(1, 3/2)\" --digits 2");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out.substr(0, 5), "3.00\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("eval \"recip(1 - 1)\" --digits 3").code, 1);
  const CliRun syntax = cli("eval \"min(1,2\" --digits 3");
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.out.find("offset 8"), std::string::npos) << syntax.out;
  EXPECT_EQ(cli("eval \"pi\" --digits 3").code, 2);
  EXPECT_EQ(cli("eval \"1\"").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("check bogus").code, 2);
  EXPECT_EQ(cli("eval \"geom\" --digits 40 --budget 2").code, 1);
}

TEST(Cli, CheckReportsPerLaw) {
  const CliRun ok = cli("check rat field:ring:nat --trials 300 --seed 4");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("rat: pass"), std::string::npos);
  EXPECT_NE(ok.out.find("field:ring:nat: pass"), std::string::npos);
  EXPECT_NE(ok.out.find("asymmetry: 300 trials, 0 failures"), std::string::npos);
  EXPECT_EQ(cli("check nat --trials 100 --seed 1").code, 0);
  EXPECT_EQ(cli("check nat --trials 100 --seed 1").out, cli("check nat --trials 100 --seed 1").out);
}
