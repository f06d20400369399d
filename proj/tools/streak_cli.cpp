// streak_cli eval "<expr>" --digits N [--budget B]
// streak_cli check <names...> --trials T --seed S
//
// Exit codes: 0 success, 1 evaluation or budget error / failed law,
// 2 usage error (bad arguments, syntax, unknown names).

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "streak/streak.hpp"

namespace {

int usage_error(const streak::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 2;
}

int run_eval(const std::string& text, const streak::EvalConfig& cfg) {
  streak::ExprPtr expr;
  try {
    expr = streak::parse_expr(text);
  } catch (const streak::Error& e) {
    return usage_error(e);
  }
  try {
    streak::DecimalResult r = streak::eval_expr(*expr, cfg);
    std::cout << r.text << "\n" << r.certificate() << "\n";
    return 0;
  } catch (const streak::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_check(const std::vector<std::string>& names, const streak::SuiteConfig& cfg) {
  // Resolve everything first so a typo fails before any suite runs.
  for (const auto& name : names) {
    if (name == "lower" || name == "upper") continue;
    try {
      streak::resolve_streak(name);
    } catch (const streak::Error& e) {
      return usage_error(e);
    }
  }
  bool ok = true;
  for (const auto& name : names) {
    std::vector<streak::Report> reports;
    try {
      reports = streak::check_streak(name, cfg);
    } catch (const streak::Error& e) {
      std::cerr << "error: " << name << ": " << e.what() << "\n";
      ok = false;
      continue;
    }
    const bool passed = streak::all_passed(reports);
    ok = ok && passed;
    std::cout << name << ": " << (passed ? "pass" : "FAIL") << "\n";
    for (const auto& r : reports) {
      std::cout << "  " << r.law << ": " << r.trials << " trials, " << r.failures << " failures\n";
      for (const auto& c : r.counterexamples) std::cout << "    counterexample: " << c << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real arithmetic over streaks"};
  app.require_subcommand(1);

  streak::EvalConfig eval_cfg;
  std::string text;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression to a certified decimal");
  eval->add_option("expr", text, "Expression, e.g. \"1/3 + 2*abs(-5/2)\"")->required();
  eval->add_option("--digits", eval_cfg.digits, "Fractional digits")->required();
  eval->add_option("--budget", eval_cfg.budget, "Search budget")->check(CLI::PositiveNumber);

  streak::SuiteConfig check_cfg;
  std::vector<std::string> names;
  auto* check = app.add_subcommand("check", "Run law suites on registered streaks");
  check->add_option("names", names, "Streak names, e.g. rat field:ring:nat")->required();
  check->add_option("--trials", check_cfg.trials, "Trials per law");
  check->add_option("--seed", check_cfg.seed, "Sampler seed");
  check->add_option("--budget", check_cfg.budget, "Semidecision budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*eval) return run_eval(text, eval_cfg);
  return run_check(names, check_cfg);
}
