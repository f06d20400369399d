#pragma once

// Inhabited finite subsets of a decidable streak, read either as their
// infimum (meet lift) or as their supremum (join lift).

#include <vector>

#include "streak/core.hpp"

namespace streak {

struct FiniteSubset {
  std::vector<Element> items;  // non-empty; order and duplicates carry no meaning
};

class FinSetLift : public Streak {
 public:
  explicit FinSetLift(StreakPtr base) : base_(std::move(base)) {
    if (!base_->decidable())
      throw Error(errc::precondition_failed, "finite-set lifts need a decidable base, got " + base_->name());
  }

  const Streak& base() const { return *base_; }
  bool decidable() const override { return true; }

  Element set(std::vector<Element> items) const {
    if (items.empty()) throw Error(errc::empty_set, "finite subsets must be inhabited");
    for (const auto& x : items) base_->check_owner(x);
    return make<FiniteSubset>({std::move(items)});
  }
  Element singleton(const Element& x) const { return set({x}); }

  const std::vector<Element>& items(const Element& x) const {
    check_owner(x);
    return x.get<FiniteSubset>().items;
  }

  Element zero() const override { return singleton(base_->zero()); }
  Element one() const override { return singleton(base_->one()); }

  Element add(const Element& x, const Element& y) const override {
    std::vector<Element> out;
    for (const auto& a : items(x))
      for (const auto& b : items(y)) out.push_back(base_->add(a, b));
    return set(prune(std::move(out)));
  }

  std::string show(const Element& x) const override {
    std::string out = open_;
    bool first = true;
    for (const auto& a : items(x)) {
      if (!first) out += ", ";
      out += base_->show(a);
      first = false;
    }
    return out + close_;
  }

  /// Equality of the representing sets (not of the ≈-classes).
  bool same_representatives(const Element& x, const Element& y) const {
    auto contained = [&](const std::vector<Element>& as, const std::vector<Element>& bs) {
      for (const auto& a : as) {
        bool found = false;
        for (const auto& b : bs)
          if (!b_less(a, b) && !b_less(b, a)) found = true;
        if (!found) return false;
      }
      return true;
    };
    return contained(items(x), items(y)) && contained(items(y), items(x));
  }

 protected:
  FinSetLift(StreakPtr base, std::string open, std::string close) : FinSetLift(std::move(base)) {
    open_ = std::move(open);
    close_ = std::move(close);
  }

  bool b_less(const Element& a, const Element& b) const { return is_yes(base_->less(a, b, 0)); }
  bool q_below(const Rational& q, const Element& a) const { return is_yes(base_->below(q, a, 0)); }
  bool q_above(const Element& a, const Rational& q) const { return is_yes(base_->above(a, q, 0)); }

  static Semi semi(bool b) { return b ? Semi::yes : Semi::no_within_budget; }

  /// Drops entries that cannot affect the ≈-class (those strictly beaten by
  /// another entry, and repeats), keeping the first of each tie.  Used on
  /// arithmetic results, whose size would otherwise multiply.
  virtual std::vector<Element> prune(std::vector<Element> xs) const = 0;

  /// Keeps each entry not beaten by another and not tied with an earlier one.
  std::vector<Element> keep_undominated(const std::vector<Element>& xs, bool keep_least) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < xs.size() && !drop; ++j) {
        if (i == j) continue;
        const bool beaten = keep_least ? b_less(xs[j], xs[i]) : b_less(xs[i], xs[j]);
        const bool tied_earlier = j < i && !b_less(xs[i], xs[j]) && !b_less(xs[j], xs[i]);
        drop = beaten || tied_earlier;
      }
      if (!drop) out.push_back(xs[i]);
    }
    return out;
  }

  template <class Pred>
  static bool any(const std::vector<Element>& xs, Pred p) {
    for (const auto& x : xs)
      if (p(x)) return true;
    return false;
  }
  template <class Pred>
  static bool all(const std::vector<Element>& xs, Pred p) {
    for (const auto& x : xs)
      if (!p(x)) return false;
    return true;
  }

  StreakPtr base_;

 private:
  std::string open_ = "{", close_ = "}";
};

/// [A] behaves as inf A: A < B iff some a lies below every b.
class FinMeet final : public FinSetLift {
 public:
  explicit FinMeet(StreakPtr base) : FinSetLift(std::move(base), "meet{", "}") {}

  std::string name() const override { return "finmeet:" + base_->name(); }

  Semi below(const Rational& q, const Element& x, Budget) const override {
    return semi(all(items(x), [&](const Element& a) { return q_below(q, a); }));
  }
  Semi above(const Element& x, const Rational& q, Budget) const override {
    return semi(any(items(x), [&](const Element& a) { return q_above(a, q); }));
  }
  /// ∃a∈A ∀b∈B: a < b.
  Semi less(const Element& x, const Element& y, Budget) const override {
    return semi(any(items(x), [&](const Element& a) {
      return all(items(y), [&](const Element& b) { return b_less(a, b); });
    }));
  }
  /// ∀b∈B ∃a∈A: a < b; agrees with `less` since the quantifiers swap over finite sets.
  bool less_forall_exists(const Element& x, const Element& y) const {
    return all(items(y), [&](const Element& b) {
      return any(items(x), [&](const Element& a) { return b_less(a, b); });
    });
  }

  /// Products of positive sets: every member is positive.
  Element mul_pos(const Element& x, const Element& y) const override {
    std::vector<Element> out;
    for (const auto& a : items(x))
      for (const auto& b : items(y)) out.push_back(base_->mul_pos(a, b));
    return set(prune(std::move(out)));
  }

  bool has_meet() const override { return true; }
  /// inf{[A], [B]} = [A ∪ B].
  Element meet(const Element& x, const Element& y) const override {
    std::vector<Element> out = items(x);
    out.insert(out.end(), items(y).begin(), items(y).end());
    return set(std::move(out));
  }

  std::optional<Rational> to_rational(const Element& x) const override {
    std::optional<Rational> best;
    for (const auto& a : items(x)) {
      auto v = base_->to_rational(a);
      if (!v) return std::nullopt;
      if (!best || *v < *best) best = v;
    }
    return best;
  }

 protected:
  std::vector<Element> prune(std::vector<Element> xs) const override { return keep_undominated(xs, true); }
};

/// [A] behaves as sup A: A < B iff some b lies above every a.
class FinJoin final : public FinSetLift {
 public:
  explicit FinJoin(StreakPtr base) : FinSetLift(std::move(base), "join{", "}") {}

  std::string name() const override { return "finjoin:" + base_->name(); }

  Semi below(const Rational& q, const Element& x, Budget) const override {
    return semi(any(items(x), [&](const Element& a) { return q_below(q, a); }));
  }
  Semi above(const Element& x, const Rational& q, Budget) const override {
    return semi(all(items(x), [&](const Element& a) { return q_above(a, q); }));
  }
  /// ∃b∈B ∀a∈A: a < b.
  Semi less(const Element& x, const Element& y, Budget) const override {
    return semi(any(items(y), [&](const Element& b) {
      return all(items(x), [&](const Element& a) { return b_less(a, b); });
    }));
  }
  /// ∀a∈A ∃b∈B: a < b.
  bool less_forall_exists(const Element& x, const Element& y) const {
    return all(items(x), [&](const Element& a) {
      return any(items(y), [&](const Element& b) { return b_less(a, b); });
    });
  }

  /// A representative of a positive [A] whose members are all positive:
  /// the entries exceeding 0, starting from the first positive one.
  Element positive_representative(const Element& x) const {
    std::vector<Element> out;
    for (const auto& a : items(x))
      if (q_below(Rational(0), a)) out.push_back(a);
    if (out.empty()) throw Error(errc::not_positive, show(x) + " is not positive");
    return set(std::move(out));
  }

  Element mul_pos(const Element& x, const Element& y) const override {
    const Element px = positive_representative(x);
    const Element py = positive_representative(y);
    const auto& as = items(px);
    const auto& bs = items(py);
    std::vector<Element> out;
    for (const auto& a : as)
      for (const auto& b : bs) out.push_back(base_->mul_pos(a, b));
    return set(prune(std::move(out)));
  }

  bool has_join() const override { return true; }
  /// sup{[a], [b]} = [a :: b].
  Element join(const Element& x, const Element& y) const override {
    std::vector<Element> out = items(x);
    out.insert(out.end(), items(y).begin(), items(y).end());
    return set(std::move(out));
  }

  std::optional<Rational> to_rational(const Element& x) const override {
    std::optional<Rational> best;
    for (const auto& a : items(x)) {
      auto v = base_->to_rational(a);
      if (!v) return std::nullopt;
      if (!best || *best < *v) best = v;
    }
    return best;
  }

 protected:
  std::vector<Element> prune(std::vector<Element> xs) const override { return keep_undominated(xs, false); }
};

}  // namespace streak
