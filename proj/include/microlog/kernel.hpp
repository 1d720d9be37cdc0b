#ifndef MICROLOG_KERNEL_HPP
#define MICROLOG_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "microlog/derivation.hpp"
#include "microlog/formula.hpp"
#include "microlog/sequent.hpp"

namespace microlog {

// Derivation checker. Each rule is restated as a pattern on the conclusion
// plus the exact premise sequents it must have; nothing here calls into the
// prover, so a checked tree does not depend on the search code being right.
namespace kernel {

namespace detail {

inline bool shares_atom(const List<PropId>& xs, const List<PropId>& ys) {
  for (const PropId& x : xs)
    for (const PropId& y : ys)
      if (x == y) return true;
  return false;
}

inline std::optional<std::string> expect_premises(const Derivation& d, std::size_t count) {
  if (d.premises.size() != count)
    return std::string(to_string(d.rule)) + ": expected " + std::to_string(count) + " premise(s), found " +
           std::to_string(d.premises.size());
  return std::nullopt;
}

inline std::optional<std::string> expect_premise(const Derivation& d, std::size_t index, const Sequent& expected) {
  if (!(d.premises[index].conclusion == expected))
    return std::string(to_string(d.rule)) + ": premise " + std::to_string(index + 1) +
           " does not have the required conclusion";
  return std::nullopt;
}

inline std::optional<std::string> fail(RuleName rule, const char* why) {
  return std::string(to_string(rule)) + ": " + why;
}

}  // namespace detail

// First violated condition at this node (premises are not descended into),
// or nullopt when the node is a correct rule instance.
inline std::optional<std::string> diagnose_node(const Derivation& d) {
  using detail::expect_premise;
  using detail::expect_premises;
  using detail::fail;
  const Sequent& s = d.conclusion;

  switch (d.rule) {
    case RuleName::LShiftPro: {
      if (!s.d.empty()) return fail(d.rule, "right formula list must be empty");
      if (s.c.empty() || !s.c.head().is_pro()) return fail(d.rule, "left formula list must start with a proposition");
      if (auto e = expect_premises(d, 1)) return e;
      return expect_premise(d, 0, Sequent{cons(s.c.head().id(), s.a), s.b, s.c.tail(), {}});
    }
    case RuleName::RShiftPro: {
      if (s.d.empty() || !s.d.head().is_pro()) return fail(d.rule, "right formula list must start with a proposition");
      if (auto e = expect_premises(d, 1)) return e;
      return expect_premise(d, 0, Sequent{s.a, cons(s.d.head().id(), s.b), s.c, s.d.tail()});
    }
    case RuleName::LFalsityAxiom: {
      if (!s.d.empty()) return fail(d.rule, "right formula list must be empty");
      if (s.c.empty() || !s.c.head().is_falsity()) return fail(d.rule, "left formula list must start with falsity");
      return expect_premises(d, 0);
    }
    case RuleName::RFalsityDrop: {
      if (s.d.empty() || !s.d.head().is_falsity()) return fail(d.rule, "right formula list must start with falsity");
      if (auto e = expect_premises(d, 1)) return e;
      return expect_premise(d, 0, Sequent{s.a, s.b, s.c, s.d.tail()});
    }
    case RuleName::LImpBranch: {
      if (!s.d.empty()) return fail(d.rule, "right formula list must be empty");
      if (s.c.empty() || !s.c.head().is_imp()) return fail(d.rule, "left formula list must start with an implication");
      if (auto e = expect_premises(d, 2)) return e;
      const Formula& imp = s.c.head();
      if (auto e = expect_premise(d, 0, Sequent{s.a, s.b, s.c.tail(), {imp.antecedent()}})) return e;
      return expect_premise(d, 1, Sequent{s.a, s.b, cons(imp.consequent(), s.c.tail()), {}});
    }
    case RuleName::RImpMove: {
      if (s.d.empty() || !s.d.head().is_imp()) return fail(d.rule, "right formula list must start with an implication");
      if (auto e = expect_premises(d, 1)) return e;
      const Formula& imp = s.d.head();
      return expect_premise(d, 0, Sequent{s.a, s.b, cons(imp.antecedent(), s.c), cons(imp.consequent(), s.d.tail())});
    }
    case RuleName::BasicAxiom: {
      if (!s.c.empty() || !s.d.empty()) return fail(d.rule, "formula lists must both be empty");
      if (!detail::shares_atom(s.a, s.b)) return fail(d.rule, "no atom occurs on both sides");
      return expect_premises(d, 0);
    }
  }
  return std::string("unknown rule");
}

inline bool check_node(const Derivation& d) { return !diagnose_node(d).has_value(); }

inline std::optional<std::string> diagnose_derivation(const Derivation& d, const Formula& goal) {
  if (!(d.conclusion == Sequent::goal(goal))) return std::string("root conclusion is not  |- goal");
  std::vector<const Derivation*> stack{&d};
  while (!stack.empty()) {
    const Derivation* node = stack.back();
    stack.pop_back();
    if (auto e = diagnose_node(*node)) return e;
    for (const Derivation& p : node->premises) stack.push_back(&p);
  }
  return std::nullopt;
}

inline bool check_derivation(const Derivation& d, const Formula& goal) {
  return !diagnose_derivation(d, goal).has_value();
}

}  // namespace kernel
}  // namespace microlog

#endif  // MICROLOG_KERNEL_HPP
