#ifndef MICROLOG_DERIVATION_HPP
#define MICROLOG_DERIVATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "microlog/sequent.hpp"

namespace microlog {

// One rule per prover clause, numbered 1..7 in the order the clauses are
// written in the original program.
enum class RuleName {
  LShiftPro = 1,      // d = [], c = Pro n : c'
  RShiftPro = 2,      // d = Pro n : d'
  LFalsityAxiom = 3,  // d = [], c = Falsity : _
  RFalsityDrop = 4,   // d = Falsity : d'
  LImpBranch = 5,     // d = [], c = Imp p q : c'
  RImpMove = 6,       // d = Imp p q : d'
  BasicAxiom = 7,     // c = d = []
};

inline constexpr std::array<RuleName, 7> kAllRules = {
    RuleName::LShiftPro,    RuleName::RShiftPro, RuleName::LFalsityAxiom, RuleName::RFalsityDrop,
    RuleName::LImpBranch,   RuleName::RImpMove,  RuleName::BasicAxiom,
};

inline constexpr int clause_number(RuleName rule) { return static_cast<int>(rule); }

inline constexpr std::size_t arity(RuleName rule) {
  switch (rule) {
    case RuleName::LFalsityAxiom:
    case RuleName::BasicAxiom:
      return 0;
    case RuleName::LImpBranch:
      return 2;
    default:
      return 1;
  }
}

inline constexpr std::string_view to_string(RuleName rule) {
  switch (rule) {
    case RuleName::LShiftPro: return "LShiftPro";
    case RuleName::RShiftPro: return "RShiftPro";
    case RuleName::LFalsityAxiom: return "LFalsityAxiom";
    case RuleName::RFalsityDrop: return "RFalsityDrop";
    case RuleName::LImpBranch: return "LImpBranch";
    case RuleName::RImpMove: return "RImpMove";
    case RuleName::BasicAxiom: return "BasicAxiom";
  }
  return "?";
}

inline std::optional<RuleName> rule_from_string(std::string_view name) {
  for (RuleName r : kAllRules)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

// Sequent-calculus proof tree. Arity is not enforced by construction; the
// kernel rejects trees whose premise count does not match the rule.
struct Derivation {
  Sequent conclusion;
  RuleName rule;
  std::vector<Derivation> premises;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Rules in pre-order (node, then premises left to right).
inline std::vector<RuleName> rule_sequence(const Derivation& root) {
  std::vector<RuleName> out;
  std::vector<const Derivation*> stack{&root};
  while (!stack.empty()) {
    const Derivation* node = stack.back();
    stack.pop_back();
    out.push_back(node->rule);
    for (auto it = node->premises.rbegin(); it != node->premises.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

inline std::vector<const Derivation*> leaves(const Derivation& root) {
  std::vector<const Derivation*> out;
  std::vector<const Derivation*> stack{&root};
  while (!stack.empty()) {
    const Derivation* node = stack.back();
    stack.pop_back();
    if (node->premises.empty()) out.push_back(node);
    for (auto it = node->premises.rbegin(); it != node->premises.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

inline std::size_t node_count(const Derivation& root) {
  std::size_t n = 0;
  std::vector<const Derivation*> stack{&root};
  while (!stack.empty()) {
    const Derivation* node = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& p : node->premises) stack.push_back(&p);
  }
  return n;
}

}  // namespace microlog

#endif  // MICROLOG_DERIVATION_HPP
