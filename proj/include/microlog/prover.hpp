#ifndef MICROLOG_PROVER_HPP
#define MICROLOG_PROVER_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "microlog/derivation.hpp"
#include "microlog/formula.hpp"
#include "microlog/sequent.hpp"

namespace microlog {

template <typename T, typename Range>
bool member(const T& x, const Range& xs) {
  for (const auto& y : xs)
    if (x == y) return true;
  return false;
}

// True iff some element of ys occurs in xs.
template <typename Range1, typename Range2>
bool common(const Range1& xs, const Range2& ys) {
  for (const auto& y : ys)
    if (member(y, xs)) return true;
  return false;
}

// Observes every parent -> child step the prover takes and counts the ones
// where the termination measure fails to decrease. The count is expected to
// stay at zero.
struct TerminationMonitor {
  std::size_t steps = 0;
  std::size_t violations = 0;

  void observe(const Sequent& from, const Sequent& to) {
    ++steps;
    if (!(measure(to) < measure(from))) ++violations;
  }
};

// Result of applying the single clause that matches a sequent.
struct Expansion {
  RuleName rule;
  std::array<Sequent, 2> premises;
  std::size_t premise_count = 0;
  bool closed = false;  // meaningful for axioms only
};

// Clause selection. The right list is inspected first, then the left list,
// then the atom lists:
//
//   d          c          rule           premises
//   Pro n:d'   any        RShiftPro      (a, n:b, c, d')
//   Falsity:d' any        RFalsityDrop   (a, b, c, d')
//   Imp p q:d' any        RImpMove       (a, b, p:c, q:d')
//   []         Pro n:c'   LShiftPro      (n:a, b, c', [])
//   []         Falsity:_  LFalsityAxiom  closed
//   []         Imp p q:c' LImpBranch     (a, b, c', [p]) and (a, b, q:c', [])
//   []         []         BasicAxiom     closed iff common(a, b)
//
// Each sequent matches exactly one row, so this agrees with first-match
// evaluation of the original clause order.
inline Expansion expand(const Sequent& s) {
  Expansion out{};
  if (!s.d.empty()) {
    s.d.head().visit(overloaded{
        [&](const Formula::Pro& p) {
          out.rule = RuleName::RShiftPro;
          out.premises[0] = Sequent{s.a, cons(p.id, s.b), s.c, s.d.tail()};
          out.premise_count = 1;
        },
        [&](const Formula::Falsity&) {
          out.rule = RuleName::RFalsityDrop;
          out.premises[0] = Sequent{s.a, s.b, s.c, s.d.tail()};
          out.premise_count = 1;
        },
        [&](const Formula::Imp& imp) {
          out.rule = RuleName::RImpMove;
          out.premises[0] = Sequent{s.a, s.b, cons(imp.antecedent, s.c), cons(imp.consequent, s.d.tail())};
          out.premise_count = 1;
        },
    });
    return out;
  }
  if (!s.c.empty()) {
    s.c.head().visit(overloaded{
        [&](const Formula::Pro& p) {
          out.rule = RuleName::LShiftPro;
          out.premises[0] = Sequent{cons(p.id, s.a), s.b, s.c.tail(), {}};
          out.premise_count = 1;
        },
        [&](const Formula::Falsity&) {
          out.rule = RuleName::LFalsityAxiom;
          out.closed = true;
        },
        [&](const Formula::Imp& imp) {
          out.rule = RuleName::LImpBranch;
          out.premises[0] = Sequent{s.a, s.b, s.c.tail(), {imp.antecedent}};
          out.premises[1] = Sequent{s.a, s.b, cons(imp.consequent, s.c.tail()), {}};
          out.premise_count = 2;
        },
    });
    return out;
  }
  out.rule = RuleName::BasicAxiom;
  out.closed = common(s.a, s.b);
  return out;
}

// Runs the clause schedule depth-first, left branch first, and returns the
// first leaf that does not close. Uses an explicit work stack, so deep
// formulas do not consume call stack.
inline std::optional<Sequent> find_open_leaf(Sequent start, TerminationMonitor* monitor = nullptr) {
  std::vector<Sequent> pending;
  pending.push_back(std::move(start));
  while (!pending.empty()) {
    Sequent current = std::move(pending.back());
    pending.pop_back();
    for (;;) {
      Expansion step = expand(current);
      if (step.premise_count == 0) {
        if (!step.closed) return current;
        break;
      }
      if (monitor != nullptr)
        for (std::size_t k = 0; k < step.premise_count; ++k) monitor->observe(current, step.premises[k]);
      if (step.premise_count == 2) pending.push_back(std::move(step.premises[1]));
      current = std::move(step.premises[0]);
    }
  }
  return std::nullopt;
}

// True iff the sequent is valid.
inline bool mp(const Sequent& s, TerminationMonitor* monitor = nullptr) {
  return !find_open_leaf(s, monitor).has_value();
}

inline bool prove(const Formula& f, TerminationMonitor* monitor = nullptr) {
  return mp(Sequent::goal(f), monitor);
}

// Atoms collected on the left are true, everything else false. On an open
// BasicAxiom leaf this makes every left formula true and every right one
// false, and the rules preserve that back to the root.
inline Interpretation leaf_countermodel(const Sequent& leaf) { return Interpretation::from_range(leaf.a); }

inline std::optional<Interpretation> countermodel(const Formula& f) {
  auto leaf = find_open_leaf(Sequent::goal(f));
  if (!leaf) return std::nullopt;
  return leaf_countermodel(*leaf);
}

struct Proved {
  Derivation derivation;
  friend bool operator==(const Proved&, const Proved&) = default;
};

struct Refuted {
  std::vector<Interpretation> countermodels;  // one per open leaf, same order
  std::vector<Sequent> leaves;
  friend bool operator==(const Refuted&, const Refuted&) = default;
};

struct Verdict {
  std::variant<Proved, Refuted> outcome;

  bool proved() const noexcept { return std::holds_alternative<Proved>(outcome); }
  const Derivation& derivation() const { return std::get<Proved>(outcome).derivation; }
  const Refuted& refutation() const { return std::get<Refuted>(outcome); }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {
inline Derivation trace(const Sequent& s, std::vector<Sequent>& open, TerminationMonitor* monitor) {
  Expansion step = expand(s);
  Derivation node{s, step.rule, {}};
  if (step.premise_count == 0 && !step.closed) open.push_back(s);
  node.premises.reserve(step.premise_count);
  for (std::size_t k = 0; k < step.premise_count; ++k) {
    if (monitor != nullptr) monitor->observe(s, step.premises[k]);
    node.premises.push_back(trace(step.premises[k], open, monitor));
  }
  return node;
}
}  // namespace detail

// Same schedule as mp, recording one derivation node per clause. Both
// branches of LImpBranch are always explored so that every open leaf is
// reported on refutation.
inline Verdict prove_with_trace(const Formula& f, TerminationMonitor* monitor = nullptr) {
  std::vector<Sequent> open;
  Derivation root = detail::trace(Sequent::goal(f), open, monitor);
  if (open.empty()) return Verdict{Proved{std::move(root)}};
  Refuted refuted;
  refuted.countermodels.reserve(open.size());
  for (const Sequent& leaf : open) refuted.countermodels.push_back(leaf_countermodel(leaf));
  refuted.leaves = std::move(open);
  return Verdict{std::move(refuted)};
}

}  // namespace microlog

#endif  // MICROLOG_PROVER_HPP
