#ifndef MICROLOG_SEQUENT_HPP
#define MICROLOG_SEQUENT_HPP

#include <cstddef>

#include "microlog/formula.hpp"
#include "microlog/list.hpp"

namespace microlog {

// Prover state (a, b, c, d), read as  map Pro a ++ c  |-  map Pro b ++ d.
// a and b hold atoms already moved out of the formula lists; c and d hold
// the formulas still to be decomposed.
struct Sequent {
  List<PropId> a;
  List<PropId> b;
  List<Formula> c;
  List<Formula> d;

  static Sequent goal(const Formula& f) { return Sequent{{}, {}, {}, {f}}; }

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

inline List<Formula> left_formulas(const Sequent& s) {
  std::vector<Formula> items;
  for (const PropId& n : s.a) items.push_back(Formula::pro(n));
  for (const Formula& f : s.c) items.push_back(f);
  return List<Formula>::from_range(items);
}

inline List<Formula> right_formulas(const Sequent& s) {
  std::vector<Formula> items;
  for (const PropId& n : s.b) items.push_back(Formula::pro(n));
  for (const Formula& f : s.d) items.push_back(f);
  return List<Formula>::from_range(items);
}

// Sequent semantics under a single interpretation.
inline bool eval_sequent(const Sequent& s, const Interpretation& i) {
  for (const PropId& n : s.a)
    if (!i.holds(n)) return true;
  for (const Formula& f : s.c)
    if (!eval(i, f)) return true;
  for (const PropId& n : s.b)
    if (i.holds(n)) return true;
  for (const Formula& g : s.d)
    if (eval(i, g)) return true;
  return false;
}

inline std::set<PropId> atoms(const Sequent& s) {
  std::set<PropId> out(s.a.begin(), s.a.end());
  out.insert(s.b.begin(), s.b.end());
  for (const Formula& f : s.c) collect_atoms(f, out);
  for (const Formula& f : s.d) collect_atoms(f, out);
  return out;
}

// Termination measure: total size of the two unprocessed formula lists.
inline std::size_t measure(const Sequent& s) {
  std::size_t total = 0;
  for (const Formula& f : s.c) total += size(f);
  for (const Formula& f : s.d) total += size(f);
  return total;
}

}  // namespace microlog

#endif  // MICROLOG_SEQUENT_HPP
