#ifndef MICROLOG_ORACLE_HPP
#define MICROLOG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "microlog/formula.hpp"

// Brute-force semantics: truth tables over the atoms of a formula and a
// small-formula enumerator. Shares nothing with the prover beyond `eval`.
namespace microlog::oracle {

inline constexpr std::size_t kMaxAtoms = 20;
inline constexpr unsigned kMaxEnumConnectives = 6;
inline constexpr std::size_t kMaxEnumAtoms = 3;

class AtomLimitExceeded : public std::length_error {
 public:
  explicit AtomLimitExceeded(std::size_t count)
      : std::length_error("formula has " + std::to_string(count) + " atoms; the truth-table limit is " +
                          std::to_string(kMaxAtoms)),
        count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

class EnumerationLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {
inline Interpretation row(const std::vector<PropId>& atoms, std::uint32_t mask) {
  Interpretation i;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (mask & (std::uint32_t{1} << k)) i.set_true(atoms[k]);
  return i;
}

inline std::vector<PropId> checked_atoms(const std::set<PropId>& atom_set) {
  if (atom_set.size() > kMaxAtoms) throw AtomLimitExceeded(atom_set.size());
  return {atom_set.begin(), atom_set.end()};
}
}  // namespace detail

// All 2^n interpretations over the (sorted) atom set. Row k makes atom j
// true iff bit j of k is set, so for {p, q}: {}, {p}, {q}, {p, q}.
inline std::vector<Interpretation> valuations(const std::set<PropId>& atom_set) {
  auto atoms = detail::checked_atoms(atom_set);
  std::vector<Interpretation> out;
  const std::uint32_t rows = std::uint32_t{1} << atoms.size();
  out.reserve(rows);
  for (std::uint32_t mask = 0; mask < rows; ++mask) out.push_back(detail::row(atoms, mask));
  return out;
}

inline std::optional<Interpretation> oracle_countermodel(const Formula& f) {
  auto atoms = detail::checked_atoms(microlog::atoms(f));
  const std::uint32_t rows = std::uint32_t{1} << atoms.size();
  for (std::uint32_t mask = 0; mask < rows; ++mask) {
    Interpretation i = detail::row(atoms, mask);
    if (!eval(i, f)) return i;
  }
  return std::nullopt;
}

inline bool oracle_valid(const Formula& f) { return !oracle_countermodel(f).has_value(); }

// Validity of the sequent  left |- right  over every interpretation of its atoms.
inline bool oracle_valid_sequent(const std::vector<Formula>& left, const std::vector<Formula>& right) {
  std::set<PropId> atom_set;
  for (const auto& f : left) collect_atoms(f, atom_set);
  for (const auto& f : right) collect_atoms(f, atom_set);
  auto atoms = detail::checked_atoms(atom_set);
  const std::uint32_t rows = std::uint32_t{1} << atoms.size();
  for (std::uint32_t mask = 0; mask < rows; ++mask)
    if (!eval_sequent(left, right, detail::row(atoms, mask))) return false;
  return true;
}

struct TruthTable {
  struct Row {
    Interpretation interpretation;
    bool value;
  };
  std::vector<PropId> atoms;
  std::vector<Row> rows;
};

inline TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.atoms = detail::checked_atoms(microlog::atoms(f));
  const std::uint32_t rows = std::uint32_t{1} << table.atoms.size();
  table.rows.reserve(rows);
  for (std::uint32_t mask = 0; mask < rows; ++mask) {
    Interpretation i = detail::row(table.atoms, mask);
    bool value = eval(i, f);
    table.rows.push_back({std::move(i), value});
  }
  return table;
}

// Number of formulas with exactly `connectives` Imp nodes over `leaves`
// distinct leaf constructors: C(0) = L, C(n) = sum_i C(i) * C(n - 1 - i).
inline std::uint64_t count_exact(unsigned connectives, std::uint64_t leaves) {
  std::vector<std::uint64_t> c(connectives + 1, 0);
  c[0] = leaves;
  for (unsigned n = 1; n <= connectives; ++n)
    for (unsigned i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  return c[connectives];
}

inline std::uint64_t count_formulas(unsigned max_connectives, std::uint64_t leaves) {
  std::uint64_t total = 0;
  for (unsigned n = 0; n <= max_connectives; ++n) total += count_exact(n, leaves);
  return total;
}

namespace detail {
using Sink = std::function<void(const Formula&)>;

inline void enumerate_exact(unsigned connectives, const std::vector<Formula>& leaves, const Sink& sink) {
  if (connectives == 0) {
    for (const Formula& leaf : leaves) sink(leaf);
    return;
  }
  for (unsigned left = 0; left < connectives; ++left) {
    enumerate_exact(left, leaves, [&](const Formula& lhs) {
      enumerate_exact(connectives - 1 - left, leaves, [&](const Formula& rhs) { sink(Formula::imp(lhs, rhs)); });
    });
  }
}
}  // namespace detail

// Streams every core formula with at most `max_connectives` Imp nodes over
// Pro a (a in atom_list, in list order) and Falsity, each exactly once.
// Order: by connective count; within a count, by connective count of the
// antecedent, then antecedent order, then consequent order.
template <typename Visitor>
void for_each_formula(unsigned max_connectives, const std::vector<PropId>& atom_list, Visitor&& visit) {
  if (max_connectives > kMaxEnumConnectives)
    throw EnumerationLimitExceeded("at most " + std::to_string(kMaxEnumConnectives) +
                                   " connectives can be enumerated");
  if (atom_list.size() > kMaxEnumAtoms)
    throw EnumerationLimitExceeded("at most " + std::to_string(kMaxEnumAtoms) + " atoms can be enumerated");
  std::set<PropId> distinct(atom_list.begin(), atom_list.end());
  if (distinct.size() != atom_list.size()) throw std::invalid_argument("atom list contains duplicates");

  std::vector<Formula> leaves;
  for (const PropId& a : atom_list) leaves.push_back(Formula::pro(a));
  leaves.push_back(Formula::falsity());

  detail::Sink sink = [&](const Formula& f) { visit(f); };
  for (unsigned n = 0; n <= max_connectives; ++n) detail::enumerate_exact(n, leaves, sink);
}

inline std::vector<Formula> enumerate_formulas(unsigned max_connectives, const std::vector<PropId>& atom_list) {
  std::vector<Formula> out;
  for_each_formula(max_connectives, atom_list, [&](const Formula& f) { out.push_back(f); });
  return out;
}

}  // namespace microlog::oracle

#endif  // MICROLOG_ORACLE_HPP
