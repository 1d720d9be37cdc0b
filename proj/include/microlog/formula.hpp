#ifndef MICROLOG_FORMULA_HPP
#define MICROLOG_FORMULA_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace microlog {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Proposition identifier: [A-Za-z_][A-Za-z0-9_]*, excluding the reserved
// words `true` and `false`.
class PropId {
 public:
  explicit PropId(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_))
      throw std::invalid_argument("invalid proposition identifier '" + name_ + "'");
  }

  static bool is_valid(std::string_view name) {
    if (name.empty() || name == "true" || name == "false") return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const PropId&, const PropId&) = default;
  friend auto operator<=>(const PropId&, const PropId&) = default;

 private:
  std::string name_;
};

// Core formula: Pro n | Falsity | Imp p q. Nodes are immutable and shared.
class Formula {
 public:
  struct Pro {
    PropId id;
  };
  struct Falsity {};
  struct Imp;
  using Node = std::variant<Pro, Falsity, Imp>;

  static Formula pro(PropId id);
  static Formula pro(std::string name) { return pro(PropId(std::move(name))); }
  static Formula falsity();
  static Formula imp(Formula antecedent, Formula consequent);

  const Node& node() const noexcept;

  bool is_pro() const noexcept;
  bool is_falsity() const noexcept;
  bool is_imp() const noexcept;

  // Accessors; the constructor must match.
  const PropId& id() const;
  const Formula& antecedent() const;
  const Formula& consequent() const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& v) const;

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Imp {
  Formula antecedent;
  Formula consequent;
};

inline const Formula::Node& Formula::node() const noexcept { return *node_; }

template <class Visitor>
decltype(auto) Formula::visit(Visitor&& v) const {
  return std::visit(std::forward<Visitor>(v), *node_);
}

inline Formula Formula::pro(PropId id) {
  return Formula(std::make_shared<const Node>(Pro{std::move(id)}));
}

inline Formula Formula::falsity() {
  static const auto shared = std::make_shared<const Node>(Falsity{});
  return Formula(shared);
}

inline Formula Formula::imp(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<const Node>(Imp{std::move(antecedent), std::move(consequent)}));
}

inline bool Formula::is_pro() const noexcept { return std::holds_alternative<Pro>(*node_); }
inline bool Formula::is_falsity() const noexcept { return std::holds_alternative<Falsity>(*node_); }
inline bool Formula::is_imp() const noexcept { return std::holds_alternative<Imp>(*node_); }
inline const PropId& Formula::id() const { return std::get<Pro>(*node_).id; }
inline const Formula& Formula::antecedent() const { return std::get<Imp>(*node_).antecedent; }
inline const Formula& Formula::consequent() const { return std::get<Imp>(*node_).consequent; }

inline bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.node_->index() != rhs.node_->index()) return false;
  return std::visit(
      overloaded{
          [&](const Formula::Pro& p) { return p.id == std::get<Formula::Pro>(*rhs.node_).id; },
          [](const Formula::Falsity&) { return true; },
          [&](const Formula::Imp& i) {
            const auto& j = std::get<Formula::Imp>(*rhs.node_);
            return i.antecedent == j.antecedent && i.consequent == j.consequent;
          },
      },
      *lhs.node_);
}

enum class Connective { conj, disj, implies, iff };

// Surface formula with derived connectives. `desugar` maps it into the core.
class ExtFormula {
 public:
  struct Atom {
    PropId id;
  };
  struct Bottom {};
  struct Top {};
  struct Not;
  struct Binary;
  using Node = std::variant<Atom, Bottom, Top, Not, Binary>;

  static ExtFormula atom(PropId id);
  static ExtFormula atom(std::string name) { return atom(PropId(std::move(name))); }
  static ExtFormula bottom();
  static ExtFormula top();
  static ExtFormula negation(ExtFormula operand);
  static ExtFormula binary(Connective op, ExtFormula lhs, ExtFormula rhs);
  static ExtFormula conj(ExtFormula lhs, ExtFormula rhs) { return binary(Connective::conj, std::move(lhs), std::move(rhs)); }
  static ExtFormula disj(ExtFormula lhs, ExtFormula rhs) { return binary(Connective::disj, std::move(lhs), std::move(rhs)); }
  static ExtFormula implies(ExtFormula lhs, ExtFormula rhs) { return binary(Connective::implies, std::move(lhs), std::move(rhs)); }
  static ExtFormula iff(ExtFormula lhs, ExtFormula rhs) { return binary(Connective::iff, std::move(lhs), std::move(rhs)); }

  const Node& node() const noexcept;

  template <class Visitor>
  decltype(auto) visit(Visitor&& v) const;

  friend bool operator==(const ExtFormula& lhs, const ExtFormula& rhs);

 private:
  explicit ExtFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ExtFormula::Not {
  ExtFormula operand;
};

struct ExtFormula::Binary {
  Connective op;
  ExtFormula lhs;
  ExtFormula rhs;
};

inline const ExtFormula::Node& ExtFormula::node() const noexcept { return *node_; }

template <class Visitor>
decltype(auto) ExtFormula::visit(Visitor&& v) const {
  return std::visit(std::forward<Visitor>(v), *node_);
}

inline ExtFormula ExtFormula::atom(PropId id) {
  return ExtFormula(std::make_shared<const Node>(Atom{std::move(id)}));
}
inline ExtFormula ExtFormula::bottom() { return ExtFormula(std::make_shared<const Node>(Bottom{})); }
inline ExtFormula ExtFormula::top() { return ExtFormula(std::make_shared<const Node>(Top{})); }
inline ExtFormula ExtFormula::negation(ExtFormula operand) {
  return ExtFormula(std::make_shared<const Node>(Not{std::move(operand)}));
}
inline ExtFormula ExtFormula::binary(Connective op, ExtFormula lhs, ExtFormula rhs) {
  return ExtFormula(std::make_shared<const Node>(Binary{op, std::move(lhs), std::move(rhs)}));
}

inline bool operator==(const ExtFormula& lhs, const ExtFormula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.node_->index() != rhs.node_->index()) return false;
  return std::visit(
      overloaded{
          [&](const ExtFormula::Atom& a) { return a.id == std::get<ExtFormula::Atom>(*rhs.node_).id; },
          [](const ExtFormula::Bottom&) { return true; },
          [](const ExtFormula::Top&) { return true; },
          [&](const ExtFormula::Not& n) { return n.operand == std::get<ExtFormula::Not>(*rhs.node_).operand; },
          [&](const ExtFormula::Binary& b) {
            const auto& c = std::get<ExtFormula::Binary>(*rhs.node_);
            return b.op == c.op && b.lhs == c.lhs && b.rhs == c.rhs;
          },
      },
      *lhs.node_);
}

// Truth-value assignment: the listed propositions are true, all others false.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<PropId> props) : true_props_(props) {}
  explicit Interpretation(std::set<PropId> props) : true_props_(std::move(props)) {}

  template <typename Range>
  static Interpretation from_range(const Range& props) {
    return Interpretation(std::set<PropId>(std::begin(props), std::end(props)));
  }

  bool holds(const PropId& id) const { return true_props_.contains(id); }
  void set_true(PropId id) { true_props_.insert(std::move(id)); }
  const std::set<PropId>& true_props() const noexcept { return true_props_; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::set<PropId> true_props_;
};

inline bool eval(const Interpretation& i, const Formula& f) {
  return f.visit(overloaded{
      [&](const Formula::Pro& p) { return i.holds(p.id); },
      [](const Formula::Falsity&) { return false; },
      [&](const Formula::Imp& imp) { return !eval(i, imp.antecedent) || eval(i, imp.consequent); },
  });
}

// Sequent semantics: if every formula on the left holds, some formula on the
// right holds.
template <typename Left, typename Right>
bool eval_sequent(const Left& left, const Right& right, const Interpretation& i) {
  for (const Formula& f : left)
    if (!eval(i, f)) return true;
  for (const Formula& g : right)
    if (eval(i, g)) return true;
  return false;
}

inline void collect_atoms(const Formula& f, std::set<PropId>& out) {
  f.visit(overloaded{
      [&](const Formula::Pro& p) { out.insert(p.id); },
      [](const Formula::Falsity&) {},
      [&](const Formula::Imp& imp) {
        collect_atoms(imp.antecedent, out);
        collect_atoms(imp.consequent, out);
      },
  });
}

inline std::set<PropId> atoms(const Formula& f) {
  std::set<PropId> out;
  collect_atoms(f, out);
  return out;
}

inline void collect_atoms(const ExtFormula& e, std::set<PropId>& out) {
  e.visit(overloaded{
      [&](const ExtFormula::Atom& a) { out.insert(a.id); },
      [](const ExtFormula::Bottom&) {},
      [](const ExtFormula::Top&) {},
      [&](const ExtFormula::Not& n) { collect_atoms(n.operand, out); },
      [&](const ExtFormula::Binary& b) {
        collect_atoms(b.lhs, out);
        collect_atoms(b.rhs, out);
      },
  });
}

inline std::set<PropId> atoms(const ExtFormula& e) {
  std::set<PropId> out;
  collect_atoms(e, out);
  return out;
}

// Constructor count: Pro and Falsity are 1, Imp is 1 + both children.
inline std::size_t size(const Formula& f) {
  return f.visit(overloaded{
      [](const Formula::Pro&) -> std::size_t { return 1; },
      [](const Formula::Falsity&) -> std::size_t { return 1; },
      [](const Formula::Imp& imp) -> std::size_t { return 1 + size(imp.antecedent) + size(imp.consequent); },
  });
}

namespace detail {
// Counts nodes but gives up once the running total passes `limit`, so the
// cost is bounded even when shared subterms make the tree exponentially large.
inline bool count_until(const Formula& f, std::size_t limit, std::size_t& total) {
  if (++total > limit) return false;
  if (!f.is_imp()) return true;
  return count_until(f.antecedent(), limit, total) && count_until(f.consequent(), limit, total);
}
}  // namespace detail

inline std::optional<std::size_t> bounded_size(const Formula& f, std::size_t limit) {
  std::size_t total = 0;
  if (!detail::count_until(f, limit, total)) return std::nullopt;
  return total;
}

inline Formula desugar(const ExtFormula& e) {
  return e.visit(overloaded{
      [](const ExtFormula::Atom& a) { return Formula::pro(a.id); },
      [](const ExtFormula::Bottom&) { return Formula::falsity(); },
      [](const ExtFormula::Top&) { return Formula::imp(Formula::falsity(), Formula::falsity()); },
      [](const ExtFormula::Not& n) { return Formula::imp(desugar(n.operand), Formula::falsity()); },
      [](const ExtFormula::Binary& b) {
        auto conj = [](Formula p, Formula q) {
          return Formula::imp(Formula::imp(std::move(p), Formula::imp(std::move(q), Formula::falsity())),
                              Formula::falsity());
        };
        Formula p = desugar(b.lhs);
        Formula q = desugar(b.rhs);
        switch (b.op) {
          case Connective::conj:
            return conj(std::move(p), std::move(q));
          case Connective::disj:
            return Formula::imp(Formula::imp(std::move(p), Formula::falsity()), std::move(q));
          case Connective::implies:
            return Formula::imp(std::move(p), std::move(q));
          case Connective::iff:
            break;
        }
        return conj(Formula::imp(p, q), Formula::imp(q, p));
      },
  });
}

inline bool eval_ext(const Interpretation& i, const ExtFormula& e) {
  return e.visit(overloaded{
      [&](const ExtFormula::Atom& a) { return i.holds(a.id); },
      [](const ExtFormula::Bottom&) { return false; },
      [](const ExtFormula::Top&) { return true; },
      [&](const ExtFormula::Not& n) { return !eval_ext(i, n.operand); },
      [&](const ExtFormula::Binary& b) {
        bool x = eval_ext(i, b.lhs);
        bool y = eval_ext(i, b.rhs);
        switch (b.op) {
          case Connective::conj:
            return x && y;
          case Connective::disj:
            return x || y;
          case Connective::implies:
            return !x || y;
          case Connective::iff:
            break;
        }
        return x == y;
      },
  });
}

// Embeds a core formula into the surface syntax (Pro/Falsity/Imp map to
// Atom/Bottom/Implies) so it can be printed.
inline ExtFormula to_ext(const Formula& f) {
  return f.visit(overloaded{
      [](const Formula::Pro& p) { return ExtFormula::atom(p.id); },
      [](const Formula::Falsity&) { return ExtFormula::bottom(); },
      [](const Formula::Imp& imp) { return ExtFormula::implies(to_ext(imp.antecedent), to_ext(imp.consequent)); },
  });
}

}  // namespace microlog

#endif  // MICROLOG_FORMULA_HPP
