#ifndef MICROLOG_CLI_HPP
#define MICROLOG_CLI_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "microlog/formula.hpp"
#include "microlog/oracle.hpp"
#include "microlog/prover.hpp"
#include "microlog/serialize.hpp"
#include "microlog/syntax.hpp"

// Command dispatch for the `microlog` tool, kept stream-based so it can be
// driven in-process.
namespace microlog::cli {

enum class Command { prove, countermodel, trace, table, parse };

inline constexpr std::size_t kDefaultMeasureLimit = 100000;
inline constexpr const char* kMeasureLimitEnv = "MICROLOG_MEASURE_LIMIT";

namespace exit_code {
inline constexpr int valid = 0;
inline constexpr int invalid = 1;
inline constexpr int syntax_error = 2;
inline constexpr int resource_limit = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

struct Config {
  Command command = Command::prove;
  std::string formula_text;
  bool json = false;
  bool batch = false;  // read formulas from the input stream, one per line
  std::size_t measure_limit = kDefaultMeasureLimit;
};

inline std::optional<Command> command_from_string(std::string_view name) {
  if (name == "prove") return Command::prove;
  if (name == "countermodel") return Command::countermodel;
  if (name == "trace") return Command::trace;
  if (name == "table") return Command::table;
  if (name == "parse") return Command::parse;
  return std::nullopt;
}

// Positive decimal integer, or nullopt.
inline std::optional<std::size_t> parse_limit(std::string_view text) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

namespace detail {

inline std::size_t display_column(std::string_view text, std::size_t byte_pos) {
  std::size_t col = 0;
  for (std::size_t k = 0; k < byte_pos && k < text.size(); ++k)
    if ((static_cast<unsigned char>(text[k]) & 0xC0) != 0x80) ++col;
  return col;
}

inline void report_parse_error(std::ostream& err, const std::string& label, std::string_view text, const ParseError& e) {
  std::string echo(text);
  std::replace(echo.begin(), echo.end(), '\t', ' ');
  err << label << "syntax error at position " << e.position() << ": expected " << e.expected() << ", found "
      << e.found() << '\n'
      << "  " << echo << '\n'
      << "  " << std::string(display_column(text, e.position()), ' ') << "^\n";
}

inline void print_tree(std::ostream& out, const Derivation& d, std::size_t depth) {
  out << std::string(2 * depth, ' ') << to_string(d.rule) << ": " << to_string(d.conclusion) << '\n';
  for (const Derivation& p : d.premises) print_tree(out, p, depth + 1);
}

inline std::string assignment_text(const Interpretation& i, const Formula& f) {
  auto atom_set = atoms(f);
  if (atom_set.empty()) return "(empty assignment)";
  return describe_assignment(i, atom_set);
}

inline void print_table(std::ostream& out, const oracle::TruthTable& table, const Formula& f) {
  for (const PropId& a : table.atoms) out << a.name() << ' ';
  out << "| " << pretty(f) << '\n';
  for (const auto& row : table.rows) {
    for (const PropId& a : table.atoms) {
      out << (row.interpretation.holds(a) ? 'T' : 'F') << std::string(a.name().size(), ' ');
    }
    out << "| " << (row.value ? 'T' : 'F') << '\n';
  }
}

// Handles one formula. `label` prefixes diagnostics (empty outside batch mode).
inline int run_one(const Config& config, std::string_view text, std::ostream& out, std::ostream& err,
                   const std::string& label) {
  ExtFormula surface = ExtFormula::bottom();
  try {
    surface = parse(text);
  } catch (const ParseError& e) {
    report_parse_error(err, label, text, e);
    if (config.batch) out << (config.json ? R"({"error":"syntax"})" : "error") << '\n';
    return exit_code::syntax_error;
  }

  const Formula f = desugar(surface);
  if (!bounded_size(f, config.measure_limit)) {
    err << label << "resource limit: formula measure exceeds " << config.measure_limit << '\n';
    if (config.batch) out << (config.json ? R"({"error":"resource"})" : "error") << '\n';
    return exit_code::resource_limit;
  }

  switch (config.command) {
    case Command::prove: {
      if (config.json) {
        Verdict v = prove_with_trace(f);
        out << to_json(v) << '\n';
        return v.proved() ? exit_code::valid : exit_code::invalid;
      }
      const bool valid = prove(f);
      out << (valid ? "valid" : "invalid") << '\n';
      return valid ? exit_code::valid : exit_code::invalid;
    }
    case Command::countermodel: {
      auto model = countermodel(f);
      if (config.json)
        out << (model ? to_json(*model) : std::string("null")) << '\n';
      else
        out << (model ? assignment_text(*model, f) : std::string("none")) << '\n';
      return exit_code::valid;
    }
    case Command::trace: {
      Verdict v = prove_with_trace(f);
      if (config.json) {
        out << to_json(v) << '\n';
      } else if (v.proved()) {
        out << "valid\n";
        print_tree(out, v.derivation(), 1);
      } else {
        out << "invalid\n";
        const Refuted& r = v.refutation();
        for (std::size_t k = 0; k < r.leaves.size(); ++k)
          out << "  open leaf: " << to_string(r.leaves[k]) << "  countermodel: " << assignment_text(r.countermodels[k], f)
              << '\n';
      }
      return exit_code::valid;
    }
    case Command::table: {
      oracle::TruthTable table;
      try {
        table = oracle::truth_table(f);
      } catch (const oracle::AtomLimitExceeded& e) {
        err << label << "resource limit: " << e.what() << '\n';
        if (config.batch) out << (config.json ? R"({"error":"resource"})" : "error") << '\n';
        return exit_code::resource_limit;
      }
      if (config.json)
        out << to_json(table) << '\n';
      else
        print_table(out, table, f);
      return exit_code::valid;
    }
    case Command::parse:
      out << (config.json ? to_json(f) : pretty(f)) << '\n';
      return exit_code::valid;
  }
  return exit_code::usage;
}

inline bool skip_line(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r\f\v");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace detail

// Single mode handles config.formula_text. Batch mode reads one formula per
// line from `in` (blank lines and lines starting with '#' are skipped),
// writes one result per formula in input order, and returns the largest
// per-line exit code.
inline int run(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!config.batch) return detail::run_one(config, config.formula_text, out, err, "");

  int worst = exit_code::valid;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::skip_line(line)) continue;
    int code = detail::run_one(config, line, out, err, "line " + std::to_string(line_no) + ": ");
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace microlog::cli

#endif  // MICROLOG_CLI_HPP
