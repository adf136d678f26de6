#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntx/suite.hpp"

namespace ntx::cli {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_cap = 3 };

/// Parse or semantic error in a spec file, located by line and column (both 1-based, 0 when unknown).
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& origin, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

struct Caps {
  std::size_t max_order = 4096;     ///< flattened extension order
  std::size_t max_ideals = 100000;
  std::size_t max_len = 0;          ///< factorization length bound, 0: ring order
  std::size_t max_results = 200000;
};

struct SpecDocument {
  std::string origin;
  std::string ring_kind;
  std::string maps_kind;
  RingPtr ring;
  std::vector<ModulePtr> modules;
  ExtensionPtr extension;
  Strictness strictness = Strictness::strict;
  Caps caps;
  /// Named multiplicative sets, stored as their closures.
  std::vector<std::pair<std::string, MultiplicativeSet>> mult_sets;
  std::vector<std::pair<std::string, ClassSelector>> ideal_classes;
  std::vector<Coords> recorded;
};

/// Line-oriented format: [ring], [module] (once per M_i, in order), [maps], [options]; key = value lines,
/// several key=value tokens per line when separated by spaces, # starts a comment.
SpecDocument parse_spec_text(const std::string& text, const std::string& origin = "<spec>");
SpecDocument parse_spec(const std::string& path);

struct Flags {
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> max_len;
  std::vector<std::string> checks;
  std::vector<std::string> elements;  ///< each a comma separated coordinate tuple
  std::optional<std::string> mult_set;
  bool timings = false;
};

struct ReportDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> instance;
  std::vector<CheckRecord> checks;
  std::string error;
  int exit_status = exit_ok;
};

const std::vector<std::string>& command_names();

/// Never throws for command-level problems: usage faults and cap overruns land in error and exit_status.
ReportDocument run_command(const std::string& command, const SpecDocument& spec, const Flags& flags);

std::string render_json(const ReportDocument& r, bool timings);
std::string render_text(const ReportDocument& r, bool timings);

/// The whole command line tool; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace ntx::cli
