#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlap/options.hpp"

namespace hyperlap::cli {

enum class Subcommand { gen, spectrum, lmax, oracle, verify, bipartite, conjecture };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitVerificationFailed = 4;

struct CommandRequest {
  Subcommand command = Subcommand::gen;
  std::string input;        // hypergraph file
  std::string output;       // empty: stdout
  std::string format;       // empty: json, or csv for conjecture
  std::string family;
  unsigned k = 0;
  std::vector<unsigned> k_list;
  std::size_t d = 0;
  std::size_t s = 0;
  std::size_t n = 0;
  std::string graph;        // base graph file for power
  double lambda = 0.0;
  std::string vector_path;
  std::string kind = "laplacian";
  std::string method = "both";
  bool compare = false;
  SolverOptions opts;
};

struct ExitReport {
  int code = kExitOk;
  std::string summary;
  std::vector<std::string> outputs;
};

/// Bad command line; carries the usage text of the offending command.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string usage) : std::runtime_error(what), usage_(std::move(usage)) {}
  const std::string& usage() const noexcept { return usage_; }

 private:
  std::string usage_;
};

/// argv without the program name. Throws UsageError; a help request throws
/// UsageError with an empty message.
CommandRequest parse_args(const std::vector<std::string>& args);

/// Reports go to the output file when set, otherwise to `out`; the summary
/// line is also written to `err`.
ExitReport run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlap::cli
