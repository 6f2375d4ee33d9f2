#ifndef IPC_CLI_HPP
#define IPC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ipc/synthesis.hpp"

namespace ipc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kBadInput = 2;

struct ProveOptions {
  std::optional<std::string> q;  // stop after pruning and emit ⊢ QQZ for this Q
  FinalStep final_step = FinalStep::Identity;
  bool stats = false;
};

struct ProveResult {
  int status = kOk;
  std::string proof;       // serialized proof, empty on failure
  nlohmann::json report;   // includes "wall_ms"
  std::string message;     // diagnostic on failure
};

ProveResult cmd_prove(const std::string& formula_text, const ProveOptions& opts);

// Falsifying valuation in first-occurrence variable order: "p=true q=false".
std::string format_valuation(const Formula& f, const Valuation& v);

// Full command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipc::cli

#endif
