#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/json_io.hpp"

namespace fgt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDefect = 70;

/// Unknown subcommand or parameter, missing or malformed flag value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamSpec {
  std::string name;
  /// Flags take no value; their presence maps to "true".
  bool is_flag = false;
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<ParamSpec> params;
};

/// Subcommands and their parameters. The front end builds its parser from
/// this table, and `dispatch` rejects anything not listed here.
const std::vector<CommandSpec>& command_specs();

enum class OutputFormat { Json, Text };

struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> params;
  OutputFormat format = OutputFormat::Json;
};

/// Runs the request and returns its JSON result. Library errors propagate.
json_io::Json execute(const CommandRequest& request);

/// Serializes the result to `out`, or an error line to `err`, and returns the
/// exit status: 0, 1 (verify-all failure), 2, 3, 64 or 70.
int dispatch(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Exit status for an exception escaping `execute`.
int exit_code_for(const std::exception& e);

/// Flattened "path: value" lines, one per scalar, in key order.
std::string render_text(const json_io::Json& j);

}  // namespace fgt::cli
