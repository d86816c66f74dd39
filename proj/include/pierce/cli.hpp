#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pierce::cli {

enum class OutputFormat { plain, csv, json };

/// Bad command line; carries a one-line hint. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed and validated invocation.
struct Command {
  std::string name;
  OutputFormat output = OutputFormat::plain;
  std::vector<std::string> positional;

  std::optional<std::string> rule;
  std::optional<std::string> year;
  std::optional<std::string> through;
  std::optional<std::string> x;
  std::optional<std::string> alpha;
  std::optional<std::string> c;
  std::optional<std::string> jmax;
  std::string method = "formula";

  std::optional<std::size_t> n;
  std::optional<std::size_t> rmax;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> count;
  std::size_t guard = 3;
  std::size_t start_index = 1;
  unsigned bits = 128;
  std::optional<unsigned> precision;
  std::uint64_t seed = 0;
  int decimals = 12;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// argv excludes the program name.
Command parse(const std::vector<std::string>& argv);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse + execute with the documented exit codes.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pierce::cli
