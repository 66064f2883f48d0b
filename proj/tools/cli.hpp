#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spflag/rootsys.hpp"
#include "spflag/serialize.hpp"

namespace spflag::cli {

enum class Command { Dim, QChar, Weyl, Polytope, FixedPoints, AblVerify, Discrepancy, CheckGeometry, Lift };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Enumerative commands refuse larger n without --force.
inline constexpr int kSoftMaxN = 4;
inline constexpr int kSoftMaxNAbl = 3;

struct JobConfig {
  Command command = Command::Dim;
  Kind type = Kind::C;
  // n for sp_2n, m for sl_m.
  int n = 0;
  std::optional<std::vector<int>> lambda;
  std::optional<std::vector<int>> d;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string output;  // empty: the `out` stream
  Format format = Format::Json;
  WeightBasis basis = WeightBasis::Eps;
  int threads = 1;
  bool force = false;
  bool count = false;
  std::string input;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
const std::vector<std::string>& command_names();

// "1,0,2" -> {1, 0, 2}; throws UsageError on anything else.
std::vector<int> parse_int_list(const std::string& text, const std::string& what);

// Writes results to config.output (or `out`) and diagnostics to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spflag::cli
