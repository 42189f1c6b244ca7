#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qsdc/session.hpp>

namespace qsdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Run, Oracle, Tables };
enum class Format { Text, Json };

struct CliConfig {
  Command command = Command::Run;
  std::string message_text;     // bit string, already normalized from hex
  std::uint64_t trials = 100000;
  NoiseConfig noise;
  EveStrategy eve = EveStrategy::None;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  Format format = Format::Text;
  int oracle_blocks = 1;  // message length in blocks for `oracle`
};

struct ParseResult {
  std::optional<CliConfig> config;  // empty means: exit with `exit_code`
  int exit_code = kExitOk;
};

// Parses without the program name. Help text goes to `out`, diagnostics to
// `err`; usage errors yield exit code 2.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

// All 16 (carrier, block, gate, codeword) rows, generated from the codec at
// runtime so the printout doubles as a regression check.
std::string emit_tables();

std::string render_results_text(const CliConfig& cfg, const RunStats& stats);

// Fixed key set, keys sorted, doubles with 17 significant digits, no
// timestamps: byte-reproducible for fixed seeds.
std::string render_results_json(const CliConfig& cfg, const RunStats& stats);

std::string render_oracle_text(const CliConfig& cfg);
std::string render_oracle_json(const CliConfig& cfg);

// Writes the text summary and, for format=json, the JSON document to the
// output path or stdout. Returns kExitRuntime on I/O failure.
int emit_results(const CliConfig& cfg, const RunStats& stats,
                 std::ostream& out, std::ostream& err);

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err);

int main_impl(int argc, const char* const* argv);

}  // namespace qsdc::cli
