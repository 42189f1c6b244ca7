#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace qsdc::cli {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string block_bits(int value) {
  return std::string{static_cast<char>('0' + ((value >> 1) & 1)),
                     static_cast<char>('0' + (value & 1))};
}

// Hex form: the low `bits` bits of the value, high bit first. Dropping
// nonzero high bits is an error, not silent truncation.
std::optional<std::string> expand_hex(const std::string& text, int bits,
                                      std::string& diag) {
  std::string expanded;
  for (std::size_t k = 2; k < text.size(); ++k) {
    const char c = text[k];
    int digit;
    if (c >= '0' && c <= '9')
      digit = c - '0';
    else if (c >= 'a' && c <= 'f')
      digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      digit = c - 'A' + 10;
    else {
      diag = "invalid hex digit in --message";
      return std::nullopt;
    }
    for (int b = 3; b >= 0; --b)
      expanded.push_back(static_cast<char>('0' + ((digit >> b) & 1)));
  }
  const std::size_t want = static_cast<std::size_t>(bits);
  if (expanded.size() > want) {
    const std::size_t cut = expanded.size() - want;
    if (expanded.find('1') < cut) {
      diag = "--message value does not fit in --message-bits";
      return std::nullopt;
    }
    expanded.erase(0, cut);
  } else if (expanded.size() < want) {
    expanded.insert(0, want - expanded.size(), '0');
  }
  return expanded;
}

struct RawOptions {
  std::string message;
  int message_bits = -1;
  std::uint64_t trials = 100000;
  double p = 0.0;
  double px1 = 0.0, pz1 = 0.0, px2 = 0.0, pz2 = 0.0;
  std::string eve = "none";
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "text";
  int blocks = 1;
};

void add_noise_flags(CLI::App* cmd, RawOptions& raw) {
  const auto range = CLI::Range(0.0, 1.0);
  cmd->add_option("--p", raw.p, "All four flip probabilities at once")
      ->check(range);
  cmd->add_option("--px1", raw.px1, "Bit-flip probability, channel 1")
      ->check(range);
  cmd->add_option("--pz1", raw.pz1, "Phase-flip probability, channel 1")
      ->check(range);
  cmd->add_option("--px2", raw.px2, "Bit-flip probability, channel 2")
      ->check(range);
  cmd->add_option("--pz2", raw.pz2, "Phase-flip probability, channel 2")
      ->check(range);
}

NoiseConfig resolve_noise(const CLI::App* cmd, const RawOptions& raw) {
  NoiseConfig noise;
  if (cmd->count("--p") > 0) noise = uniform_noise(raw.p);
  if (cmd->count("--px1") > 0) noise.px1 = raw.px1;
  if (cmd->count("--pz1") > 0) noise.pz1 = raw.pz1;
  if (cmd->count("--px2") > 0) noise.px2 = raw.px2;
  if (cmd->count("--pz2") > 0) noise.pz2 = raw.pz2;
  return noise;
}

const std::vector<std::string>& eve_names() {
  static const std::vector<std::string> names = {
      "none", "single-1", "single-2", "synchronized-naive",
      "synchronized-bell-aware"};
  return names;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Exact two-qubit simulator and Monte Carlo harness for a "
               "dense-coding direct-communication protocol"};
  app.name("qsdc");
  app.require_subcommand(1);

  RawOptions raw;

  CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo campaign");
  run->add_option("--message", raw.message,
                  "Message as bits (\"0110\") or hex (\"0x1b\" with "
                  "--message-bits)")
      ->required();
  run->add_option("--message-bits", raw.message_bits,
                  "Bit length of a hex message")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--trials", raw.trials, "Number of independent trials")
      ->check(CLI::PositiveNumber);
  add_noise_flags(run, raw);
  run->add_option("--eve", raw.eve, "Interception strategy")
      ->check(CLI::IsMember(eve_names()));
  run->add_option("--seed", raw.seed, "Master seed");
  run->add_option("--output", raw.output, "Write the result document here");
  run->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* oracle =
      app.add_subcommand("oracle", "Print exact interception success rates");
  oracle->add_option("--eve", raw.eve, "Interception strategy")
      ->check(CLI::IsMember(eve_names()));
  add_noise_flags(oracle, raw);
  oracle->add_option("--blocks", raw.blocks, "Message length in blocks")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--output", raw.output, "Write the result document here");
  oracle->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  app.add_subcommand("tables",
                     "Print the 16-row encoding table, generated at runtime");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ParseResult{std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ParseResult{std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ParseResult{std::nullopt, kExitUsage};
  }

  CliConfig cfg;
  if (app.got_subcommand("tables")) {
    cfg.command = Command::Tables;
    return ParseResult{cfg, kExitOk};
  }

  const CLI::App* active = app.got_subcommand("run") ? run : oracle;
  cfg.command = app.got_subcommand("run") ? Command::Run : Command::Oracle;
  cfg.noise = resolve_noise(active, raw);
  const std::optional<EveStrategy> strat = strategy_from_name(raw.eve);
  if (!strat) {
    err << "error: unknown --eve strategy\n";
    return ParseResult{std::nullopt, kExitUsage};
  }
  cfg.eve = *strat;
  cfg.seed = raw.seed;
  cfg.trials = raw.trials;
  cfg.format = raw.format == "json" ? Format::Json : Format::Text;
  if (active->count("--output") > 0) cfg.output_path = raw.output;
  cfg.oracle_blocks = raw.blocks;

  if (cfg.command == Command::Run) {
    const bool hex = raw.message.rfind("0x", 0) == 0 ||
                     raw.message.rfind("0X", 0) == 0;
    if (hex) {
      if (raw.message_bits < 0) {
        err << "error: hex --message requires --message-bits\n";
        return ParseResult{std::nullopt, kExitUsage};
      }
      std::string diag;
      const std::optional<std::string> bits =
          expand_hex(raw.message, raw.message_bits, diag);
      if (!bits) {
        err << "error: " << diag << "\n";
        return ParseResult{std::nullopt, kExitUsage};
      }
      cfg.message_text = *bits;
    } else {
      if (run->count("--message-bits") > 0) {
        err << "error: --message-bits applies only to hex messages\n";
        return ParseResult{std::nullopt, kExitUsage};
      }
      if (raw.message.find_first_not_of("01") != std::string::npos) {
        err << "error: --message must be bits or 0x-prefixed hex\n";
        return ParseResult{std::nullopt, kExitUsage};
      }
      cfg.message_text = raw.message;
    }
    if (cfg.message_text.size() % 2 != 0) {
      err << "error: message bit length must be even\n";
      return ParseResult{std::nullopt, kExitUsage};
    }
  }
  return ParseResult{cfg, kExitOk};
}

std::string emit_tables() {
  std::ostringstream os;
  os << "carrier  block  gate  output\n";
  for (BellKind carrier : kAllBellKinds) {
    for (int value = 0; value < 4; ++value) {
      const MessageBlock block(value);
      const GateLabel gate = select_encoding_op(carrier, block);
      const std::optional<BellMatch> match = classify_bell(encode(carrier, block));
      char line[64];
      std::snprintf(line, sizeof line, "%-7s  %-5s  %-4s  %s\n",
                    bell_name(carrier), block_bits(value).c_str(),
                    gate_name(gate),
                    match ? bell_name(match->kind) : "not-bell");
      os << line;
    }
  }
  return os.str();
}

namespace {

double paper_claim_message_success(std::size_t message_bits) {
  return std::pow(0.25, static_cast<double>(message_bits));
}

}  // namespace

std::string render_results_text(const CliConfig& cfg, const RunStats& stats) {
  std::ostringstream os;
  const std::size_t nbits = cfg.message_text.size();
  os << "run summary\n";
  os << "  message             : "
     << (cfg.message_text.empty() ? "(empty)" : cfg.message_text) << " ("
     << nbits << " bits, " << stats.blocks_per_trial << " blocks)\n";
  os << "  noise               : px1=" << fmt6(cfg.noise.px1)
     << " pz1=" << fmt6(cfg.noise.pz1) << " px2=" << fmt6(cfg.noise.px2)
     << " pz2=" << fmt6(cfg.noise.pz2) << "\n";
  os << "  eve                 : " << strategy_name(cfg.eve) << "\n";
  os << "  trials              : " << stats.trials << " (seed " << cfg.seed
     << ")\n";
  os << "  block error rate    : " << fmt6(stats.block_error_rate) << "\n";
  os << "  bit error rate      : " << fmt6(stats.bit_error_rate) << "\n";
  os << "  eve block success   : " << fmt6(stats.eve_block_success_rate)
     << " (exact " << fmt6(stats.oracle_block_success) << ", published claim "
     << fmt6(stats.paper_claim_block_success) << ")\n";
  os << "  eve message success : " << fmt6(stats.eve_message_success_rate)
     << " (published claim " << fmt6(paper_claim_message_success(nbits))
     << ")\n";
  return os.str();
}

std::string render_results_json(const CliConfig& cfg, const RunStats& stats) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"bit_error_rate\": " << fmt17(stats.bit_error_rate) << ",\n";
  os << "  \"block_error_rate\": " << fmt17(stats.block_error_rate) << ",\n";
  os << "  \"blocks_per_trial\": " << stats.blocks_per_trial << ",\n";
  os << "  \"config\": {\n";
  os << "    \"eve\": \"" << strategy_name(cfg.eve) << "\",\n";
  os << "    \"message\": \"" << cfg.message_text << "\",\n";
  os << "    \"px1\": " << fmt17(cfg.noise.px1) << ",\n";
  os << "    \"px2\": " << fmt17(cfg.noise.px2) << ",\n";
  os << "    \"pz1\": " << fmt17(cfg.noise.pz1) << ",\n";
  os << "    \"pz2\": " << fmt17(cfg.noise.pz2) << "\n";
  os << "  },\n";
  os << "  \"eve_block_success_rate\": " << fmt17(stats.eve_block_success_rate)
     << ",\n";
  os << "  \"eve_message_success_rate\": "
     << fmt17(stats.eve_message_success_rate) << ",\n";
  os << "  \"oracle_block_success\": " << fmt17(stats.oracle_block_success)
     << ",\n";
  os << "  \"paper_claim_block_success\": "
     << fmt17(stats.paper_claim_block_success) << ",\n";
  os << "  \"paper_claim_message_success\": "
     << fmt17(paper_claim_message_success(cfg.message_text.size())) << ",\n";
  os << "  \"seed\": " << cfg.seed << ",\n";
  os << "  \"trials\": " << stats.trials << "\n";
  os << "}\n";
  return os.str();
}

std::string render_oracle_text(const CliConfig& cfg) {
  const double block = exact_block_success(cfg.eve, cfg.noise);
  const double message = std::pow(block, cfg.oracle_blocks);
  const std::size_t nbits = 2 * static_cast<std::size_t>(cfg.oracle_blocks);
  std::ostringstream os;
  os << "oracle summary\n";
  os << "  eve                   : " << strategy_name(cfg.eve) << "\n";
  os << "  noise                 : px1=" << fmt6(cfg.noise.px1)
     << " pz1=" << fmt6(cfg.noise.pz1) << " px2=" << fmt6(cfg.noise.px2)
     << " pz2=" << fmt6(cfg.noise.pz2) << "\n";
  os << "  blocks                : " << cfg.oracle_blocks << "\n";
  os << "  exact block success   : " << fmt6(block) << " (published claim "
     << fmt6(1.0 / 16.0) << ")\n";
  os << "  exact message success : " << fmt6(message) << " (published claim "
     << fmt6(paper_claim_message_success(nbits)) << ")\n";
  return os.str();
}

std::string render_oracle_json(const CliConfig& cfg) {
  const double block = exact_block_success(cfg.eve, cfg.noise);
  const double message = std::pow(block, cfg.oracle_blocks);
  const std::size_t nbits = 2 * static_cast<std::size_t>(cfg.oracle_blocks);
  std::ostringstream os;
  os << "{\n";
  os << "  \"blocks\": " << cfg.oracle_blocks << ",\n";
  os << "  \"eve\": \"" << strategy_name(cfg.eve) << "\",\n";
  os << "  \"exact_block_success\": " << fmt17(block) << ",\n";
  os << "  \"exact_message_success\": " << fmt17(message) << ",\n";
  os << "  \"paper_claim_block_success\": " << fmt17(1.0 / 16.0) << ",\n";
  os << "  \"paper_claim_message_success\": "
     << fmt17(paper_claim_message_success(nbits)) << ",\n";
  os << "  \"px1\": " << fmt17(cfg.noise.px1) << ",\n";
  os << "  \"px2\": " << fmt17(cfg.noise.px2) << ",\n";
  os << "  \"pz1\": " << fmt17(cfg.noise.pz1) << ",\n";
  os << "  \"pz2\": " << fmt17(cfg.noise.pz2) << "\n";
  os << "}\n";
  return os.str();
}

namespace {

int write_document(const std::string& doc, const std::optional<std::string>& path,
                   std::ostream& out, std::ostream& err) {
  if (!path) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *path << " for writing\n";
    return kExitRuntime;
  }
  file << doc;
  file.flush();
  if (!file) {
    err << "error: failed writing " << *path << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int emit_results(const CliConfig& cfg, const RunStats& stats,
                 std::ostream& out, std::ostream& err) {
  const std::string doc = cfg.format == Format::Json
                              ? render_results_json(cfg, stats)
                              : render_results_text(cfg, stats);
  if (cfg.output_path) {
    // Keep the human summary on stdout even when the document goes to a file.
    out << render_results_text(cfg, stats);
  }
  return write_document(doc, cfg.output_path, out, err);
}

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Tables:
      out << emit_tables();
      return kExitOk;
    case Command::Oracle: {
      const std::string doc = cfg.format == Format::Json
                                  ? render_oracle_json(cfg)
                                  : render_oracle_text(cfg);
      if (cfg.output_path) out << render_oracle_text(cfg);
      return write_document(doc, cfg.output_path, out, err);
    }
    case Command::Run: {
      SessionConfig session;
      session.message = message_from_bits(cfg.message_text);
      session.noise = cfg.noise;
      session.eve = cfg.eve;
      session.master_seed = cfg.seed;
      session.trials = cfg.trials;
      const RunStats stats = run_monte_carlo(session);
      return emit_results(cfg, stats, out, err);
    }
  }
  return kExitRuntime;
}

int main_impl(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  const ParseResult parsed = parse_args(args, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  try {
    return execute(*parsed.config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace qsdc::cli
