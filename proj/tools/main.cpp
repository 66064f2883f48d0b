#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace spflag;
using namespace spflag::cli;

int main(int argc, char** argv) {
  CLI::App app{"Degenerate symplectic flag varieties: characters, fixed points, discrepancies"};
  app.set_help_flag("-h,--help", "Print help");

  std::string command;
  std::string lambda_text, d_text, type_text = "C", format_text = "json", basis_text = "eps";
  std::optional<std::uint64_t> seed;
  JobConfig cfg;

  app.add_option("command", command, "One of: dim qchar weyl polytope fixed-points abl-verify discrepancy "
                                     "check-geometry lift")
      ->required();
  app.add_option("--n", cfg.n, "Rank n of sp_2n (or m of sl_m with --type A)");
  app.add_option("--lambda", lambda_text, "Highest weight m1,...,m_rank in fundamental weights");
  app.add_option("--d", d_text, "Parabolic datum d1<d2<... within 1..n");
  app.add_option("--type", type_text, "Root system type C or A")->check(CLI::IsMember({"C", "A"}));
  app.add_option("--trials", cfg.trials, "Random points for abl-verify");
  app.add_option("--seed", seed, "RNG seed (falls back to SPFLAG_SEED, then 1)");
  app.add_option("--output", cfg.output, "Write results to this file instead of stdout");
  app.add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--weight-basis", basis_text, "Character exponents in eps or omega coordinates")
      ->check(CLI::IsMember({"eps", "omega"}));
  app.add_option("--threads", cfg.threads, "Worker threads for enumerations");
  app.add_option("--input", cfg.input, "JSON input for check-geometry and lift");
  app.add_flag("--force", cfg.force, "Ignore soft size limits");
  app.add_flag("--count", cfg.count, "fixed-points: print only the number of collections");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto c = parse_command(command);
    if (!c) throw UsageError("unknown command \"" + command + "\"; see --help");
    cfg.command = *c;
    cfg.type = type_text == "A" ? Kind::A : Kind::C;
    cfg.format = format_text == "csv" ? Format::Csv : Format::Json;
    cfg.basis = basis_text == "omega" ? WeightBasis::Omega : WeightBasis::Eps;
    if (!lambda_text.empty()) cfg.lambda = parse_int_list(lambda_text, "--lambda");
    if (!d_text.empty()) cfg.d = parse_int_list(d_text, "--d");
    if (seed) {
      cfg.seed = *seed;
    } else if (const char* env = std::getenv("SPFLAG_SEED")) {
      try {
        std::size_t used = 0;
        cfg.seed = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("SPFLAG_SEED is not an unsigned integer: ") + env);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cfg, std::cout, std::cerr);
}
