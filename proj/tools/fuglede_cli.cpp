// Command-line harness: fuglede <command> [--sizes ..] [--trials N] [--seed S]
//   [--norms ..] [--ensemble ..] [--out PATH] [--format csv|json] [--timing]

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuglede/errors.hpp"
#include "fuglede/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& tok : split_commas(s)) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw fuglede::InvalidSpec("bad size '" + tok + "'");
    }
    if (pos != tok.size() || v < 1) throw fuglede::InvalidSpec("sizes must be positive integers, got '" + tok + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw fuglede::InvalidSpec("--sizes must not be empty");
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuglede-property numerical workbench"};
  std::string command;
  std::string sizes;
  std::string norms;
  std::string ensemble = "random";
  std::string format = "csv";
  fuglede::ExperimentConfig config;

  app.add_option("command", command, "davies | fuglede-sweep | counterexample | boyd | calderon-check | doi-check")
      ->required();
  app.add_option("--sizes", sizes, "comma-separated dimensions");
  app.add_option("--trials", config.trials, "seeded trials per size");
  app.add_option("--seed", config.seed, "64-bit seed");
  app.add_option("--norms", norms, "comma-separated: s1,s1.5,s2,s4,sinf,weakl1,llog");
  app.add_option("--ensemble", ensemble, "fuglede-sweep pairs: random | self-adjoint | counterexample");
  app.add_option("--out", config.output_path, "output path, '-' for stdout");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--timing", config.timing, "record wall time (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    config.command = fuglede::parse_command(command);
    if (!sizes.empty()) config.sizes = parse_sizes(sizes);
    for (const auto& tok : split_commas(norms)) config.norms.push_back(fuglede::NormSpec::parse(tok));
    config.ensemble = fuglede::parse_ensemble(ensemble);
    config.format = format == "json" ? fuglede::OutputFormat::Json : fuglede::OutputFormat::Csv;
    const auto records = fuglede::run_experiment(config);
    fuglede::emit(records, config.format, config.output_path);
  } catch (const fuglede::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fuglede::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const fuglede::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
