#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "paulimix/app.hpp"

namespace {

using paulimix::app::Command;
using paulimix::app::RawConfig;

struct Flags {
  std::string config;
  std::string preset;
  std::string weights;
  double two_mix_a = 0.0;
  double c = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
  int n = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::string mode;
  std::string out;
  std::string format;
  double t = 0.0;
};

void add_common_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file; flags override its values");
  sub->add_option("--preset", f.preset, "fig2 | fig3 | fig4 | fig5 | fig6");
  sub->add_option("--weights", f.weights, "mixing weights x1,x2,x3");
  sub->add_option("--two-mix-a", f.two_mix_a, "two-way mixing a (weights 0,1-a,a)");
  sub->add_option("--c", f.c, "decoherence rate constant c > 0");
  sub->add_option("--t-start", f.t_start, "first grid time");
  sub->add_option("--t-end", f.t_end, "last grid time");
  sub->add_option("--n", f.n, "number of grid points");
  sub->add_option("--sigma", f.sigma, "std-dev of Gaussian noise on Pauli expectations");
  sub->add_option("--seed", f.seed, "noise seed");
  sub->add_option("--mode", f.mode, "theory | synthetic-experiment | full-pipeline");
  sub->add_option("--out", f.out, "output directory (default: $PAULIMIX_OUT_DIR or .)");
  sub->add_option("--format", f.format, "csv | json");
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw paulimix::ConfigError("weights", "cannot parse '" + item + "' as a number");
    }
  }
  return out;
}

RawConfig collect(CLI::App* sub, const Flags& f) {
  RawConfig raw;
  auto given = [sub](const char* name) { return sub->count(name) > 0; };
  if (given("--preset")) raw.preset = f.preset;
  if (given("--weights")) raw.weights = parse_weights(f.weights);
  if (given("--two-mix-a")) raw.two_mix_a = f.two_mix_a;
  if (given("--c")) raw.c = f.c;
  if (given("--t-start")) raw.t_start = f.t_start;
  if (given("--t-end")) raw.t_end = f.t_end;
  if (given("--n")) raw.n = f.n;
  if (given("--sigma")) raw.sigma = f.sigma;
  if (given("--seed")) raw.seed = f.seed;
  if (given("--mode")) raw.mode = f.mode;
  if (given("--out")) raw.out = f.out;
  if (given("--format")) raw.format = f.format;
  if (sub->get_option_no_throw("--t") != nullptr && given("--t")) raw.t = f.t;
  if (!f.config.empty()) raw = paulimix::app::merge(paulimix::app::parse_config_file(f.config), raw);
  return raw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex mixtures of Pauli semigroups: rates, dilation simulation and Markovianity"};
  app.require_subcommand(1);

  Flags flags;
  struct Sub {
    CLI::App* app;
    Command cmd;
  };
  std::vector<Sub> subs = {
      {app.add_subcommand("rates", "theoretical decay rates and verdict"), Command::Rates},
      {app.add_subcommand("pipeline", "synthetic experiment, tomography, fit and verdicts"), Command::Pipeline},
      {app.add_subcommand("classify", "print the Markovianity verdict (exit 0 Markovian, 10 NonMarkovian)"),
       Command::Classify},
      {app.add_subcommand("tomo-demo", "reconstruct the three-qubit state at one time"), Command::TomoDemo},
  };
  for (auto& s : subs) add_common_flags(s.app, flags);
  subs.back().app->add_option("--t", flags.t, "time of the reconstructed state (default 0.1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : paulimix::app::kExitConfig;
  }

  for (auto& s : subs) {
    if (!s.app->parsed()) continue;
    RawConfig raw;
    try {
      raw = collect(s.app, flags);
    } catch (const paulimix::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return paulimix::app::kExitConfig;
    }
    return paulimix::app::run_command(s.cmd, raw, std::cout, std::cerr);
  }
  return paulimix::app::kExitConfig;
}
