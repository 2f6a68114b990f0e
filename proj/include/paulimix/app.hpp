#pragma once

// Command implementations behind the `paulimix` executable: configuration
// resolution, orchestration and CSV / JSON export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "paulimix/estimation.hpp"

namespace paulimix::app {

using nlohmann::json;

enum class Command { Rates, Pipeline, Classify, TomoDemo };
enum class Mode { Theory, SyntheticExperiment, FullPipeline };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNonMarkovian = 10;

inline constexpr const char* kOutDirEnv = "PAULIMIX_OUT_DIR";

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::Theory: return "theory";
    case Mode::SyntheticExperiment: return "synthetic-experiment";
    case Mode::FullPipeline: return "full-pipeline";
  }
  return "";
}

/// Every field optional: the union of what a config file and flags may set.
struct RawConfig {
  std::optional<std::string> preset;
  std::optional<std::vector<double>> weights;
  std::optional<double> two_mix_a;
  std::optional<double> c;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<int> n;
  std::optional<double> sigma;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> t;
};

/// Fields set in `over` replace those in `base`.
inline RawConfig merge(RawConfig base, const RawConfig& over) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(base.preset, over.preset);
  take(base.weights, over.weights);
  take(base.two_mix_a, over.two_mix_a);
  take(base.c, over.c);
  take(base.t_start, over.t_start);
  take(base.t_end, over.t_end);
  take(base.n, over.n);
  take(base.sigma, over.sigma);
  take(base.seed, over.seed);
  take(base.mode, over.mode);
  take(base.out, over.out);
  take(base.format, over.format);
  take(base.t, over.t);
  // an explicit mixture on the command line replaces the file's mixture
  if (over.weights) base.two_mix_a.reset();
  if (over.two_mix_a && !over.weights) base.weights.reset();
  return base;
}

namespace detail {

template <typename T>
std::optional<T> get_field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "has the wrong type");
  }
}

inline void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError(prefix + key, "unknown configuration key");
  }
}

inline const json& section(const json& root, const char* key) {
  static const json kEmpty = json::object();
  const auto it = root.find(key);
  if (it == root.end() || it->is_null()) return kEmpty;
  if (!it->is_object()) throw ConfigError(key, "must be an object");
  return *it;
}

}  // namespace detail

/// Config document layout:
///   {"preset", "weights": [x1,x2,x3], "two_mix_a", "c", "t",
///    "grid": {"t_start","t_end","n"}, "noise": {"sigma","seed"},
///    "mode", "output": {"path","format"}}
inline RawConfig parse_config_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");
  detail::reject_unknown(doc, {"preset", "weights", "two_mix_a", "c", "t", "grid", "noise", "mode", "output"}, "");
  RawConfig raw;
  raw.preset = detail::get_field<std::string>(doc, "preset", "preset");
  raw.weights = detail::get_field<std::vector<double>>(doc, "weights", "weights");
  raw.two_mix_a = detail::get_field<double>(doc, "two_mix_a", "two_mix_a");
  raw.c = detail::get_field<double>(doc, "c", "c");
  raw.t = detail::get_field<double>(doc, "t", "t");
  raw.mode = detail::get_field<std::string>(doc, "mode", "mode");

  const json& grid = detail::section(doc, "grid");
  detail::reject_unknown(grid, {"t_start", "t_end", "n"}, "grid.");
  raw.t_start = detail::get_field<double>(grid, "t_start", "grid.t_start");
  raw.t_end = detail::get_field<double>(grid, "t_end", "grid.t_end");
  raw.n = detail::get_field<int>(grid, "n", "grid.n");

  const json& noise = detail::section(doc, "noise");
  detail::reject_unknown(noise, {"sigma", "seed"}, "noise.");
  raw.sigma = detail::get_field<double>(noise, "sigma", "noise.sigma");
  raw.seed = detail::get_field<std::uint64_t>(noise, "seed", "noise.seed");

  const json& output = detail::section(doc, "output");
  detail::reject_unknown(output, {"path", "format"}, "output.");
  raw.out = detail::get_field<std::string>(output, "path", "output.path");
  raw.format = detail::get_field<std::string>(output, "format", "output.format");
  return raw;
}

inline RawConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config_json(doc);
}

struct GridSpec {
  double t_start = 0.0;
  double t_end = 1.5;
  int n = 151;
};

struct ExperimentConfig {
  std::string label;  // preset name or "custom"
  PauliMixture mixture;
  std::optional<double> two_mix_a;
  GridSpec grid;
  NoiseModel noise;
  Mode mode = Mode::Theory;
  std::filesystem::path out_dir;
  Format format = Format::Csv;
  double t = 0.1;  // tomo-demo time
};

inline GridSpec default_grid(Command cmd) {
  if (cmd == Command::Pipeline) return {0.1, 1.5, 15};
  return {0.0, 1.5, 151};
}

inline constexpr double kDefaultSigma = 0.02;
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Applies per-command defaults and validates; failures name the field.
inline ExperimentConfig resolve(const RawConfig& raw, Command cmd) {
  std::optional<Preset> preset;
  if (raw.preset) {
    preset = find_preset(*raw.preset);
    if (!preset) throw ConfigError("preset", "unknown preset '" + *raw.preset + "' (expected fig2..fig6)");
  }
  if (raw.weights && raw.two_mix_a) throw ConfigError("weights", "give either weights or two_mix_a, not both");

  std::optional<MixingWeights> weights;
  std::optional<double> two_mix_a;
  if (raw.weights) {
    const auto& w = *raw.weights;
    if (w.size() != 3) throw ConfigError("weights", "expected exactly 3 components");
    for (double x : w) {
      if (!(x >= 0.0 && x <= 1.0)) throw ConfigError("weights", "components must lie in [0, 1]");
    }
    const double sum = w[0] + w[1] + w[2];
    if (std::abs(sum - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "components sum to " << sum << ", expected 1";
      throw ConfigError("weights", os.str());
    }
    weights = MixingWeights(w[0], w[1], w[2]);
  } else if (raw.two_mix_a) {
    if (!(*raw.two_mix_a >= 0.0 && *raw.two_mix_a <= 1.0)) throw ConfigError("two_mix_a", "must lie in [0, 1]");
    two_mix_a = raw.two_mix_a;
    weights = MixingWeights::two_way(*raw.two_mix_a);
  } else if (preset) {
    weights = preset->mixture.weights;
    two_mix_a = preset->two_way_a;
  } else {
    throw ConfigError("weights", "no mixture given (use preset, weights or two_mix_a)");
  }

  double c = 0.0;
  if (raw.c) {
    c = *raw.c;
  } else if (preset) {
    c = preset->mixture.decoherence.c();
  } else {
    throw ConfigError("c", "required when no preset is given");
  }
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("c", "must be positive");

  GridSpec grid = default_grid(cmd);
  if (raw.t_start) grid.t_start = *raw.t_start;
  if (raw.t_end) grid.t_end = *raw.t_end;
  if (raw.n) grid.n = *raw.n;
  if (!(grid.t_start >= 0.0)) throw ConfigError("grid.t_start", "must be non-negative");
  if (!(grid.t_end > grid.t_start)) throw ConfigError("grid.t_end", "must exceed t_start");
  if (grid.n < 2) throw ConfigError("grid.n", "must be at least 2");
  if (cmd == Command::Pipeline && grid.n < 3) throw ConfigError("grid.n", "the pipeline fit needs at least 3 points");

  NoiseModel noise{cmd == Command::Rates || cmd == Command::Classify ? 0.0 : kDefaultSigma, kDefaultSeed};
  if (raw.sigma) noise.sigma = *raw.sigma;
  if (raw.seed) noise.seed = *raw.seed;
  if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma)) throw ConfigError("noise.sigma", "must be >= 0");

  Mode mode = Mode::Theory;
  if (cmd == Command::Pipeline) mode = Mode::FullPipeline;
  if (cmd == Command::TomoDemo) mode = Mode::SyntheticExperiment;
  if (raw.mode) {
    if (*raw.mode == "theory") mode = Mode::Theory;
    else if (*raw.mode == "synthetic-experiment") mode = Mode::SyntheticExperiment;
    else if (*raw.mode == "full-pipeline") mode = Mode::FullPipeline;
    else throw ConfigError("mode", "expected theory, synthetic-experiment or full-pipeline");
  }
  if (cmd == Command::Pipeline && mode == Mode::Theory) {
    throw ConfigError("mode", "pipeline needs synthetic-experiment or full-pipeline (use `rates` for theory)");
  }
  if (cmd == Command::Rates && mode != Mode::Theory) {
    throw ConfigError("mode", "rates only supports mode theory");
  }

  Format format = Format::Csv;
  if (raw.format) {
    if (*raw.format == "csv") format = Format::Csv;
    else if (*raw.format == "json") format = Format::Json;
    else throw ConfigError("output.format", "expected csv or json");
  }

  std::filesystem::path out_dir = ".";
  if (raw.out) {
    out_dir = *raw.out;
  } else if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') {
    out_dir = env;
  }

  double t = raw.t.value_or(0.1);
  if (!(t >= 0.0)) throw ConfigError("t", "must be non-negative");

  const bool is_preset_mixture = preset && !raw.weights && !raw.two_mix_a && !raw.c;
  return {is_preset_mixture ? preset->name : "custom",
          PauliMixture{*weights, DecoherenceFunction(c)},
          two_mix_a,
          grid,
          noise,
          mode,
          out_dir,
          format,
          t};
}

// ---------------------------------------------------------------------------
// Output helpers

/// 17 significant digits, enough to round-trip a double.
inline std::string format_number(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
      : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_row(header);
  }

  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw std::runtime_error("write to '" + path_.string() + "' failed");
  }

  void write_numbers(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    write_row(cells);
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

inline void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

inline void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

inline json config_json(const ExperimentConfig& cfg) {
  const auto& w = cfg.mixture.weights;
  json j = {{"label", cfg.label},
            {"weights", {w.x1(), w.x2(), w.x3()}},
            {"c", cfg.mixture.decoherence.c()},
            {"grid", {{"t_start", cfg.grid.t_start}, {"t_end", cfg.grid.t_end}, {"n", cfg.grid.n}}},
            {"noise", {{"sigma", cfg.noise.sigma}, {"seed", cfg.noise.seed}}},
            {"mode", to_string(cfg.mode)}};
  j["two_mix_a"] = cfg.two_mix_a ? json(*cfg.two_mix_a) : json(nullptr);
  return j;
}

inline json verdict_json(const MarkovClass& mc) {
  json j = {{"verdict", to_string(mc.verdict)}};
  if (mc.witness) {
    j["witness"] = {{"t", mc.witness->t}, {"axis", mc.witness->axis}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline std::vector<std::string> verdict_cells(const std::string& source, const MarkovClass& mc) {
  return {source, to_string(mc.verdict), mc.witness ? format_number(mc.witness->t) : "",
          mc.witness ? std::to_string(mc.witness->axis) : ""};
}

inline const std::vector<std::string> kRateColumns = {"t", "p", "pdot", "gamma1", "gamma2", "gamma3"};
inline const std::vector<std::string> kVerdictColumns = {"source", "verdict", "witness_t", "witness_axis"};

inline void write_rates_csv(const std::filesystem::path& path, const RateTrajectory& traj) {
  CsvWriter csv(path, kRateColumns);
  const auto& f = traj.mixture.decoherence;
  for (const auto& r : traj.rates) csv.write_numbers({r.t, f.p(r.t), f.pdot(r.t), r.gamma1, r.gamma2, r.gamma3});
}

inline json rates_json(const RateTrajectory& traj) {
  json rows = json::array();
  const auto& f = traj.mixture.decoherence;
  for (const auto& r : traj.rates) {
    rows.push_back({{"t", r.t},
                    {"p", f.p(r.t)},
                    {"pdot", f.pdot(r.t)},
                    {"gamma1", r.gamma1},
                    {"gamma2", r.gamma2},
                    {"gamma3", r.gamma3}});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Commands

/// Theoretical rates on the configured grid plus the verdict.
inline int cmd_rates(const ExperimentConfig& cfg, std::ostream& log) {
  const auto traj = rate_trajectory(cfg.mixture, cfg.grid.t_start, cfg.grid.t_end, cfg.grid.n);
  const auto mc = classify(traj);
  ensure_dir(cfg.out_dir);
  if (cfg.format == Format::Csv) {
    write_rates_csv(cfg.out_dir / "rates.csv", traj);
    CsvWriter v(cfg.out_dir / "verdict.csv", kVerdictColumns);
    v.write_row(verdict_cells("theory", mc));
    log << "wrote " << (cfg.out_dir / "rates.csv").string() << " and " << (cfg.out_dir / "verdict.csv").string()
        << '\n';
  } else {
    json doc = {{"kind", "rates"}, {"config", config_json(cfg)}, {"rates", rates_json(traj)},
                {"verdict", verdict_json(mc)}};
    write_json(cfg.out_dir / "rates.json", doc);
    log << "wrote " << (cfg.out_dir / "rates.json").string() << '\n';
  }
  log << to_string(mc.verdict) << '\n';
  return kExitOk;
}

/// Analysis grid for fitted and theoretical rates in the pipeline output.
inline std::vector<double> analysis_grid(const ExperimentConfig& cfg) {
  return uniform_grid(0.0, std::max(cfg.grid.t_end, 1.5), 151);
}

inline int cmd_pipeline(const ExperimentConfig& cfg, std::ostream& log) {
  const auto grid = uniform_grid(cfg.grid.t_start, cfg.grid.t_end, cfg.grid.n);
  const auto rho0 = DensityMatrix::basis(2, 0);
  ensure_dir(cfg.out_dir);

  std::vector<ExperimentPoint> points;
  std::vector<PEstimate> estimates;
  std::optional<ExperimentAnalysis> analysis;
  if (cfg.mode == Mode::FullPipeline) {
    analysis = analyze_experiment(cfg.mixture, grid, analysis_grid(cfg), cfg.noise, rho0);
    points = analysis->points;
    estimates = analysis->estimates;
  } else {
    points = synthetic_experiment(cfg.mixture, grid, cfg.noise, rho0);
    for (const auto& pt : points) estimates.push_back(estimate_p(pt.system, cfg.mixture.weights, pt.t));
  }

  if (cfg.format == Format::Csv) {
    {
      CsvWriter csv(cfg.out_dir / "estimates.csv", {"t", "p_true", "p_hat", "residual"});
      for (std::size_t i = 0; i < points.size(); ++i) {
        csv.write_numbers({points[i].t, points[i].p, estimates[i].p_hat, estimates[i].residual});
      }
    }
    {
      CsvWriter csv(cfg.out_dir / "fidelities.csv", {"t", "fidelity_three_qubit", "fidelity_system"});
      for (const auto& pt : points) csv.write_numbers({pt.t, *pt.full.fidelity_to_target, pt.system_fidelity});
    }
    if (analysis) {
      {
        CsvWriter csv(cfg.out_dir / "fit.csv", {"c_hat", "rss", "n_points", "c_true"});
        csv.write_row({format_number(analysis->fit.c_hat), format_number(analysis->fit.rss),
                       std::to_string(analysis->fit.n_points), format_number(cfg.mixture.decoherence.c())});
      }
      write_rates_csv(cfg.out_dir / "fitted_rates.csv", analysis->fitted_rates);
      write_rates_csv(cfg.out_dir / "theory_rates.csv", analysis->theory_rates);
      CsvWriter v(cfg.out_dir / "verdicts.csv", kVerdictColumns);
      v.write_row(verdict_cells("theory", analysis->theory_class));
      v.write_row(verdict_cells("experiment", analysis->fitted_class));
    }
    log << "wrote pipeline CSV files to " << cfg.out_dir.string() << '\n';
  } else {
    json est = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      est.push_back({{"t", points[i].t},
                     {"p_true", points[i].p},
                     {"p_hat", estimates[i].p_hat},
                     {"residual", estimates[i].residual}});
    }
    json fid = json::array();
    for (const auto& pt : points) {
      fid.push_back({{"t", pt.t},
                     {"fidelity_three_qubit", *pt.full.fidelity_to_target},
                     {"fidelity_system", pt.system_fidelity}});
    }
    json doc = {{"kind", "pipeline"}, {"config", config_json(cfg)}, {"estimates", est}, {"fidelities", fid}};
    if (analysis) {
      doc["fit"] = {{"c_hat", analysis->fit.c_hat},
                    {"rss", analysis->fit.rss},
                    {"n_points", analysis->fit.n_points},
                    {"c_true", cfg.mixture.decoherence.c()}};
      doc["fitted_rates"] = rates_json(analysis->fitted_rates);
      doc["theory_rates"] = rates_json(analysis->theory_rates);
      doc["verdicts"] = {{"theory", verdict_json(analysis->theory_class)},
                         {"experiment", verdict_json(analysis->fitted_class)}};
    }
    write_json(cfg.out_dir / "pipeline.json", doc);
    log << "wrote " << (cfg.out_dir / "pipeline.json").string() << '\n';
  }

  if (analysis) {
    log << "c_hat = " << format_number(analysis->fit.c_hat) << '\n';
    log << "theory: " << to_string(analysis->theory_class.verdict)
        << ", experiment: " << to_string(analysis->fitted_class.verdict) << '\n';
  }
  return kExitOk;
}

/// Prints the verdict and, when non-Markovian, the witness axis, the first
/// offending grid time and the bisected sign-change time t*.
inline int cmd_classify(const ExperimentConfig& cfg, std::ostream& out) {
  const auto traj = rate_trajectory(cfg.mixture, cfg.grid.t_start, cfg.grid.t_end, cfg.grid.n);
  const auto mc = classify(traj);
  out << to_string(mc.verdict) << '\n';
  if (!mc.witness) return kExitOk;

  const int axis = mc.witness->axis;
  double t_star = mc.witness->t;
  for (std::size_t i = 1; i < traj.rates.size(); ++i) {
    if (traj.rates[i].t == mc.witness->t && traj.rates[i - 1][axis] > 0.0) {
      t_star = locate_rate_sign_change(cfg.mixture, axis, traj.rates[i - 1].t, traj.rates[i].t);
      break;
    }
  }
  out << "axis=" << axis << '\n';
  out << "t_grid=" << format_number(mc.witness->t) << '\n';
  out << "t_star=" << format_number(t_star) << '\n';
  return kExitNonMarkovian;
}

/// Reconstructs the three-qubit state at one time and compares it with theory.
inline int cmd_tomo_demo(const ExperimentConfig& cfg, std::ostream& log) {
  const auto rho0 = DensityMatrix::basis(2, 0);
  const NoiseModel noise = cfg.mode == Mode::Theory ? NoiseModel{0.0, cfg.noise.seed} : cfg.noise;
  const auto points = synthetic_experiment(cfg.mixture, {cfg.t}, noise, rho0);
  const auto& pt = points.front();
  const ComplexMatrix theory = evolve_full(circuit_for(cfg.mixture, cfg.t), rho0).matrix();
  const ComplexMatrix& expt = pt.full.state.matrix();
  ensure_dir(cfg.out_dir);

  if (cfg.format == Format::Csv) {
    CsvWriter csv(cfg.out_dir / "tomo.csv", {"row", "col", "re_theory", "im_theory", "re_expt", "im_expt"});
    for (Eigen::Index i = 0; i < 8; ++i) {
      for (Eigen::Index j = 0; j < 8; ++j) {
        csv.write_row({std::to_string(i), std::to_string(j), format_number(theory(i, j).real()),
                       format_number(theory(i, j).imag()), format_number(expt(i, j).real()),
                       format_number(expt(i, j).imag())});
      }
    }
  } else {
    auto matrix_json = [](const ComplexMatrix& m) {
      json re = json::array();
      json im = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rr = json::array();
        json ii = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          rr.push_back(m(i, j).real());
          ii.push_back(m(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
      }
      return json{{"re", re}, {"im", im}};
    };
    json doc = {{"kind", "tomo-demo"},
                {"config", config_json(cfg)},
                {"t", cfg.t},
                {"theory", matrix_json(theory)},
                {"experiment", matrix_json(expt)},
                {"fidelity_three_qubit", *pt.full.fidelity_to_target},
                {"fidelity_system", pt.system_fidelity}};
    write_json(cfg.out_dir / "tomo.json", doc);
  }
  log << "fidelity (three-qubit) = " << format_number(*pt.full.fidelity_to_target) << '\n';
  log << "fidelity (system)      = " << format_number(pt.system_fidelity) << '\n';
  return kExitOk;
}

inline int run_command(Command cmd, const RawConfig& raw, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = resolve(raw, cmd);
    switch (cmd) {
      case Command::Rates: return cmd_rates(cfg, out);
      case Command::Pipeline: return cmd_pipeline(cfg, out);
      case Command::Classify: return cmd_classify(cfg, out);
      case Command::TomoDemo: return cmd_tomo_demo(cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace paulimix::app
