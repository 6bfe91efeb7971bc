// SPDX-License-Identifier: Apache-2.0
// Command line front end: chirped transforms, wavelet analysis, preset
// taxonomy, and the verification suites.  All numeric output is printf
// formatted so repeated runs with the same config and seed are byte
// identical.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcdw/errors.hpp"
#include "lcdw/harness.hpp"
#include "lcdw/lcdt.hpp"
#include "lcdw/quadrature.hpp"
#include "lcdw/signal.hpp"
#include "lcdw/wavelet.hpp"

using nlohmann::json;

namespace {

// Everything one invocation needs, after config file, preset, and flag
// overrides have been folded together.
struct ToolConfig {
  double mu = 0.0;
  lcdw::SL2Matrix matrix{0.0, 1.0, -1.0, 0.0};
  double half_width = 12.0;
  int panels = 24;
  int order = 16;
  double t_min = 1.0 / 128.0;
  double t_max = 8.0;
  int scale_count = 80;
  std::string wavelet_preset = "hermite";
  std::string wavelet_file;
  int pool_cases = 20;
  int field_cases = 10;
  int draws = 100;
  double slack = 1.001;
  std::vector<std::array<double, 3>> young_triples = {
      {1.0, 1.0, 1.0}, {2.0, 1.0, 2.0}, {1.0, 2.0, 2.0}};
  std::uint64_t seed = 7;
};

json default_config_json() {
  json j;
  j["mu"] = 0.0;
  j["matrix"] = {{"a", 0.0}, {"b", 1.0}, {"c", -1.0}, {"d", 0.0}};
  j["grid"] = {{"half_width", 12.0}, {"panels", 24}, {"order", 16}};
  j["scales"] = {{"t_min", 1.0 / 128.0}, {"t_max", 8.0}, {"count", 80}};
  j["wavelet"] = {{"preset", "hermite"}, {"file", ""}};
  j["verify"] = {{"pool_cases", 20},
                 {"field_cases", 10},
                 {"draws", 100},
                 {"slack", 1.001},
                 {"young_triples",
                  json::array({json::array({1, 1, 1}), json::array({2, 1, 2}),
                               json::array({1, 2, 2})})}};
  j["seed"] = 7;
  return j;
}

// Strict mode: a key the defaults do not know is a typo, not an extension
// point.
void reject_unknown_keys(const json& user, const json& defaults,
                         const std::string& prefix) {
  if (!user.is_object()) {
    throw lcdw::ParameterError("config: '" + prefix +
                               "' must be a JSON object");
  }
  for (auto it = user.begin(); it != user.end(); ++it) {
    const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (!defaults.contains(it.key()))
      throw lcdw::ParameterError("config: unknown key '" + path + "'");
    if (defaults[it.key()].is_object())
      reject_unknown_keys(it.value(), defaults[it.key()], path);
  }
}

double field_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number())
    throw lcdw::ParameterError("config: '" + key + "' must be a number");
  return j.at(key).get<double>();
}

int field_int(const json& j, const std::string& key) {
  if (!j.at(key).is_number_integer())
    throw lcdw::ParameterError("config: '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

ToolConfig config_from_json(const json& merged) {
  ToolConfig cfg;
  cfg.mu = field_number(merged, "mu");
  const json& m = merged.at("matrix");
  cfg.matrix = {field_number(m, "a"), field_number(m, "b"),
                field_number(m, "c"), field_number(m, "d")};
  const json& g = merged.at("grid");
  cfg.half_width = field_number(g, "half_width");
  cfg.panels = field_int(g, "panels");
  cfg.order = field_int(g, "order");
  const json& s = merged.at("scales");
  cfg.t_min = field_number(s, "t_min");
  cfg.t_max = field_number(s, "t_max");
  cfg.scale_count = field_int(s, "count");
  const json& w = merged.at("wavelet");
  if (!w.at("preset").is_string() || !w.at("file").is_string())
    throw lcdw::ParameterError("config: wavelet.preset and wavelet.file "
                               "must be strings");
  cfg.wavelet_preset = w.at("preset").get<std::string>();
  cfg.wavelet_file = w.at("file").get<std::string>();
  const json& v = merged.at("verify");
  cfg.pool_cases = field_int(v, "pool_cases");
  cfg.field_cases = field_int(v, "field_cases");
  cfg.draws = field_int(v, "draws");
  cfg.slack = field_number(v, "slack");
  const json& triples = v.at("young_triples");
  if (!triples.is_array() || triples.empty())
    throw lcdw::ParameterError(
        "config: verify.young_triples must be a non-empty array");
  cfg.young_triples.clear();
  for (const json& t : triples) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number() ||
        !t[1].is_number() || !t[2].is_number())
      throw lcdw::ParameterError(
          "config: each young triple must be three numbers [p, q, r]");
    cfg.young_triples.push_back(
        {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
  }
  if (!merged.at("seed").is_number_integer())
    throw lcdw::ParameterError("config: 'seed' must be an integer");
  cfg.seed = merged.at("seed").get<std::uint64_t>();
  return cfg;
}

ToolConfig load_config(const std::string& path) {
  const json defaults = default_config_json();
  if (path.empty()) return config_from_json(defaults);
  std::ifstream in(path);
  if (!in)
    throw lcdw::ParseError("config file '" + path + "': cannot open");
  json user;
  try {
    user = json::parse(in);
  } catch (const json::parse_error& e) {
    throw lcdw::ParseError("config file '" + path + "': " + e.what());
  }
  reject_unknown_keys(user, defaults, "");
  json merged = defaults;
  merged.merge_patch(user);
  return config_from_json(merged);
}

struct PresetEntry {
  std::string name;
  std::string summary;
};

const std::vector<PresetEntry>& preset_catalog() {
  static const std::vector<PresetEntry> catalog = {
      {"dunkl", "matrix (0, 1, -1, 0), order from config"},
      {"fractional",
       "matrix (cos t, sin t, -sin t, cos t) with t from --theta, "
       "order from config"},
      {"classical-fourier",
       "matrix (0, 1, -1, 0) with order pinned to -1/2; the classical "
       "Fourier line"},
      {"fresnel-class", "matrix (1, 1, 0, 1), order from config"},
  };
  return catalog;
}

void apply_preset(ToolConfig& cfg, const std::string& name, double theta) {
  if (name == "dunkl") {
    cfg.matrix = {0.0, 1.0, -1.0, 0.0};
  } else if (name == "fractional") {
    cfg.matrix = {std::cos(theta), std::sin(theta), -std::sin(theta),
                  std::cos(theta)};
  } else if (name == "classical-fourier") {
    cfg.mu = -0.5;
    cfg.matrix = {0.0, 1.0, -1.0, 0.0};
  } else if (name == "fresnel-class") {
    cfg.matrix = {1.0, 1.0, 0.0, 1.0};
  } else {
    throw lcdw::ParameterError("unknown preset '" + name +
                               "'; run 'lcdw presets' for the catalog");
  }
}

// -------------------------------------------------------------------------
// CSV plumbing.  Data files use %.17g so a write/read cycle reproduces the
// doubles exactly; report lines use %.6e.

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const std::string::size_type comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_number(const std::string& token, const std::string& path,
                    int lineno) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) {
    throw lcdw::ParseError(path + ":" + std::to_string(lineno) +
                           ": not a number: '" + token + "'");
  }
  return v;
}

std::string strip_cr(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
    line.pop_back();
  return line;
}

struct CsvTable {
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw lcdw::ParseError(path + ": cannot open");
  std::string line;
  if (!std::getline(in, line))
    throw lcdw::ParseError(path + ": empty file");
  if (strip_cr(line) != header)
    throw lcdw::ParseError(path + ":1: expected header '" + header + "'");
  const std::size_t columns = split_fields(header).size();
  CsvTable table;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != columns) {
      throw lcdw::ParseError(path + ":" + std::to_string(lineno) +
                             ": expected " + std::to_string(columns) +
                             " comma separated fields, got " +
                             std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(columns);
    for (const std::string& f : fields)
      row.push_back(parse_number(f, path, lineno));
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw lcdw::ParseError(path + ": no data rows");
  return table;
}

bool node_matches(double have, double want) {
  return std::abs(have - want) <= 1e-9 * (1.0 + std::abs(want));
}

lcdw::SampledSignal read_signal(
    const std::string& path,
    std::shared_ptr<const lcdw::WeightedMeasure> grid, bool resample) {
  const CsvTable table = read_csv(path, "x,re,im");
  std::vector<double> xs(table.rows.size());
  std::vector<lcdw::Complex> values(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    xs[i] = table.rows[i][0];
    values[i] = lcdw::Complex(table.rows[i][1], table.rows[i][2]);
  }
  const std::vector<double>& nodes = grid->nodes();
  bool match = xs.size() == nodes.size();
  for (std::size_t i = 0; match && i < nodes.size(); ++i)
    match = node_matches(xs[i], nodes[i]);
  lcdw::SampledSignal f;
  f.measure = std::move(grid);
  if (match) {
    f.values = std::move(values);
    return f;
  }
  if (!resample) {
    throw lcdw::ParameterError(
        path + ": sample nodes do not match the configured grid (" +
        std::to_string(xs.size()) + " rows, " + std::to_string(nodes.size()) +
        " nodes); pass --resample to interpolate");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1])
      throw lcdw::ParameterError(
          path + ": sample nodes must be strictly ascending to resample");
  }
  f.values.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    f.values[i] =
        lcdw::interpolate(xs, values, nodes[i], 4, lcdw::OutsidePolicy::kZero);
  return f;
}

std::FILE* open_output(const std::string& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out)
    throw lcdw::ParameterError(path + ": cannot open for writing");
  return out;
}

void write_signal(const std::string& path, const lcdw::SampledSignal& f) {
  std::FILE* out = open_output(path);
  std::fprintf(out, "x,re,im\n");
  for (std::size_t i = 0; i < f.values.size(); ++i)
    std::fprintf(out, "%.17g,%.17g,%.17g\n", f.measure->nodes()[i],
                 f.values[i].real(), f.values[i].imag());
  std::fclose(out);
}

void write_field(const std::string& path, const lcdw::CoefficientField& f) {
  std::FILE* out = open_output(path);
  std::fprintf(out, "t,x,re,im\n");
  for (std::size_t s = 0; s < f.scales(); ++s)
    for (std::size_t j = 0; j < f.width(); ++j) {
      const lcdw::Complex v = f.at(s, j);
      std::fprintf(out, "%.17g,%.17g,%.17g,%.17g\n", f.scale_grid.nodes[s],
                   f.positions->nodes()[j], v.real(), v.imag());
    }
  std::fclose(out);
}

void write_signal_magnitude(const std::string& path,
                            const lcdw::SampledSignal& f) {
  std::FILE* out = open_output(path);
  std::fprintf(out, "x,mag\n");
  for (std::size_t i = 0; i < f.values.size(); ++i)
    std::fprintf(out, "%.17g,%.17g\n", f.measure->nodes()[i],
                 std::abs(f.values[i]));
  std::fclose(out);
}

void write_field_magnitude(const std::string& path,
                           const lcdw::CoefficientField& f) {
  std::FILE* out = open_output(path);
  std::fprintf(out, "t");
  for (std::size_t j = 0; j < f.width(); ++j)
    std::fprintf(out, ",%.17g", f.positions->nodes()[j]);
  std::fprintf(out, "\n");
  for (std::size_t s = 0; s < f.scales(); ++s) {
    std::fprintf(out, "%.17g", f.scale_grid.nodes[s]);
    for (std::size_t j = 0; j < f.width(); ++j)
      std::fprintf(out, ",%.17g", std::abs(f.at(s, j)));
    std::fprintf(out, "\n");
  }
  std::fclose(out);
}

// -------------------------------------------------------------------------
// Shared construction helpers.

std::shared_ptr<const lcdw::WeightedMeasure> make_measure(
    const ToolConfig& cfg) {
  return std::make_shared<lcdw::WeightedMeasure>(
      cfg.mu, lcdw::build_grid(cfg.half_width, cfg.panels, cfg.order));
}

lcdw::SampledSignal load_wavelet(
    const ToolConfig& cfg, std::shared_ptr<const lcdw::WeightedMeasure> grid,
    bool resample) {
  if (!cfg.wavelet_file.empty())
    return read_signal(cfg.wavelet_file, std::move(grid), resample);
  return lcdw::preset_wavelet(cfg.wavelet_preset, std::move(grid));
}

lcdw::HarnessConfig harness_config(const ToolConfig& cfg) {
  lcdw::HarnessConfig h;
  h.half_width = cfg.half_width;
  h.panels = cfg.panels;
  h.order = cfg.order;
  h.t_min = cfg.t_min;
  h.t_max = cfg.t_max;
  h.scale_count = cfg.scale_count;
  h.seed = cfg.seed;
  h.pool_cases = cfg.pool_cases;
  h.field_cases = cfg.field_cases;
  h.draws = cfg.draws;
  h.slack = cfg.slack;
  h.young_triples = cfg.young_triples;
  return h;
}

// -------------------------------------------------------------------------
// Commands.

int cmd_transform(const ToolConfig& cfg, const std::string& direction,
                  const std::string& input, const std::string& output,
                  bool resample, bool emit_plot) {
  lcdw::validate_matrix(cfg.matrix);
  auto grid = make_measure(cfg);
  if (direction == "forward") {
    const lcdw::SampledSignal f = read_signal(input, grid, resample);
    const lcdw::Spectrum spec = lcdw::lcd_forward(cfg.matrix, f);
    write_signal(output, spec.signal);
    if (emit_plot) write_signal_magnitude(output + ".mag.csv", spec.signal);
    std::fprintf(stderr, "transform forward: wrote %zu rows to %s\n",
                 spec.signal.values.size(), output.c_str());
    return lcdw::kExitOk;
  }
  if (direction == "inverse") {
    auto spectral = lcdw::default_spectrum_measure(cfg.matrix, *grid);
    lcdw::Spectrum spec;
    spec.signal = read_signal(input, spectral, resample);
    spec.matrix = cfg.matrix;
    const lcdw::SampledSignal f = lcdw::lcd_inverse(spec, grid);
    write_signal(output, f);
    if (emit_plot) write_signal_magnitude(output + ".mag.csv", f);
    std::fprintf(stderr, "transform inverse: wrote %zu rows to %s\n",
                 f.values.size(), output.c_str());
    return lcdw::kExitOk;
  }
  throw lcdw::ParameterError("transform direction must be forward or "
                             "inverse, got '" +
                             direction + "'");
}

int cmd_wavelet(const ToolConfig& cfg, const std::string& mode,
                const std::string& input, const std::string& output,
                bool resample, bool emit_plot) {
  lcdw::validate_matrix(cfg.matrix);
  auto grid = make_measure(cfg);
  const lcdw::LogScaleGrid scales =
      lcdw::build_log_grid(cfg.t_min, cfg.t_max, cfg.scale_count);

  if (mode == "admissibility") {
    const lcdw::SampledSignal psi = load_wavelet(cfg, grid, resample);
    double constant = 0.0;
    try {
      constant = lcdw::admissibility_constant(cfg.matrix, psi);
    } catch (const lcdw::AdmissibilityError& e) {
      throw lcdw::AdmissibilityError(std::string("non-admissible wavelet: ") +
                                     e.what());
    }
    std::printf("admissibility constant %.17g\n", constant);
    return lcdw::kExitOk;
  }

  const lcdw::WaveletTransformer wt(cfg.matrix,
                                    load_wavelet(cfg, grid, resample), scales);
  if (mode == "analyze") {
    const lcdw::SampledSignal f = read_signal(input, grid, resample);
    const lcdw::CoefficientField field = wt.analyze(f);
    write_field(output, field);
    if (emit_plot) write_field_magnitude(output + ".mag.csv", field);
    std::fprintf(stderr, "wavelet analyze: wrote %zu x %zu coefficients to %s\n",
                 field.scales(), field.width(), output.c_str());
    return lcdw::kExitOk;
  }
  if (mode == "synthesize") {
    const CsvTable table = read_csv(input, "t,x,re,im");
    const std::size_t want =
        scales.nodes.size() * wt.positions()->size();
    if (table.rows.size() != want) {
      throw lcdw::ParameterError(
          input + ": expected " + std::to_string(want) +
          " coefficient rows for the configured grids, got " +
          std::to_string(table.rows.size()));
    }
    lcdw::CoefficientField field;
    field.scale_grid = scales;
    field.positions = wt.positions();
    field.matrix = wt.matrix();
    field.mu = wt.mu();
    field.admissibility = wt.admissibility();
    field.admissible = wt.admissible();
    field.values.resize(want);
    for (std::size_t r = 0; r < want; ++r) {
      const std::size_t s = r / wt.positions()->size();
      const std::size_t j = r % wt.positions()->size();
      if (!node_matches(table.rows[r][0], scales.nodes[s]) ||
          !node_matches(table.rows[r][1], wt.positions()->nodes()[j])) {
        throw lcdw::ParameterError(
            input + ": row " + std::to_string(r + 2) +
            " is out of row-major (scale, position) order for the "
            "configured grids");
      }
      field.values[r] = lcdw::Complex(table.rows[r][2], table.rows[r][3]);
    }
    const lcdw::SampledSignal f = wt.synthesize(field);
    write_signal(output, f);
    if (emit_plot) write_signal_magnitude(output + ".mag.csv", f);
    std::fprintf(stderr, "wavelet synthesize: wrote %zu rows to %s\n",
                 f.values.size(), output.c_str());
    return lcdw::kExitOk;
  }
  throw lcdw::ParameterError(
      "wavelet mode must be analyze, synthesize, or admissibility, got '" +
      mode + "'");
}

int cmd_verify(const ToolConfig& cfg, const std::string& suite,
               const std::string& output) {
  lcdw::validate_matrix(cfg.matrix);
  const std::vector<lcdw::InequalityReport> reports =
      lcdw::run_suite(suite, harness_config(cfg));
  int failed = 0;
  for (const lcdw::InequalityReport& r : reports) {
    if (!r.pass) ++failed;
    std::printf("%-28s %s lhs=%.6e rhs=%.6e slack=%.6e %s\n", r.name.c_str(),
                r.detail.c_str(), r.lhs, r.rhs, r.slack,
                r.pass ? "PASS" : "FAIL");
  }
  std::printf("suite %s: %zu checks, %zu pass, %d fail\n", suite.c_str(),
              reports.size(), reports.size() - failed, failed);
  if (!output.empty()) {
    json records = json::array();
    for (const lcdw::InequalityReport& r : reports) {
      records.push_back(json{{"name", r.name},
                             {"detail", r.detail},
                             {"lhs", r.lhs},
                             {"rhs", r.rhs},
                             {"slack", r.slack},
                             {"pass", r.pass}});
    }
    std::FILE* out = open_output(output);
    const std::string text = records.dump(2);
    std::fwrite(text.data(), 1, text.size(), out);
    std::fputc('\n', out);
    std::fclose(out);
  }
  return failed == 0 ? lcdw::kExitOk : lcdw::kExitVerifyFailed;
}

int cmd_presets() {
  for (const PresetEntry& p : preset_catalog())
    std::printf("%-18s %s\n", p.name.c_str(), p.summary.c_str());
  return lcdw::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lcdw: linear canonical Dunkl transforms, wavelet analysis, and a "
      "verification harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string input, output;
  std::string suite = "all";
  double mu = 0.0, theta = 1.5707963267948966;
  std::vector<double> matrix_entries;
  std::uint64_t seed = 0;
  bool resample = false, emit_plot = false;
  bool mu_set = false, seed_set = false;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--mu", mu, "deformation order")->each([&](const std::string&) {
    mu_set = true;
  });
  app.add_option("--matrix", matrix_entries,
                 "matrix entries a,b,c,d with det 1")
      ->delimiter(',')
      ->expected(0, 4);
  app.add_option("--preset", preset, "named (order, matrix) pair; see presets");
  app.add_option("--theta", theta, "angle for the fractional preset");
  app.add_option("--input", input, "input CSV path");
  app.add_option("--output", output, "output path");
  app.add_option("--seed", seed, "seed for the verification suites")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_flag("--resample", resample,
               "cubic-interpolate input samples onto the configured grid");
  app.add_flag("--emit-plot-data", emit_plot,
               "also write magnitude CSV next to the output");

  CLI::App* transform =
      app.add_subcommand("transform", "chirped transform of a signal file");
  std::string direction = "forward";
  transform->add_option("direction", direction, "forward or inverse");
  transform->fallthrough();

  CLI::App* wavelet =
      app.add_subcommand("wavelet", "wavelet analysis and synthesis");
  std::string mode = "analyze";
  wavelet->add_option("mode", mode, "analyze, synthesize, or admissibility");
  wavelet->fallthrough();

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->fallthrough();

  CLI::App* presets =
      app.add_subcommand("presets", "list the preset catalog");
  presets->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return lcdw::kExitParameter;
  }

  try {
    ToolConfig cfg = load_config(config_path);
    if (!preset.empty()) apply_preset(cfg, preset, theta);
    if (mu_set) cfg.mu = mu;
    if (!matrix_entries.empty()) {
      if (matrix_entries.size() != 4)
        throw lcdw::ParameterError(
            "--matrix needs exactly four entries a,b,c,d");
      cfg.matrix = {matrix_entries[0], matrix_entries[1], matrix_entries[2],
                    matrix_entries[3]};
    }
    if (seed_set) cfg.seed = seed;

    if (transform->parsed()) {
      if (input.empty() || output.empty())
        throw lcdw::ParameterError("transform needs --input and --output");
      return cmd_transform(cfg, direction, input, output, resample, emit_plot);
    }
    if (wavelet->parsed()) {
      if (mode != "admissibility" && (input.empty() || output.empty()))
        throw lcdw::ParameterError("wavelet " + mode +
                                   " needs --input and --output");
      return cmd_wavelet(cfg, mode, input, output, resample, emit_plot);
    }
    if (verify->parsed()) return cmd_verify(cfg, suite, output);
    if (presets->parsed()) return cmd_presets();
    throw lcdw::ParameterError("no command given");
  } catch (const lcdw::LcdwError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return lcdw::kExitNumerical;
  }
}
