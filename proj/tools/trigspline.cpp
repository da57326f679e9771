// Command-line front end: interpolate samples, reproduce the error tables,
// search for error-minimizing phantom values, emit plot curves.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigspline/error_analysis.hpp"
#include "trigspline/fourier.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/optimizer.hpp"
#include "trigspline/phantom.hpp"
#include "trigspline/source_function.hpp"
#include "trigspline/spline.hpp"
#include "trigspline/text_io.hpp"

namespace {

using namespace trigspline;

struct CommonOptions {
  std::string function_id;
  std::string input_path;
  int n = 9;
  int k = 1;
  int p = 2;
  int r = 3;
  int dense = 2001;
  std::string derivative_source = "divided_difference";
  std::vector<double> phantom_values;
  std::string phantom_values_file;
  std::string output_path;
  std::string format;
};

void emit(const CommonOptions& opt, const std::string& content) {
  if (opt.output_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  atomic_write_file(opt.output_path, content);
}

std::vector<double> load_phantom_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open phantom-values file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
  if (!doc.contains("phantom_values") || !doc["phantom_values"].is_array())
    throw std::runtime_error("'" + path + "' needs a \"phantom_values\" array");
  std::vector<double> out;
  for (const auto& v : doc["phantom_values"]) {
    if (!v.is_number())
      throw std::runtime_error("'" + path + "': phantom_values entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

struct LoadedSamples {
  std::vector<double> data;
  std::optional<SourceFunction> source;  // set when a builtin function is used
};

LoadedSamples load_samples(const CommonOptions& opt) {
  const bool have_fn = !opt.function_id.empty();
  const bool have_input = !opt.input_path.empty();
  if (have_fn == have_input)
    throw std::runtime_error("give exactly one of --function and --input");
  LoadedSamples out;
  if (have_fn) {
    out.source = builtin_source(opt.function_id, opt.n);
    out.data = sample_source(*out.source, opt.n);
  } else {
    std::ifstream in(opt.input_path);
    if (!in) throw std::runtime_error("cannot open input file '" + opt.input_path + "'");
    out.data = read_samples_csv(in, opt.input_path);
    if (out.data.size() < 3)
      throw std::runtime_error("input '" + opt.input_path + "' holds " +
                               std::to_string(out.data.size()) + " samples; need at least 3");
  }
  return out;
}

SampleSet fill_per_options(const CommonOptions& opt, const LoadedSamples& loaded) {
  SampleSet placed = place_on_circle(loaded.data, opt.k);
  std::vector<double> explicit_values = opt.phantom_values;
  if (!opt.phantom_values_file.empty()) {
    if (!explicit_values.empty())
      throw std::runtime_error("give either --phantom-values or --phantom-values-file, not both");
    explicit_values = load_phantom_values_file(opt.phantom_values_file);
  }
  if (opt.k == 0) {
    if (!explicit_values.empty())
      throw std::runtime_error("phantom values given but k = 0 adds no phantom nodes");
    return placed;
  }

  PhantomConfig cfg;
  cfg.pairs = opt.k;
  cfg.match_order = opt.p;
  if (!explicit_values.empty()) {
    cfg.source = DerivativeSource::explicit_values;
    cfg.explicit_values = std::move(explicit_values);
  } else if (opt.derivative_source == "exact") {
    cfg.source = DerivativeSource::exact;
    if (!loaded.source)
      throw std::runtime_error("--derivative-source exact needs a builtin --function");
  } else if (opt.derivative_source == "divided_difference") {
    cfg.source = DerivativeSource::divided_difference;
  } else {
    throw std::runtime_error("unknown derivative source '" + opt.derivative_source +
                             "' (use exact or divided_difference)");
  }
  return fill_phantom(placed, cfg, loaded.source ? &*loaded.source : nullptr);
}

std::string default_format(const std::string& command) {
  if (command == "table") return "markdown";
  return "csv";
}

int run_interpolate(const CommonOptions& opt) {
  const LoadedSamples loaded = load_samples(opt);
  const SampleSet samples = fill_per_options(opt, loaded);
  const TrigSpline spline = build_spline(samples, opt.r);

  const int m = samples.grid().node_count();
  std::vector<double> t(static_cast<size_t>(m)), s(static_cast<size_t>(m)),
      resid(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    t[static_cast<size_t>(i)] = samples.grid().node(i);
    s[static_cast<size_t>(i)] = spline.value(t[static_cast<size_t>(i)]);
    resid[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] - samples.value(i);
  }

  const std::string fmt = opt.format.empty() ? default_format("interpolate") : opt.format;
  std::ostringstream out;
  if (fmt == "csv") {
    out << "index,t,sample,spline,residual\n";
    for (int i = 0; i < m; ++i)
      out << i << ',' << g17(t[static_cast<size_t>(i)]) << ',' << g17(samples.value(i)) << ','
          << g17(s[static_cast<size_t>(i)]) << ',' << g17(resid[static_cast<size_t>(i)]) << '\n';
  } else if (fmt == "json") {
    out << "{\"n\": " << samples.original_count() << ", \"k\": " << opt.k
        << ", \"r\": " << opt.r << ", \"nodes\": [\n";
    for (int i = 0; i < m; ++i) {
      out << "  {\"index\": " << i << ", \"t\": " << g17(t[static_cast<size_t>(i)])
          << ", \"sample\": " << g17(samples.value(i))
          << ", \"spline\": " << g17(s[static_cast<size_t>(i)])
          << ", \"residual\": " << g17(resid[static_cast<size_t>(i)]) << "}"
          << (i + 1 < m ? ",\n" : "\n");
    }
    out << "]}\n";
  } else if (fmt == "markdown") {
    out << "| index | t | sample | spline | residual |\n|---|---|---|---|---|\n";
    for (int i = 0; i < m; ++i)
      out << "| " << i << " | " << g17(t[static_cast<size_t>(i)]) << " | "
          << g17(samples.value(i)) << " | " << g17(s[static_cast<size_t>(i)]) << " | "
          << g17(resid[static_cast<size_t>(i)]) << " |\n";
  } else {
    throw std::runtime_error("unknown format '" + fmt + "' (use csv, json or markdown)");
  }
  emit(opt, out.str());
  return 0;
}

int run_table(const CommonOptions& opt, const std::vector<int>& k_values) {
  if (opt.function_id.empty()) throw std::runtime_error("table needs a builtin --function");
  const SourceFunction f = builtin_source(opt.function_id, opt.n);
  const auto reports = run_table(f, opt.n, k_values, opt.r, opt.dense);

  const std::string fmt = opt.format.empty() ? default_format("table") : opt.format;
  std::string content;
  if (fmt == "markdown")
    content = render_table_markdown(reports);
  else if (fmt == "csv")
    content = render_table_csv(reports);
  else if (fmt == "json")
    content = render_table_json(reports);
  else
    throw std::runtime_error("unknown format '" + fmt + "' (use markdown, csv or json)");
  emit(opt, content);
  return 0;
}

int run_optimize(const CommonOptions& opt, double resolution, int max_sweeps,
                 double box_halfwidth) {
  if (opt.function_id.empty()) throw std::runtime_error("optimize needs a builtin --function");
  if (opt.k < 1) throw std::runtime_error("optimize needs k >= 1");
  const SourceFunction f = builtin_source(opt.function_id, opt.n);
  const auto data = sample_source(f, opt.n);

  const TrigSpline baseline = build_spline(place_on_circle(data, 0), opt.r);
  const double baseline_error = relative_error(baseline, f, opt.n, opt.dense).value;

  PhantomConfig cfg;
  cfg.pairs = opt.k;
  cfg.match_order = opt.p;
  cfg.source = DerivativeSource::divided_difference;
  const SampleSet filled = fill_phantom(place_on_circle(data, opt.k), cfg, &f);

  SearchSpec spec;
  spec.resolution = resolution;
  spec.max_sweeps = max_sweeps;
  spec.initial.assign(filled.values().begin() + opt.n, filled.values().end());
  if (box_halfwidth <= 0.0) {
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end());
    const double range = *hi - *lo;
    box_halfwidth = range > 0.0 ? 5.0 * range : 1.0;
  }
  spec.box_halfwidth.assign(spec.initial.size(), box_halfwidth);
  spec.objective = make_phantom_objective(f, opt.n, opt.k, opt.r, opt.dense);

  const OptimizeResult res = optimize_phantom(spec);

  std::ostringstream out;
  out << "{\"best_values\": [";
  for (size_t i = 0; i < res.best_values.size(); ++i)
    out << (i ? ", " : "") << g17(res.best_values[i]);
  out << "], \"best_error\": " << g17(res.best_error)
      << ", \"baseline_error\": " << g17(baseline_error)
      << ", \"reduction_factor\": " << g17(baseline_error / res.best_error)
      << ", \"evaluations\": " << res.evaluations << "}\n";
  emit(opt, out.str());
  return 0;
}

int run_plot(const CommonOptions& opt) {
  const LoadedSamples loaded = load_samples(opt);
  const SampleSet samples = fill_per_options(opt, loaded);
  const TrigSpline spline = build_spline(samples, opt.r);
  const Curve curve = emit_curve(spline, loaded.source ? &*loaded.source : nullptr,
                                 samples.original_count(), opt.dense);
  emit(opt, render_curve_csv(curve));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric-spline interpolation with phantom nodes"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::vector<int> k_values = {1, 2};
  double resolution = 0.01;
  int max_sweeps = 200;
  double box_halfwidth = 0.0;  // 0 = 5 x data range

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--function", opt.function_id,
                    "builtin function: ramp, ramp_integer, sine75, exp02");
    if (with_input)
      cmd->add_option("--input", opt.input_path, "CSV file, one sample per line ('#' comments)");
    cmd->add_option("--n", opt.n, "original sample count (builtin functions)")
        ->capture_default_str();
    cmd->add_option("--r", opt.r, "spline order")->capture_default_str();
    cmd->add_option("--dense", opt.dense, "evaluation grid size")->capture_default_str();
    cmd->add_option("-o,--output", opt.output_path, "output file (default: stdout)");
  };
  auto add_phantom = [&](CLI::App* cmd) {
    cmd->add_option("--k", opt.k, "phantom node pairs")->capture_default_str();
    cmd->add_option("--p", opt.p, "derivatives matched at the arc ends (0..2)")
        ->capture_default_str();
    cmd->add_option("--derivative-source", opt.derivative_source,
                    "exact or divided_difference")
        ->capture_default_str();
  };

  CLI::App* interpolate = app.add_subcommand(
      "interpolate", "Build a spline and report node values and residuals");
  add_common(interpolate, true);
  add_phantom(interpolate);
  interpolate->add_option("--phantom-values", opt.phantom_values,
                          "explicit phantom values v1,v2,..")
      ->delimiter(',');
  interpolate->add_option("--phantom-values-file", opt.phantom_values_file,
                          "JSON file with a \"phantom_values\" array");
  interpolate->add_option("--format", opt.format, "csv, json or markdown");

  CLI::App* table = app.add_subcommand(
      "table", "Baseline vs phantom-variant interpolation errors");
  add_common(table, false);
  table->add_option("--k-values", k_values, "phantom pair counts to tabulate")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--format", opt.format, "markdown, csv or json");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Search for error-minimizing phantom values (JSON output)");
  add_common(optimize, false);
  add_phantom(optimize);
  optimize->add_option("--resolution", resolution, "search lattice spacing")
      ->capture_default_str();
  optimize->add_option("--max-sweeps", max_sweeps, "sweep limit per stage")
      ->capture_default_str();
  optimize->add_option("--box-halfwidth", box_halfwidth,
                       "search box halfwidth (default: 5 x data range)");

  CLI::App* plot = app.add_subcommand(
      "plot", "Dense spline/reference curve over [0, 2pi] (CSV)");
  add_common(plot, true);
  add_phantom(plot);
  plot->add_option("--phantom-values", opt.phantom_values,
                   "explicit phantom values v1,v2,..")
      ->delimiter(',');
  plot->add_option("--phantom-values-file", opt.phantom_values_file,
                   "JSON file with a \"phantom_values\" array");

  CLI11_PARSE(app, argc, argv);

  try {
    if (interpolate->parsed()) return run_interpolate(opt);
    if (table->parsed()) return run_table(opt, k_values);
    if (optimize->parsed()) return run_optimize(opt, resolution, max_sweeps, box_halfwidth);
    if (plot->parsed()) return run_plot(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
