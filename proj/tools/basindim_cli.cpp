// basindim: cycles, basin renders, hypothesis checks, covering sums and
// box-counting dimension studies for the catalog of entire functions.
//
// Exit codes: 0 success / PASS, 1 FAIL or numerical failure, 2 usage or
// precondition error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "basindim/complex.hpp"
#include "basindim/covering.hpp"
#include "basindim/dimension.hpp"
#include "basindim/dynamics.hpp"
#include "basindim/errors.hpp"
#include "basindim/funcat.hpp"
#include "basindim/function_config.hpp"
#include "basindim/logtransform.hpp"
#include "basindim/presets.hpp"
#include "basindim/render.hpp"

namespace fs = std::filesystem;
using namespace basindim;
using nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FunctionArgs {
  std::string preset;
  std::string file;
  std::string family;
  std::string lambda, a, b, c;
  std::string p_coeffs, q_coeffs;

  void attach(CLI::App* app) {
    app->add_option("--preset", preset, "example1, morosawa, cosine2, cosine3 or explambda");
    app->add_option("--function", file, "function config file (key=value lines)");
    app->add_option("--family", family, "exp_lambda, cosine, erf_scaled or pexpq");
    app->add_option("--lambda", lambda, "scale of exp_lambda / erf_scaled");
    app->add_option("--a", a, "cosine: a in a cos z + b");
    app->add_option("--b", b, "cosine: b in a cos z + b");
    app->add_option("--c", c, "pexpq: constant term");
    app->add_option("--p-coeffs", p_coeffs, "pexpq: p as re:im,... constant first");
    app->add_option("--q-coeffs", q_coeffs, "pexpq: q as re:im,... constant first");
  }

  const Preset* preset_entry() const { return preset.empty() ? nullptr : &basindim::preset(preset); }

  Complex require(const std::string& text, const char* flag) const {
    if (text.empty()) throw UsageError(std::string("missing ") + flag + " for family " + family);
    return parse_complex(text);
  }

  FunctionSpec resolve() const {
    const int sources = !preset.empty() + !file.empty() + !family.empty();
    if (sources == 0) throw UsageError("give --preset, --function or --family");
    if (sources > 1) throw UsageError("--preset, --function and --family are exclusive");
    if (!preset.empty()) return preset_entry()->function;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open function config " + file);
      return parse_function_config(in);
    }
    if (family == "exp_lambda") return FunctionSpec::exp_lambda(require(lambda, "--lambda"));
    if (family == "erf_scaled") return FunctionSpec::erf_scaled(require(lambda, "--lambda"));
    if (family == "cosine") return FunctionSpec::cosine(require(a, "--a"), require(b, "--b"));
    if (family == "pexpq") {
      if (p_coeffs.empty() || q_coeffs.empty()) throw UsageError("pexpq needs --p-coeffs and --q-coeffs");
      return FunctionSpec::pexpq(parse_coefficient_list(p_coeffs), parse_coefficient_list(q_coeffs),
                                 c.empty() ? Complex{} : parse_complex(c));
    }
    throw UsageError("unknown family '" + family + "'");
  }
};

struct CycleArgs {
  int period = 0;
  std::string seed;
  bool scan = false;

  void attach(CLI::App* app) {
    app->add_option("--period", period, "cycle period (preset default)");
    app->add_option("--seed", seed, "Newton seed (preset default)");
    app->add_flag("--scan", scan, "seed Newton from a scan of |f^p(z) - z| over the window");
  }

  AttractingCycle find(const FunctionSpec& f, const Preset* p, const GridSpec& scan_grid) const {
    int per = period;
    if (per == 0 && p) per = p->period;
    if (per < 1) throw UsageError("missing --period");
    if (scan) return find_cycle_by_scan(f, per, scan_grid);
    if (!seed.empty()) return find_periodic_point(f, per, parse_complex(seed));
    if (p && per == p->period) return find_periodic_point(f, per, p->seed);
    throw UsageError("missing --seed (or use --scan)");
  }
};

struct GridArgs {
  double window = 0.0;
  double window_height = 0.0;
  std::string center = "0";
  int nx = 512;
  int ny = 0;

  void attach(CLI::App* app, int default_n) {
    nx = default_n;
    app->add_option("--window", window, "half-width of the window (preset default)");
    app->add_option("--window-height", window_height, "half-height (defaults to --window)");
    app->add_option("--center", center, "window center");
    app->add_option("--nx", nx, "pixels along Re");
    app->add_option("--ny", ny, "pixels along Im (defaults to --nx)");
  }

  GridSpec resolve(const Preset* p) const {
    double hw = window;
    if (hw == 0.0 && p) hw = p->window;
    if (!(hw > 0.0)) throw UsageError("missing --window");
    GridSpec g{parse_complex(center), hw, window_height > 0.0 ? window_height : hw, nx, ny > 0 ? ny : nx};
    g.validate();
    return g;
  }
};

struct OrbitArgs {
  OrbitOptions options;

  void attach(CLI::App* app) {
    app->add_option("--budget", options.budget, "iteration budget per pixel");
    app->add_option("--capture", options.capture_radius, "capture radius around cycle points");
    app->add_option("--resc", options.escape_radius, "escape radius");
  }
};

// ---------------------------------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string commented(const std::string& text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

// Every option of the subcommand with its resolved value, readable back
// through `--config`.
void write_manifest(const fs::path& dir, const CLI::App* sub, const std::string& resolved) {
  std::string text = "# basindim " + sub->get_name() + "\n";
  text += "# rerun: basindim " + sub->get_name() + " --config " + (dir / "manifest.txt").string() + "\n";
  if (!resolved.empty()) text += commented(resolved);
  text += "[" + sub->get_name() + "]\n";
  std::istringstream options(sub->config_to_str(true, false));
  std::string line;
  while (std::getline(options, line)) {
    if (line.ends_with("=\"\"")) continue;  // unset
    text += line + "\n";
  }
  write_text(dir / "manifest.txt", text);
}

fs::path prepare_out(const std::string& out) {
  if (out.empty()) return {};
  fs::path dir(out);
  fs::create_directories(dir);
  return dir;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw UsageError("bad number '" + item + "' in list");
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::string label_for(double value) { return format_double(value); }

// ---------------------------------------------------------------------------

struct PeriodicCmd {
  FunctionArgs fn;
  CycleArgs cycle;
  GridArgs grid;
  std::string out;

  int run(const CLI::App* sub) const {
    const FunctionSpec f = fn.resolve();
    const Preset* p = fn.preset_entry();
    GridSpec scan_grid{};
    if (cycle.scan) scan_grid = grid.resolve(p);
    const AttractingCycle c = cycle.find(f, p, scan_grid);
    const double fd = multiplier_check(f, c);
    const std::string report = dump(cycle_report(c, fd));
    std::cout << report;
    if (const fs::path dir = prepare_out(out); !dir.empty()) {
      write_text(dir / "cycle.json", report);
      write_manifest(dir, sub, serialize_function_config(f));
    }
    return 0;
  }
};

struct RenderCmd {
  FunctionArgs fn;
  CycleArgs cycle;
  GridArgs grid;
  OrbitArgs orbit;
  int workers = 1;
  std::string out;

  int run(const CLI::App* sub) const {
    if (out.empty()) throw UsageError("render needs --out");
    const FunctionSpec f = fn.resolve();
    const Preset* p = fn.preset_entry();
    const GridSpec g = grid.resolve(p);
    const AttractingCycle c = cycle.find(f, p, g);
    const double fd = multiplier_check(f, c);
    const BasinField field = classify_grid(f, c, g, orbit.options, workers);

    const fs::path dir = prepare_out(out);
    write_ppm(field, dir / "basins.ppm");
    write_text(dir / "basins.txt", render_metadata(field, orbit.options));
    write_text(dir / "cycle.json", dump(cycle_report(c, fd)));

    std::vector<std::size_t> basin(c.period, 0);
    std::size_t escaped = 0, undecided = 0;
    for (const std::int32_t label : field.labels) {
      if (label == BasinField::kEscaped) ++escaped;
      else if (label == BasinField::kUndecided) ++undecided;
      else ++basin[label];
    }
    ordered_json summary;
    summary["pixels"] = field.labels.size();
    summary["basin_pixels"] = basin;
    summary["escaped"] = escaped;
    summary["undecided"] = undecided;
    summary["undecided_fraction"] = static_cast<double>(undecided) / static_cast<double>(field.labels.size());
    ordered_json marks = ordered_json::array();
    for (int j = 0; j < c.period; ++j) {
      ordered_json m;
      m["cycle_point"] = j;
      if (const auto px = g.pixel_of(c.points[j])) {
        m["i"] = px->first;
        m["j"] = px->second;
        m["label"] = field.label(px->first, px->second);
      } else {
        m["label"] = nullptr;
      }
      marks.push_back(m);
    }
    summary["cycle_point_labels"] = marks;
    write_text(dir / "summary.json", dump(summary));
    write_manifest(dir, sub, serialize_function_config(f));

    std::cout << "period " << c.period << ", " << field.labels.size() << " pixels, " << escaped << " escaped, "
              << undecided << " undecided\n";
    return 0;
  }
};

struct VerifyCmd {
  FunctionArgs fn;
  std::string inequality = "koebe";
  std::string s = "auto";
  double beta = 0.25;
  double t = 3.0;
  std::string sweep = "1,2,3,4,5,6,7,8,9,10";
  std::string region;
  int samples = 10000;
  std::uint64_t rng_seed = 1;
  int workers = 1;
  std::string out;

  SampleRegion resolve_region(const Preset* p) const {
    if (region.empty()) {
      if (!p) throw UsageError("missing --region re_min,re_max,im_min,im_max");
      return p->tract;
    }
    const std::vector<double> v = parse_list(region);
    if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3])) {
      throw UsageError("--region needs re_min,re_max,im_min,im_max with min < max");
    }
    return SampleRegion{v[0], v[1], v[2], v[3]};
  }

  int run(const CLI::App* sub) const {
    const FunctionSpec f = fn.resolve();
    const Sampler sampler{resolve_region(fn.preset_entry()), samples, rng_seed};
    const fs::path dir = prepare_out(out);
    std::string resolved = serialize_function_config(f);

    if (inequality == "beta") {
      ordered_json table = ordered_json::array();
      std::cout << "t,beta_estimate\n";
      for (const double tv : parse_list(sweep)) {
        const double b = estimate_beta(f, tv, sampler, workers);
        std::cout << format_double(tv) << "," << format_double(b) << "\n";
        table.push_back({{"t", tv}, {"beta_estimate", b}});
      }
      if (!dir.empty()) {
        ordered_json report;
        report["tag"] = "beta_sweep";
        report["sampler_seed"] = sampler.seed;
        report["samples"] = sampler.count;
        report["rows"] = table;
        write_text(dir / "report.json", dump(report));
        write_manifest(dir, sub, resolved);
      }
      return 0;
    }

    HypothesisReport report;
    if (inequality == "koebe") {
      const double sv = s == "auto" ? singular_floor(f) + 2.0 : std::stod(s);
      resolved += "s=" + format_double(sv) + "\n";
      report = verify_koebe_bound(f, sv, sampler, workers);
    } else if (inequality == "growth") {
      report = verify_growth_bound(f, beta, t, sampler, workers);
    } else {
      throw UsageError("--inequality must be koebe, growth or beta");
    }
    std::cout << summary_line(report) << "\n";
    if (!report.passed()) {
      std::cout << "worst point " << format_complex(report.worst_point) << " ratio "
                << format_double(report.worst_ratio) << "\n";
    }
    if (!dir.empty()) {
      write_text(dir / "report.json", dump(to_json(report)));
      write_manifest(dir, sub, resolved);
    }
    return report.passed() ? 0 : 1;
  }
};

struct DimensionCmd {
  FunctionArgs fn;
  CycleArgs cycle;
  GridArgs grid;
  OrbitArgs orbit;
  std::string fixture;
  int fixture_size = 0;
  int fixture_depth = 7;
  std::string cells_file;
  std::string m_floor = "5,10,20,40";
  int n_settle = 1;
  int n_max = 50;
  std::string pair;
  int workers = 1;
  std::string out;

  CellSet make_fixture() const {
    if (fixture == "segment") return segment_fixture(fixture_size > 0 ? fixture_size : 2048);
    if (fixture == "square") return square_fixture(fixture_size > 0 ? fixture_size : 2048);
    if (fixture == "cantor") return cantor_fixture(fixture_size > 0 ? fixture_size : 2048, fixture_depth);
    throw UsageError("--fixture must be segment, square or cantor");
  }

  static ordered_json fit_summary(const CellSet& cells) {
    ordered_json j;
    j["cells"] = cells.size();
    if (cells.empty()) {
      j["status"] = "empty";
      return j;
    }
    const std::vector<int> sizes = dyadic_sizes(cells.grid);
    const DimensionFit counted = box_count(cells, sizes);
    try {
      DimensionFit fit = fit_dimension(counted.scales, counted.counts);
      j["status"] = "fitted";
      j["fit"] = to_json(fit);
    } catch (const std::exception& e) {
      j["status"] = "unfitted";
      j["reason"] = e.what();
      j["fit"] = to_json(counted);
    }
    return j;
  }

  static void write_csv(const fs::path& path, const CellSet& cells) {
    if (cells.empty()) {
      write_text(path, "epsilon,count\n");
      return;
    }
    write_text(path, to_csv(box_count(cells, dyadic_sizes(cells.grid))));
  }

  static void write_cells(const fs::path& path, const CellSet& cells) {
    std::ofstream o(path);
    if (!o) throw std::runtime_error("cannot write " + path.string());
    write_cellset(o, cells);
  }

  static void print_line(const std::string& name, const ordered_json& j) {
    std::cout << name << ": " << j["cells"].get<std::size_t>() << " cells";
    if (j["status"] == "fitted") {
      std::cout << ", slope " << format_double(j["fit"]["slope"].get<double>()) << ", r_squared "
                << format_double(j["fit"]["r_squared"].get<double>());
    } else {
      std::cout << ", " << j["status"].get<std::string>();
    }
    std::cout << "\n";
  }

  int run(const CLI::App* sub) const {
    if (out.empty()) throw UsageError("dimension needs --out");
    const fs::path dir = prepare_out(out);
    ordered_json summary;

    if (!fixture.empty()) {
      const CellSet cells = make_fixture();
      summary["fixture"] = fixture;
      summary["grid"] = {cells.grid.nx, cells.grid.ny};
      summary["set"] = fit_summary(cells);
      write_csv(dir / "dimension.csv", cells);
      write_text(dir / "summary.json", dump(summary));
      write_manifest(dir, sub, "");
      print_line(fixture, summary["set"]);
      return 0;
    }

    if (!cells_file.empty()) {
      std::ifstream in(cells_file);
      if (!in) throw UsageError("cannot open " + cells_file);
      const CellSet cells = read_cellset(in);
      summary["cells_file"] = cells_file;
      summary["set"] = fit_summary(cells);
      write_csv(dir / "dimension.csv", cells);
      write_text(dir / "summary.json", dump(summary));
      write_manifest(dir, sub, "");
      print_line(cells_file, summary["set"]);
      return 0;
    }

    const FunctionSpec f = fn.resolve();
    const Preset* p = fn.preset_entry();
    const GridSpec g = grid.resolve(p);
    const AttractingCycle c = cycle.find(f, p, g);
    const BasinField field = classify_grid(f, c, g, orbit.options, workers);

    std::optional<std::pair<int, int>> labels;
    if (!pair.empty()) {
      const std::vector<double> v = parse_list(pair);
      if (v.size() != 2) throw UsageError("--pair needs two basin indices");
      labels = std::pair<int, int>{static_cast<int>(v[0]), static_cast<int>(v[1])};
    }
    const CellSet boundary = extract_boundary(field, labels);
    write_cells(dir / "boundary.cells", boundary);
    summary["grid"] = {g.nx, g.ny};
    summary["window"] = {g.half_width, g.half_height};
    summary["boundary"] = fit_summary(boundary);
    print_line("boundary", summary["boundary"]);

    ordered_json sweep = ordered_json::array();
    for (const double M : parse_list(m_floor)) {
      const EscapeParams params{M, n_settle, n_max, orbit.options.escape_radius};
      params.validate();
      const CellSet hit = intersect_escaping(boundary, f, params, workers);
      const std::string tag = "M" + label_for(M);
      write_cells(dir / ("boundary_escaping_" + tag + ".cells"), hit);
      write_csv(dir / ("dimension_" + tag + ".csv"), hit);
      ordered_json entry{{"M", M}};
      entry.update(fit_summary(hit));
      write_text(dir / ("dimension_" + tag + ".json"), dump(entry));
      print_line("M=" + label_for(M), entry);
      sweep.push_back(entry);
    }
    summary["sweep"] = sweep;
    write_text(dir / "summary.json", dump(summary));
    write_manifest(dir, sub, serialize_function_config(f));
    return 0;
  }
};

struct CoveringCmd {
  CoveringParams params;
  long k_max = 1000;
  double koebe_radius = 8.0;
  int iterations = 5;
  std::string out;

  int run(const CLI::App* sub) const {
    params.validate();
    if (k_max < 1000) throw UsageError("--k-max must be at least 1000");
    const double M = std::exp(params.log_M);
    const KoebeShrink shrink = koebe_shrink_factor(M, params.r, koebe_radius);
    const CoveringResult result = covering_sum(params, k_max);

    ordered_json report;
    report["koebe_factor"] = shrink.factor;
    report["koebe_within_13_over_M"] = shrink.within_simplified_bound;
    report["convergent"] = result.convergent;
    report["partial_sum"] = result.partial_sum;
    report["tail_bound"] = result.convergent ? ordered_json(result.tail_bound) : ordered_json(nullptr);
    report["normalized_lhs"] = result.convergent ? ordered_json(result.normalized_lhs) : ordered_json(nullptr);
    report["verdict"] = !result.convergent ? "divergent" : (result.passes ? "PASS" : "FAIL");
    if (result.convergent) report["pass_threshold_log_M"] = covering_pass_threshold(params, k_max);

    std::cout << "koebe_factor=" << format_double(shrink.factor)
              << (shrink.within_simplified_bound ? " (<= 13/M)" : " (> 13/M)") << "\n";
    std::cout << verdict_text(result);
    if (result.passes) {
      ordered_json bounds = ordered_json::array();
      const double s0 = result.lhs;
      for (int n = 0; n <= iterations; ++n) {
        const double b = iterated_covering_bound(params, s0, n);
        bounds.push_back(b);
        std::cout << "cover_bound[" << n << "]=" << format_double(b) << "\n";
      }
      report["iterated_bounds"] = bounds;
    } else if (result.convergent) {
      std::cout << "inequality passes from log M = "
                << format_double(report["pass_threshold_log_M"].get<double>()) << "\n";
    }

    if (const fs::path dir = prepare_out(out); !dir.empty()) {
      write_text(dir / "covering.json", dump(report));
      write_manifest(dir, sub, "");
    }
    return result.passes ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attracting cycles, basin boundaries and escaping-set dimension estimates for entire functions"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  PeriodicCmd periodic;
  auto* periodic_app = app.add_subcommand("periodic", "find an attracting cycle and check its multiplier");
  periodic.fn.attach(periodic_app);
  periodic.cycle.attach(periodic_app);
  periodic.grid.attach(periodic_app, 256);
  periodic_app->add_option("--out", periodic.out, "output directory");

  RenderCmd render;
  auto* render_app = app.add_subcommand("render", "classify a pixel grid into basins and write a PPM");
  render.fn.attach(render_app);
  render.cycle.attach(render_app);
  render.grid.attach(render_app, 512);
  render.orbit.attach(render_app);
  render_app->add_option("--workers", render.workers, "worker threads")->check(CLI::PositiveNumber);
  render_app->add_option("--out", render.out, "output directory");

  VerifyCmd verify;
  auto* verify_app = app.add_subcommand("verify", "sample-check the Koebe or growth inequality");
  verify.fn.attach(verify_app);
  verify_app->add_option("--inequality", verify.inequality, "koebe, growth or beta (estimate sweep over --sweep)");
  verify_app->add_option("--s", verify.s, "koebe offset, or auto (singular floor + 2)");
  verify_app->add_option("--beta", verify.beta, "growth constant");
  verify_app->add_option("--t", verify.t, "growth filter log|f| >= t");
  verify_app->add_option("--sweep", verify.sweep, "t values for --inequality beta");
  verify_app->add_option("--region", verify.region, "sample rectangle re_min,re_max,im_min,im_max (preset default)");
  verify_app->add_option("--samples", verify.samples, "number of stratified samples")->check(CLI::PositiveNumber);
  verify_app->add_option("--rng-seed", verify.rng_seed, "sampler seed");
  verify_app->add_option("--workers", verify.workers, "worker threads")->check(CLI::PositiveNumber);
  verify_app->add_option("--out", verify.out, "output directory");

  DimensionCmd dimension;
  auto* dimension_app = app.add_subcommand("dimension", "box-counting dimension of basin boundaries in the escaping set");
  dimension.fn.attach(dimension_app);
  dimension.cycle.attach(dimension_app);
  dimension.grid.attach(dimension_app, 1024);
  dimension.orbit.attach(dimension_app);
  dimension_app->add_option("--fixture", dimension.fixture, "calibration set: segment, square or cantor");
  dimension_app->add_option("--fixture-size", dimension.fixture_size, "fixture grid side (default 2048)");
  dimension_app->add_option("--fixture-depth", dimension.fixture_depth, "Cantor construction depth");
  dimension_app->add_option("--cells", dimension.cells_file, "box-count a stored cell set");
  dimension_app->add_option("--m-floor", dimension.m_floor, "escape floors M, comma separated");
  dimension_app->add_option("--n-settle", dimension.n_settle, "iterates ignored before the floor applies");
  dimension_app->add_option("--n-max", dimension.n_max, "escape-test budget");
  dimension_app->add_option("--pair", dimension.pair, "restrict to the boundary between basins j1,j2");
  dimension_app->add_option("--workers", dimension.workers, "worker threads")->check(CLI::PositiveNumber);
  dimension_app->add_option("--out", dimension.out, "output directory");

  CoveringCmd covering;
  auto* covering_app = app.add_subcommand("covering", "disk-covering sums for the escaping set in a tract");
  covering_app->add_option("--mu", covering.params.mu, "order of growth");
  covering_app->add_option("--beta", covering.params.beta, "growth-bound constant");
  covering_app->add_option("--m-tracts", covering.params.tracts, "tracts per strip");
  covering_app->add_option("--log-m", covering.params.log_M, "log M");
  covering_app->add_option("--r", covering.params.r, "disk radius");
  covering_app->add_option("--alpha", covering.params.alpha, "exponent");
  covering_app->add_option("--k-max", covering.k_max, "summation cutoff");
  covering_app->add_option("--koebe-radius", covering.koebe_radius, "R in the Koebe factor 4pi/(M - 8 - R)");
  covering_app->add_option("--iterations", covering.iterations, "number of iterated cover bounds to print");
  covering_app->add_option("--out", covering.out, "output directory");

  app.set_config("--config", "", "read options from a manifest");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*periodic_app) return periodic.run(periodic_app);
    if (*render_app) return render.run(render_app);
    if (*verify_app) return verify.run(verify_app);
    if (*dimension_app) return dimension.run(dimension_app);
    if (*covering_app) return covering.run(covering_app);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const CycleError& e) {
    std::cerr << "cycle: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
