#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmt/combinatorics.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/error.hpp"
#include "rmt/evt.hpp"
#include "rmt/fredholm.hpp"
#include "rmt/painleve.hpp"
#include "rmt/parallel.hpp"
#include "rmt/spectra.hpp"
#include "rmt/stats.hpp"

namespace rmtlab {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

class ArgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  std::uint64_t v = 0;
  const std::string t = trim(text);
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw ArgError(origin + ": seed must be a non-negative 64-bit integer, got '" + text + "'");
  return v;
}

unsigned parse_threads(const std::string& text, const std::string& origin) {
  const std::string t = trim(text);
  if (t == "auto") return 0;
  unsigned v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || v == 0)
    throw ArgError(origin + ": threads must be a positive integer or 'auto', got '" + text + "'");
  return v;
}

double parse_real(const std::string& text, const std::string& origin) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw ArgError(origin + ": not a number: '" + text + "'");
  return v;
}

std::pair<double, double> parse_range(const std::string& text, const std::string& origin) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ArgError(origin + ": expected a:b, got '" + text + "'");
  return {parse_real(text.substr(0, colon), origin), parse_real(text.substr(colon + 1), origin)};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Session {
  RunConfig config;
  std::string command_line;
  std::ostream& out;
  std::ostream& err;

  std::string provenance() const {
    return "# rmtlab " + version() + " seed=" + std::to_string(config.seed) + " command: " + command_line + "\n";
  }

  double tolerance(const std::string& name, double fallback) const {
    const auto it = config.tolerances.find(name);
    return it == config.tolerances.end() ? fallback : it->second;
  }

  /// Writes `content` to <out>/<file>, or to stdout when no --out was given.
  void emit(const std::string& file, const std::string& content) const {
    if (config.output_dir.empty()) {
      out << content;
      return;
    }
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    const fs::path path = fs::path(config.output_dir) / file;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw rmt::IoError("cannot write '" + path.string() + "'");
    f << content;
    if (!f) throw rmt::IoError("write failure on '" + path.string() + "'");
  }

  std::string csv(const std::string& header, const std::string& rows) const {
    return provenance() + header + "\n" + rows;
  }
};

json moments_json(const rmt::stats::SummaryStats& s) {
  return {{"mean", s.mean},
          {"sd", s.sd},
          {"skewness", s.skewness},
          {"kurtosis_excess", s.kurtosis_excess},
          {"min", s.min},
          {"max", s.max},
          {"count", s.count}};
}

// tw ------------------------------------------------------------------------

struct TwArgs {
  int beta = 2;
  std::string range = "-8:6";
  int points = 500;
};

int cmd_tw(const Session& s, const TwArgs& a) {
  if (a.beta != 1 && a.beta != 2 && a.beta != 4)
    throw ArgError("--beta must be one of {1, 2, 4}, got " + std::to_string(a.beta));
  const auto [lo, hi] = parse_range(a.range, "--range");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw ArgError("--range needs finite a < b");
  if (a.points < 2) throw ArgError("--points must be at least 2");
  const auto& sol = rmt::painleve::default_pii_solution();
  std::string rows;
  for (int i = 0; i < a.points; ++i) {
    const double x = i == a.points - 1 ? hi : lo + (hi - lo) * i / (a.points - 1);
    rows += format_double(x) + "," + format_double(rmt::painleve::tw_cdf(a.beta, x, sol)) + "," +
            format_double(rmt::painleve::tw_pdf(a.beta, x, sol)) + "\n";
  }
  s.emit("tw_beta" + std::to_string(a.beta) + ".csv", s.csv("s,cdf,pdf", rows));
  return kOk;
}

// gap -----------------------------------------------------------------------

struct GapArgs {
  std::string kernel = "sine";
  int n = 1;
  std::vector<std::string> intervals;
  double lambda = 1.0;
  int order = 60;
  bool strict = false;
};

int cmd_gap(const Session& s, const GapArgs& a) {
  rmt::fredholm::KernelSpec kernel;
  if (a.kernel == "sine")
    kernel = rmt::fredholm::SineKernel{};
  else if (a.kernel == "airy")
    kernel = rmt::fredholm::AiryKernel{};
  else if (a.kernel == "hermite")
    kernel = rmt::fredholm::HermiteKernel{a.n};
  else
    throw ArgError("--kernel must be one of {sine, airy, hermite}, got '" + a.kernel + "'");
  if (a.intervals.empty()) throw ArgError("at least one --interval a:b is required");
  if (!(a.lambda > 0.0 && a.lambda <= 1.0)) throw ArgError("--lambda must lie in (0, 1]");

  std::vector<std::pair<double, double>> parts;
  for (const auto& text : a.intervals) {
    const auto [lo, hi] = parse_range(text, "--interval");
    if (!(lo <= hi) || std::isnan(lo)) throw ArgError("--interval needs a <= b, got '" + text + "'");
    if (lo < hi) parts.emplace_back(lo, hi);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<double> endpoints;
  for (const auto& [lo, hi] : parts) {
    if (!endpoints.empty() && lo <= endpoints.back()) throw ArgError("--interval values overlap");
    endpoints.push_back(lo);
    endpoints.push_back(hi);
  }
  const auto j = rmt::fredholm::IntervalUnion::from_endpoints(endpoints);
  const double tol = s.tolerance("gap", 1e-8);
  const auto r = rmt::fredholm::fredholm_det(kernel, j, a.lambda, a.order, tol);

  json doc;
  doc["kernel"] = a.kernel;
  if (a.kernel == "hermite") doc["n"] = a.n;
  auto iv = json::array();
  for (const auto& [lo, hi] : parts)
    iv.push_back({lo, std::isinf(hi) ? json("inf") : json(hi)});
  doc["intervals"] = std::move(iv);
  doc["lambda"] = a.lambda;
  doc["order"] = r.order;
  doc["value"] = r.value;
  doc["error_estimate"] = r.error_estimate;
  doc["tolerance"] = tol;
  doc["converged"] = r.converged;
  s.emit("gap.json", doc.dump(2) + "\n");
  if (!r.converged) {
    s.err << "warning: order-doubling error estimate " << r.error_estimate << " exceeds tolerance " << tol
          << "\n";
    if (a.strict) return kSolverFailure;
  }
  return kOk;
}

// mc ------------------------------------------------------------------------

struct McArgs {
  std::string experiment;
  int size = 0;
  long long trials = 1000;
  int beta = 0;
  std::string entry;
  std::string range = "7:19";
};

std::string join_rows(const std::vector<double>& v) {
  std::string rows;
  for (double x : v) rows += format_double(x) + "\n";
  return rows;
}

int cmd_mc(const Session& s, McArgs a) {
  namespace ens = rmt::ensembles;
  using rmt::stats::ks_statistic;
  if (a.trials < 1) throw ArgError("--trials must be positive");
  if (a.trials < 100)
    throw rmt::InsufficientDataError("--trials " + std::to_string(a.trials) +
                                     " is below the 100 trials required for the KS check");
  const auto trials = static_cast<std::size_t>(a.trials);
  const std::uint64_t seed = s.config.seed;
  const unsigned threads = s.config.threads;

  json summary;
  summary["experiment"] = a.experiment;
  std::string samples_header, samples_rows;

  if (a.experiment == "edge" || a.experiment == "wigner-edge" || a.experiment == "bulk") {
    ens::EnsembleSpec spec;
    const bool wigner = a.experiment == "wigner-edge";
    spec.beta = a.beta != 0 ? a.beta : (wigner ? 1 : 2);
    spec.n = a.size != 0 ? a.size : 400;
    spec.entry_law = wigner ? ens::parse_entry_law(a.entry.empty() ? "rademacher" : a.entry)
                            : ens::parse_entry_law(a.entry.empty() ? "gaussian" : a.entry);
    spec.validate();
    summary["size"] = spec.n;
    summary["beta"] = spec.beta;
    summary["entry_law"] = ens::to_string(spec.entry_law);
    summary["trials"] = trials;
    summary["seed"] = seed;
    const auto draws = ens::sample_spectra(spec, seed, trials, threads);
    if (a.experiment == "bulk") {
      std::vector<double> gaps;
      for (const auto& d : draws) {
        const auto g = ens::bulk_spacings(d, spec, 0.2);
        gaps.insert(gaps.end(), g.begin(), g.end());
      }
      summary["window"] = 0.2;
      summary["moments"] = moments_json(rmt::stats::summarize(gaps));
      const rmt::stats::EmpiricalDistribution emp(gaps);
      if (spec.beta == 2 || spec.beta == 1) {
        const auto ref = spec.beta == 2 ? rmt::spectra::Reference::gaudin : rmt::spectra::Reference::goe_surmise;
        summary["ks"] = {{"reference", rmt::spectra::to_string(ref)},
                         {"approximate", rmt::spectra::is_approximate(ref)},
                         {"value", ks_statistic(emp, [ref](double x) { return rmt::spectra::reference_cdf(ref, x); })}};
      } else {
        summary["ks"] = nullptr;
      }
      samples_header = "spacing";
      samples_rows = join_rows(gaps);
    } else {
      std::vector<double> scaled;
      double mean_ratio = 0.0;
      for (const auto& d : draws) {
        scaled.push_back(ens::edge_scale(d, spec));
        mean_ratio += d.max() / std::sqrt(static_cast<double>(spec.n));
      }
      mean_ratio /= static_cast<double>(draws.size());
      summary["moments"] = moments_json(rmt::stats::summarize(scaled));
      summary["mean_lambda_max_over_sqrt_n"] = mean_ratio;
      const rmt::stats::EmpiricalDistribution emp(scaled);
      const int b = spec.beta;
      summary["ks"] = {{"reference", "F" + std::to_string(b)},
                       {"value", ks_statistic(emp, [b](double x) { return ens::edge_limit_cdf(b, x); })}};
      json others = json::object();
      for (int other : {1, 2, 4})
        if (other != b)
          others["F" + std::to_string(other)] =
              ks_statistic(emp, [other](double x) { return ens::edge_limit_cdf(other, x); });
      summary["ks_other"] = std::move(others);
      samples_header = "lambda_hat";
      samples_rows = join_rows(scaled);
    }
  } else if (a.experiment == "lis") {
    const int n = a.size != 0 ? a.size : 52;
    const auto [lo, hi] = parse_range(a.range, "--range");
    const auto sim = rmt::combinatorics::simulate_lis(n, trials, seed, threads);
    std::vector<double> values(sim.samples.begin(), sim.samples.end());
    summary["size"] = n;
    summary["trials"] = trials;
    summary["seed"] = seed;
    summary["moments"] = moments_json(sim.stats);
    summary["range_probability"] = {{"lo", lo}, {"hi", hi}, {"value", rmt::stats::range_probability(values, lo, hi)}};
    const rmt::stats::EmpiricalDistribution emp(sim.scaled);
    summary["ks"] = {{"reference", "F2 (scaled (l - 2 sqrt N) / N^(1/6))"},
                     {"value", ks_statistic(emp, [](double x) { return ens::edge_limit_cdf(2, x); })}};
    samples_header = "l,scaled";
    for (std::size_t i = 0; i < sim.samples.size(); ++i)
      samples_rows += std::to_string(sim.samples[i]) + "," + format_double(sim.scaled[i]) + "\n";
  } else if (a.experiment == "evt") {
    const auto entry = rmt::evt::EntryDistribution::parse(a.entry.empty() ? "exponential" : a.entry);
    const int n = a.size != 0 ? a.size : 1000;
    const auto norm = rmt::evt::default_normalization(entry);
    const auto limit = entry.limit();
    const auto emp = rmt::evt::simulate_diagonal_max(entry, n, trials, norm, seed, threads);
    summary["size"] = n;
    summary["entry"] = entry.name();
    summary["trials"] = trials;
    summary["seed"] = seed;
    summary["moments"] = moments_json(rmt::stats::summarize(emp.values()));
    summary["ks"] = {{"reference", limit.name()},
                     {"value", ks_statistic(emp, [&](double x) { return rmt::evt::evt_cdf(limit, x); })}};
    summary["ks_finite_n"] =
        ks_statistic(emp, [&](double x) { return rmt::evt::finite_n_cdf(entry, n, norm, x); });
    samples_header = "max_normalized";
    samples_rows = join_rows(emp.values());
  } else {
    throw ArgError("--experiment must be one of {edge, bulk, wigner-edge, lis, evt}, got '" + a.experiment + "'");
  }

  summary["version"] = version();
  if (!s.config.output_dir.empty()) s.emit(a.experiment + "_samples.csv", s.csv(samples_header, samples_rows));
  s.emit(a.experiment + "_summary.json", summary.dump(2) + "\n");
  return kOk;
}

// spectra -------------------------------------------------------------------

struct SpectraArgs {
  std::string input;
  std::string format = "plain";
  std::size_t column = 0;
  int adjacency = 0;
  std::string unfold = "polynomial:9";
  double trim = 0.0;
  std::string reference = "gaudin";
  std::size_t min_count = 100;
};

int cmd_spectra(const Session& s, const SpectraArgs& a) {
  namespace sp = rmt::spectra;
  const auto reference = sp::parse_reference(a.reference);
  auto unfold = sp::parse_unfold_method(a.unfold);
  unfold.trim = a.trim;
  unfold.min_count = a.min_count;

  sp::RawSpectrum raw;
  if (a.adjacency > 0) {
    raw = sp::adjacency_spectrum(a.input, a.adjacency);
    std::string rows;
    for (double v : raw.values) rows += format_double(v) + "\n";
    s.emit("adjacency_spectrum.csv", s.csv("eigenvalue", rows));
    const auto last = std::unique(raw.values.begin(), raw.values.end(),
                                  [](double x, double y) { return std::abs(x - y) <= 1e-9 * (1.0 + std::abs(x)); });
    raw.duplicates = static_cast<std::size_t>(raw.values.end() - last);
    raw.values.erase(last, raw.values.end());
    if (s.config.output_dir.empty() || raw.values.size() < std::max<std::size_t>(a.min_count, 3)) {
      s.err << "note: spacing report skipped (" << raw.values.size() << " distinct eigenvalues"
            << (s.config.output_dir.empty() ? ", no --out directory" : "") << ")\n";
      return kOk;
    }
  } else {
    sp::LoadOptions opts;
    if (a.format == "plain")
      opts.format = sp::Format::plain;
    else if (a.format == "csv")
      opts.format = sp::Format::csv;
    else
      throw ArgError("--format must be one of {plain, csv}, got '" + a.format + "'");
    opts.csv_column = a.column;
    opts.min_count = a.min_count;
    raw = sp::load_spectrum(a.input, opts);
  }

  const auto unfolded = sp::unfold(raw, unfold);
  const auto report = sp::spacing_report(unfolded, reference);
  json doc = json::parse(report.to_json());
  doc["input"] = {{"source", raw.source},
                  {"values", raw.values.size()},
                  {"parsed", raw.parsed},
                  {"skipped", raw.skipped},
                  {"duplicates", raw.duplicates}};
  doc["version"] = version();
  s.emit("spectra_report.json", doc.dump(2) + "\n");
  if (!s.config.output_dir.empty()) {
    const std::string body = report.to_csv();
    s.emit("spectra_histogram.csv", s.provenance() + body);
  }
  return kOk;
}

std::string provenance_command(const std::vector<std::string>& args) {
  std::string line = "rmtlab";
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--threads" || a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--threads=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
    line += " " + a;
  }
  return line;
}

}  // namespace

std::string version() { return "0.1.0"; }

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw rmt::IoError("cannot read config file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ArgError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "seed")
      config.seed = parse_seed(value, where);
    else if (key == "threads")
      config.threads = parse_threads(value, where);
    else if (key == "out")
      config.output_dir = value;
    else if (key.rfind("tol.", 0) == 0 && key.size() > 4)
      config.tolerances[key.substr(4)] = parse_real(value, where);
    else
      throw ArgError(where + ": unknown key '" + key + "' (seed, threads, out, tol.<name>)");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random matrix theory laboratory: Tracy-Widom tables, gap probabilities, Monte Carlo "
               "experiments and spectral statistics.",
               "rmtlab"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  std::string seed_text, threads_text, out_dir, config_path;
  std::vector<std::string> tol_overrides;
  auto* seed_opt = app.add_option("--seed", seed_text, "64-bit RNG seed (default " +
                                                           std::to_string(rmt::kDefaultSeed) + ", env RMT_SEED)");
  auto* threads_opt = app.add_option("--threads", threads_text, "Worker threads: positive integer or 'auto'");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory (default: stdout)");
  app.add_option("--config", config_path, "Config file of key=value lines");
  app.add_option("--tol", tol_overrides, "Tolerance override name=value (repeatable)");

  TwArgs tw;
  auto* tw_cmd = app.add_subcommand("tw", "Tabulate a Tracy-Widom distribution as CSV (s, cdf, pdf)");
  tw_cmd->add_option("--beta", tw.beta, "Symmetry class: 1, 2 or 4")->capture_default_str();
  tw_cmd->add_option("--range", tw.range, "Interval a:b")->capture_default_str();
  tw_cmd->add_option("--points", tw.points, "Number of grid points")->capture_default_str();

  GapArgs gap;
  auto* gap_cmd = app.add_subcommand("gap", "Fredholm determinant det(I - lambda K) on a union of intervals");
  gap_cmd->add_option("--kernel", gap.kernel, "sine, airy or hermite")->capture_default_str();
  gap_cmd->add_option("--n", gap.n, "Matrix size for the hermite kernel")->capture_default_str();
  gap_cmd->add_option("--interval", gap.intervals, "Interval a:b (repeatable; b may be inf)");
  gap_cmd->add_option("--lambda", gap.lambda, "Kernel multiplier in (0, 1]")->capture_default_str();
  gap_cmd->add_option("--order", gap.order, "Gauss-Legendre nodes per interval")->capture_default_str();
  gap_cmd->add_flag("--strict", gap.strict, "Exit 3 when the error estimate exceeds the tolerance");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Run a Monte Carlo experiment; writes samples CSV and summary JSON");
  mc_cmd->add_option("--experiment", mc.experiment, "edge, bulk, wigner-edge, lis or evt")->required();
  mc_cmd->add_option("--size", mc.size, "Matrix size or permutation length (experiment default if omitted)");
  mc_cmd->add_option("--trials", mc.trials, "Number of independent draws")->capture_default_str();
  mc_cmd->add_option("--beta", mc.beta, "Symmetry class for ensemble experiments");
  mc_cmd->add_option("--entry", mc.entry,
                     "Entry law: gaussian|rademacher|uniform (ensembles), exponential|uniform01|pareto:a (evt)");
  mc_cmd->add_option("--range", mc.range, "lis: interval lo:hi for the range probability")->capture_default_str();

  SpectraArgs sp;
  auto* sp_cmd = app.add_subcommand("spectra", "Unfold a spectrum and compare its spacings with a reference law");
  sp_cmd->add_option("input", sp.input, "Spectrum file (or edge list with --adjacency)")->required();
  sp_cmd->add_option("--format", sp.format, "plain or csv")->capture_default_str();
  sp_cmd->add_option("--column", sp.column, "0-based column for csv input")->capture_default_str();
  sp_cmd->add_option("--adjacency", sp.adjacency, "Treat input as an edge list on this many vertices");
  sp_cmd->add_option("--unfold", sp.unfold, "local_mean:w, polynomial:d or given_density:zeta|semicircle")
      ->capture_default_str();
  sp_cmd->add_option("--trim", sp.trim, "Fraction dropped from each end after unfolding")->capture_default_str();
  sp_cmd->add_option("--reference", sp.reference, "gaudin, goe_surmise or poisson")->capture_default_str();
  sp_cmd->add_option("--min-count", sp.min_count, "Minimum number of distinct values")->capture_default_str();

  for (auto* sub : {tw_cmd, gap_cmd, mc_cmd, sp_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    Session s{RunConfig{}, provenance_command(args), out, err};
    s.config.seed = rmt::kDefaultSeed;
    if (const char* env = std::getenv("RMT_SEED"); env != nullptr && *env != '\0')
      s.config.seed = parse_seed(env, "RMT_SEED");
    if (!config_path.empty()) apply_config_file(config_path, s.config);
    if (seed_opt->count() > 0) s.config.seed = parse_seed(seed_text, "--seed");
    if (threads_opt->count() > 0) s.config.threads = parse_threads(threads_text, "--threads");
    if (out_opt->count() > 0) s.config.output_dir = out_dir;
    for (const auto& t : tol_overrides) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) throw ArgError("--tol expects name=value, got '" + t + "'");
      s.config.tolerances[t.substr(0, eq)] = parse_real(t.substr(eq + 1), "--tol");
    }

    if (tw_cmd->parsed()) return cmd_tw(s, tw);
    if (gap_cmd->parsed()) return cmd_gap(s, gap);
    if (mc_cmd->parsed()) return cmd_mc(s, mc);
    if (sp_cmd->parsed()) return cmd_spectra(s, sp);
    return kInvalidArguments;
  } catch (const ArgError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const rmt::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const rmt::IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const rmt::UnfoldingError& e) {
    err << "unfolding error: " << e.what() << "\n";
    return kUnfoldingFailure;
  } catch (const rmt::InsufficientDataError& e) {
    err << "insufficient data: " << e.what() << "\n";
    return kInsufficientData;
  } catch (const rmt::NumericalError& e) {
    err << "solver failure: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const rmt::Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace rmtlab
