#include "rmt/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rmt/ensembles.hpp"
#include "rmt/linalg.hpp"
#include "rmt/painleve.hpp"

namespace rmt::spectra {

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view token, double& out) {
  token = trim(token);
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size() && std::isfinite(out);
}

bool parse_int(std::string_view token, long long& out) {
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  return in;
}

// Chebyshev series value and derivative at u in [-1, 1].
void chebyshev(const std::vector<double>& c, double u, double& value, double& deriv) {
  double t0 = 1.0, t1 = u;
  double u0 = 1.0, u1 = 2.0 * u;  // U_0, U_1
  value = c[0];
  deriv = 0.0;
  if (c.size() > 1) {
    value += c[1] * t1;
    deriv += c[1] * u0;
  }
  for (std::size_t k = 2; k < c.size(); ++k) {
    const double t2 = 2.0 * u * t1 - t0;
    value += c[k] * t2;
    deriv += c[k] * static_cast<double>(k) * u1;
    const double u2 = 2.0 * u * u1 - u0;
    t0 = t1;
    t1 = t2;
    u0 = u1;
    u1 = u2;
  }
}

std::vector<double> unfold_local_mean(const std::vector<double>& x, int window) {
  const std::size_t n = x.size();
  std::vector<double> gaps(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) gaps[i] = x[i + 1] - x[i];
  std::vector<double> prefix(gaps.size() + 1, 0.0);
  for (std::size_t i = 0; i < gaps.size(); ++i) prefix[i + 1] = prefix[i] + gaps[i];
  const auto w = static_cast<std::size_t>(window);
  const std::size_t half = w / 2;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    std::size_t lo = i >= half ? i - half : 0;
    std::size_t hi = lo + w;
    if (hi > gaps.size()) {
      hi = gaps.size();
      lo = hi >= w ? hi - w : 0;
    }
    const double mean = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
    if (!(mean > 0.0)) throw UnfoldingError("unfold: zero local mean spacing");
    out[i + 1] = out[i] + gaps[i] / mean;
  }
  return out;
}

std::vector<double> unfold_polynomial(const std::vector<double>& x, int degree) {
  const std::size_t n = x.size();
  const double lo = x.front(), hi = x.back();
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const auto k = static_cast<std::size_t>(degree) + 1;
  std::vector<double> a(n * k), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x[i] - mid) / half;
    double t0 = 1.0, t1 = u;
    a[i * k] = 1.0;
    if (k > 1) a[i * k + 1] = u;
    for (std::size_t j = 2; j < k; ++j) {
      const double t2 = 2.0 * u * t1 - t0;
      a[i * k + j] = t2;
      t0 = t1;
      t1 = t2;
    }
    b[i] = static_cast<double>(i) + 0.5;
  }
  std::vector<double> coef;
  if (!linalg::least_squares(std::move(a), std::move(b), n, k, coef))
    throw UnfoldingError("unfold: degenerate polynomial fit");
  std::vector<double> out(n);
  double value = 0.0, deriv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    chebyshev(coef, (x[i] - mid) / half, value, deriv);
    if (!(deriv > 0.0)) throw UnfoldingError("unfold: fitted counting function is not increasing");
    out[i] = value;
  }
  constexpr int kChecks = 2000;
  for (int j = 0; j <= kChecks; ++j) {
    chebyshev(coef, -1.0 + 2.0 * j / kChecks, value, deriv);
    if (!(deriv > 0.0)) throw UnfoldingError("unfold: fitted counting function is not increasing");
  }
  for (std::size_t i = 1; i < n; ++i)
    if (!(out[i] > out[i - 1])) throw UnfoldingError("unfold: fitted counting function is not increasing");
  return out;
}

double semicircle_count(double x, double n) {
  const double r = std::sqrt(2.0 * n);
  const double u = std::clamp(x / r, -1.0, 1.0);
  return n * (0.5 + (u * std::sqrt(1.0 - u * u) + std::asin(u)) / kPi);
}

}  // namespace

RawSpectrum parse_spectrum(std::istream& in, const std::string& source, const LoadOptions& options) {
  RawSpectrum raw;
  raw.source = source;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') {
      ++raw.skipped;
      continue;
    }
    std::string_view token = t;
    if (options.format == Format::csv) {
      std::size_t col = 0, start = 0;
      bool found = false;
      for (std::size_t i = 0; i <= t.size(); ++i) {
        if (i == t.size() || t[i] == options.delimiter) {
          if (col == options.csv_column) {
            token = t.substr(start, i - start);
            found = true;
            break;
          }
          ++col;
          start = i + 1;
        }
      }
      if (!found)
        throw ParseError("line " + std::to_string(lineno) + ": missing column " +
                             std::to_string(options.csv_column),
                         lineno);
    }
    double v = 0.0;
    if (!parse_double(token, v))
      throw ParseError("line " + std::to_string(lineno) + ": not a finite number: '" +
                           std::string(trim(token)) + "'",
                       lineno);
    raw.values.push_back(v);
    ++raw.parsed;
  }
  if (in.bad()) throw IoError("read failure on '" + source + "'");
  std::sort(raw.values.begin(), raw.values.end());
  const auto last = std::unique(raw.values.begin(), raw.values.end());
  raw.duplicates = static_cast<std::size_t>(raw.values.end() - last);
  raw.values.erase(last, raw.values.end());
  if (options.min_count > 0 && raw.values.size() < options.min_count)
    throw InsufficientDataError("spectrum '" + source + "' has " + std::to_string(raw.values.size()) +
                                " distinct values, need " + std::to_string(options.min_count));
  return raw;
}

RawSpectrum load_spectrum(const std::string& path, const LoadOptions& options) {
  std::ifstream in = open_or_throw(path);
  return parse_spectrum(in, path, options);
}

RawSpectrum parse_adjacency(std::istream& in, const std::string& source, int n_vertices) {
  if (n_vertices < 1) throw DomainError("adjacency_spectrum: need at least one vertex");
  if (n_vertices > 4000) throw CapabilityError("adjacency_spectrum: more than 4000 vertices");
  const auto n = static_cast<std::size_t>(n_vertices);
  std::vector<double> a(n * n, 0.0);
  RawSpectrum raw;
  raw.source = source;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') {
      ++raw.skipped;
      continue;
    }
    const auto fields = split_ws(t);
    long long u = 0, v = 0;
    if (fields.size() != 2 || !parse_int(fields[0], u) || !parse_int(fields[1], v))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'", lineno);
    if (u < 1 || v < 1 || u > n_vertices || v > n_vertices)
      throw ParseError("line " + std::to_string(lineno) + ": vertex outside 1.." +
                           std::to_string(n_vertices),
                       lineno);
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop", lineno);
    const auto i = static_cast<std::size_t>(u - 1), j = static_cast<std::size_t>(v - 1);
    a[i * n + j] = 1.0;
    a[j * n + i] = 1.0;
    ++raw.parsed;
  }
  raw.values = ensembles::eigenvalues_symmetric(std::move(a), n);
  return raw;
}

RawSpectrum adjacency_spectrum(const std::string& path, int n_vertices) {
  std::ifstream in = open_or_throw(path);
  return parse_adjacency(in, path, n_vertices);
}

std::string UnfoldOptions::describe() const {
  switch (method) {
    case UnfoldMethod::local_mean:
      return "local_mean:" + std::to_string(window);
    case UnfoldMethod::polynomial:
      return "polynomial:" + std::to_string(degree);
    case UnfoldMethod::given_density:
      return "given_density:" + density;
  }
  return "?";
}

UnfoldOptions parse_unfold_method(const std::string& text) {
  UnfoldOptions o;
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto int_arg = [&](int fallback) {
    if (arg.empty()) return fallback;
    long long v = 0;
    if (!parse_int(arg, v)) throw DomainError("unfold: bad parameter '" + arg + "'");
    return static_cast<int>(v);
  };
  if (name == "local_mean") {
    o.method = UnfoldMethod::local_mean;
    o.window = int_arg(21);
  } else if (name == "polynomial") {
    o.method = UnfoldMethod::polynomial;
    o.degree = int_arg(9);
  } else if (name == "given_density") {
    o.method = UnfoldMethod::given_density;
    o.density = arg.empty() ? "zeta" : arg;
  } else {
    throw DomainError("unknown unfolding method '" + text +
                      "' (local_mean:w, polynomial:d, given_density:zeta|semicircle)");
  }
  return o;
}

double zeta_smooth_count(double t) {
  if (!(t > 0.0)) throw DomainError("zeta_smooth_count: ordinate must be positive");
  const double u = t / (2.0 * kPi);
  return u * (std::log(u) - 1.0) + 7.0 / 8.0;
}

std::vector<double> UnfoldedSpectrum::spacings() const {
  std::vector<double> out;
  if (values.size() < 2) return out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) out.push_back(values[i + 1] - values[i]);
  return out;
}

double UnfoldedSpectrum::mean_spacing() const {
  if (values.size() < 2) return 0.0;
  return (values.back() - values.front()) / static_cast<double>(values.size() - 1);
}

UnfoldedSpectrum unfold(const RawSpectrum& raw, const UnfoldOptions& options) {
  const std::vector<double>& x = raw.values;
  const std::size_t need = std::max<std::size_t>(options.min_count, 3);
  if (x.size() < need)
    throw InsufficientDataError("unfold: need at least " + std::to_string(need) + " values");
  if (!(options.trim >= 0.0 && options.trim <= 0.4)) throw DomainError("unfold: trim must lie in [0, 0.4]");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw DomainError("unfold: values must be strictly increasing");

  std::vector<double> mapped;
  switch (options.method) {
    case UnfoldMethod::local_mean:
      if (options.window < 5 || options.window % 2 == 0)
        throw DomainError("unfold: local_mean window must be odd and >= 5");
      if (static_cast<std::size_t>(options.window) >= x.size())
        throw InsufficientDataError("unfold: window exceeds the number of spacings");
      mapped = unfold_local_mean(x, options.window);
      break;
    case UnfoldMethod::polynomial:
      if (options.degree < 3 || options.degree > 15)
        throw DomainError("unfold: polynomial degree must lie in [3, 15]");
      mapped = unfold_polynomial(x, options.degree);
      break;
    case UnfoldMethod::given_density:
      mapped.resize(x.size());
      if (options.density == "zeta") {
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (!(x[i] > 0.0)) throw UnfoldingError("unfold: zeta ordinates must be positive");
          mapped[i] = zeta_smooth_count(x[i]);
        }
      } else if (options.density == "semicircle") {
        const double n = static_cast<double>(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) mapped[i] = semicircle_count(x[i], n);
      } else {
        throw DomainError("unfold: unknown density '" + options.density + "' (zeta, semicircle)");
      }
      for (std::size_t i = 1; i < mapped.size(); ++i)
        if (!(mapped[i] > mapped[i - 1]))
          throw UnfoldingError("unfold: density map is not increasing on the data");
      break;
  }
  const auto cut = static_cast<std::size_t>(std::floor(options.trim * static_cast<double>(mapped.size())));
  std::vector<double> kept(mapped.begin() + static_cast<std::ptrdiff_t>(cut),
                           mapped.end() - static_cast<std::ptrdiff_t>(cut));
  if (kept.size() < 3) throw InsufficientDataError("unfold: trimming left fewer than 3 values");
  const double origin = kept.front();
  const double mean = (kept.back() - origin) / static_cast<double>(kept.size() - 1);
  if (!(mean > 0.0)) throw UnfoldingError("unfold: zero mean spacing");
  UnfoldedSpectrum u;
  u.values.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) u.values[i] = (kept[i] - origin) / mean;
  u.values.back() = static_cast<double>(kept.size() - 1);
  u.method = options.describe();
  if (options.trim > 0.0) u.method += ",trim=" + std::to_string(options.trim).substr(0, 5);
  return u;
}

const char* to_string(Reference r) {
  switch (r) {
    case Reference::gaudin:
      return "gaudin";
    case Reference::goe_surmise:
      return "goe_surmise";
    case Reference::poisson:
      return "poisson";
  }
  return "?";
}

Reference parse_reference(const std::string& name) {
  if (name == "gaudin") return Reference::gaudin;
  if (name == "goe_surmise") return Reference::goe_surmise;
  if (name == "poisson") return Reference::poisson;
  throw DomainError("unknown reference '" + name + "' (gaudin, goe_surmise, poisson)");
}

bool is_approximate(Reference r) { return r == Reference::goe_surmise; }

double reference_cdf(Reference r, double s) {
  if (s <= 0.0) return 0.0;
  switch (r) {
    case Reference::gaudin:
      return painleve::default_gaudin_law().cdf(s);
    case Reference::goe_surmise:
      return -std::expm1(-kPi * s * s / 4.0);
    case Reference::poisson:
      return -std::expm1(-s);
  }
  return 0.0;
}

double reference_pdf(Reference r, double s) {
  if (s <= 0.0) return 0.0;
  switch (r) {
    case Reference::gaudin:
      return painleve::default_gaudin_law().pdf(s);
    case Reference::goe_surmise:
      return kPi * s / 2.0 * std::exp(-kPi * s * s / 4.0);
    case Reference::poisson:
      return std::exp(-s);
  }
  return 0.0;
}

SpacingReport spacing_report(const UnfoldedSpectrum& u, Reference reference) {
  const std::vector<double> gaps = u.spacings();
  if (gaps.empty()) throw InsufficientDataError("spacing_report: no spacings");
  SpacingReport rep;
  rep.method = u.method;
  rep.reference = reference;
  rep.n = gaps.size();
  rep.moments = stats::summarize(gaps);
  rep.histogram = stats::histogram(gaps, 0.0, 4.0, 50);
  for (const auto& bin : rep.histogram) rep.reference_density.push_back(reference_pdf(reference, 0.5 * (bin.lo + bin.hi)));
  const stats::EmpiricalDistribution emp(gaps);
  rep.ks = stats::ks_statistic(emp, [reference](double s) { return reference_cdf(reference, s); });
  return rep;
}

std::string SpacingReport::to_json() const {
  nlohmann::ordered_json j;
  j["method"] = method;
  j["reference"] = to_string(reference);
  j["approximate"] = is_approximate(reference);
  j["ks"] = ks;
  j["n"] = n;
  j["moments"] = {{"mean", moments.mean},         {"sd", moments.sd},
                  {"skewness", moments.skewness}, {"kurtosis_excess", moments.kurtosis_excess},
                  {"min", moments.min},           {"max", moments.max}};
  auto bins = nlohmann::ordered_json::array();
  for (const auto& b : histogram)
    bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"density", b.density}});
  j["histogram"] = std::move(bins);
  return j.dump(2);
}

std::string SpacingReport::to_csv() const {
  std::ostringstream out;
  out << std::setprecision(17) << "bin_lo,bin_hi,density,reference_density\n";
  for (std::size_t i = 0; i < histogram.size(); ++i)
    out << histogram[i].lo << ',' << histogram[i].hi << ',' << histogram[i].density << ','
        << reference_density[i] << '\n';
  return out.str();
}

}  // namespace rmt::spectra
