#include "rmt/evt.hpp"

#include <cmath>
#include <vector>

namespace rmt::evt {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("evt: alpha must be positive");
}

std::string format_alpha(double alpha) {
  std::string s = std::to_string(alpha);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string EvtLimit::name() const {
  switch (kind) {
    case EvtKind::gumbel:
      return "gumbel";
    case EvtKind::frechet:
      return "frechet(" + format_alpha(alpha) + ")";
    case EvtKind::weibull:
      return "weibull(" + format_alpha(alpha) + ")";
  }
  return "?";
}

double evt_cdf(const EvtLimit& limit, double x) {
  if (std::isnan(x)) throw DomainError("evt_cdf: NaN argument");
  switch (limit.kind) {
    case EvtKind::gumbel:
      return std::exp(-std::exp(-x));
    case EvtKind::frechet:
      check_alpha(limit.alpha);
      return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -limit.alpha));
    case EvtKind::weibull:
      check_alpha(limit.alpha);
      return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, limit.alpha));
  }
  return 0.0;
}

EntryDistribution EntryDistribution::parse(const std::string& name) {
  if (name == "exponential") return exponential();
  if (name == "uniform01" || name == "uniform") return uniform01();
  if (name == "pareto") return pareto(2.0);
  if (name.rfind("pareto:", 0) == 0) {
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(name.substr(7), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != name.size() - 7) throw DomainError("evt: bad pareto index in '" + name + "'");
    check_alpha(a);
    return pareto(a);
  }
  throw DomainError("evt: unknown entry law '" + name + "' (exponential, uniform01, pareto:<alpha>)");
}

double EntryDistribution::cdf(double x) const {
  switch (kind) {
    case EntryKind::exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case EntryKind::uniform01:
      return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x);
    case EntryKind::pareto:
      check_alpha(alpha);
      return x <= 1.0 ? 0.0 : -std::expm1(-alpha * std::log(x));
  }
  return 0.0;
}

double EntryDistribution::sample(Rng& rng) const {
  // u in (0, 1]
  const double u = 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
  switch (kind) {
    case EntryKind::exponential:
      return -std::log(u);
    case EntryKind::uniform01:
      return 1.0 - u;
    case EntryKind::pareto:
      return std::pow(u, -1.0 / alpha);
  }
  return 0.0;
}

std::string EntryDistribution::name() const {
  switch (kind) {
    case EntryKind::exponential:
      return "exponential";
    case EntryKind::uniform01:
      return "uniform01";
    case EntryKind::pareto:
      return "pareto:" + format_alpha(alpha);
  }
  return "?";
}

EvtLimit EntryDistribution::limit() const {
  switch (kind) {
    case EntryKind::exponential:
      return EvtLimit::gumbel();
    case EntryKind::uniform01:
      return EvtLimit::weibull(1.0);
    case EntryKind::pareto:
      return EvtLimit::frechet(alpha);
  }
  return EvtLimit::gumbel();
}

EvtNormalization EvtNormalization::identity() {
  return {[](int) { return 0.0; }, [](int) { return 1.0; }};
}

EvtNormalization default_normalization(const EntryDistribution& entry) {
  switch (entry.kind) {
    case EntryKind::exponential:
      return {[](int n) { return std::log(static_cast<double>(n)); }, [](int) { return 1.0; }};
    case EntryKind::uniform01:
      return {[](int) { return 1.0; }, [](int n) { return 1.0 / n; }};
    case EntryKind::pareto: {
      const double a = entry.alpha;
      check_alpha(a);
      return {[](int) { return 0.0; },
              [a](int n) { return std::pow(static_cast<double>(n), 1.0 / a); }};
    }
  }
  return EvtNormalization::identity();
}

double finite_n_cdf(const EntryDistribution& entry, int n, const EvtNormalization& norm, double x) {
  const double f = entry.cdf(norm.a_n(n) + norm.b_n(n) * x);
  if (f <= 0.0) return 0.0;
  if (f >= 1.0) return 1.0;
  return std::exp(n * std::log1p(-(1.0 - f)));
}

stats::EmpiricalDistribution simulate_diagonal_max(const EntryDistribution& entry, int n,
                                                   std::size_t trials,
                                                   const EvtNormalization& norm,
                                                   std::uint64_t seed, unsigned threads) {
  if (n < 2) throw DomainError("simulate_diagonal_max: N must be >= 2");
  if (trials < 100) throw DomainError("simulate_diagonal_max: trials must be >= 100");
  const double a = norm.a_n(n);
  const double b = norm.b_n(n);
  if (!(b > 0.0)) throw DomainError("simulate_diagonal_max: b_N must be positive");
  std::vector<double> out(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng = stream_rng(seed, i);
    double m = -INFINITY;
    for (int k = 0; k < n; ++k) m = std::max(m, entry.sample(rng));
    out[i] = (m - a) / b;
  });
  return stats::EmpiricalDistribution(std::move(out));
}

}  // namespace rmt::evt
