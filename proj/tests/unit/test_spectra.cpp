#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rmt/ensembles.hpp"
#include "rmt/spectra.hpp"

namespace sp = rmt::spectra;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "rmt_spectra_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

sp::RawSpectrum raw_from(std::vector<double> v) {
  sp::RawSpectrum r;
  r.values = std::move(v);
  r.source = "memory";
  r.parsed = r.values.size();
  return r;
}

sp::RawSpectrum uniform_points(std::size_t n, std::uint64_t seed) {
  rmt::Rng rng = rmt::stream_rng(seed, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end());
  return raw_from(v);
}

sp::LoadOptions small(std::size_t min_count = 3) {
  sp::LoadOptions o;
  o.min_count = min_count;
  return o;
}

}  // namespace

TEST(Load, PlainWithCommentsAndDuplicates) {
  std::istringstream in("# header\n3.5\n\n1.0\n2.0\n2.0\n  # indented comment\n-4e-1\n");
  const auto r = sp::parse_spectrum(in, "inline", small());
  EXPECT_EQ(r.values, (std::vector<double>{-0.4, 1.0, 2.0, 3.5}));
  EXPECT_EQ(r.parsed, 5u);
  EXPECT_EQ(r.skipped, 3u);
  EXPECT_EQ(r.duplicates, 1u);
}

TEST(Load, CsvColumn) {
  sp::LoadOptions o = small();
  o.format = sp::Format::csv;
  o.csv_column = 1;
  std::istringstream in("# n,gamma\n1,14.134725\n2,21.022040\n3,25.010858\n");
  const auto r = sp::parse_spectrum(in, "zeros.csv", o);
  EXPECT_EQ(r.values.size(), 3u);
  EXPECT_DOUBLE_EQ(r.values[0], 14.134725);
  o.csv_column = 4;
  std::istringstream again("1,2\n3,4\n5,6\n");
  EXPECT_THROW(sp::parse_spectrum(again, "x", o), rmt::ParseError);
}

TEST(Load, Errors) {
  std::istringstream bad("1.0\n2.0\nabc\n");
  try {
    sp::parse_spectrum(bad, "bad", small());
    FAIL();
  } catch (const rmt::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream inf("1.0\ninf\n2\n");
  EXPECT_THROW(sp::parse_spectrum(inf, "inf", small()), rmt::ParseError);
  std::istringstream few("1\n2\n");
  EXPECT_THROW(sp::parse_spectrum(few, "few", small(3)), rmt::InsufficientDataError);
  EXPECT_THROW(sp::load_spectrum("/nonexistent/spectrum.txt"), rmt::IoError);
}

TEST(Load, FromFile) {
  std::string body;
  for (int i = 0; i < 150; ++i) body += std::to_string(0.5 * i) + "\n";
  const auto p = write_temp("ramp.txt", body);
  const auto r = sp::load_spectrum(p.string());
  EXPECT_EQ(r.values.size(), 150u);
  EXPECT_EQ(r.source, p.string());
}

TEST(Adjacency, SmallGraphs) {
  std::istringstream path3("1 2\n2 3\n");
  const auto p3 = sp::parse_adjacency(path3, "P3", 3);
  EXPECT_NEAR(p3.values[0], -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3.values[1], 0.0, 1e-12);
  EXPECT_NEAR(p3.values[2], std::sqrt(2.0), 1e-12);

  std::istringstream k4("1,2\n1,3\n1,4\n2,3\n2,4\n3,4\n");
  const auto r = sp::parse_adjacency(k4, "K4", 4);
  ASSERT_EQ(r.values.size(), 4u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.values[i], -1.0, 1e-12);
  EXPECT_NEAR(r.values[3], 3.0, 1e-12);

  const auto c6 = write_temp("c6.txt", "# cycle\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  const auto c = sp::adjacency_spectrum(c6.string(), 6);
  const std::vector<double> expect{-2, -1, -1, 1, 1, 2};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(c.values[i], expect[i], 1e-12);
}

TEST(Adjacency, Errors) {
  std::istringstream out_of_range("1 2\n2 9\n");
  EXPECT_THROW(sp::parse_adjacency(out_of_range, "g", 3), rmt::ParseError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(sp::parse_adjacency(loop, "g", 3), rmt::ParseError);
  std::istringstream garbage("1 x\n");
  EXPECT_THROW(sp::parse_adjacency(garbage, "g", 3), rmt::ParseError);
  std::istringstream ok("1 2\n");
  EXPECT_THROW(sp::parse_adjacency(ok, "g", 4001), rmt::CapabilityError);
}

TEST(Unfold, MethodParsing) {
  EXPECT_EQ(sp::parse_unfold_method("local_mean:31").window, 31);
  EXPECT_EQ(sp::parse_unfold_method("polynomial:7").degree, 7);
  EXPECT_EQ(sp::parse_unfold_method("given_density:semicircle").density, "semicircle");
  EXPECT_EQ(sp::parse_unfold_method("polynomial").method, sp::UnfoldMethod::polynomial);
  EXPECT_THROW(sp::parse_unfold_method("spline:3"), rmt::DomainError);
  EXPECT_THROW(sp::parse_unfold_method("polynomial:x"), rmt::DomainError);
}

TEST(Unfold, ArithmeticProgressionIsFixed) {
  std::vector<double> v;
  for (int i = 0; i < 200; ++i) v.push_back(3.0 + 0.25 * i);
  for (const char* m : {"polynomial:9", "local_mean:21"}) {
    const auto u = sp::unfold(raw_from(v), sp::parse_unfold_method(m));
    ASSERT_EQ(u.values.size(), 200u) << m;
    for (std::size_t i = 0; i < 200; ++i) EXPECT_NEAR(u.values[i], static_cast<double>(i), 1e-8) << m;
    EXPECT_NEAR(u.mean_spacing(), 1.0, 1e-12);
  }
}

TEST(Unfold, AffineEquivariance) {
  const auto raw = uniform_points(2000, 3);
  std::vector<double> moved;
  for (double x : raw.values) moved.push_back(7.0 * x - 2.0);
  for (const char* m : {"polynomial:9", "local_mean:21"}) {
    const auto a = sp::unfold(raw, sp::parse_unfold_method(m));
    const auto b = sp::unfold(raw_from(moved), sp::parse_unfold_method(m));
    ASSERT_EQ(a.values.size(), b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-7) << m;
  }
}

TEST(Unfold, Validation) {
  const auto raw = uniform_points(500, 4);
  auto o = sp::parse_unfold_method("local_mean:4");
  EXPECT_THROW(sp::unfold(raw, o), rmt::DomainError);
  o = sp::parse_unfold_method("polynomial:20");
  EXPECT_THROW(sp::unfold(raw, o), rmt::DomainError);
  o = sp::parse_unfold_method("polynomial:9");
  o.trim = 0.45;
  EXPECT_THROW(sp::unfold(raw, o), rmt::DomainError);
  EXPECT_THROW(sp::unfold(raw_from({1, 2, 3}), sp::parse_unfold_method("polynomial:9")),
               rmt::InsufficientDataError);
}

TEST(Unfold, ZetaSmoothCount) {
  // N(T) = 10 for T just above the tenth zero (49.7738...); the smooth part is close to it.
  EXPECT_NEAR(sp::zeta_smooth_count(50.0), 10.0, 1.0);
  EXPECT_THROW(sp::zeta_smooth_count(0.0), rmt::DomainError);
}

TEST(Reference, Shapes) {
  for (auto r : {sp::Reference::gaudin, sp::Reference::goe_surmise, sp::Reference::poisson}) {
    EXPECT_EQ(sp::parse_reference(sp::to_string(r)), r);
    EXPECT_NEAR(sp::reference_cdf(r, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(sp::reference_cdf(r, 30.0), 1.0, 1e-12);
  }
  EXPECT_TRUE(sp::is_approximate(sp::Reference::goe_surmise));
  EXPECT_FALSE(sp::is_approximate(sp::Reference::gaudin));
  EXPECT_NEAR(sp::reference_pdf(sp::Reference::poisson, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_THROW(sp::parse_reference("wigner"), rmt::DomainError);
}

TEST(SpacingReport, PoissonPointsMatchPoisson) {
  const auto u = sp::unfold(uniform_points(10001, 5), sp::parse_unfold_method("polynomial:9"));
  const auto poisson = sp::spacing_report(u, sp::Reference::poisson);
  const auto gaudin = sp::spacing_report(u, sp::Reference::gaudin);
  EXPECT_LT(poisson.ks, 0.015);
  EXPECT_GT(gaudin.ks, 5 * poisson.ks);
  EXPECT_EQ(poisson.n, 10000u);
}

TEST(SpacingReport, GueSpectrumMatchesGaudin) {
  rmt::ensembles::EnsembleSpec spec;
  spec.n = 1000;
  const auto s = rmt::ensembles::sample_spectrum(spec, rmt::kDefaultSeed, 0);
  const auto u = sp::unfold(raw_from(s.values), sp::parse_unfold_method("polynomial:9"));
  EXPECT_LT(sp::spacing_report(u, sp::Reference::gaudin).ks, 0.035);
  EXPECT_GT(sp::spacing_report(u, sp::Reference::poisson).ks, 0.2);
}

TEST(SpacingReport, JsonAndCsvShape) {
  const auto u = sp::unfold(uniform_points(1000, 6), sp::parse_unfold_method("local_mean:21"));
  const auto r = sp::spacing_report(u, sp::Reference::goe_surmise);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["reference"], "goe_surmise");
  EXPECT_EQ(j["approximate"], true);
  EXPECT_EQ(j["method"], "local_mean:21");
  EXPECT_EQ(j["histogram"].size(), 50u);
  EXPECT_TRUE(j["moments"].contains("kurtosis_excess"));
  std::istringstream csv(r.to_csv());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "bin_lo,bin_hi,density,reference_density");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 50u);
}
