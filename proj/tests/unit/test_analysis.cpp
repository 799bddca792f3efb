#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cspec/analysis.hpp"
#include "cspec/engine.hpp"
#include "cspec/error.hpp"

using namespace cspec;

namespace {

CompressionSpectrum from_cr(std::initializer_list<std::pair<Scale, double>> points, std::size_t origin = 100) {
  CompressionSpectrum s(origin);
  for (const auto& [scale, cr] : points) s.insert(scale, SpectrumPoint{cr, std::log2(cr)});
  return s;
}

}  // namespace

TEST_CASE("bandwidth counts compressing scales") {
  const auto worked = run_spectrum(make_symbolic(std::vector<SymbolId>{1, 1, 2, 1, 1, 2, 2, 1, 1, 2}));
  CHECK(bandwidth(worked.spectrum) == 2);
  CHECK(bandwidth(CompressionSpectrum(10)) == 0);
}

TEST_CASE("spectrum storage rejects non-compressing points") {
  CompressionSpectrum s(10);
  CHECK_THROWS_AS(s.insert(2, SpectrumPoint{1.0, 0.0}), Error);
  CHECK_THROWS_AS(s.insert(2, SpectrumPoint{0.5, -1.0}), Error);
  CHECK_THROWS_AS(s.insert(1, SpectrumPoint{2.0, 1.0}), Error);
  CHECK_THROWS_AS(s.insert(11, SpectrumPoint{2.0, 1.0}), Error);
  s.insert(10, SpectrumPoint{2.0, 1.0});
  CHECK(bandwidth(s) == s.size());
}

TEST_CASE("loglog_fit on an exact power law") {
  const auto fit = loglog_fit(from_cr({{2, 8.0}, {4, 4.0}, {8, 2.0}}));
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(fit.intercept == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fit.n_points == 3);
}

TEST_CASE("loglog_fit through two points is the connecting line") {
  const auto fit = loglog_fit(from_cr({{2, 10.0 / 7.0}, {3, 7.0 / 4.0}}));
  const double slope = (std::log2(7.0 / 4.0) - std::log2(10.0 / 7.0)) / (std::log2(3.0) - 1.0);
  CHECK(fit.slope == doctest::Approx(slope).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log2(10.0 / 7.0) - slope).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("loglog_fit needs two points") {
  try {
    loglog_fit(from_cr({{2, 3.0}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
  CHECK_THROWS_AS(loglog_fit(CompressionSpectrum(5)), Error);
}

TEST_CASE("loglog_fit: rescaling CR shifts only the intercept") {
  const auto base = from_cr({{2, 1.9}, {3, 1.3}, {5, 1.25}, {9, 1.05}, {17, 1.01}});
  const auto fit = loglog_fit(base);
  CHECK(fit.r_squared < 1.0);
  CHECK(fit.r_squared > 0.0);
  for (double c : {1.5, 3.0, 10.0}) {
    CompressionSpectrum scaled(100);
    for (const auto& [s, p] : base.points()) scaled.insert(s, SpectrumPoint{p.cr * c, p.log2_cr + std::log2(c)});
    const auto f = loglog_fit(scaled);
    CHECK(f.slope == doctest::Approx(fit.slope).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(fit.intercept + std::log2(c)).epsilon(1e-12));
  }
}

TEST_CASE("loglog_fit with flat points") {
  const auto fit = loglog_fit(from_cr({{2, 2.0}, {4, 2.0}, {16, 2.0}}));
  CHECK(fit.slope == doctest::Approx(0.0));
  CHECK(fit.r_squared == 1.0);
}

TEST_CASE("sweep grid arithmetic") {
  const auto g = sweep_grid(2.9, 4.0, 0.01);
  CHECK(g.size() == 111);
  CHECK(g.front() == 2.9);
  CHECK(g.back() == 4.0);
  CHECK(g[50] == doctest::Approx(3.4));
  CHECK_THROWS_AS(sweep_grid(3.0, 3.0, 0.1), Error);
  CHECK_THROWS_AS(sweep_grid(3.0, 4.0, 0.0), Error);
}

TEST_CASE("bifurcation_sweep rows are ordered and thread-count independent") {
  SweepParams p;
  p.a_min = 3.5;
  p.a_max = 4.0;
  p.step = 0.05;
  p.lyapunov_n = 20000;
  p.threads = 1;
  const auto serial = bifurcation_sweep(p);
  p.threads = 4;
  const auto parallel = bifurcation_sweep(p);
  REQUIRE(serial.size() == 11);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].a == parallel[i].a);
    CHECK(serial[i].lyapunov == parallel[i].lyapunov);
    CHECK(serial[i].bandwidth == parallel[i].bandwidth);
    CHECK(serial[i].bandwidth <= p.length - 1);
    if (i > 0) CHECK(serial[i].a > serial[i - 1].a);
  }
  CHECK(std::abs(serial.back().lyapunov - std::numbers::ln2) < 0.01);
}

TEST_CASE("bifurcation_sweep propagates errors") {
  SweepParams p;
  p.a_min = 3.9;
  p.a_max = 4.2;  // outside the map's valid range
  p.step = 0.1;
  CHECK_THROWS_AS(bifurcation_sweep(p), Error);
}
