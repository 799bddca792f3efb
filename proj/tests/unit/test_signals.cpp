#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "cspec/error.hpp"
#include "cspec/signals.hpp"

using namespace cspec;

namespace {

// In-place iterative radix-2 FFT; length must be a power of two.
void fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

double periodogram_slope(const std::vector<double>& x) {
  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft(a);
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t k = 1; k < a.size() / 2; ++k) {
    lx.push_back(std::log10(static_cast<double>(k)));
    ly.push_back(std::log10(std::norm(a[k])));
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected cspec::Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("gen_repeating") {
  const std::vector<double> ramp{1, 2, 3, 4, 5, 6, 7, 8};
  const auto x = gen_repeating(ramp, 2000);
  REQUIRE(x.size() == 2000);
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(x[k] == ramp[k % 8]);
  CHECK(std::count(x.begin(), x.end(), 8.0) == 250);

  const std::vector<double> seven{7};
  CHECK(gen_repeating(seven, 3) == std::vector<double>{7, 7, 7});
  const std::vector<double> one_two{1, 2};
  CHECK(gen_repeating(one_two, 5) == std::vector<double>{1, 2, 1, 2, 1});

  const std::vector<double> empty;
  CHECK(kind_of([&] { gen_repeating(empty, 5); }) == ErrorKind::InvalidInput);
}

TEST_CASE("gen_sinusoid has a 20-sample period at 50 Hz / 1 kHz") {
  const auto x = gen_sinusoid(50.0, 1000.0, 2000);
  for (std::size_t k = 0; k + 20 < x.size(); ++k) CHECK(x[k] == x[k + 20]);
  CHECK(x[5] == doctest::Approx(1.0));
  CHECK(*std::max_element(x.begin(), x.end()) <= 1.0);
}

TEST_CASE("gen_sinusoid exact periodicity for other integer periods") {
  for (double w : {1.0, 25.0, 125.0, 200.0}) {
    const auto period = static_cast<std::size_t>(1000.0 / w);
    const auto x = gen_sinusoid(w, 1000.0, 4000, 2.5);
    for (std::size_t k = 0; k + period < x.size(); ++k) CHECK(x[k] == x[k + period]);
  }
}

TEST_CASE("gen_sinusoid special cases") {
  const auto zero = gen_sinusoid(0.0, 1000.0, 16);
  CHECK(std::all_of(zero.begin(), zero.end(), [](double v) { return v == 0.0; }));

  const auto quarter = gen_sinusoid(250.0, 1000.0, 4, 3.0);
  CHECK(quarter[0] == doctest::Approx(0.0));
  CHECK(quarter[1] == doctest::Approx(3.0));
  CHECK(std::abs(quarter[2]) < 1e-12);
  CHECK(quarter[3] == doctest::Approx(-3.0));

  CHECK(kind_of([] { gen_sinusoid(50.0, 0.0, 10); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { gen_sinusoid(50.0, -1.0, 10); }) == ErrorKind::InvalidInput);
}

TEST_CASE("gen_logistic: x0 = 0.5 at a = 4 collapses onto 0") {
  const auto x = gen_logistic(4.0, 0.5, 5, 0);
  CHECK(x == std::vector<double>{0.5, 1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("gen_logistic converges to the fixed point at a = 2") {
  for (double x0 : {0.1, 0.3, 0.9}) {
    const auto x = gen_logistic(2.0, x0, 10, 1000);
    for (double v : x) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("gen_logistic period-2 orbit at a = 3.2") {
  // (a + 1 -/+ sqrt((a - 3)(a + 1))) / (2a), cross-checked by iterating 1e5 times.
  const double lo = 0.5130445095326299;
  const double hi = 0.7994554904673701;
  const auto x = gen_logistic(3.2, 0.1, 100, 1000);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double want = x[0] < 0.6 ? (k % 2 == 0 ? lo : hi) : (k % 2 == 0 ? hi : lo);
    CHECK(x[k] == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("gen_logistic stays in [0, 1]") {
  for (double a = 0.0; a <= 4.0; a += 0.05) {
    const auto x = gen_logistic(std::min(a, 4.0), 0.37, 500, 100);
    for (double v : x) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("gen_logistic rejects invalid parameters") {
  CHECK(kind_of([] { gen_logistic(4.0, 0.0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { gen_logistic(4.0, 1.0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { gen_logistic(4.5, 0.2); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { gen_logistic(-0.1, 0.2); }) == ErrorKind::InvalidInput);
}

TEST_CASE("gen_uniform") {
  const auto a = gen_uniform(2000, 42);
  CHECK(a == gen_uniform(2000, 42));
  CHECK(a != gen_uniform(2000, 43));
  CHECK(std::all_of(a.begin(), a.end(), [](double v) { return v >= 0.0 && v < 1.0; }));
  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / a.size();
  CHECK(std::abs(mean - 0.5) <= 0.03);
  CHECK(kind_of([] { gen_uniform(0, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("gen_pink has a -1 periodogram slope") {
  const auto x = gen_pink(1 << 16, 3);
  CHECK(periodogram_slope(x) == doctest::Approx(-1.0).epsilon(0.1));
  const auto white = gen_uniform(1 << 16, 3);
  CHECK(std::abs(periodogram_slope(white)) < 0.1);
}

TEST_CASE("gen_pink is normalized and reproducible") {
  for (std::size_t n : {2UL, 3UL, 1000UL, 4097UL}) {
    const auto x = gen_pink(n, 9);
    REQUIRE(x.size() == n);
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= n;
    CHECK(std::abs(mean) < 1e-9);
    CHECK(std::abs(var - 1.0) < 1e-9);
    CHECK(x == gen_pink(n, 9));
  }
  CHECK(gen_pink(1000, 1) != gen_pink(1000, 2));
  CHECK(kind_of([] { gen_pink(1, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("lyapunov_logistic reference values") {
  CHECK(std::abs(lyapunov_logistic(4.0, 0.1, 100000) - std::numbers::ln2) < 0.01);
  CHECK(std::abs(lyapunov_logistic(2.9, 0.1, 100000) - std::log(0.9)) < 0.01);
  CHECK(lyapunov_logistic(3.2, 0.1, 100000) < 0.0);
  CHECK(lyapunov_logistic(3.7, 0.1, 100000) > 0.0);
}

TEST_CASE("lyapunov_logistic at a = 4 approaches ln 2 with more iterates") {
  const double coarse = std::abs(lyapunov_logistic(4.0, 0.2, 100) - std::numbers::ln2);
  const double fine = std::abs(lyapunov_logistic(4.0, 0.2, 1000000) - std::numbers::ln2);
  CHECK(fine < 0.005);
  CHECK(fine < coarse);
}

TEST_CASE("lyapunov_logistic skips zero-derivative iterates") {
  // a = 2 from x0 = 0.5 sits on x = 0.5 forever, so every term is skipped.
  CHECK(std::isinf(lyapunov_logistic(2.0, 0.5, 10, 0)));
  CHECK(kind_of([] { lyapunov_logistic(4.0, 0.0, 10); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { lyapunov_logistic(4.0, 0.3, 0); }) == ErrorKind::InvalidInput);
}
