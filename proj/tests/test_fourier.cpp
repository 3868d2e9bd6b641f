#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specenv/csv_io.hpp"
#include "specenv/fourier.hpp"
#include "specenv/windows.hpp"

using namespace specenv;

namespace {

GridFunction random_function(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(g.size());
  for (int k = 0; k < g.size(); ++k) v[k] = Complex(gauss(rng), gauss(rng));
  return GridFunction(g, std::move(v));
}

}  // namespace

TEST_CASE("make_grid basics") {
  const Grid g = make_grid(1.0, 4);
  CHECK(g.node(0) == doctest::Approx(-1.0));
  CHECK(g.node(1) == doctest::Approx(-0.5));
  CHECK(g.node(2) == doctest::Approx(0.0));
  CHECK(g.node(3) == doctest::Approx(0.5));
  CHECK(g.node(g.size() / 2) == 0.0);

  CHECK(make_grid(10.0, 1024).spacing() == doctest::Approx(0.01953125));

  CHECK_THROWS_AS(make_grid(1.0, 5), config_error);
  CHECK_THROWS_AS(make_grid(-1.0, 8), config_error);
  CHECK_THROWS_AS(make_grid(1.0, 2), config_error);
}

TEST_CASE("reflection closure of the node set") {
  const Grid g = make_grid(3.0, 12);
  for (int k = 1; k < g.size(); ++k) {
    CHECK(g.node(g.size() - k) == doctest::Approx(-g.node(k)).epsilon(1e-15));
  }
}

TEST_CASE("indicator transform matches the closed form") {
  const Grid g = make_grid(8.0, 512);
  const GridFunction f = sample_indicator(g, -1.0, 1.0);
  const FreqGridFunction F = dft_forward(f);
  // the sinc tail aliases about 2/nyquist at the band edge, so the
  // comparison is meaningful on the resolved half-band only
  double worst = 0.0;
  for (int p = 0; p < g.size(); ++p) {
    const double xi = g.freq_node(p);
    if (std::abs(xi) > g.nyquist() / 2.0) continue;
    const double target = (std::abs(xi) < 1e-12) ? 2.0 : 2.0 * std::sin(xi) / xi;
    worst = std::max(worst, std::abs(F.values[p] - Complex(target, 0.0)));
  }
  CHECK(worst < 1e-2);
}

TEST_CASE("transform of zero is zero") {
  const Grid g = make_grid(5.0, 64);
  const GridFunction zero(g, CVector::Zero(64));
  CHECK(norm_inf(dft_forward(zero)) == 0.0);
  CHECK(norm_inf(dft_inverse(FreqGridFunction(g, CVector::Zero(64)))) == 0.0);
}

TEST_CASE("gaussian transform at zero frequency") {
  const Grid g = make_grid(12.0, 1024);
  const GridFunction f =
      sample(g, [](double t) { return Complex(std::exp(-t * t / 2.0), 0.0); });
  const FreqGridFunction F = dft_forward(f);
  const double sqrt_2pi = 2.506628274631000502;
  CHECK(std::abs(F.values[g.size() / 2] - Complex(sqrt_2pi, 0.0)) < 1e-6);
}

TEST_CASE("round trip is the identity") {
  const Grid g = make_grid(7.0, 256);
  const GridFunction f = random_function(g, 42);
  const GridFunction back = dft_inverse(dft_forward(f));
  CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transforms are linear") {
  const Grid g = make_grid(4.0, 128);
  const GridFunction f = random_function(g, 1);
  const GridFunction h = random_function(g, 2);
  const Complex alpha(0.7, -1.3);
  GridFunction combo(g, alpha * f.values + h.values);
  const CVector lhs = dft_forward(combo).values;
  const CVector rhs = alpha * dft_forward(f).values + dft_forward(h).values;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inverse transform of the trapezoid matches phi") {
  const Grid g = make_grid(200.0, 1 << 14);
  const PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(1.0);
  const FreqGridFunction F =
      sample_freq(g, [&](double xi) { return Complex(tau(xi), 0.0); });
  const GridFunction f = dft_inverse(F);
  double worst = 0.0;
  for (int k = 0; k < g.size(); ++k) {
    worst = std::max(worst,
                     std::abs(f.values[k] - Complex(phi_time(1.0, g.node(k)))));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("parseval identity") {
  const Grid g = make_grid(40.0, 4096);
  const GridFunction f =
      sample(g, [](double t) { return Complex(std::exp(-t * t / 2.0), 0.0); });
  const double lhs = norm_l2(dft_forward(f));
  const double rhs = std::sqrt(2.0 * M_PI) * norm_l2(f);
  CHECK(std::abs(lhs - rhs) / rhs < 1e-6);
}

TEST_CASE("quadrature norms") {
  SUBCASE("indicator L2 norm") {
    const Grid g = make_grid(8.0, 512);
    CHECK(norm_l2(sample_indicator(g, -1.0, 1.0)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-2));
  }
  SUBCASE("trapezoid symbol norm on an aligned fine grid") {
    const Grid g = make_grid(4.0, 4096);
    const PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(1.0);
    const GridFunction s =
        sample(g, [&](double t) { return Complex(tau(t), 0.0); });
    CHECK(norm_l2(s) ==
          doctest::Approx(2.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-4));
  }
  SUBCASE("gamma L1 norm is the triangle peak") {
    const Grid g = make_grid(80.0, 8192);
    const GridFunction f =
        sample(g, [](double t) { return Complex(gamma_time(1.0, t), 0.0); });
    CHECK(norm_l1(f) == doctest::Approx(1.0).epsilon(1e-2));
  }
  SUBCASE("phi L1 norm stays under sqrt(3)") {
    const Grid g = make_grid(60.0, 8192);
    const GridFunction f =
        sample(g, [](double t) { return Complex(phi_time(1.0, t), 0.0); });
    CHECK(norm_l1(f) <= std::sqrt(3.0));
  }
  SUBCASE("psi sup norm bound") {
    const Grid g = make_grid(60.0, 8192);
    const GridFunction f = sample(g, [](double t) { return psi_time(1.0, t); });
    CHECK(norm_inf(f) <= 1.0 / M_PI + 1.0);
  }
}

TEST_CASE("grid function CSV round trip") {
  const Grid g = make_grid(2.0, 16);
  const GridFunction f = random_function(g, 7);
  const std::string path = "fourier_roundtrip.csv";
  write_csv(f, path);
  const GridFunction back = read_grid_function(path);
  CHECK(back.grid.half_width == doctest::Approx(2.0));
  CHECK(back.grid.size() == 16);
  CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-12);
  std::remove(path.c_str());
}
