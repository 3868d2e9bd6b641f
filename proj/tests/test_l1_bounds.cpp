#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specenv/l1_bounds.hpp"
#include "specenv/windows.hpp"

using namespace specenv;

namespace {

GridFunction sample_real(const Grid& g, const std::function<double(double)>& f) {
  return sample(g, [&](double t) { return Complex(f(t), 0.0); });
}

}  // namespace

TEST_CASE("bound from the trapezoid symbol") {
  // |phi_a|_1^2 <= 2 |tau_a|_2 |tau_a'|_2, with the closed-form value
  // 2^{3/2} 3^{-1/4} at a = 1
  const Grid g = make_grid(400.0, 1 << 17);
  const PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(1.0);
  const FreqGridFunction fhat =
      sample_freq(g, [&](double xi) { return Complex(tau(xi), 0.0); });
  const L1Bound b = l1_bound(fhat);

  const double closed_form = std::pow(2.0, 1.5) * std::pow(3.0, -0.25);
  CHECK(b.bound == doctest::Approx(closed_form).epsilon(5e-3));
  CHECK(closed_form == doctest::Approx(2.1491).epsilon(1e-4));

  // the bound dominates the numeric L1 norm of phi_1
  double phi_l1 = 0.0;
  for (int k = 0; k < g.size(); ++k) {
    phi_l1 += std::abs(phi_time(1.0, g.node(k)));
  }
  phi_l1 *= g.spacing();
  CHECK(phi_l1 <= b.bound * (1.0 + 1e-6));
}

TEST_CASE("bound from the omega symbol is consistent with 1.35/a") {
  const Grid g = make_grid(400.0, 1 << 17);
  const PiecewiseSymbol omg = PiecewiseSymbol::omega(1.0);
  const FreqGridFunction fhat =
      sample_freq(g, [&](double xi) { return Complex(omg(xi), 0.0); });
  const L1Bound b = l1_bound(fhat);
  // bound^2 = 2 sqrt(4-4ln2) sqrt(2/3) at a = 1
  const double closed_form =
      std::sqrt(2.0 * std::sqrt(4.0 - 4.0 * std::log(2.0)) *
                std::sqrt(2.0 / 3.0));
  CHECK(b.bound == doctest::Approx(closed_form).epsilon(5e-3));
  CHECK(closed_form == doctest::Approx(1.3451).epsilon(1e-4));
  CHECK(b.bound <= 1.35 * 1.005);
}

TEST_CASE("gaussian chain") {
  const Grid g = make_grid(40.0, 4096);
  const GridFunction f =
      sample_real(g, [](double t) { return std::exp(-t * t / 2.0); });
  const L1Check chk = l1_bound_check(f);
  CHECK(chk.holds);
  CHECK(chk.l1 == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-6));
  CHECK(chk.l1 <= chk.bound);
  // quadrature oracle for the frequency norms of sqrt(2 pi) e^{-xi^2/2}
  CHECK(chk.detail.l2_hat ==
        doctest::Approx(std::sqrt(2.0 * M_PI * std::sqrt(M_PI))).epsilon(1e-4));
  // centered differences are second order: error ~ (freq spacing)^2
  CHECK(chk.detail.l2_hat_deriv ==
        doctest::Approx(std::sqrt(M_PI * std::sqrt(M_PI))).epsilon(5e-3));
}

TEST_CASE("estimate holds on the corpus") {
  SUBCASE("phi_1 on a long grid") {
    const Grid g = make_grid(10000.0, 1 << 17);
    const L1Check chk = l1_bound_check(
        sample_real(g, [](double t) { return phi_time(1.0, t); }));
    CHECK(chk.holds);
  }
  SUBCASE("gamma_1 on a long grid") {
    const Grid g = make_grid(10000.0, 1 << 17);
    const L1Check chk = l1_bound_check(
        sample_real(g, [](double t) { return gamma_time(1.0, t); }));
    CHECK(chk.holds);
  }
  SUBCASE("compactly supported bump") {
    const Grid g = make_grid(40.0, 4096);
    const L1Check chk = l1_bound_check(sample_real(g, [](double t) {
      const double u = t / 3.0;
      return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    }));
    CHECK(chk.holds);
  }
}

TEST_CASE("zero input is rejected") {
  const Grid g = make_grid(10.0, 64);
  CHECK_THROWS_AS(l1_bound_check(GridFunction(g, CVector::Zero(64))),
                  config_error);
  CHECK_THROWS_AS(l1_bound(FreqGridFunction(g, CVector::Zero(64))),
                  config_error);
}

TEST_CASE("insufficient edge decay is flagged") {
  const Grid g = make_grid(5.0, 128);
  // a gaussian this wide is ~1e-6 at the edges, well above the threshold
  CHECK_THROWS_AS(l1_bound_check(sample_real(
                      g, [](double t) { return std::exp(-t * t / 2.0); })),
                  numerical_error);
}

TEST_CASE("a_opt minimizes the split bound") {
  const Grid g = make_grid(40.0, 4096);
  const L1Bound b = l1_bound(dft_forward(
      sample_real(g, [](double t) { return std::exp(-t * t / 2.0); })));

  // golden-section search over a wide bracket
  double lo = b.a_opt / 64.0, hi = b.a_opt * 64.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 300 && hi - lo > 1e-10 * b.a_opt; ++it) {
    const double c = hi - gr * (hi - lo);
    const double d = lo + gr * (hi - lo);
    if (l1_split_bound(b, c) < l1_split_bound(b, d)) {
      hi = d;
    } else {
      lo = c;
    }
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(b.a_opt).epsilon(1e-6));
  // at the minimizer the split bound reproduces sqrt(2 |F| |F'|)
  CHECK(l1_split_bound(b, b.a_opt) == doctest::Approx(b.bound).epsilon(1e-12));
}
