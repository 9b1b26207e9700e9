#include <catch2/catch_amalgamated.hpp>

#include "rcgen/legendre.hpp"

using namespace rcgen;

TEST_CASE("normalisation at the right endpoint is exact") {
  for (int ell = 0; ell <= 64; ++ell) CHECK(legendre(ell, 1.0) == 1.0);
}

TEST_CASE("low-degree values") {
  CHECK(legendre(1, 0.37) == Catch::Approx(0.37));
  CHECK(legendre(2, 0.5) == Catch::Approx(-0.125));
  // P_5(3/10) = 276309/800000, frozen from the explicit polynomial
  CHECK(legendre(5, 0.3) == Catch::Approx(0.34538625).epsilon(1e-14));
}

TEST_CASE("explicit sum agrees with the recurrence") {
  Rng rng(41);
  for (int ell = 0; ell <= 12; ++ell) {
    for (int rep = 0; rep < 16; ++rep) {
      const double v = rng.uniform(-1.0, 1.0);
      CHECK(std::abs(legendre(ell, v) - legendre_explicit_sum(ell, v)) < 1e-12);
    }
  }
}

TEST_CASE("coefficient table structure") {
  const LegendreTable table(12);
  for (int ell = 0; ell <= 12; ++ell) {
    CHECK(static_cast<int>(table.row(ell).size()) == ell + 1);
    CHECK(table.row(ell).back() != 0.0);  // degree is exactly l
    double at_one = 0.0;
    for (double c : table.row(ell)) at_one += c;
    CHECK(at_one == Catch::Approx(1.0).margin(1e-12));
  }
  // P_2 = (3v^2 - 1)/2
  CHECK(table.row(2)[0] == Catch::Approx(-0.5));
  CHECK(table.row(2)[1] == Catch::Approx(0.0).margin(1e-15));
  CHECK(table.row(2)[2] == Catch::Approx(1.5));
}

TEST_CASE("orthogonality norms") {
  CHECK(legendre_norm(0, 0) == Catch::Approx(2.0));
  CHECK(std::abs(legendre_norm(3, 5)) < 1e-14);
  CHECK(legendre_norm(4, 4) == Catch::Approx(2.0 / 9.0));
  for (int l = 0; l <= 12; ++l) {
    for (int lp = l; lp <= 12; ++lp) {
      const double expected = (l == lp) ? 2.0 / (2.0 * l + 1.0) : 0.0;
      CHECK(std::abs(legendre_norm(l, lp) - expected) < 1e-12);
    }
  }
}

TEST_CASE("second-order operator residual on the table rows") {
  std::vector<double> vs;
  for (int k = 0; k < 50; ++k) vs.push_back(-0.98 + 0.04 * k);
  CHECK(ptilde_check(0, vs) == 0.0);
  CHECK(ptilde_check(1, vs) == 0.0);  // -2v + 2v cancels identically
  for (int ell = 2; ell <= 12; ++ell) CHECK(ptilde_check(ell, vs) < 1e-10);
  CHECK(ptilde_check(7, vs) < 1e-10);
}

TEST_CASE("quadrature rules behind the norms") {
  // Gauss-Legendre: exact moments of low degree
  const QuadRule& gl = gauss_legendre(8);
  double m0 = 0.0, m2 = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    m0 += gl.w[i];
    m2 += gl.w[i] * gl.x[i] * gl.x[i];
  }
  CHECK(m0 == Catch::Approx(2.0));
  CHECK(m2 == Catch::Approx(2.0 / 3.0));

  // Gauss-Laguerre modified weights: int_0^inf x^k e^{-x} dx = k!
  for (int n : {16, 32, 64, 128}) {
    const QuadRule& gla = gauss_laguerre(n);
    for (int k = 0; k <= 8; ++k) {
      double acc = 0.0;
      for (int i = 0; i < gla.size(); ++i) {
        acc += gla.w[i] * std::pow(gla.x[i], k) * std::exp(-gla.x[i]);
      }
      CHECK(acc == Catch::Approx(factorial(k)).epsilon(1e-11));
    }
  }

  // rate-matched half-line integral of e^{-2s}; the modified weights carry
  // ~1e-13 relative rounding from the long scaled recurrence
  const Complex half = integrate_half_line(
      [](double s) { return Complex{std::exp(-2.0 * s), 0.0}; }, 2.0, 64);
  CHECK(half.real() == Catch::Approx(0.5).epsilon(1e-11));
}
