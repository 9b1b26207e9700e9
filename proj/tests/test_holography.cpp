#include <catch2/catch_amalgamated.hpp>

#include "rcgen/holography.hpp"

using namespace rcgen;

TEST_CASE("segment average of a constant") {
  // l = 0: the plain average over [-1,1] integrates to 2
  const auto one = [](Complex) { return Complex{1.0, 0.0}; };
  const Complex v = psi(one, 0, Complex{0.4, 0.1}, Complex{-0.2, 0.3});
  CHECK(std::abs(v - Complex{2.0, 0.0}) < 1e-14);

  // l = 1: weight integral 4/3 times the difference prefactor
  const Complex z1{0.6, -0.1}, z2{-0.3, 0.2};
  const Complex v1 = psi(one, 1, z1, z2);
  CHECK(std::abs(v1 - (4.0 / 3.0) * (z1 - z2)) < 1e-14);
}

TEST_CASE("segment average of the identity map") {
  // l = 1, g(w) = w: (2/3)(zeta1^2 - zeta2^2), by symbolic integration
  const auto ident = [](Complex w) { return w; };
  const Complex z1{0.5, 0.3}, z2{-0.4, 0.1};
  const Complex got = psi(ident, 1, z1, z2);
  CHECK(std::abs(got - (2.0 / 3.0) * (z1 * z1 - z2 * z2)) < 1e-14);

  // the exact polynomial table agrees with the quadrature evaluator
  const Poly2 table = psi_polynomial_table({Complex{}, Complex{1.0, 0.0}}, 1);
  CHECK(std::abs(table.eval(z1, z2) - got) < 1e-14);
}

TEST_CASE("diagonal collapse for positive order") {
  const auto g = [](Complex w) { return w * w + 1.0; };
  const Complex z{0.2, 0.4};
  CHECK(std::abs(psi(g, 2, z, z)) < 1e-15);
}

TEST_CASE("segment endpoints must stay inside the domain") {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 1.0);
  const auto g = [](Complex) { return Complex{1.0, 0.0}; };
  CHECK_THROWS_AS(psi(g, 0, Complex{2.0, 0.0}, Complex{0.0, 0.0}, disk), domain_error);
}

TEST_CASE("inversion constants") {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  // l = 0, g = 1 -> 2;  l = 1 -> 8/3;  l = 3 -> 128/7
  CHECK(rel_diff(inversion_check({Complex{1.0, 0.0}}, 0, Complex{0.3, 0.1}, disk),
                 Complex{2.0, 0.0}) < 1e-12);
  CHECK(rel_diff(inversion_check({Complex{0.4, 0.0}, Complex{1.0, 0.0}}, 1, Complex{0.3, 0.1},
                                 disk),
                 Complex{8.0 / 3.0, 0.0}) < 1e-12);
  CHECK(rel_diff(inversion_check({Complex{1.0, 0.0}, Complex{}, Complex{0.5, 0.0}}, 3,
                                 Complex{0.2, -0.1}, disk),
                 Complex{128.0 / 7.0, 0.0}) < 1e-12);
  CHECK(inversion_constant(0) == Catch::Approx(2.0));
  CHECK(inversion_constant(1) == Catch::Approx(8.0 / 3.0));
  CHECK(inversion_constant(3) == Catch::Approx(128.0 / 7.0));
}

TEST_CASE("inversion rejects a zero of g") {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  // g(w) = w vanishes at the origin
  CHECK_THROWS_AS(inversion_check({Complex{}, Complex{1.0, 0.0}}, 1, Complex{}, disk),
                  domain_error);
}

TEST_CASE("image lies in the matching eigenspace") {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  const std::vector<Complex> samples{{0.1, 0.2}, {-0.2, 0.3}};
  // polynomial g(w) = w^3, l = 2
  CHECK(psi_eigen_check({Complex{}, Complex{}, Complex{}, Complex{1.0, 0.0}}, 2, samples, disk) <
        1e-9);
  // entire non-polynomial smoke test through the adaptive evaluator
  CHECK(psi_eigen_check([](Complex w) { return std::exp(kI * w); }, 1, samples, disk) < 1e-8);
}

TEST_CASE("swap parity matches the order") {
  Rng rng(3);
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  for (int ell = 0; ell <= 3; ++ell) {
    std::vector<Complex> g(4);
    for (auto& c : g) c = rng.complex_in_box(1.0);
    const Holo2 lifted = psi_holo2(g, ell, disk);
    const Complex z1 = rng.complex_in_box(0.8);
    const Complex z2 = rng.complex_in_box(0.8);
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    CHECK(rel_diff(lifted(z2, z1), sign * lifted(z1, z2), 1.0) < 1e-13);
  }
}

TEST_CASE("finite-rank bijectivity of the composite") {
  Rng rng(29);
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  for (int ell : {0, 2}) {
    for (int deg = 0; deg <= 4; ++deg) {
      std::vector<Complex> g(deg + 1);
      for (auto& c : g) c = rng.complex_in_box(1.0);
      g[deg] += Complex{1.0, 0.0};
      const Holo2 lifted = psi_holo2(g, ell, disk);
      const Complex z = rng.complex_in_box(0.6);
      const TSeries s = t_series(lifted, z, ell);
      Complex gz{};
      for (int k = deg; k >= 0; --k) gz = gz * z + g[k];
      CHECK(rel_diff(s.coeffs[ell], inversion_constant(ell) * gz, 1.0) < 1e-11);
    }
  }
}
