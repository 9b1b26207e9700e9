#include <catch2/catch_amalgamated.hpp>

#include "rcgen/genop.hpp"
#include "rcgen/pde.hpp"

using namespace rcgen;

namespace {

// fixed polynomial used for the frozen-coefficient tests:
//   1 + 2 z1 - z2 + 3 z1 z2 + z1^2 z2 - 2 z1^3 + z2^3 + z1^2 z2^2
Poly2 fixed_poly() {
  Poly2 p(3, 3);
  p.at(0, 0) = 1.0;
  p.at(1, 0) = 2.0;
  p.at(0, 1) = -1.0;
  p.at(1, 1) = 3.0;
  p.at(2, 1) = 1.0;
  p.at(3, 0) = -2.0;
  p.at(0, 3) = 1.0;
  p.at(2, 2) = 1.0;
  return p;
}

const Complex kZ0{0.25, 1.0 / 3.0};

}  // namespace

TEST_CASE("diagonal restriction at t = 0") {
  const Holo2 one = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::constant({1.0, 0.0}));
  CHECK(std::abs(t_eval_at_zero(one, Complex{0.3, 0.1}) - Complex{1.0, 0.0}) < 1e-15);

  const Holo2 cross = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::monomial(1, 1));
  CHECK(std::abs(t_eval_at_zero(cross, Complex{3.0, 0.0}) - Complex{9.0, 0.0}) < 1e-15);

  for (int ell = 1; ell <= 3; ++ell) {
    CHECK(std::abs(t_eval_at_zero(eigen_family(ell), Complex{0.2, 1.5})) < 1e-15);
  }
  CHECK_THROWS_AS(t_eval_at_zero(eigen_family(1), Complex{0.0, -1.0}), domain_error);
}

TEST_CASE("transform of a constant is the constant") {
  const Holo2 one = Holo2::from_polynomial(DomainDesc::disk({0.0, 0.0}, 2.0),
                                           Poly2::constant({1.0, 0.0}));
  for (const Complex t : {Complex{0.0, 0.0}, Complex{0.1, 0.05}, Complex{-0.2, 0.0}}) {
    const QuadResult r = t_eval_quadrature(one, Complex{0.3, 0.2}, t);
    CHECK(std::abs(r.value - Complex{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("transform of the cross monomial is -2 t^2 at the origin") {
  const Holo2 cross = Holo2::from_polynomial(DomainDesc::disk({0.0, 0.0}, 2.0),
                                             Poly2::monomial(1, 1));
  for (const Complex t : {Complex{0.1, 0.0}, Complex{0.05, 0.08}}) {
    const QuadResult r = t_eval_quadrature(cross, Complex{}, t);
    CHECK(std::abs(r.value - (-2.0 * t * t)) < 1e-12);
  }
  // series route: coefficients (0, 0, -2, 0)
  const TSeries s = t_series(cross, Complex{}, 3);
  CHECK(std::abs(s.coeffs[0]) < 1e-14);
  CHECK(std::abs(s.coeffs[1]) < 1e-14);
  CHECK(std::abs(s.coeffs[2] - Complex{-2.0, 0.0}) < 1e-14);
  CHECK(std::abs(s.coeffs[3]) < 1e-14);
}

TEST_CASE("closed form for the model family") {
  for (int ell = 0; ell <= 4; ++ell) {
    const Holo2 f = eigen_family(ell);
    const Complex z{0.0, 2.0};
    const Complex t{0.1, 0.0};
    const QuadResult r = t_eval_quadrature(f, z, t, 1e-10);
    CHECK(rel_diff(r.value, eigen_family_transform(ell, z, t)) < 1e-9);
  }
}

TEST_CASE("series of a constant is (c, 0, 0, ...)") {
  const Holo2 one = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::constant({1.0, 0.0}));
  const TSeries s = t_series(one, Complex{0.7, -0.2}, 4);
  CHECK(std::abs(s.coeffs[0] - Complex{1.0, 0.0}) < 1e-15);
  for (int l = 1; l <= 4; ++l) CHECK(std::abs(s.coeffs[l]) < 1e-15);
}

TEST_CASE("frozen t-series coefficients of the fixed polynomial") {
  // values computed by an independent symbolic-differentiation oracle
  const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), fixed_poly());
  const TSeries s = t_series(f, kZ0, 4);
  CHECK(std::abs(s.coeffs[0] - Complex{1.0787519290123457, 0.8171296296296297}) < 1e-13);
  CHECK(std::abs(s.coeffs[1] - Complex{3.388888888888889, -1.3333333333333333}) < 1e-13);
  CHECK(std::abs(s.coeffs[2] - Complex{-7.208333333333333, -3.0}) < 1e-13);
  CHECK(std::abs(s.coeffs[3] - Complex{-6.0, 0.0}) < 1e-13);
  CHECK(std::abs(s.coeffs[4] - Complex{6.0, 0.0}) < 1e-13);
}

TEST_CASE("kernel-expanded quadrature agrees with the jet route") {
  const Holo2 f = Holo2::from_polynomial(DomainDesc::disk({0.0, 0.0}, 2.0), fixed_poly());
  const TSeries s = t_series(f, kZ0, 6);
  const double scale = std::max(s.max_coeff(), 1e-6);
  for (int ell = 0; ell <= 6; ++ell) {
    const Complex quad = t_coeff_quadrature(f, ell, kZ0);
    CHECK(std::abs(quad - s.coeffs[ell]) / scale < 1e-11);
  }
  // model family: coefficient l is the central binomial times (z+i)^{-2l-2}
  for (int ell = 1; ell <= 3; ++ell) {
    const Complex z{0.0, 2.0};
    const Complex quad = t_coeff_quadrature(eigen_family(ell), ell, z);
    const Complex expected = eigen_family_transform(ell, z, Complex{1.0, 0.0});
    CHECK(rel_diff(quad, expected) < 1e-10);
  }
}

TEST_CASE("admissibility gate on the transform") {
  const Holo2 f = Holo2::from_polynomial(DomainDesc::upper_half_plane(), fixed_poly());
  const Complex z{0.0, 1.0};
  CHECK_THROWS_AS(t_eval_quadrature(f, z, Complex{0.6, 0.0}), domain_error);  // 2|t| > d
  CHECK_THROWS_AS(t_eval_quadrature(f, Complex{0.0, -1.0}, Complex{}), domain_error);
}

TEST_CASE("series/quadrature agreement at half the admissible bound") {
  Rng rng(11);
  Poly2 p(6, 6);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) p.at(a, b) = rng.complex_in_box(1.0);
  const Holo2 f = Holo2::from_polynomial(DomainDesc::disk({0.0, 0.0}, 2.0), p);
  const Complex z{0.2, -0.3};
  const double dist = boundary_distance(f.domain(), z);
  const Complex t{0.25 * dist, 0.0};
  const Complex full = t_eval_quadrature(f, z, t).value;
  const TSeries s = t_series(f, z, 12);
  CHECK(rel_diff(full, s.eval(t), 1.0) < 1e-8);
}

TEST_CASE("rank certificate") {
  const RankCertificate c0 = injectivity_certificate(0);
  CHECK(c0.rank == 1);
  CHECK(c0.full);

  const RankCertificate c1 = injectivity_certificate(1);
  CHECK(c1.rank == 3);
  CHECK(c1.full);

  const RankCertificate c5 = injectivity_certificate(5);
  CHECK(c5.rank == 21);
  CHECK(c5.full);
  CHECK(c5.smin > 1e-8);

  CHECK_THROWS_AS(injectivity_certificate(9), usage_error);
}

TEST_CASE("images of the degree-one monomials") {
  // zeta1 maps to z + t, zeta2 maps to z - t
  const Holo2 m1 = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::monomial(1, 0));
  const Holo2 m2 = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::monomial(0, 1));
  const Complex z{0.4, 0.1};
  const TSeries s1 = t_series(m1, z, 2);
  const TSeries s2 = t_series(m2, z, 2);
  CHECK(std::abs(s1.coeffs[0] - z) < 1e-14);
  CHECK(std::abs(s1.coeffs[1] - Complex{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(s2.coeffs[0] - z) < 1e-14);
  CHECK(std::abs(s2.coeffs[1] - Complex{-1.0, 0.0}) < 1e-14);
  CHECK(std::abs(s1.coeffs[2]) < 1e-14);
}

TEST_CASE("accuracy error carries the best value") {
  // a pole just beyond the default contour stalls the trapezoid rule well
  // above any reasonable tolerance within a 128-node budget
  const Holo2 wild = Holo2::from_callback(DomainDesc::disk({0.0, 0.0}, 2.0),
                                          [](Complex a, Complex b) {
                                            return 1.0 / (a - 0.401) + 0.0 * b;
                                          });
  bool threw = false;
  try {
    t_eval_quadrature(wild, Complex{}, Complex{0.05, 0.0}, 1e-13, 128);
  } catch (const accuracy_error& e) {
    threw = true;
    CHECK(std::isfinite(e.err_estimate));
    CHECK(e.err_estimate > 1e-13);
  }
  CHECK(threw);
}
