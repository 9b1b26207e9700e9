#include <catch2/catch_amalgamated.hpp>

#include "rcgen/brackets.hpp"
#include "rcgen/pde.hpp"

using namespace rcgen;

TEST_CASE("order zero reduces to the diagonal value") {
  const Poly2 p = Poly2::monomial(1, 1).scaled({2.0, 0.0}) + Poly2::constant({0.5, -1.0});
  const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
  const Complex z{0.7, -0.3};
  CHECK(std::abs(rc_bracket(f, 0, z) - f(z, z)) < 1e-14);
}

TEST_CASE("first bracket of the first model member") {
  // closed form 2 (z+i)^{-4}, cross-checked symbolically
  const Holo2 f1 = eigen_family(1);
  for (const Complex z : {Complex{0.0, 2.0}, Complex{1.0, 3.0}}) {
    const Complex expected = 2.0 / UniJet::pow_int(z + kI, 4);
    CHECK(rel_diff(rc_bracket(f1, 1, z), expected) < 1e-13);
  }
  // frozen oracle values at the two sample points
  CHECK(std::abs(rc_bracket(f1, 1, Complex{0.0, 2.0}) -
                 Complex{0.024691358024691357, 0.0}) < 1e-14);
  CHECK(std::abs(rc_bracket(f1, 1, Complex{1.0, 3.0}) -
                 Complex{0.003855317824259767, 0.0057470576262257395}) < 1e-14);
}

TEST_CASE("separable route") {
  // f1 = w^2, f2 = w at order 1 gives f1' f2 - f1 f2' = z^2
  Holo2 f = Holo2::from_separable(
      DomainDesc::entire_plane(), [](Complex w) { return w * w; }, [](Complex w) { return w; });
  for (const Complex z : {Complex{0.5, 0.25}, Complex{-1.2, 0.8}}) {
    CHECK(rel_diff(rc_bracket(f, 1, z), z * z) < 1e-12);
  }
}

TEST_CASE("squared binomial sums") {
  CHECK(binom_sq_sum(0) == 1);
  CHECK(binom_sq_sum(1) == 2);
  CHECK(binom_sq_sum(5) == 252);
  // against direct summation
  for (int ell = 0; ell <= 30; ++ell) {
    std::uint64_t direct = 0;
    for (int j = 0; j <= ell; ++j) direct += binomial_u64(ell, j) * binomial_u64(ell, j);
    CHECK(direct == binom_sq_sum(ell));
  }
  CHECK_THROWS_AS(binom_sq_sum(31), std::range_error);
  CHECK_THROWS_AS(binom_sq_sum(-1), std::range_error);
}

TEST_CASE("annihilation of low degrees") {
  Rng rng(31);
  for (int ell = 1; ell <= 8; ++ell) {
    Poly2 p(ell - 1, ell - 1);
    for (int a = 0; a <= ell - 1; ++a)
      for (int b = 0; a + b <= ell - 1; ++b) p.at(a, b) = rng.complex_in_box(1.0);
    const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
    CHECK(std::abs(rc_bracket(f, ell, Complex{0.4, -0.1})) < 1e-10);
  }
}

TEST_CASE("bracket of the l-th difference power is (2l)!/l!") {
  const Poly2 diff = Poly2::monomial(1, 0) + Poly2::monomial(0, 1).scaled(-1.0);
  Poly2 pow = Poly2::constant({1.0, 0.0});
  for (int ell = 0; ell <= 10; ++ell) {
    const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), pow);
    const double expected = factorial(2 * ell) / factorial(ell);
    CHECK(rel_diff(rc_bracket(f, ell, Complex{0.3, 0.9}), Complex{expected, 0.0}) < 1e-11);
    pow = pow * diff;
  }
}

TEST_CASE("swap antisymmetry on random polynomials") {
  Rng rng(47);
  for (int rep = 0; rep < 4; ++rep) {
    Poly2 p(4, 4);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) p.at(a, b) = rng.complex_in_box(1.0);
    Poly2 swapped(4, 4);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) swapped.at(b, a) = p.coeff(a, b);
    const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
    const Holo2 fs = Holo2::from_polynomial(DomainDesc::entire_plane(), swapped);
    const Complex z = rng.complex_in_box(0.7);
    for (int ell = 0; ell <= 4; ++ell) {
      const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
      CHECK(rel_diff(rc_bracket(fs, ell, z), sign * rc_bracket(f, ell, z), 1.0) < 1e-12);
    }
  }
}

TEST_CASE("jet order cap") {
  const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::constant({1.0, 0.0}));
  CHECK_THROWS_AS(rc_bracket(f, 17, Complex{}), usage_error);
  CHECK_NOTHROW(rc_bracket(f, 17, Complex{}, 20));
}
