#include <catch2/catch_amalgamated.hpp>

#include "rcgen/hardy.hpp"
#include "rcgen/pde.hpp"

using namespace rcgen;

namespace {

const HalfLineProfile kExp{[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0};
const HalfLineProfile kSExp{[](double s) { return Complex{s * std::exp(-s), 0.0}; }, 1.0};
const HalfLineProfile kExp2{[](double s) { return Complex{std::exp(-2.0 * s), 0.0}; }, 2.0};

}  // namespace

TEST_CASE("norm constant closed forms") {
  CHECK(b_ell(0) == Catch::Approx(1.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK(b_ell(1) == Catch::Approx(1.0 / (24.0 * kPi)).epsilon(1e-15));
  CHECK(b_ell(2) == Catch::Approx(3.0 / (160.0 * kPi)).epsilon(1e-15));
  CHECK(b_ell(3) == Catch::Approx(5.0 / (448.0 * kPi)).epsilon(1e-15));
  for (int ell = 0; ell <= 20; ++ell) CHECK_NOTHROW(b_ell(ell));  // forms agree internally
  CHECK_THROWS_AS(b_ell(31), usage_error);
}

TEST_CASE("half-line transform oracles") {
  // phi = e^{-xi}: integral 1/(1 - i z)
  for (const Complex z : {Complex{0.3, 0.5}, Complex{-0.8, 1.2}, Complex{0.0, 0.1}}) {
    CHECK(rel_diff(fourier_laplace(kExp, z), 1.0 / (1.0 - kI * z)) < 1e-12);
  }
  // phi = xi e^{-xi} at z = i: Gamma integral = 1/4
  CHECK(rel_diff(fourier_laplace(kSExp, Complex{0.0, 1.0}), Complex{0.25, 0.0}) < 1e-12);
  // zero profile
  const HalfLineProfile zero{[](double) { return Complex{}; }, 1.0};
  CHECK(std::abs(fourier_laplace(zero, Complex{0.0, 1.0})) == 0.0);
  // divergent configuration
  CHECK_THROWS_AS(fourier_laplace(kExp, Complex{0.0, -2.0}), domain_error);
}

TEST_CASE("weighted Bergman norm identity") {
  // phi = xi e^{-xi}, lambda = 2: rhs = pi Gamma(1) * 1/4 = pi/4
  const NormPair a = bergman_norm_check(kSExp, 2.0);
  CHECK(a.rhs == Catch::Approx(kPi / 4.0).epsilon(1e-10));
  CHECK(std::abs(a.lhs - a.rhs) / a.rhs < 1e-6);

  // phi = xi^2 e^{-xi}, lambda = 4: rhs = 2^{-2} pi Gamma(3) * 1/4 = pi/8
  const HalfLineProfile phi2{[](double s) { return Complex{s * s * std::exp(-s), 0.0}; }, 1.0};
  const NormPair b = bergman_norm_check(phi2, 4.0);
  CHECK(b.rhs == Catch::Approx(kPi / 8.0).epsilon(1e-10));
  CHECK(std::abs(b.lhs - b.rhs) / b.rhs < 1e-6);

  // zero profile: both sides vanish
  const HalfLineProfile zero{[](double) { return Complex{}; }, 1.0};
  const NormPair c = bergman_norm_check(zero, 2.0);
  CHECK(c.lhs == 0.0);
  CHECK(c.rhs == 0.0);
}

TEST_CASE("lifted eigenfunction against the diagonal closed form") {
  // on the diagonal the kernel degenerates: value = int s h(s) e^{isw} ds,
  // which is 1/(1-iw)^2 for h = e^{-s}
  const Complex w{0.3, 1.1};
  const Complex got = ftilde(kExp, 0, w, w);
  const Complex expected = 1.0 / ((1.0 - kI * w) * (1.0 - kI * w));
  CHECK(rel_diff(got, expected) < 1e-12);

  // zero profile lifts to zero
  const HalfLineProfile zero{[](double) { return Complex{}; }, 1.0};
  CHECK(std::abs(ftilde(zero, 1, w, w + Complex{0.2, 0.1})) == 0.0);

  // lower half-plane is rejected
  CHECK_THROWS_AS(ftilde(kExp, 0, Complex{0.0, -1.0}, w), domain_error);
}

TEST_CASE("grid tabulation matches pointwise evaluation") {
  const TorusGrid grid(Contour(Complex{0.0, 2.0}, 1.0, 16), Contour(Complex{0.0, 2.0}, 1.0, 16));
  const auto values = ftilde_grid(kExp, 1, grid, 64, 32);
  const auto& n1 = grid.nodes1();
  const auto& n2 = grid.nodes2();
  for (int p : {0, 5, 11}) {
    for (int q : {3, 8, 15}) {
      const Complex direct = ftilde(kExp, 1, n1[p], n2[q], 64, 32);
      CHECK(rel_diff(values[static_cast<std::size_t>(p) * 16 + q], direct, 1e-12) < 1e-12);
    }
  }
}

TEST_CASE("lifted eigenfunctions live in the matching eigenspace") {
  for (int ell : {0, 1, 2}) {
    const Holo2 lifted = ftilde_holo2(kExp, ell, 64, 32);
    CHECK(eigen_residual(lifted, ell, {Complex{0.3, 2.1}}, 4, 1e-9, 256) < 1e-7);
  }
}

TEST_CASE("plane-wave bracket phase convention") {
  // l = 1 brute force: R_1 G = -i s v G at the diagonal
  const double s = 1.3, v = 0.4;
  const Complex z{0.2, 1.1};
  const CoeffPair pc = rg_legendre_check(1, s, v, z);
  const Complex brute = -kI * s * v * std::exp(kI * z * s);
  CHECK(rel_diff(pc.lhs, brute) < 1e-10);
  CHECK(rel_diff(pc.rhs, brute) < 1e-15);

  // l = 0 and l = 2 closed forms
  const CoeffPair p0 = rg_legendre_check(0, 0.7, -0.2, z);
  CHECK(rel_diff(p0.lhs, std::exp(kI * z * 0.7)) < 1e-12);
  const CoeffPair p2 = rg_legendre_check(2, 1.0, 0.3, Complex{0.0, 1.0});
  CHECK(rel_diff(p2.lhs, p2.rhs) < 1e-10);
}

TEST_CASE("commuting-square coefficient at z = 2i") {
  // frozen closed-form values for h = e^{-s}:
  //   (-i)^l (l+1) / ((2l+1) 3^{l+2})
  const Complex z{0.0, 2.0};
  const Complex expected[4] = {Complex{1.0 / 9.0, 0.0}, Complex{0.0, -2.0 / 81.0},
                               Complex{-1.0 / 135.0, 0.0}, Complex{0.0, 4.0 / 1701.0}};
  for (int ell = 0; ell <= 3; ++ell) {
    const CoeffPair pc = coeff_diagram_check(kExp, ell, z);
    CHECK(rel_diff(pc.lhs, expected[ell]) < 1e-8);
    CHECK(rel_diff(pc.rhs, expected[ell]) < 1e-10);
    CHECK(rel_diff(pc.lhs, pc.rhs) < 1e-8);
  }
}

TEST_CASE("unitarity ratio matches the closed constant") {
  for (int ell = 0; ell <= 3; ++ell) {
    for (const auto& h : {kExp, kSExp, kExp2}) {
      CHECK(std::abs(hardy_norm_ratio(h, ell) - b_ell(ell)) / b_ell(ell) < 1e-6);
    }
  }
}

TEST_CASE("Gram matrix is diagonal across eigenspace indices") {
  std::vector<std::pair<HalfLineProfile, int>> basis;
  for (int ell = 0; ell <= 4; ++ell) basis.push_back({kExp, ell});
  const auto gram = hardy_gram(basis);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    CHECK(gram[a][a].real() > 0.0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      CHECK(std::abs(gram[a][b]) /
                std::sqrt(std::abs(gram[a][a]) * std::abs(gram[b][b])) <
            1e-6);
    }
  }
  // diagonal entries follow the half-line closed forms:
  // 2 pi^2 * (1/4) * 2/(2l+1)
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const double expected = 2.0 * kPi * kPi * 0.25 * 2.0 / (2.0 * a + 1.0);
    CHECK(gram[a][a].real() == Catch::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("operator matrix in the lifted basis is Hermitian") {
  std::vector<std::pair<HalfLineProfile, int>> basis;
  for (int m = 0; m <= 2; ++m) {
    for (int ell = 0; ell <= 2; ++ell) {
      basis.push_back({HalfLineProfile{[m](double s) {
                                         return Complex{std::pow(s, m) * std::exp(-s), 0.0};
                                       },
                                       1.0},
                       ell});
    }
  }
  const auto m = hardy_p_matrix(basis);
  double scale = 0.0;
  for (const auto& row : m)
    for (const Complex v : row) scale = std::max(scale, std::abs(v));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      CHECK(std::abs(m[a][b] - std::conj(m[b][a])) / scale < 1e-6);
    }
  }
  // the diagonal blocks carry the eigenvalues -l(l+1)
  const auto gram = hardy_gram(basis);
  for (std::size_t a = 0; a < m.size(); ++a) {
    const int ell = static_cast<int>(a % 3);
    const double lam = -static_cast<double>(ell) * (ell + 1.0);
    CHECK(std::abs(m[a][a] - lam * gram[a][a]) <= 1e-10 * std::max(1.0, std::abs(gram[a][a])));
  }
}
