#pragma once

#include <functional>
#include <vector>

#include "rcgen/genop.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/pde.hpp"
#include "rcgen/quadrature.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//=============================================================================
// The segment transform: a weighted average of a one-variable function along
// the segment [zeta1, zeta2],
//   (Psi_l g)(zeta1,zeta2) = (zeta1-zeta2)^l *
//       int_{-1}^{1} g(((zeta2-zeta1)v + zeta1+zeta2)/2) (1-v^2)^l dv.
// The weight is folded into the integrand under plain Gauss-Legendre nodes;
// n nodes are exact for polynomial g with deg(g) + 2l <= 2n-1.
//=============================================================================

//! Node count that integrates the weighted segment integrand exactly for a
//! polynomial g of the given degree.
inline int psi_exact_nodes(int deg_g, int ell) {
  return (deg_g + 2 * ell) / 2 + 1;
}

template <typename G>
Complex psi_fixed_nodes(G&& g, int ell, Complex zeta1, Complex zeta2, int n) {
  const QuadRule& rule = gauss_legendre(n);
  const Complex mid = 0.5 * (zeta1 + zeta2);
  const Complex haf = 0.5 * (zeta2 - zeta1);
  Complex acc{};
  for (int i = 0; i < rule.size(); ++i) {
    const double v = rule.x[i];
    const double weight = std::pow(1.0 - v * v, ell);
    acc += rule.w[i] * weight * g(mid + v * haf);
  }
  return UniJet::pow_int(zeta1 - zeta2, ell) * acc;
}

//! Adaptive evaluation for general (non-polynomial) g: node doubling until
//! successive values agree to 1e-12 relative, cap 512 nodes.
template <typename G>
Complex psi(G&& g, int ell, Complex zeta1, Complex zeta2,
            const DomainDesc& domain = DomainDesc::entire_plane()) {
  if (ell < 0) throw usage_error("psi: l must be >= 0");
  if (!domain.contains(zeta1) || !domain.contains(zeta2)) {
    throw domain_error("psi: segment endpoint outside the (convex) domain");
  }
  Complex prev = psi_fixed_nodes(g, ell, zeta1, zeta2, 32);
  for (int n = 64; n <= 512; n *= 2) {
    const Complex cur = psi_fixed_nodes(g, ell, zeta1, zeta2, n);
    if (rel_diff(cur, prev, 1e-30) <= 1e-12 || std::abs(cur - prev) <= 1e-300) return cur;
    prev = cur;
  }
  return prev;
}

//! Psi_l applied to a polynomial (monomial coefficients g_k), expanded into
//! an exact bivariate polynomial table.  Writing the segment point as
//! A + vB with A = (zeta1+zeta2)/2, B = (zeta2-zeta1)/2, the v-integral
//! reduces to even moments of the weight, which Gauss-Legendre reproduces
//! exactly.
inline Poly2 psi_polynomial_table(const std::vector<Complex>& g, int ell) {
  if (ell < 0) throw usage_error("psi_polynomial_table: l must be >= 0");
  const int deg = static_cast<int>(g.size()) - 1;
  const Poly2 a = (Poly2::monomial(1, 0) + Poly2::monomial(0, 1)).scaled(0.5);
  const Poly2 b = (Poly2::monomial(0, 1) + Poly2::monomial(1, 0).scaled(-1.0)).scaled(0.5);
  // moments mu_m = int v^m (1-v^2)^l dv, m <= deg
  std::vector<double> mu(deg + 1, 0.0);
  for (int m = 0; m <= deg; ++m) {
    if (m % 2 == 1) continue;
    mu[m] = integrate_segment(
        [&](double v) { return std::pow(v, m) * std::pow(1.0 - v * v, ell); },
        psi_exact_nodes(m, ell));
  }
  // powers of A and B
  std::vector<Poly2> ap(deg + 1), bp(deg + 1);
  ap[0] = Poly2::constant({1.0, 0.0});
  bp[0] = Poly2::constant({1.0, 0.0});
  for (int k = 1; k <= deg; ++k) {
    ap[k] = ap[k - 1] * a;
    bp[k] = bp[k - 1] * b;
  }
  Poly2 acc;
  for (int k = 0; k <= deg; ++k) {
    if (g[k] == Complex{}) continue;
    for (int m = 0; m <= k; ++m) {
      if (mu[m] == 0.0) continue;
      acc = acc + (ap[k - m] * bp[m]).scaled(g[k] * binomial(k, m) * mu[m]);
    }
  }
  Poly2 diff_pow = Poly2::constant({1.0, 0.0});
  const Poly2 diff = Poly2::monomial(1, 0) + Poly2::monomial(0, 1).scaled(-1.0);
  for (int k = 0; k < ell; ++k) diff_pow = diff_pow * diff;
  return diff_pow * acc;
}

//! Psi_l g as a two-variable evaluator: exact table route for polynomials.
inline Holo2 psi_holo2(const std::vector<Complex>& g, int ell, DomainDesc domain) {
  return Holo2::from_polynomial(domain, psi_polynomial_table(g, ell));
}

//! Psi_l g for a general univariate callback.
inline Holo2 psi_holo2(Holo2::Eval1 g, int ell, DomainDesc domain) {
  return Holo2::from_callback(domain, [g, ell, domain](Complex z1, Complex z2) {
    return psi(g, ell, z1, z2, domain);
  });
}

//! t-coefficient at index l of the transform of Psi_l g, divided by g(z).
//! The exact-inversion contract pins this to 2^{2l+1}/(2l+1).
inline Complex inversion_check(const std::vector<Complex>& g, int ell, Complex z,
                               DomainDesc domain = DomainDesc::entire_plane()) {
  const Holo2 lifted = psi_holo2(g, ell, domain);
  Complex gz{};
  for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k) gz = gz * z + g[k];
  if (std::abs(gz) < 1e-12) {
    throw domain_error("inversion_check: g vanishes at the evaluation point; pick another z");
  }
  const TSeries series = t_series(lifted, z, ell, std::max(16, ell));
  return series.coeffs[ell] / gz;
}

//! The inversion constant 2^{2l+1}/(2l+1).
inline double inversion_constant(int ell) {
  return std::ldexp(2.0, 2 * ell) / (2.0 * ell + 1.0);
}

//! Eigen-membership residual of Psi_l g at eigenvalue -l(l+1).
inline double psi_eigen_check(const std::vector<Complex>& g, int ell,
                              const std::vector<Complex>& samples,
                              DomainDesc domain = DomainDesc::entire_plane()) {
  return eigen_residual(psi_holo2(g, ell, domain), ell, samples);
}

inline double psi_eigen_check(Holo2::Eval1 g, int ell, const std::vector<Complex>& samples,
                              DomainDesc domain = DomainDesc::entire_plane()) {
  return eigen_residual(psi_holo2(std::move(g), ell, domain), ell, samples);
}

}  // namespace rcgen
