#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rcgen/brackets.hpp"
#include "rcgen/contour.hpp"
#include "rcgen/genop.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/legendre.hpp"
#include "rcgen/quadrature.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! Function on the positive half-line with a declared exponential decay
//! rate, used to pick rate-matched quadrature.
struct HalfLineProfile {
  std::function<Complex(double)> h;
  double decay_rate = 1.0;
};

//! The unitarity constant relating the two norms, in both closed forms:
//!   (2l)! / (2^{2l+2} pi (2l+1) (l!)^2)  and  (2l-1)!! / (4 pi (2l+1) (2l)!!).
//! Returns the first; throws if the forms disagree beyond rounding.
inline double b_ell(int ell) {
  if (ell < 0 || ell > 30) throw usage_error("b_ell: need 0 <= l <= 30");
  const double central = static_cast<double>(binom_sq_sum(ell));  // (2l)!/(l!)^2
  const double form1 = central / (std::ldexp(1.0, 2 * ell + 2) * kPi * (2.0 * ell + 1.0));
  double ratio = 1.0;  // (2l-1)!!/(2l)!!
  for (int k = 1; k <= ell; ++k) ratio *= (2.0 * k - 1.0) / (2.0 * k);
  const double form2 = ratio / (4.0 * kPi * (2.0 * ell + 1.0));
  if (std::abs(form1 - form2) > 1e-14 * std::abs(form1)) {
    throw numeric_error("b_ell: closed forms disagree beyond rounding");
  }
  return form1;
}

//! int_0^infty phi(xi) e^{i z xi} dxi, Gauss-Laguerre with the rate matched
//! to the total decay, node count doubled until stable.
inline Complex fourier_laplace(const HalfLineProfile& phi, Complex z) {
  const double rate = phi.decay_rate + z.imag();
  if (!(rate > 0.0)) {
    throw domain_error("fourier_laplace: integrand does not decay (need Im z > 0 or decaying profile)");
  }
  Complex prev{};
  bool have_prev = false;
  for (int n = 32; n <= 128; n *= 2) {
    const Complex cur = integrate_half_line(
        [&](double xi) { return phi.h(xi) * std::exp(kI * z * xi); }, rate, n);
    if (have_prev && rel_diff(cur, prev, 1e-30) <= 1e-11) return cur;
    prev = cur;
    have_prev = true;
  }
  return prev;
}

//! int_0^infty |phi(xi)|^2 xi^p dxi with rate-matched quadrature.
inline double profile_weighted_norm_sq(const HalfLineProfile& phi, double p) {
  const Complex v = integrate_half_line(
      [&](double xi) { return Complex{std::norm(phi.h(xi)) * std::pow(xi, p), 0.0}; },
      2.0 * phi.decay_rate, 128);
  return v.real();
}

//! Both sides of the weighted-Bergman norm identity for the half-line
//! transform: lhs integrates the Plancherel trace against y^{lambda-2} dy,
//! rhs is the closed form 2^{2-lambda} pi Gamma(lambda-1) ||phi||^2 with the
//! norm taken against xi^{1-lambda} dxi.
struct NormPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline NormPair bergman_norm_check(const HalfLineProfile& phi, double lambda) {
  if (!(lambda > 1.0)) throw usage_error("bergman_norm_check: need lambda > 1");
  const auto plancherel_trace = [&](double y) {
    return integrate_half_line(
               [&](double xi) {
                 return Complex{std::norm(phi.h(xi)) * std::exp(-2.0 * y * xi), 0.0};
               },
               2.0 * phi.decay_rate + 2.0 * y, 96)
        .real();
  };
  const auto outer = [&](int n) {
    // the map y = u/(1-u) carries (0,1) onto the half-line
    return integrate_segment(
        [&](double x) {
          const double u = 0.5 * (x + 1.0);
          const double y = u / (1.0 - u);
          const double jac = 0.5 / ((1.0 - u) * (1.0 - u));
          return std::pow(y, lambda - 2.0) * plancherel_trace(y) * jac;
        },
        n);
  };
  double lhs = outer(64);
  double step = std::numeric_limits<double>::infinity();
  for (int n = 128; n <= 512; n *= 2) {
    const double val = outer(n);
    step = std::abs(val - lhs);
    lhs = val;
    if (step <= 1e-8 * std::max(1e-300, std::abs(val))) break;
  }
  if (std::abs(lhs) > 1e-12 && step > 1e-6 * std::abs(lhs)) {
    throw accuracy_error("bergman_norm_check: outer quadrature stalled", Complex{lhs, 0.0}, step);
  }
  lhs *= 2.0 * kPi;
  const double rhs = std::pow(2.0, 2.0 - lambda) * kPi * std::tgamma(lambda - 1.0) *
                     profile_weighted_norm_sq(phi, 1.0 - lambda);
  return {lhs, rhs};
}

//=============================================================================
// The lifted eigenfunctions: tensor quadrature of
//   (1/2) int_0^inf int_{-1}^1 h(s) P_l(v) G(s,v;zeta1,zeta2) s ds dv,
//   G = exp(i (s/2) ((1-v) zeta1 + (1+v) zeta2)).
//=============================================================================

//! Point evaluation on the upper half-plane square.
inline Complex ftilde(const HalfLineProfile& h, int ell, Complex zeta1, Complex zeta2,
                      int n_s = 128, int n_v = 64) {
  if (!(zeta1.imag() > 0.0) || !(zeta2.imag() > 0.0)) {
    throw domain_error("ftilde: evaluation point must lie in the upper half-plane square");
  }
  const double rate = h.decay_rate + std::min(zeta1.imag(), zeta2.imag());
  const QuadRule& rs = gauss_laguerre(n_s);
  const QuadRule& rv = gauss_legendre(n_v);
  Complex acc{};
  for (int i = 0; i < rs.size(); ++i) {
    const double s = rs.x[i] / rate;
    const Complex hs = h.h(s) * s * rs.w[i] / rate;
    Complex vsum{};
    for (int j = 0; j < rv.size(); ++j) {
      const double v = rv.x[j];
      const Complex phase =
          std::exp(kI * (0.5 * s) * ((1.0 - v) * zeta1 + (1.0 + v) * zeta2));
      vsum += rv.w[j] * legendre(ell, v) * phase;
    }
    acc += hs * vsum;
  }
  return 0.5 * acc;
}

//! Tabulates the lifted eigenfunction on a torus grid.  Each (s,v) node is a
//! separable exponential, so the table costs O(n_s n_v (M + M^2)) instead of
//! O(M^2 n_s n_v) transcendental evaluations.
inline std::vector<Complex> ftilde_grid(const HalfLineProfile& h, int ell, const TorusGrid& grid,
                                        int n_s = 128, int n_v = 64) {
  const auto& n1 = grid.nodes1();
  const auto& n2 = grid.nodes2();
  double min_im = std::numeric_limits<double>::infinity();
  for (Complex z : n1) min_im = std::min(min_im, z.imag());
  for (Complex z : n2) min_im = std::min(min_im, z.imag());
  if (!(min_im > 0.0)) throw domain_error("ftilde_grid: torus leaves the upper half-plane");
  const double rate = h.decay_rate + min_im;
  const QuadRule& rs = gauss_laguerre(n_s);
  const QuadRule& rv = gauss_legendre(n_v);
  std::vector<Complex> values(n1.size() * n2.size());
  std::vector<Complex> e1(n1.size()), e2(n2.size());
  for (int i = 0; i < rs.size(); ++i) {
    const double s = rs.x[i] / rate;
    const Complex hs = 0.5 * h.h(s) * s * rs.w[i] / rate;
    for (int j = 0; j < rv.size(); ++j) {
      const double v = rv.x[j];
      const Complex c = hs * rv.w[j] * legendre(ell, v);
      const Complex a1 = kI * (0.5 * s) * (1.0 - v);
      const Complex a2 = kI * (0.5 * s) * (1.0 + v);
      for (std::size_t k = 0; k < n1.size(); ++k) e1[k] = std::exp(a1 * n1[k]);
      for (std::size_t k = 0; k < n2.size(); ++k) e2[k] = std::exp(a2 * n2[k]);
      for (std::size_t p = 0; p < n1.size(); ++p) {
        const Complex cp = c * e1[p];
        Complex* row = values.data() + p * n2.size();
        for (std::size_t q = 0; q < n2.size(); ++q) row[q] += cp * e2[q];
      }
    }
  }
  return values;
}

//! The lifted eigenfunction wrapped as an evaluator on the half-plane square.
inline Holo2 ftilde_holo2(HalfLineProfile h, int ell, int n_s = 96, int n_v = 48) {
  return Holo2::from_callback(DomainDesc::upper_half_plane(),
                              [h, ell, n_s, n_v](Complex z1, Complex z2) {
                                return ftilde(h, ell, z1, z2, n_s, n_v);
                              });
}

//! Scalar in the commuting square between the transform and its half-line
//! model: (-i)^l / ((2l+1) l!).
inline Complex ftilde_coeff_constant(int ell) {
  return ipow(-ell) / ((2.0 * ell + 1.0) * factorial(ell));
}

//! Both routes around the commuting square: lhs extracts the l-th
//! t-coefficient of the transform of the lifted eigenfunction by torus
//! quadrature; rhs is the constant times the half-line transform of
//! h(s) s^{l+1} at z.
struct CoeffPair {
  Complex lhs;
  Complex rhs;
};

inline CoeffPair coeff_diagram_check(const HalfLineProfile& h, int ell, Complex z, int n_s = 128,
                                  int n_v = 64) {
  const DomainDesc pi_dom = DomainDesc::upper_half_plane();
  const double r = coeff_radius(pi_dom, z);
  const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
  Complex lhs{};
  double err = std::numeric_limits<double>::infinity();
  Complex prev{};
  for (int m = 64; m <= 256; m *= 2) {
    const TorusGrid grid(Contour(z, r, m), Contour(z, r, m));
    std::vector<Complex> vals = ftilde_grid(h, ell, grid, n_s, n_v);
    const auto& nd1 = grid.nodes1();
    const auto& nd2 = grid.nodes2();
    for (std::size_t p = 0; p < nd1.size(); ++p) {
      for (std::size_t q = 0; q < nd2.size(); ++q) {
        const Complex den =
            UniJet::pow_int((nd1[p] - z) * (nd2[q] - z), ell + 1);
        vals[p * nd2.size() + q] *= UniJet::pow_int(nd1[p] - nd2[q], ell) / den;
      }
    }
    lhs = sign * grid.integrate_values(vals).value;
    if (m > 64) {
      err = std::abs(lhs - prev);
      if (err <= 1e-9 * std::max(1.0, std::abs(lhs))) break;
    }
    prev = lhs;
  }
  HalfLineProfile shifted{[&h, ell](double s) { return h.h(s) * std::pow(s, ell + 1); },
                          h.decay_rate};
  const Complex rhs = ftilde_coeff_constant(ell) * fourier_laplace(shifted, z);
  return {lhs, rhs};
}

//! Bracket of the plane-wave kernel against its closed form
//! (-i)^l e^{izs} s^l P_l(v); the l=1 case is the phase-convention oracle.
inline CoeffPair rg_legendre_check(int ell, double s, double v, Complex z) {
  if (ell < 0 || ell > 10) throw usage_error("rg_legendre_check: need 0 <= l <= 10");
  const Complex a1 = kI * (0.5 * s) * (1.0 - v);
  const Complex a2 = kI * (0.5 * s) * (1.0 + v);
  Holo2 g = Holo2::from_separable(
      DomainDesc::entire_plane(), [a1](Complex zeta) { return std::exp(a1 * zeta); },
      [a2](Complex zeta) { return std::exp(a2 * zeta); });
  const Complex lhs = rc_bracket(g, ell, z);
  const Complex rhs = ipow(-ell) * std::exp(kI * z * s) * std::pow(s, ell) * legendre(ell, v);
  return {lhs, rhs};
}

//! Ratio of the weighted-Bergman-side norm to the Hardy-side norm via the
//! half-line reductions; the unitarity contract pins this to b_ell(l).
inline double hardy_norm_ratio(const HalfLineProfile& h, int ell) {
  const double h_norm_sq = profile_weighted_norm_sq(h, 1.0);  // against s ds
  const double pl_norm_sq = legendre_norm(ell, ell);
  const double hardy_side = 2.0 * kPi * kPi * h_norm_sq * pl_norm_sq;
  // Bergman side: model coefficient c_l h(xi) xi^{l+1} measured against
  // xi^{-1-2l} dxi, scaled by 2^{-2l} pi (2l)!.
  const Complex cl = ftilde_coeff_constant(ell);
  HalfLineProfile shifted{[&h, ell, cl](double xi) { return cl * h.h(xi) * std::pow(xi, ell + 1); },
                          h.decay_rate};
  const double model_norm_sq = profile_weighted_norm_sq(shifted, -1.0 - 2.0 * ell);
  const double bergman_side =
      std::ldexp(1.0, -2 * ell) * kPi * factorial(2 * ell) * model_norm_sq;
  return bergman_side / hardy_side;
}

//! Gram matrix of lifted eigenfunctions under the Hardy tensor-square inner
//! product, computed through the half-line model (2 pi^2 <.,.> in (s,v)).
inline std::vector<std::vector<Complex>> hardy_gram(
    const std::vector<std::pair<HalfLineProfile, int>>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<Complex>> gram(n, std::vector<Complex>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& [ha, la] = basis[a];
      const auto& [hb, lb] = basis[b];
      const Complex s_part = integrate_half_line(
          [&](double s) { return ha.h(s) * std::conj(hb.h(s)) * s; },
          ha.decay_rate + hb.decay_rate, 128);
      const double v_part = legendre_norm(la, lb);
      gram[a][b] = 2.0 * kPi * kPi * s_part * v_part;
    }
  }
  return gram;
}

//! Matrix of the operator in the lifted basis, with its v-side action
//! computed by explicit polynomial differentiation; Hermiticity of the
//! result is the finite shadow of self-adjointness.
inline std::vector<std::vector<Complex>> hardy_p_matrix(
    const std::vector<std::pair<HalfLineProfile, int>>& basis) {
  int max_l = 0;
  for (const auto& [h, l] : basis) max_l = std::max(max_l, l);
  const LegendreTable table(max_l);
  const std::size_t n = basis.size();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& [ha, la] = basis[a];
    const std::vector<double> pa = ptilde_apply(table.row(la));
    for (std::size_t b = 0; b < n; ++b) {
      const auto& [hb, lb] = basis[b];
      const Complex s_part = integrate_half_line(
          [&](double s) { return ha.h(s) * std::conj(hb.h(s)) * s; },
          ha.decay_rate + hb.decay_rate, 128);
      const double v_part = integrate_segment(
          [&](double v) { return LegendreTable::eval(pa, v) * legendre(lb, v); },
          (la + lb) / 2 + 2);
      m[a][b] = 2.0 * kPi * kPi * s_part * v_part;
    }
  }
  return m;
}

}  // namespace rcgen
