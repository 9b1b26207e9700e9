#pragma once

#include <functional>
#include <vector>

#include "rcgen/contour.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//=============================================================================
// Residue-calculus verification machinery.  Everything here is
// check-only: no production path depends on it.
//=============================================================================

//! zeta1 - z - t  (the zeta2-partial of the kernel denominator).
inline Complex zeta_tilde1(Complex zeta1, Complex z, Complex t) { return zeta1 - z - t; }
//! zeta2 - z + t  (the zeta1-partial of the kernel denominator).
inline Complex zeta_tilde2(Complex zeta2, Complex z, Complex t) { return zeta2 - z + t; }

//! The root of Q in the other variable: xi(1,...) solves Q(xi, zeta2) = 0,
//! xi(2,...) solves Q(zeta1, xi) = 0.
inline Complex xi(int j, Complex other, Complex z, Complex t) {
  if (j == 1) {
    const Complex den = other - z + t;
    if (std::abs(den) < 1e-300) throw domain_error("xi: pole (zeta2 - z + t = 0)");
    return ((other - z) * z + t * other) / den;
  }
  if (j == 2) {
    const Complex den = other - z - t;
    if (std::abs(den) < 1e-300) throw domain_error("xi: pole (zeta1 - z - t = 0)");
    return ((other - z) * z - t * other) / den;
  }
  throw usage_error("xi: j must be 1 or 2");
}

//! H_{a,b} by the recurrence
//!   H_{a,b} = (xi1-z)^a H_{0,b}
//!           + Q/zeta_tilde2 * sum_{i=0}^{a-1} (xi1-z)^i H_{a-1-i,b-1},
//! with H_{a,0} = 0 and H_{0,b} = b zeta_tilde2.
inline Complex h_ab(int a, int b, Complex zeta1, Complex zeta2, Complex z, Complex t) {
  if (a < 0 || b < 0) throw usage_error("h_ab: need a,b >= 0");
  if (b == 0) return {};
  const Complex zt2 = zeta_tilde2(zeta2, z, t);
  if (std::abs(zt2) < 1e-300) throw domain_error("h_ab: zeta_tilde2 = 0");
  const Complex x1z = xi(1, zeta2, z, t) - z;
  if (a == 0) return static_cast<double>(b) * zt2;
  const Complex q = q_eval(zeta1, zeta2, z, t);
  Complex acc = UniJet::pow_int(x1z, a) * h_ab(0, b, zeta1, zeta2, z, t);
  for (int i = 0; i <= a - 1; ++i) {
    acc += q / zt2 * UniJet::pow_int(x1z, i) * h_ab(a - 1 - i, b - 1, zeta1, zeta2, z, t);
  }
  return acc;
}

//! Closed form of H_{a,1}: t^a (zeta2-z)^a zeta_tilde2^{1-a}.
inline Complex h_a1_closed(int a, Complex zeta2, Complex z, Complex t) {
  const Complex zt2 = zeta_tilde2(zeta2, z, t);
  return UniJet::pow_int(t * (zeta2 - z), a) * std::pow(zt2, 1.0 - a);
}

//! Closed form of H_{a,2}:
//!   t^{a-1} (zeta2-z)^{a-1} zeta_tilde2^{1-a} (2t(zeta2-z) + a Q).
inline Complex h_a2_closed(int a, Complex zeta1, Complex zeta2, Complex z, Complex t) {
  if (a < 1) return 2.0 * zeta_tilde2(zeta2, z, t);
  const Complex zt2 = zeta_tilde2(zeta2, z, t);
  const Complex q = q_eval(zeta1, zeta2, z, t);
  return UniJet::pow_int(t * (zeta2 - z), a - 1) * std::pow(zt2, 1.0 - a) *
         (2.0 * t * (zeta2 - z) + static_cast<double>(a) * q);
}

//! Relative defect of the derivative-shift identity
//!   (2 pi i)^{-1} closed-int (zeta1-z)^a / Q^b dF  =
//!   (2 pi i)^{-1} closed-int H_{a,b} / Q^{b+1} F,
//! integrated in zeta1 over a circle about z with zeta2, z, t fixed.
//! `variable` = 2 runs the mirrored identity (zeta1 <-> zeta2, t -> -t).
inline double verify_hab_lemma(int a, int b, const std::function<Complex(Complex)>& f,
                               const std::function<Complex(Complex)>& df, Complex z, Complex t,
                               Complex other, double radius, int variable = 1, int nodes = 256) {
  const Contour c(z, radius, nodes);
  const Complex tt = (variable == 1) ? t : -t;
  const auto q_of = [&](Complex zeta) {
    return (variable == 1) ? q_eval(zeta, other, z, t) : q_eval(other, zeta, z, t);
  };
  // the mirrored identity is H_{a,b} with the roles swapped and t negated
  const auto h_of = [&](Complex zeta) { return h_ab(a, b, zeta, other, z, tt); };
  const QuadResult lhs = single_contour_integral(
      [&](Complex zeta) {
        return UniJet::pow_int(zeta - z, a) / UniJet::pow_int(q_of(zeta), b) * df(zeta);
      },
      c);
  const QuadResult rhs = single_contour_integral(
      [&](Complex zeta) {
        return h_of(zeta) / UniJet::pow_int(q_of(zeta), b + 1) * f(zeta);
      },
      c);
  const double scale = std::max({std::abs(lhs.value), std::abs(rhs.value), 1.0});
  return std::abs(lhs.value - rhs.value) / scale;
}

//! Assembles the verification integrals behind the Euler-operator identity
//! on a common torus and returns the worst relative residual among:
//!   - each derivative-route integral I_j against its kernel-form restatement,
//!   - the total I_1+I_2+I_3 against the single cubic-kernel integral.
//! Kernel forms follow the derivation chain (second terms carry Q^3); the
//! fixed-up signs are cross-checked against an independent series oracle in
//! the test suite.
inline double verify_i_identities(const Holo2& f, Complex z, Complex t, int nodes = 256) {
  const double dist = boundary_distance(f.domain(), z);
  const double r = std::isfinite(dist) ? 0.6 * dist : 1.0 + 0.25 * std::abs(z);
  if (!admissible(z, t, r, f.domain())) {
    throw domain_error("verify_i_identities: inadmissible (z,t) for the torus radius");
  }
  const TorusGrid grid(Contour(z, r, nodes), Contour(z, r, nodes));
  const auto q = [&](Complex a, Complex b) { return q_eval(a, b, z, t); };

  // derivative route
  const QuadResult i1d = grid.integrate([&](Complex a, Complex b) {
    return (a * a - a * b) / q(a, b) * holo2_d12(f, a, b);
  });
  const QuadResult i2d = grid.integrate([&](Complex a, Complex b) {
    return (b * b - a * b) / q(a, b) * holo2_d12(f, a, b);
  });
  const QuadResult i3d = grid.integrate([&](Complex a, Complex b) {
    return -(a - b) * (holo2_d(f, 1, a, b) - holo2_d(f, 2, a, b)) / q(a, b);
  });

  // kernel-form route
  const QuadResult i1k = grid.integrate([&](Complex a, Complex b) {
    const Complex qq = q(a, b);
    return (-(a - z) * (a - z) / (qq * qq) +
            2.0 * t * (a - z) * (b - z) * a / (qq * qq * qq)) *
           f(a, b);
  });
  const QuadResult i2k = grid.integrate([&](Complex a, Complex b) {
    const Complex qq = q(a, b);
    return (-(b - z) * (b - z) / (qq * qq) -
            2.0 * t * (a - z) * (b - z) * b / (qq * qq * qq)) *
           f(a, b);
  });
  const QuadResult i3k = grid.integrate([&](Complex a, Complex b) {
    const Complex qq = q(a, b);
    return ((a - z) * (a - z) + (b - z) * (b - z)) / (qq * qq) * f(a, b);
  });

  // cubic-kernel form of the Euler-operator image
  const QuadResult total_k = grid.integrate([&](Complex a, Complex b) {
    const Complex qq = q(a, b);
    return 2.0 * t * (a - b) * (a - z) * (b - z) / (qq * qq * qq) * f(a, b);
  });

  const Complex total_d = i1d.value + i2d.value + i3d.value;
  double scale = std::max(1.0, std::abs(total_d));
  for (const auto* rptr : {&i1d, &i2d, &i3d}) scale = std::max(scale, std::abs(rptr->value));
  double residual = 0.0;
  residual = std::max(residual, std::abs(i1d.value - i1k.value) / scale);
  residual = std::max(residual, std::abs(i2d.value - i2k.value) / scale);
  residual = std::max(residual, std::abs(i3d.value - i3k.value) / scale);
  residual = std::max(residual, std::abs(total_d - total_k.value) / scale);
  return residual;
}

}  // namespace rcgen
