#pragma once

#include "rcgen/genop.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! Real 2x2 matrix of determinant one, acting on the upper half-plane by
//! fractional-linear maps.
struct MobiusElem {
  double a, b, c, d;

  MobiusElem(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(a * d - b * c - 1.0) > 1e-12) {
      throw usage_error("MobiusElem: determinant must be 1");
    }
  }

  static MobiusElem identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MobiusElem translation(double shift) { return {1.0, shift, 0.0, 1.0}; }
  static MobiusElem scaling(double s) { return {s, 0.0, 0.0, 1.0 / s}; }
  static MobiusElem inversion() { return {0.0, -1.0, 1.0, 0.0}; }

  MobiusElem operator*(const MobiusElem& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

//! (az+b)/(cz+d); preserves the upper half-plane.
inline Complex mobius_apply(const MobiusElem& g, Complex z) {
  const Complex den = g.c * z + g.d;
  if (std::abs(den) < 1e-300) throw domain_error("mobius_apply: pole of the fractional-linear map");
  return (g.a * z + g.b) / den;
}

//! The weight-(1,1) twisted function
//!   f^g(zeta1,zeta2) = (c zeta1+d)^{-1} (c zeta2+d)^{-1} f(g zeta1, g zeta2).
inline Holo2 twist(const Holo2& f, const MobiusElem& g) {
  return Holo2::from_callback(DomainDesc::upper_half_plane(), [f, g](Complex z1, Complex z2) {
    const Complex d1 = g.c * z1 + g.d;
    const Complex d2 = g.c * z2 + g.d;
    if (std::abs(d1) < 1e-300 || std::abs(d2) < 1e-300) {
      throw domain_error("twist: pole of the fractional-linear map");
    }
    return f((g.a * z1 + g.b) / d1, (g.a * z2 + g.b) / d2) / (d1 * d2);
  });
}

//! Relative defect of the symmetry-breaking covariance law
//!   l!-scaled t-coefficient of (T f^g) at z
//!     = (cz+d)^{-2l-2} * (same coefficient of T f) at gz.
inline double covariance_residual(const Holo2& f, const MobiusElem& g, int ell, Complex z,
                                  double tol = 1e-10) {
  if (!(z.imag() > 0.0)) throw domain_error("covariance_residual: z must lie in the half-plane");
  const Holo2 twisted = twist(f, g);
  const Complex lhs = factorial(ell) * t_coeff_quadrature(twisted, ell, z, tol);
  const Complex gz = mobius_apply(g, z);
  const Complex jac = g.c * z + g.d;
  // untwisted side through the jet route (exact for polynomial tables)
  const TSeries series = t_series(f, gz, ell, std::max(16, ell));
  const Complex rhs = factorial(ell) * series.coeffs[ell] / UniJet::pow_int(jac, 2 * ell + 2);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-30);
}

}  // namespace rcgen
