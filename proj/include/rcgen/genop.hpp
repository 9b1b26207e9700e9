#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <vector>

#include "rcgen/brackets.hpp"
#include "rcgen/contour.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! Truncated expansion of the transform in the deformation parameter t,
//! anchored at a base point z.
struct TSeries {
  Complex z;
  std::vector<Complex> coeffs;  // index l, 0 <= l <= order

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  Complex eval(Complex t) const {
    Complex acc{};
    for (int l = order(); l >= 0; --l) acc = acc * t + coeffs[l];
    return acc;
  }

  double max_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }
};

//! Default torus radius for evaluating the transform at deformation t.
inline double default_t_radius(const DomainDesc& d, Complex z, Complex t) {
  const double dist = boundary_distance(d, z);
  if (!std::isfinite(dist)) return 4.0 * std::abs(t) + 1.0;
  return std::min(4.0 * std::abs(t) + 0.1 * dist, 0.9 * dist);
}

//! Torus radius for t-coefficient extraction (no t in the integrand); as
//! large as safely fits so the Cauchy quotients stay well conditioned.
inline double coeff_radius(const DomainDesc& d, Complex z) {
  const double dist = boundary_distance(d, z);
  if (!std::isfinite(dist)) return 1.0 + 0.25 * std::abs(z);
  return 0.75 * dist;
}

//! Value at t = 0 is the diagonal restriction; no quadrature involved.
inline Complex t_eval_at_zero(const Holo2& f, Complex z) {
  if (!f.domain().contains(z)) throw domain_error("t_eval_at_zero: z outside domain");
  return f(z, z);
}

//! Transform value by double contour quadrature of f/Q.  Requires the
//! admissible-region condition 2|t| < d(z, boundary).
inline QuadResult t_eval_quadrature(const Holo2& f, Complex z, Complex t, double tol = 1e-9,
                                    int max_nodes = 4096) {
  const DomainDesc& dom = f.domain();
  if (!dom.contains(z)) throw domain_error("t_eval_quadrature: z outside domain");
  const double dist = boundary_distance(dom, z);
  if (!(2.0 * std::abs(t) < dist)) {
    throw domain_error("t_eval_quadrature: (z,t) outside the admissible region 2|t| < d(z)");
  }
  const double r = default_t_radius(dom, z, t);
  if (!admissible(z, t, r, dom)) {
    throw domain_error("t_eval_quadrature: contour radius fails the admissibility bound");
  }
  {
    const TorusGrid probe(Contour(z, r, 64), Contour(z, r, 64));
    if (!(probe.min_abs_q(z, t) > 1e-8 * r * r)) {
      throw domain_error("t_eval_quadrature: kernel denominator nearly singular on the torus");
    }
  }
  return double_contour_integral_auto(
      [&](Complex z1, Complex z2) { return f(z1, z2) / q_eval(z1, z2, z, t); }, z, r, tol, 64,
      max_nodes);
}

//! l-th t-Taylor coefficient by quadrature of the expanded kernel
//! (-1)^l (zeta1-zeta2)^l / ((zeta1-z)(zeta2-z))^{l+1}.
inline Complex t_coeff_quadrature(const Holo2& f, int ell, Complex z, double tol = 1e-9,
                                  int max_nodes = 4096) {
  if (ell < 0) throw usage_error("t_coeff_quadrature: l must be >= 0");
  if (!f.domain().contains(z)) throw domain_error("t_coeff_quadrature: z outside domain");
  const double r = coeff_radius(f.domain(), z);
  const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
  const auto integrand = [&](Complex z1, Complex z2) {
    const Complex num = UniJet::pow_int(z1 - z2, ell) * f(z1, z2);
    const Complex den = UniJet::pow_int((z1 - z) * (z2 - z), ell + 1);
    return num / den;
  };
  return sign * double_contour_integral_auto(integrand, z, r, tol, 64, max_nodes).value;
}

//! Taylor coefficients c_l = R_l f(z) / l!, 0 <= l <= L, via one jet.
inline TSeries t_series(const Holo2& f, Complex z, int L, int jet_order_cap = 16) {
  if (L < 0) throw usage_error("t_series: L must be >= 0");
  if (L > jet_order_cap) throw usage_error("t_series: L exceeds the supported jet order");
  const BiJet jet = bijet_from_fn(f, z, L);
  TSeries s;
  s.z = z;
  s.coeffs.resize(L + 1);
  for (int l = 0; l <= L; ++l) s.coeffs[l] = rc_bracket_from_jet(jet, l) / factorial(l);
  return s;
}

struct RankCertificate {
  int rank = 0;
  bool full = false;
  double smin = 0.0;  // smallest singular value after column normalisation
};

//! Finite-rank injectivity certificate: the linear map sending each monomial
//! zeta1^i zeta2^j (i+j <= d) to its coefficient vector (c_l at d+1 sample
//! points, l <= d) has full column rank (d+1)(d+2)/2.  Sample points sit on
//! a small circle about an interior anchor.
inline RankCertificate injectivity_certificate(int d, Complex anchor = Complex{0.4, 0.3},
                                               double sample_radius = 0.6) {
  if (d < 0 || d > 8) throw usage_error("injectivity_certificate: need 0 <= d <= 8");
  const int cols = (d + 1) * (d + 2) / 2;
  const int rows = (d + 1) * (d + 1);
  Eigen::MatrixXcd m(rows, cols);
  std::vector<Complex> samples(d + 1);
  for (int k = 0; k <= d; ++k) {
    const double th = 2.0 * kPi * k / (d + 1);
    samples[k] = anchor + sample_radius * Complex{std::cos(th), std::sin(th)};
  }
  int col = 0;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j, ++col) {
      const Poly2 mono = Poly2::monomial(i, j);
      int row = 0;
      for (int k = 0; k <= d; ++k) {
        const BiJet jet = mono.jet_at(samples[k], d);
        for (int l = 0; l <= d; ++l, ++row) {
          m(row, col) = rc_bracket_from_jet(jet, l) / factorial(l);
        }
      }
    }
  }
  for (int c = 0; c < cols; ++c) {
    const double n = m.col(c).norm();
    if (!(n > 0.0)) return {0, false, 0.0};
    m.col(c) /= n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (!sv.allFinite()) throw numeric_error("injectivity_certificate: SVD produced non-finite values");
  const double cutoff = std::max(rows, cols) * std::numeric_limits<double>::epsilon() * sv(0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) ++rank;
  }
  return {rank, rank == cols, sv(sv.size() - 1)};
}

}  // namespace rcgen
