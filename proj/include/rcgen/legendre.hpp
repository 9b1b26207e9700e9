#pragma once

#include <vector>

#include "rcgen/quadrature.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! P_l(v) by the three-term recurrence, normalised so P_l(1) = 1.
inline double legendre(int ell, double v) {
  if (ell < 0 || ell > 64) throw usage_error("legendre: need 0 <= l <= 64");
  double p0 = 1.0, p1 = 0.0;
  for (int k = 0; k < ell; ++k) {
    const double p2 = p1;
    p1 = p0;
    p0 = ((2.0 * k + 1.0) * v * p1 - k * p2) / (k + 1.0);
  }
  return p0;
}

//! P_l(v) by the explicit sum 2^{-l} sum_j C(l,j)^2 (v-1)^{l-j} (v+1)^j;
//! an independent route used to cross-check the recurrence at small l.
inline double legendre_explicit_sum(int ell, double v) {
  if (ell < 0 || ell > 25) throw usage_error("legendre_explicit_sum: l too large for exact binomials");
  double acc = 0.0;
  for (int j = 0; j <= ell; ++j) {
    const double c = binomial(ell, j);
    acc += c * c * std::pow(v - 1.0, ell - j) * std::pow(v + 1.0, j);
  }
  return std::ldexp(acc, -ell);
}

//! Monomial-basis coefficient rows of P_0..P_L.
class LegendreTable {
public:
  explicit LegendreTable(int max_degree) : rows_(max_degree + 1) {
    if (max_degree < 0 || max_degree > 64) throw usage_error("LegendreTable: bad degree");
    rows_[0] = {1.0};
    if (max_degree >= 1) rows_[1] = {0.0, 1.0};
    for (int l = 2; l <= max_degree; ++l) {
      std::vector<double> row(l + 1, 0.0);
      for (int k = 0; k < l; ++k) row[k + 1] += (2.0 * l - 1.0) * rows_[l - 1][k] / l;
      for (int k = 0; k <= l - 2; ++k) row[k] -= (l - 1.0) * rows_[l - 2][k] / l;
      rows_[l] = std::move(row);
    }
  }

  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<double>& row(int ell) const { return rows_[ell]; }

  static double eval(const std::vector<double>& coeffs, double v) {
    double acc = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * v + coeffs[k];
    return acc;
  }

private:
  std::vector<std::vector<double>> rows_;
};

//! int_{-1}^{1} P_l P_l' dv by Gauss-Legendre quadrature (exact node count);
//! the orthogonality contract pins this to 2/(2l+1) delta_{ll'}.
inline double legendre_norm(int ell, int ellp) {
  if (ell < 0 || ell > 64 || ellp < 0 || ellp > 64) throw usage_error("legendre_norm: l out of range");
  const int n = (ell + ellp) / 2 + 1;
  return integrate_segment([&](double v) { return legendre(ell, v) * legendre(ellp, v); }, n);
}

//! (1-v^2) p'' - 2v p' on a monomial coefficient row.
inline std::vector<double> ptilde_apply(const std::vector<double>& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  std::vector<double> out(p.size(), 0.0);
  for (int k = 2; k <= deg; ++k) out[k - 2] += k * (k - 1.0) * p[k];  // p''
  for (int k = 2; k <= deg; ++k) out[k] -= k * (k - 1.0) * p[k];      // -v^2 p''
  for (int k = 1; k <= deg; ++k) out[k] -= 2.0 * k * p[k];            // -2v p'
  return out;
}

//! max over samples of |(ptilde + l(l+1)) P_l|; the Legendre ODE residual.
inline double ptilde_check(int ell, const std::vector<double>& v_samples) {
  if (ell < 0 || ell > 20) throw usage_error("ptilde_check: need 0 <= l <= 20");
  const LegendreTable table(ell);
  std::vector<double> residual = ptilde_apply(table.row(ell));
  const double lam = static_cast<double>(ell) * (ell + 1.0);
  for (std::size_t k = 0; k < table.row(ell).size(); ++k) residual[k] += lam * table.row(ell)[k];
  double m = 0.0;
  for (double v : v_samples) m = std::max(m, std::abs(LegendreTable::eval(residual, v)));
  return m;
}

}  // namespace rcgen
