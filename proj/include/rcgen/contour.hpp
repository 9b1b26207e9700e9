#pragma once

#include <vector>

#include "rcgen/domain.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! The quadratic kernel denominator (zeta1-z)(zeta2-z) + t(zeta1-zeta2).
inline Complex q_eval(Complex zeta1, Complex zeta2, Complex z, Complex t) {
  return (zeta1 - z) * (zeta2 - z) + t * (zeta1 - zeta2);
}

//! Circle of integration: center, radius, node count for the trapezoid rule.
struct Contour {
  Complex center;
  double radius = 0.0;
  int nodes = 64;

  Contour(Complex c, double r, int n) : center(c), radius(r), nodes(n) {
    if (!(r > 0.0)) throw usage_error("Contour: radius must be positive");
    if (n < 8) throw usage_error("Contour: need at least 8 nodes");
  }
};

//! True iff the torus of equal circles of radius r about z avoids the zero
//! set of the kernel denominator.  Uses the sufficient bound
//! |(zeta1-z)(zeta2-z)| = r^2 > 2 r |t| >= |t (zeta1-zeta2)|.
inline bool admissible(Complex z, Complex t, double r, const DomainDesc& d) {
  if (!(r < boundary_distance(d, z))) {
    throw domain_error("admissible: contour radius reaches the domain boundary");
  }
  return 2.0 * std::abs(t) < r;
}

struct QuadResult {
  Complex value;
  double err_estimate = 0.0;
  int nodes = 0;  // per-circle node count that produced the value
};

namespace detail {

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace detail

//! Product trapezoid grid on a pair of circles.  Node counts must be powers
//! of two so the half-resolution subgrid reuses the same nodes for the
//! error estimate.
class TorusGrid {
public:
  TorusGrid(const Contour& c1, const Contour& c2) : c1_(c1), c2_(c2) {
    if (!detail::is_power_of_two(c1.nodes) || !detail::is_power_of_two(c2.nodes)) {
      throw usage_error("TorusGrid: node counts must be powers of two");
    }
    fill(c1_, z1_);
    fill(c2_, z2_);
  }

  const Contour& contour1() const { return c1_; }
  const Contour& contour2() const { return c2_; }
  const std::vector<Complex>& nodes1() const { return z1_; }
  const std::vector<Complex>& nodes2() const { return z2_; }

  //! (2 pi i)^{-2} closed double integral of F over the torus, with an error
  //! estimate from comparing against the half-resolution subgrid.
  template <typename F>
  QuadResult integrate(F&& f) const {
    std::vector<Complex> values(static_cast<std::size_t>(c1_.nodes) * c2_.nodes);
    for (int j = 0; j < c1_.nodes; ++j) {
      for (int k = 0; k < c2_.nodes; ++k) {
        values[static_cast<std::size_t>(j) * c2_.nodes + k] = f(z1_[j], z2_[k]);
      }
    }
    return integrate_values(values);
  }

  //! Same reduction for an integrand tabulated on the grid (row-major,
  //! nodes1 x nodes2).  Reduction order is fixed, so results do not depend
  //! on how the table was produced.
  QuadResult integrate_values(const std::vector<Complex>& values) const {
    const int m1 = c1_.nodes, m2 = c2_.nodes;
    if (static_cast<int>(values.size()) != m1 * m2) {
      throw usage_error("integrate_values: size mismatch");
    }
    Complex full{}, half{};
    for (int j = 0; j < m1; ++j) {
      const Complex w1 = z1_[j] - c1_.center;
      Complex row{}, row_half{};
      for (int k = 0; k < m2; ++k) {
        const Complex v = values[static_cast<std::size_t>(j) * m2 + k];
        if (!is_finite(v)) {
          throw numeric_error("double_contour_integral: non-finite integrand at node (" +
                              std::to_string(j) + "," + std::to_string(k) + ")");
        }
        const Complex term = v * (z2_[k] - c2_.center);
        row += term;
        if ((k & 1) == 0) row_half += term;
      }
      full += w1 * row;
      if ((j & 1) == 0) half += w1 * row_half;
    }
    const Complex value = full / static_cast<double>(m1 * m2);
    const Complex value_half = half * (4.0 / static_cast<double>(m1 * m2));
    return {value, std::abs(value - value_half), m1};
  }

  //! Smallest |Q| over the grid, used as a runtime near-singularity guard.
  double min_abs_q(Complex z, Complex t) const {
    double m = std::numeric_limits<double>::infinity();
    for (Complex a : z1_)
      for (Complex b : z2_) m = std::min(m, std::abs(q_eval(a, b, z, t)));
    return m;
  }

private:
  static void fill(const Contour& c, std::vector<Complex>& out) {
    out.resize(c.nodes);
    for (int k = 0; k < c.nodes; ++k) {
      const double th = 2.0 * kPi * k / c.nodes;
      out[k] = c.center + c.radius * Complex{std::cos(th), std::sin(th)};
    }
  }

  Contour c1_, c2_;
  std::vector<Complex> z1_, z2_;
};

//! (2 pi i)^{-2} closed double integral of F over the given torus.
template <typename F>
QuadResult double_contour_integral(F&& f, const TorusGrid& grid) {
  return grid.integrate(std::forward<F>(f));
}

//! (2 pi i)^{-1} closed single integral of f over a circle, trapezoid rule,
//! with the same half-grid error estimate.
template <typename F>
QuadResult single_contour_integral(F&& f, const Contour& c) {
  if (!detail::is_power_of_two(c.nodes)) {
    throw usage_error("single_contour_integral: node count must be a power of two");
  }
  Complex full{}, half{};
  for (int k = 0; k < c.nodes; ++k) {
    const double th = 2.0 * kPi * k / c.nodes;
    const Complex zeta = c.center + c.radius * Complex{std::cos(th), std::sin(th)};
    const Complex v = f(zeta);
    if (!is_finite(v)) {
      throw numeric_error("single_contour_integral: non-finite integrand at node " +
                          std::to_string(k));
    }
    const Complex term = v * (zeta - c.center);
    full += term;
    if ((k & 1) == 0) half += term;
  }
  const Complex value = full / static_cast<double>(c.nodes);
  const Complex value_half = half * (2.0 / static_cast<double>(c.nodes));
  return {value, std::abs(value - value_half), c.nodes};
}

//! Doubles the node count from `start_nodes` until the internal error
//! estimate drops below tol (relative to max(1,|value|)) or max_nodes is
//! exceeded, in which case an accuracy_error carrying the best value is
//! thrown.
template <typename F>
QuadResult double_contour_integral_auto(F&& f, Complex center, double radius, double tol,
                                        int start_nodes = 64, int max_nodes = 4096) {
  QuadResult best{};
  for (int m = start_nodes; m <= max_nodes; m *= 2) {
    const TorusGrid grid(Contour(center, radius, m), Contour(center, radius, m));
    best = grid.integrate(f);
    if (best.err_estimate <= tol * std::max(1.0, std::abs(best.value))) return best;
  }
  throw accuracy_error("double contour quadrature stalled above tolerance", best.value,
                       best.err_estimate);
}

template <typename F>
QuadResult single_contour_integral_auto(F&& f, Complex center, double radius, double tol,
                                        int start_nodes = 64, int max_nodes = 4096) {
  QuadResult best{};
  for (int m = start_nodes; m <= max_nodes; m *= 2) {
    best = single_contour_integral(f, Contour(center, radius, m));
    if (best.err_estimate <= tol * std::max(1.0, std::abs(best.value))) return best;
  }
  throw accuracy_error("single contour quadrature stalled above tolerance", best.value,
                       best.err_estimate);
}

}  // namespace rcgen
