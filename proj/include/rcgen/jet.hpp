#pragma once

#include <vector>

#include "rcgen/types.hpp"

namespace rcgen {

//=============================================================================
// Truncated Taylor expansions about a point, stored with factorial scaling:
// coefficient k of a UniJet is f^{(k)}(center)/k!, entry (i,j) of a BiJet is
// the mixed partial of total order i+j divided by i! j!.  The scaling keeps
// entries bounded at orders around 20.
//=============================================================================

class UniJet {
public:
  UniJet(Complex center, int order) : center_(center), coeffs_(order + 1) {
    if (order < 0) throw usage_error("UniJet: order must be >= 0");
  }

  static UniJet constant(Complex value, Complex center, int order) {
    UniJet j(center, order);
    j.coeffs_[0] = value;
    return j;
  }

  //! Jet of the identity function zeta about `center`.
  static UniJet variable(Complex center, int order) {
    UniJet j(center, order);
    j.coeffs_[0] = center;
    if (order >= 1) j.coeffs_[1] = 1.0;
    return j;
  }

  //! Exact jet of (a*zeta + b)^p about `center` via the binomial series;
  //! p may be any complex exponent as long as a*center+b is off the cut.
  static UniJet affine_power(Complex a, Complex b, Complex p, Complex center, int order) {
    const Complex base = a * center + b;
    if (std::abs(base) == 0.0) throw domain_error("affine_power: expansion at a branch point");
    UniJet j(center, order);
    Complex c = std::pow(base, p);
    j.coeffs_[0] = c;
    for (int k = 0; k < order; ++k) {
      c *= (p - static_cast<double>(k)) * a / (base * static_cast<double>(k + 1));
      j.coeffs_[k + 1] = c;
    }
    return j;
  }

  //! Exact jet of exp(a*zeta) about `center`.
  static UniJet exponential(Complex a, Complex center, int order) {
    UniJet j(center, order);
    Complex c = std::exp(a * center);
    for (int k = 0; k <= order; ++k) {
      j.coeffs_[k] = c;
      c *= a / static_cast<double>(k + 1);
    }
    return j;
  }

  //! Polynomial with monomial coefficients p_k (about 0), re-expanded about
  //! `center`: coefficient i is sum_k p_k C(k,i) center^{k-i}.
  static UniJet from_polynomial(const std::vector<Complex>& mono, Complex center, int order) {
    UniJet j(center, order);
    for (int i = 0; i <= order; ++i) {
      Complex acc{};
      for (int k = i; k < static_cast<int>(mono.size()); ++k) {
        acc += mono[k] * binomial(k, i) * pow_int(center, k - i);
      }
      j.coeffs_[i] = acc;
    }
    return j;
  }

  Complex center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const { return coeffs_[k]; }
  Complex& coeff(int k) { return coeffs_[k]; }

  //! k-th derivative at the center, k! * coeff(k).
  Complex derivative(int k) const {
    if (k > order()) throw truncation_error("UniJet: derivative order exceeds truncation");
    return factorial(k) * coeffs_[k];
  }

  UniJet operator+(const UniJet& o) const {
    require_same_center(o);
    UniJet r(center_, std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
  }

  UniJet operator*(const UniJet& o) const {
    require_same_center(o);
    UniJet r(center_, std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) {
      Complex acc{};
      for (int p = 0; p <= k; ++p) acc += coeffs_[p] * o.coeffs_[k - p];
      r.coeffs_[k] = acc;
    }
    return r;
  }

  UniJet scaled(Complex s) const {
    UniJet r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  Complex eval(Complex zeta) const {
    const Complex u = zeta - center_;
    Complex acc{};
    for (int k = order(); k >= 0; --k) acc = acc * u + coeffs_[k];
    return acc;
  }

  static Complex pow_int(Complex b, int e) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

private:
  void require_same_center(const UniJet& o) const {
    if (center_ != o.center_) throw usage_error("UniJet: mismatched centers");
  }

  Complex center_;
  std::vector<Complex> coeffs_;
};

//! Extracts the jet of a univariate callable about `center` by trapezoid
//! Cauchy quadrature on a circle of the given radius.  The node count is
//! doubled (reusing evaluations through the even-node subgrid) until the
//! coefficients stabilise to rel_tol or max_nodes is exceeded.
template <typename F>
UniJet unijet_from_callable(F&& f, Complex center, int order, double radius,
                            double rel_tol = 1e-12, int max_nodes = 2048) {
  int m = 64;
  while (m < 4 * (order + 1)) m *= 2;
  double best_err = std::numeric_limits<double>::infinity();
  UniJet best(center, order);
  for (; m <= max_nodes; m *= 2) {
    std::vector<Complex> vals(m);
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * kPi * k / m;
      vals[k] = f(center + radius * Complex{std::cos(th), std::sin(th)});
      if (!is_finite(vals[k])) throw numeric_error("unijet_from_callable: non-finite evaluation");
    }
    UniJet full(center, order), half(center, order);
    for (int i = 0; i <= order; ++i) {
      Complex acc_full{}, acc_half{};
      for (int k = 0; k < m; ++k) {
        const double th = 2.0 * kPi * k / m;
        const Complex term = vals[k] * std::polar(1.0, -i * th);
        acc_full += term;
        if ((k & 1) == 0) acc_half += term;
      }
      const double ri = std::pow(radius, i);
      full.coeff(i) = acc_full / (static_cast<double>(m) * ri);
      half.coeff(i) = acc_half * 2.0 / (static_cast<double>(m) * ri);
    }
    double scale = 1.0, err = 0.0;
    for (int i = 0; i <= order; ++i) scale = std::max(scale, std::abs(full.coeff(i)));
    for (int i = 0; i <= order; ++i) err = std::max(err, std::abs(full.coeff(i) - half.coeff(i)));
    if (err / scale < best_err) {
      best = full;
      best_err = err / scale;
    }
    if (err <= rel_tol * scale) return full;
  }
  if (best_err < 1e-8) return best;  // stabilised short of the request
  throw accuracy_error("unijet_from_callable: coefficients did not stabilise", best.coeff(0),
                       best_err);
}

//=============================================================================
// Bivariate jets about a diagonal point (z,z).
//=============================================================================

class BiJet {
public:
  BiJet(Complex center, int order)
      : center_(center), order_(order),
        coeffs_(static_cast<std::size_t>(order + 1) * (order + 1)) {
    if (order < 0) throw usage_error("BiJet: order must be >= 0");
  }

  static BiJet constant(Complex value, Complex center, int order) {
    BiJet j(center, order);
    j.at(0, 0) = value;
    return j;
  }

  //! Jet of (zeta1 - zeta2).
  static BiJet linear_difference(Complex center, int order) {
    BiJet j(center, order);
    if (order >= 1) {
      j.at(1, 0) = 1.0;
      j.at(0, 1) = -1.0;
    }
    return j;
  }

  //! Tensor product a(zeta1) * b(zeta2); result order = min of the inputs.
  static BiJet separable(const UniJet& a, const UniJet& b) {
    if (a.center() != b.center()) throw usage_error("BiJet::separable: mismatched centers");
    const int n = std::min(a.order(), b.order());
    BiJet j(a.center(), n);
    for (int i = 0; i <= n; ++i)
      for (int k = 0; i + k <= n; ++k) j.at(i, k) = a.coeff(i) * b.coeff(k);
    return j;
  }

  //! Jet of a univariate function of zeta1 alone (or zeta2 alone).
  static BiJet lift(const UniJet& a, int variable, int order) {
    if (variable != 1 && variable != 2) throw usage_error("BiJet::lift: variable must be 1 or 2");
    BiJet j(a.center(), order);
    for (int k = 0; k <= std::min(order, a.order()); ++k) {
      if (variable == 1)
        j.at(k, 0) = a.coeff(k);
      else
        j.at(0, k) = a.coeff(k);
    }
    return j;
  }

  Complex center() const { return center_; }
  int order() const { return order_; }

  Complex coeff(int i, int j) const {
    return (i + j <= order_) ? coeffs_[idx(i, j)] : Complex{};
  }
  Complex& at(int i, int j) { return coeffs_[idx(i, j)]; }

  //! Mixed partial d^{i+j} f / d zeta1^i d zeta2^j at the diagonal center.
  Complex partial(int i, int j) const {
    if (i + j > order_) throw truncation_error("BiJet: partial order exceeds truncation");
    return factorial(i) * factorial(j) * coeffs_[idx(i, j)];
  }

  //! Magnitude of the largest coefficient on the last kept diagonal; the
  //! documented heuristic tail bound.
  double tail_bound() const {
    double m = 0.0;
    for (int i = 0; i <= order_; ++i) m = std::max(m, std::abs(coeff(i, order_ - i)));
    return m;
  }

  double max_coeff() const {
    double m = 0.0;
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j) m = std::max(m, std::abs(coeff(i, j)));
    return m;
  }

  BiJet truncated(int new_order) const {
    if (new_order > order_) throw usage_error("BiJet::truncated: cannot raise the order");
    BiJet r(center_, new_order);
    for (int i = 0; i <= new_order; ++i)
      for (int j = 0; i + j <= new_order; ++j) r.at(i, j) = coeff(i, j);
    return r;
  }

  BiJet operator+(const BiJet& o) const {
    require_same_center(o);
    BiJet r(center_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i)
      for (int j = 0; i + j <= r.order_; ++j) r.at(i, j) = coeff(i, j) + o.coeff(i, j);
    return r;
  }

  //! Truncated Cauchy product; result order = min of the inputs.
  BiJet operator*(const BiJet& o) const {
    require_same_center(o);
    BiJet r(center_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
      for (int j = 0; i + j <= r.order_; ++j) {
        Complex acc{};
        for (int p = 0; p <= i; ++p) {
          for (int q = 0; q <= j; ++q) {
            const Complex a = coeff(p, q);
            if (a == Complex{}) continue;
            acc += a * o.coeff(i - p, j - q);
          }
        }
        r.at(i, j) = acc;
      }
    }
    return r;
  }

  BiJet scaled(Complex s) const {
    BiJet r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  //! Partial derivative in zeta1 (variable=1) or zeta2 (variable=2);
  //! order drops by one.
  BiJet derived(int variable) const {
    if (order_ < 1) throw truncation_error("BiJet::derived: order too small");
    BiJet r(center_, order_ - 1);
    for (int i = 0; i <= r.order_; ++i) {
      for (int j = 0; i + j <= r.order_; ++j) {
        r.at(i, j) = (variable == 1) ? (i + 1.0) * coeff(i + 1, j)
                                     : (j + 1.0) * coeff(i, j + 1);
      }
    }
    return r;
  }

  Complex eval(Complex zeta1, Complex zeta2) const {
    const Complex u = zeta1 - center_, w = zeta2 - center_;
    Complex acc{};
    for (int i = order_; i >= 0; --i) {
      Complex row{};
      for (int j = order_ - i; j >= 0; --j) row = row * w + coeff(i, j);
      acc = acc * u + row;
    }
    return acc;
  }

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * (order_ + 1) + j;
  }
  void require_same_center(const BiJet& o) const {
    if (center_ != o.center_) throw usage_error("BiJet: mismatched centers");
  }

  Complex center_;
  int order_;
  std::vector<Complex> coeffs_;
};

//! Extracts the full triangular coefficient array of f(zeta1,zeta2) about
//! (center,center) by product Cauchy quadrature on two circles of the given
//! radius, doubling nodes until the coefficients stabilise.  The tabulated
//! function values are reused for the half-resolution error estimate.
template <typename F>
BiJet bijet_from_callable(F&& f, Complex center, int order, double radius,
                          double rel_tol = 1e-12, int max_nodes = 1024) {
  int m = 64;
  while (m < 4 * (order + 1)) m *= 2;
  double best_err = std::numeric_limits<double>::infinity();
  BiJet best(center, order);
  for (; m <= max_nodes; m *= 2) {
    std::vector<Complex> vals(static_cast<std::size_t>(m) * m);
    std::vector<Complex> nodes(m);
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * kPi * k / m;
      nodes[k] = center + radius * Complex{std::cos(th), std::sin(th)};
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        vals[static_cast<std::size_t>(a) * m + b] = f(nodes[a], nodes[b]);
        if (!is_finite(vals[static_cast<std::size_t>(a) * m + b])) {
          throw numeric_error("bijet_from_callable: non-finite evaluation");
        }
      }
    }
    auto extract = [&](int stride) {
      const int mm = m / stride;
      // stage 1: DFT over the second index for each first-node row
      std::vector<Complex> partial(static_cast<std::size_t>(mm) * (order + 1));
      for (int a = 0; a < mm; ++a) {
        for (int j = 0; j <= order; ++j) {
          Complex acc{};
          for (int b = 0; b < mm; ++b) {
            const double th = 2.0 * kPi * b / mm;
            acc += vals[static_cast<std::size_t>(a * stride) * m + b * stride] *
                   std::polar(1.0, -j * th);
          }
          partial[static_cast<std::size_t>(a) * (order + 1) + j] = acc;
        }
      }
      // stage 2: DFT over the first index
      BiJet jet(center, order);
      for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
          Complex acc{};
          for (int a = 0; a < mm; ++a) {
            const double th = 2.0 * kPi * a / mm;
            acc += partial[static_cast<std::size_t>(a) * (order + 1) + j] *
                   std::polar(1.0, -i * th);
          }
          const double rij = std::pow(radius, i + j);
          jet.at(i, j) = acc / (static_cast<double>(mm) * mm * rij);
        }
      }
      return jet;
    };
    const BiJet full = extract(1);
    const BiJet half = extract(2);
    double scale = 1.0, err = 0.0;
    for (int i = 0; i <= order; ++i) {
      for (int j = 0; i + j <= order; ++j) {
        scale = std::max(scale, std::abs(full.coeff(i, j)));
        err = std::max(err, std::abs(full.coeff(i, j) - half.coeff(i, j)));
      }
    }
    if (err / scale < best_err) {
      best = full;
      best_err = err / scale;
    }
    if (err <= rel_tol * scale) return full;
  }
  if (best_err < 1e-8) return best;
  throw accuracy_error("bijet_from_callable: coefficients did not stabilise",
                       best.coeff(0, 0), best_err);
}

}  // namespace rcgen
