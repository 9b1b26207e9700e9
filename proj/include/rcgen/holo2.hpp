#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rcgen/domain.hpp"
#include "rcgen/jet.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//=============================================================================
// Bivariate polynomial with a dense coefficient table; entry (a,b) is the
// coefficient of zeta1^a zeta2^b.
//=============================================================================
class Poly2 {
public:
  Poly2() : rows_(1), cols_(1), c_(1) {}
  Poly2(int deg1, int deg2)
      : rows_(deg1 + 1), cols_(deg2 + 1),
        c_(static_cast<std::size_t>(rows_) * cols_) {
    if (deg1 < 0 || deg2 < 0) throw usage_error("Poly2: negative degree");
  }

  static Poly2 constant(Complex v) {
    Poly2 p;
    p.at(0, 0) = v;
    return p;
  }

  static Poly2 monomial(int a, int b, Complex v = {1.0, 0.0}) {
    Poly2 p(a, b);
    p.at(a, b) = v;
    return p;
  }

  int deg1() const { return rows_ - 1; }
  int deg2() const { return cols_ - 1; }

  Complex coeff(int a, int b) const {
    if (a >= rows_ || b >= cols_) return {};
    return c_[static_cast<std::size_t>(a) * cols_ + b];
  }
  Complex& at(int a, int b) { return c_[static_cast<std::size_t>(a) * cols_ + b]; }

  Complex eval(Complex z1, Complex z2) const {
    Complex acc{};
    for (int a = rows_ - 1; a >= 0; --a) {
      Complex row{};
      for (int b = cols_ - 1; b >= 0; --b) row = row * z2 + coeff(a, b);
      acc = acc * z1 + row;
    }
    return acc;
  }

  Poly2 d1() const {
    if (rows_ == 1) return Poly2();
    Poly2 r(deg1() - 1, deg2());
    for (int a = 1; a < rows_; ++a)
      for (int b = 0; b < cols_; ++b) r.at(a - 1, b) = static_cast<double>(a) * coeff(a, b);
    return r;
  }

  Poly2 d2() const {
    if (cols_ == 1) return Poly2();
    Poly2 r(deg1(), deg2() - 1);
    for (int a = 0; a < rows_; ++a)
      for (int b = 1; b < cols_; ++b) r.at(a, b - 1) = static_cast<double>(b) * coeff(a, b);
    return r;
  }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r(std::max(deg1(), o.deg1()), std::max(deg2(), o.deg2()));
    for (int a = 0; a <= r.deg1(); ++a)
      for (int b = 0; b <= r.deg2(); ++b) r.at(a, b) = coeff(a, b) + o.coeff(a, b);
    return r;
  }

  Poly2 operator*(const Poly2& o) const {
    Poly2 r(deg1() + o.deg1(), deg2() + o.deg2());
    for (int a = 0; a < rows_; ++a)
      for (int b = 0; b < cols_; ++b) {
        const Complex v = coeff(a, b);
        if (v == Complex{}) continue;
        for (int p = 0; p <= o.deg1(); ++p)
          for (int q = 0; q <= o.deg2(); ++q) r.at(a + p, b + q) += v * o.coeff(p, q);
      }
    return r;
  }

  Poly2 scaled(Complex s) const {
    Poly2 r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  double max_coeff() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  //! Exact Taylor coefficients about the diagonal point (z,z).
  BiJet jet_at(Complex z, int order) const {
    BiJet jet(z, order);
    // re-expansion per variable: zeta^a = sum_i C(a,i) z^{a-i} (zeta-z)^i
    for (int i = 0; i <= order; ++i) {
      for (int j = 0; i + j <= order; ++j) {
        Complex acc{};
        for (int a = i; a < rows_; ++a) {
          const Complex za = binomial(a, i) * UniJet::pow_int(z, a - i);
          for (int b = j; b < cols_; ++b) {
            const Complex v = coeff(a, b);
            if (v == Complex{}) continue;
            acc += v * za * binomial(b, j) * UniJet::pow_int(z, b - j);
          }
        }
        jet.at(i, j) = acc;
      }
    }
    return jet;
  }

private:
  int rows_, cols_;
  std::vector<Complex> c_;
};

//! Jet of (zeta1 - zeta2)^k about a diagonal point, exact binomial expansion.
inline BiJet difference_power_jet(int k, Complex center, int order) {
  BiJet j(center, order);
  if (k <= order) {
    for (int i = 0; i <= k; ++i) {
      j.at(i, k - i) = binomial(k, i) * ((k - i) % 2 == 0 ? 1.0 : -1.0);
    }
  }
  return j;
}

//=============================================================================
// Evaluator for a holomorphic function on D x D.  One of three backing
// representations (callback, separable pair, polynomial table), plus
// optional analytic hooks for partial derivatives and exact jets.
//=============================================================================
class Holo2 {
public:
  using Eval2 = std::function<Complex(Complex, Complex)>;
  using Eval1 = std::function<Complex(Complex)>;
  using JetHook = std::function<BiJet(Complex, int)>;
  using UniJetHook = std::function<UniJet(Complex, int)>;

  static Holo2 from_callback(DomainDesc d, Eval2 f) {
    Holo2 h;
    h.domain_ = d;
    h.eval_ = std::move(f);
    return h;
  }

  static Holo2 from_separable(DomainDesc d, Eval1 f1, Eval1 f2) {
    Holo2 h;
    h.domain_ = d;
    h.f1_ = std::move(f1);
    h.f2_ = std::move(f2);
    h.eval_ = [p1 = h.f1_, p2 = h.f2_](Complex a, Complex b) { return p1(a) * p2(b); };
    return h;
  }

  static Holo2 from_polynomial(DomainDesc d, Poly2 p) {
    Holo2 h;
    h.domain_ = d;
    h.poly_ = std::move(p);
    h.has_poly_ = true;
    h.eval_ = [tbl = h.poly_](Complex a, Complex b) { return tbl.eval(a, b); };
    return h;
  }

  Holo2& with_partials(Eval2 d1, Eval2 d2, Eval2 d12) {
    d1_ = std::move(d1);
    d2_ = std::move(d2);
    d12_ = std::move(d12);
    return *this;
  }

  Holo2& with_jet_hook(JetHook hook) {
    jet_hook_ = std::move(hook);
    return *this;
  }

  Holo2& with_separable_jets(UniJetHook j1, UniJetHook j2) {
    sep_jet1_ = std::move(j1);
    sep_jet2_ = std::move(j2);
    return *this;
  }

  Complex operator()(Complex z1, Complex z2) const { return eval_(z1, z2); }

  const DomainDesc& domain() const { return domain_; }
  bool is_polynomial() const { return has_poly_; }
  const Poly2& polynomial() const {
    if (!has_poly_) throw usage_error("Holo2: no polynomial table");
    return poly_;
  }
  bool is_separable() const { return static_cast<bool>(f1_); }
  const Eval1& part1() const { return f1_; }
  const Eval1& part2() const { return f2_; }
  bool has_jet_hook() const { return static_cast<bool>(jet_hook_); }
  const JetHook& jet_hook() const { return jet_hook_; }
  bool has_separable_jets() const { return static_cast<bool>(sep_jet1_); }
  const UniJetHook& separable_jet1() const { return sep_jet1_; }
  const UniJetHook& separable_jet2() const { return sep_jet2_; }
  bool has_partials() const { return static_cast<bool>(d12_); }
  const Eval2& d1() const { return d1_; }
  const Eval2& d2() const { return d2_; }
  const Eval2& d12() const { return d12_; }

private:
  Holo2() = default;

  DomainDesc domain_;
  Eval2 eval_;
  Eval1 f1_, f2_;
  Poly2 poly_;
  bool has_poly_ = false;
  Eval2 d1_, d2_, d12_;
  JetHook jet_hook_;
  UniJetHook sep_jet1_, sep_jet2_;
};

//! Circle radius used for Cauchy jet extraction about z: a quarter of the
//! boundary distance, or a |z|-scaled default on the entire plane.
inline double jet_radius(const DomainDesc& d, Complex z) {
  const double dist = boundary_distance(d, z);
  if (std::isfinite(dist)) return 0.25 * dist;
  return 1.0 + 0.25 * std::abs(z);
}

//! Triangular coefficient array of f about (z,z).  Exact for polynomial
//! tables and hook-backed functions; separable pairs use two univariate
//! extractions; the general path is product Cauchy quadrature.
inline BiJet bijet_from_fn(const Holo2& f, Complex z, int order, double rel_tol = 1e-12,
                           int max_nodes = 1024) {
  if (!f.domain().contains(z)) throw domain_error("bijet_from_fn: center outside domain");
  if (order < 0) throw usage_error("bijet_from_fn: order must be >= 0");
  if (f.has_jet_hook()) return f.jet_hook()(z, order);
  if (f.is_polynomial()) return f.polynomial().jet_at(z, order);
  const double r = jet_radius(f.domain(), z);
  if (f.is_separable()) {
    const UniJet a = f.has_separable_jets()
                         ? f.separable_jet1()(z, order)
                         : unijet_from_callable(f.part1(), z, order, r, rel_tol, 2 * max_nodes);
    const UniJet b = f.has_separable_jets()
                         ? f.separable_jet2()(z, order)
                         : unijet_from_callable(f.part2(), z, order, r, rel_tol, 2 * max_nodes);
    return BiJet::separable(a, b);
  }
  return bijet_from_callable([&f](Complex a, Complex b) { return f(a, b); }, z, order, r,
                             rel_tol, max_nodes);
}

//! Mixed partial d^2 f / d zeta1 d zeta2 at an arbitrary (a,b); used by the
//! verification integrals.  Falls back to iterated Cauchy quadrature when no
//! analytic hook or table is available.
inline Complex holo2_d12(const Holo2& f, Complex a, Complex b) {
  if (f.has_partials()) return f.d12()(a, b);
  if (f.is_polynomial()) return f.polynomial().d1().d2().eval(a, b);
  const double r = 0.25 * std::min(boundary_distance(f.domain(), a),
                                   boundary_distance(f.domain(), b));
  const double rr = std::isfinite(r) && r > 0.0 ? r : 1.0;
  Complex acc{};
  const int m = 32;
  for (int p = 0; p < m; ++p) {
    const double th = 2.0 * kPi * p / m;
    const Complex za = a + rr * Complex{std::cos(th), std::sin(th)};
    Complex inner{};
    for (int q = 0; q < m; ++q) {
      const double ph = 2.0 * kPi * q / m;
      const Complex zb = b + rr * Complex{std::cos(ph), std::sin(ph)};
      inner += f(za, zb) * std::polar(1.0, -ph);
    }
    acc += inner * std::polar(1.0, -th) / static_cast<double>(m);
  }
  return acc / (static_cast<double>(m) * rr * rr);
}

//! First partial in zeta1 (variable=1) or zeta2 (variable=2) at (a,b).
inline Complex holo2_d(const Holo2& f, int variable, Complex a, Complex b) {
  if (f.has_partials()) return variable == 1 ? f.d1()(a, b) : f.d2()(a, b);
  if (f.is_polynomial()) {
    return variable == 1 ? f.polynomial().d1().eval(a, b) : f.polynomial().d2().eval(a, b);
  }
  const Complex center = variable == 1 ? a : b;
  const double dist = boundary_distance(f.domain(), center);
  const double r = std::isfinite(dist) ? 0.25 * dist : 1.0;
  const auto g = [&](Complex zeta) { return variable == 1 ? f(zeta, b) : f(a, zeta); };
  return unijet_from_callable(g, center, 1, r).derivative(1);
}

}  // namespace rcgen
