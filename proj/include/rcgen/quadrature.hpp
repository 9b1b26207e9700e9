#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "rcgen/types.hpp"

namespace rcgen {

//! One-dimensional quadrature rule: nodes plus weights.
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

namespace detail {

// Newton iteration on the Legendre recurrence; exact for degree <= 2n-1.
inline QuadRule make_gauss_legendre(int n) {
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      // p0 = P_n(z), p1 = P_{n-1}(z)
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

// Gauss-Laguerre nodes with e^{+x}-modified weights, so that
//   int_0^infty G(x) dx  ~=  sum_i w[i] G(x[i])
// for integrands G decaying like e^{-x}.  The recurrence runs on the scaled
// functions L_k(x)e^{-x/2}, which stay bounded, so the modified weights are
// accurate at every node (raw Laguerre weights underflow in the tail).
inline QuadRule make_gauss_laguerre_modified(int n) {
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.x[i - 2]);
    }
    double phi_n = 0.0, phi_nm1 = 0.0;
    for (int it = 0; it < 200; ++it) {
      const double e = std::exp(-0.5 * z);
      double p0 = e, p1 = 0.0;  // phi_k = L_k(z) e^{-z/2}
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0 - z) * p1 - k * p2) / (k + 1.0);
      }
      phi_n = p0;
      phi_nm1 = p1;
      const double dz = z * phi_n / (n * (phi_n - phi_nm1));
      z -= dz;
      if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.x[i] = z;
    // one more recurrence step for phi_{n+1}(z)
    const double phi_np1 = ((2.0 * n + 1.0 - z) * phi_n - n * phi_nm1) / (n + 1.0);
    rule.w[i] = z / ((n + 1.0) * (n + 1.0) * phi_np1 * phi_np1);
  }
  return rule;
}

template <QuadRule (*Maker)(int)>
inline const QuadRule& cached_rule(int n) {
  static std::map<int, QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Maker(n)).first;
  return it->second;
}

}  // namespace detail

//! n-point Gauss-Legendre rule on [-1,1]; cached.
inline const QuadRule& gauss_legendre(int n) {
  if (n < 1 || n > 2048) throw usage_error("gauss_legendre: n out of range");
  return detail::cached_rule<detail::make_gauss_legendre>(n);
}

//! n-point Gauss-Laguerre rule with modified weights (see above); cached.
//! Capped at 128 points: beyond that the scaled recurrence runs out of
//! dynamic range before the rules gain accuracy for our integrands.
inline const QuadRule& gauss_laguerre(int n) {
  if (n < 1 || n > 128) throw usage_error("gauss_laguerre: n out of range");
  return detail::cached_rule<detail::make_gauss_laguerre_modified>(n);
}

//! int_{-1}^{1} f(v) dv with an n-point Gauss-Legendre rule.
template <typename F>
auto integrate_segment(F&& f, int n) {
  const QuadRule& rule = gauss_legendre(n);
  using R = decltype(f(0.0));
  R acc{};
  for (int i = 0; i < rule.size(); ++i) acc += rule.w[i] * f(rule.x[i]);
  return acc;
}

//! int_0^infty f(s) ds for f decaying like e^{-rate s}, via the substitution
//! s = u/rate against the modified Gauss-Laguerre rule.
template <typename F>
auto integrate_half_line(F&& f, double rate, int n) {
  if (!(rate > 0.0)) throw domain_error("integrate_half_line: decay rate must be positive");
  const QuadRule& rule = gauss_laguerre(n);
  using R = decltype(f(0.0));
  R acc{};
  for (int i = 0; i < rule.size(); ++i) acc += rule.w[i] * f(rule.x[i] / rate);
  return acc / rate;
}

}  // namespace rcgen
