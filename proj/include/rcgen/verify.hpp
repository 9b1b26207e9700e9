#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rcgen/brackets.hpp"
#include "rcgen/contour.hpp"
#include "rcgen/covariance.hpp"
#include "rcgen/genop.hpp"
#include "rcgen/hardy.hpp"
#include "rcgen/holography.hpp"
#include "rcgen/legendre.hpp"
#include "rcgen/pde.hpp"
#include "rcgen/residues.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

struct RunConfig {
  double tolerance = 1e-9;
  int max_nodes = 4096;
  int jet_order_cap = 16;
  std::string format = "json";  // json | csv
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace verify_detail {

inline CheckResult make(const std::string& name, double residual, double tolerance) {
  return {name, residual, tolerance, residual <= tolerance};
}

inline Rng check_rng(const RunConfig& cfg, const std::string& name) {
  return Rng(derive_seed(cfg.seed, name));
}

inline Poly2 random_poly(Rng& rng, int total_degree, double half_width = 1.0) {
  Poly2 p(total_degree, total_degree);
  for (int a = 0; a <= total_degree; ++a) {
    for (int b = 0; a + b <= total_degree; ++b) p.at(a, b) = rng.complex_in_box(half_width);
  }
  return p;
}

inline MobiusElem random_mobius(Rng& rng, double c_cap = 0.5) {
  for (;;) {
    double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
    double c = rng.uniform(-1.0, 1.0), d = rng.uniform(-1.0, 1.0);
    const double det = a * d - b * c;
    if (std::abs(det) < 0.05) continue;
    const double s = std::sqrt(std::abs(det));
    a /= s; b /= s; c /= s; d /= s;
    if (det < 0.0) { c = -c; d = -d; }
    if (std::abs(c) > c_cap) continue;
    return MobiusElem(a, b, c, d);
  }
}

//=============================================================================
// gate: foundational invariants of the jet algebra, the contour engine and
// the bracket operators.
//=============================================================================
inline void suite_gate(const RunConfig& cfg, std::vector<CheckResult>& out) {
  {  // d/dz of a mixed partial equals the sum of the two raised partials
    Rng rng = check_rng(cfg, "gate/jet-diagonal-chain");
    const Poly2 p = random_poly(rng, 5);
    const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
    const Complex z{0.3, -0.2};
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; i + j <= 2; ++j) {
        const Complex up = bijet_from_fn(f, z + h, 4).partial(i, j);
        const Complex dn = bijet_from_fn(f, z - h, 4).partial(i, j);
        const Complex fd = (up - dn) / (2.0 * h);
        const BiJet jet = bijet_from_fn(f, z, 4);
        const Complex chain = jet.partial(i + 1, j) + jet.partial(i, j + 1);
        worst = std::max(worst, rel_diff(fd, chain, 1.0));
      }
    }
    out.push_back(make("gate/jet-diagonal-chain", worst, 1e-6));
  }
  {  // quadrature extraction is exact on polynomials once order >= degree
    Rng rng = check_rng(cfg, "gate/jet-poly-exact");
    const Poly2 p = random_poly(rng, 6);
    const Holo2 opaque = Holo2::from_callback(DomainDesc::disk({0.0, 0.0}, 2.0),
                                              [p](Complex a, Complex b) { return p.eval(a, b); });
    const Complex z{0.4, 0.2};
    const BiJet viaq = bijet_from_fn(opaque, z, 6);
    const BiJet exact = p.jet_at(z, 6);
    double worst = 0.0;
    const double scale = std::max(1.0, exact.max_coeff());
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j)
        worst = std::max(worst, std::abs(viaq.coeff(i, j) - exact.coeff(i, j)) / scale);
    out.push_back(make("gate/jet-poly-exact", worst, 1e-13));
  }
  {  // Cauchy product associativity/commutativity on random order-6 jets
    Rng rng = check_rng(cfg, "gate/jet-cauchy-algebra");
    double worst = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
      const Complex z = rng.complex_in_box(0.5);
      BiJet a(z, 6), b(z, 6), c(z, 6);
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
          a.at(i, j) = rng.complex_in_box(1.0);
          b.at(i, j) = rng.complex_in_box(1.0);
          c.at(i, j) = rng.complex_in_box(1.0);
        }
      }
      const BiJet ab_c = (a * b) * c;
      const BiJet a_bc = a * (b * c);
      const BiJet ab = a * b;
      const BiJet ba = b * a;
      double scale = std::max(1.0, ab_c.max_coeff());
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
          worst = std::max(worst, std::abs(ab_c.coeff(i, j) - a_bc.coeff(i, j)) / scale);
          worst = std::max(worst, std::abs(ab.coeff(i, j) - ba.coeff(i, j)) / scale);
        }
      }
    }
    out.push_back(make("gate/jet-cauchy-algebra", worst, 1e-13));
  }
  {  // trapezoid rule hits the rounding floor on Cauchy kernels
    const Complex z{0.5, 0.1};
    double worst = 1.0;
    const TorusGrid grid(Contour(z, 1.0, 64), Contour(z, 1.0, 64));
    const QuadResult r = grid.integrate([&](Complex a, Complex b) {
      return a * b / ((a - z) * (b - z));
    });
    worst = rel_diff(r.value, z * z, 1.0);
    out.push_back(make("gate/contour-cauchy-formula", worst, 1e-13));
  }
  {  // drift under an admissible radius change
    Rng rng = check_rng(cfg, "gate/contour-homotopy");
    const Complex z{0.2, 0.4};
    const Complex t{0.05, 0.02};
    const Poly2 p = random_poly(rng, 4);
    const auto integrand = [&](Complex a, Complex b) {
      return p.eval(a, b) / q_eval(a, b, z, t);
    };
    const QuadResult r1 = double_contour_integral_auto(integrand, z, 0.8, 1e-12);
    const QuadResult r2 = double_contour_integral_auto(integrand, z, 1.3, 1e-12);
    out.push_back(make("gate/contour-homotopy", rel_diff(r1.value, r2.value, 1.0), 1e-10));
  }
  {  // brackets annihilate low-degree polynomials
    Rng rng = check_rng(cfg, "gate/bracket-annihilation");
    double worst = 0.0;
    for (int ell = 1; ell <= 6; ++ell) {
      const Poly2 p = random_poly(rng, ell - 1);
      const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
      worst = std::max(worst, std::abs(rc_bracket(f, ell, Complex{0.3, 0.7})));
    }
    out.push_back(make("gate/bracket-annihilation", worst, 1e-10));
  }
  {  // bracket of the l-th difference power is the known constant
    double worst = 0.0;
    for (int ell = 0; ell <= 10; ++ell) {
      Poly2 diff_pow = Poly2::constant({1.0, 0.0});
      const Poly2 diff = Poly2::monomial(1, 0) + Poly2::monomial(0, 1).scaled(-1.0);
      for (int k = 0; k < ell; ++k) diff_pow = diff_pow * diff;
      const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), diff_pow);
      const Complex got = rc_bracket(f, ell, Complex{0.1, 0.2});
      const double expected = factorial(2 * ell) / factorial(ell);
      worst = std::max(worst, rel_diff(got, Complex{expected, 0.0}));
    }
    out.push_back(make("gate/bracket-difference-power", worst, 1e-11));
  }
  {  // swap antisymmetry
    Rng rng = check_rng(cfg, "gate/bracket-antisymmetry");
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      const Poly2 p = random_poly(rng, 5);
      Poly2 swapped(p.deg2(), p.deg1());
      for (int a = 0; a <= p.deg1(); ++a)
        for (int b = 0; b <= p.deg2(); ++b) swapped.at(b, a) = p.coeff(a, b);
      const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
      const Holo2 fs = Holo2::from_polynomial(DomainDesc::entire_plane(), swapped);
      const Complex z = rng.complex_in_box(0.8);
      for (int ell = 0; ell <= 5; ++ell) {
        const Complex lhs = rc_bracket(fs, ell, z);
        const Complex rhs = (ell % 2 == 0 ? 1.0 : -1.0) * rc_bracket(f, ell, z);
        worst = std::max(worst, rel_diff(lhs, rhs, 1.0));
      }
    }
    out.push_back(make("gate/bracket-antisymmetry", worst, 1e-12));
  }
  {  // squared-binomial sum against direct summation
    double worst = 0.0;
    for (int ell = 0; ell <= 30; ++ell) {
      long double direct = 0.0L;
      for (int j = 0; j <= ell; ++j) {
        const long double c = static_cast<long double>(binomial_u64(ell, j));
        direct += c * c;
      }
      worst = std::max(worst, std::abs(static_cast<double>(direct - binom_sq_sum(ell))));
    }
    out.push_back(make("gate/binom-sq-sum", worst, 0.5));
  }
}

//=============================================================================
// genop: the transform, its series form, and the rank certificate.
//=============================================================================
inline void suite_genop(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  {  // kernel-expanded quadrature route against the jet route
    Rng rng = check_rng(cfg, "genop/coefficient-routes");
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      const Poly2 p = random_poly(rng, 6);
      const Holo2 f = Holo2::from_polynomial(disk, p);
      const Complex z = rng.complex_in_box(0.6);
      const TSeries series = t_series(f, z, 8);
      const double scale = std::max(series.max_coeff(), 1e-6);
      for (int ell = 0; ell <= 8; ++ell) {
        const Complex quad = t_coeff_quadrature(f, ell, z, cfg.tolerance, cfg.max_nodes);
        worst = std::max(worst, std::abs(quad - series.coeffs[ell]) / scale);
      }
    }
    out.push_back(make("genop/coefficient-routes", worst, 1e-9));
  }
  {  // partial sums of the series approach the quadrature value
    Rng rng = check_rng(cfg, "genop/series-tail");
    const Poly2 p = random_poly(rng, 6);
    const Holo2 f = Holo2::from_polynomial(disk, p);
    const Complex z{0.3, -0.4};
    const double dist = boundary_distance(disk, z);
    const Complex t{0.25 * dist, 0.0};  // half of the admissible bound
    const Complex full = t_eval_quadrature(f, z, t, cfg.tolerance, cfg.max_nodes).value;
    const TSeries series = t_series(f, z, 12);
    double prev_err = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int L = 0; L <= 12; L += 3) {
      TSeries head{series.z, {series.coeffs.begin(), series.coeffs.begin() + L + 1}};
      const double err = std::abs(full - head.eval(t));
      if (err > prev_err + 1e-12 * std::abs(full) && L <= 6) monotone = false;
      prev_err = err;
    }
    const double final_rel = prev_err / std::max(std::abs(full), 1e-6);
    out.push_back(make("genop/series-tail", monotone ? final_rel : 1.0, 1e-8));
  }
  {  // closed form for the model family
    double worst = 0.0;
    for (int ell = 0; ell <= 6; ++ell) {
      const Holo2 f = eigen_family(ell);
      for (const Complex z : {Complex{0.0, 2.0}, Complex{1.0, 3.0}}) {
        const Complex t{0.2 * z.imag(), 0.0};
        const Complex got = t_eval_quadrature(f, z, t, cfg.tolerance, cfg.max_nodes).value;
        const Complex expected = eigen_family_transform(ell, z, t);
        worst = std::max(worst, rel_diff(got, expected));
      }
    }
    out.push_back(make("genop/model-family-closed-form", worst, 1e-8));
  }
  {  // diagonal restriction at t = 0
    Rng rng = check_rng(cfg, "genop/diagonal-restriction");
    const Poly2 p = random_poly(rng, 5);
    const Holo2 f = Holo2::from_polynomial(disk, p);
    const Complex z{-0.2, 0.5};
    const Complex direct = t_eval_at_zero(f, z);
    const Complex quad = t_eval_quadrature(f, z, Complex{}, cfg.tolerance, cfg.max_nodes).value;
    out.push_back(make("genop/diagonal-restriction", rel_diff(direct, quad, 1.0), 1e-10));
  }
  {  // homotopy stability of the transform value
    Rng rng = check_rng(cfg, "genop/homotopy-stability");
    const Poly2 p = random_poly(rng, 5);
    const Holo2 f = Holo2::from_polynomial(disk, p);
    const Complex z{0.1, 0.3};
    const Complex t{0.08, -0.05};
    const auto integrand = [&](Complex a, Complex b) {
      return f(a, b) / q_eval(a, b, z, t);
    };
    const QuadResult r1 = double_contour_integral_auto(integrand, z, 0.7, 1e-12);
    const QuadResult r2 = double_contour_integral_auto(integrand, z, 1.2, 1e-12);
    out.push_back(make("genop/homotopy-stability", rel_diff(r1.value, r2.value, 1.0), 1e-10));
  }
  {  // rank certificate on polynomial subspaces
    double worst_smin = 1.0;
    bool all_full = true;
    for (int d = 0; d <= 6; ++d) {
      const RankCertificate cert = injectivity_certificate(d);
      all_full = all_full && cert.full;
      worst_smin = std::min(worst_smin, cert.smin);
    }
    out.push_back(make("genop/injectivity-rank", all_full ? (worst_smin > 1e-8 ? 0.0 : 1.0) : 1.0,
                       0.5));
  }
}

//=============================================================================
// pde: the second-order operator and its eigenstructure.
//=============================================================================
inline void suite_pde(const RunConfig& cfg, std::vector<CheckResult>& out) {
  {  // Euler-operator identity on random polynomials
    Rng rng = check_rng(cfg, "pde/euler-identity");
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      const Poly2 p = random_poly(rng, 5);
      const Holo2 f = Holo2::from_polynomial(DomainDesc::entire_plane(), p);
      worst = std::max(worst, euler_identity_residual(f, rng.complex_in_box(0.5), 8));
    }
    out.push_back(make("pde/euler-identity", worst, 1e-9));
  }
  {  // model member: residual small and the series supported at one index
    const Holo2 f2 = eigen_family(2);
    const Complex z{0.3, 1.8};
    const double res = euler_identity_residual(f2, z, 6);
    const TSeries series = t_series(f2, z, 6);
    double off_support = 0.0;
    for (int l = 0; l <= 6; ++l) {
      if (l != 2) off_support = std::max(off_support, std::abs(series.coeffs[l]));
    }
    const double scale = std::max(std::abs(series.coeffs[2]), 1e-12);
    out.push_back(make("pde/euler-identity-model", std::max(res, off_support / scale), 1e-9));
  }
  {  // eigenvalue support of mixtures
    Rng rng = check_rng(cfg, "pde/eigen-support-mixture");
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<std::pair<int, Complex>> parts;
      std::vector<bool> present(5, false);
      for (int l = 0; l <= 4; ++l) {
        if (rng.uniform() < 0.5) continue;
        present[l] = true;
        parts.push_back({l, rng.complex_in_box(1.0) + Complex{0.2, 0.0}});
      }
      if (parts.empty()) {
        parts.push_back({1, Complex{1.0, 0.0}});
        present[1] = true;
      }
      const Holo2 f = eigen_family_mixture(parts);
      const Complex z{0.2, 2.2};
      const TSeries series = t_series(f, z, 6);
      const double scale = std::max(series.max_coeff(), 1e-12);
      for (int l = 0; l <= 6; ++l) {
        const bool on = l <= 4 && present[l];
        if (!on) {
          worst = std::max(worst, std::abs(series.coeffs[l]) / scale);
          continue;
        }
        Complex coef{};
        for (const auto& [pl, pc] : parts) {
          if (pl == l) coef = pc;
        }
        const Complex expected = coef * eigen_family_transform(l, z, Complex{1.0, 0.0});
        worst = std::max(worst, rel_diff(series.coeffs[l], expected, scale));
      }
    }
    out.push_back(make("pde/eigen-support-mixture", worst, 1e-9));
  }
  {  // eigen residual: member l sits in its eigenspace, and only in its own
    const std::vector<Complex> samples{{0.1, 1.6}, {-0.4, 2.1}};
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l) {
      worst = std::max(worst, eigen_residual(eigen_family(l), l, samples));
    }
    out.push_back(make("pde/eigen-residual-model", worst, 1e-10));

    // separation: testing f_1 against l=2 must equal 4 * the jet scale
    const Holo2 f1 = eigen_family(1);
    const double res = eigen_residual(f1, 2, samples);
    double scale = 0.0;
    for (Complex z : samples) scale = std::max(scale, bijet_from_fn(f1, z, 6).max_coeff());
    out.push_back(make("pde/eigen-residual-separation",
                       std::abs(res - 4.0 * scale) / (4.0 * scale), 1e-10));
  }
  {  // linearity and the (1,1) specialisation of the general operator
    Rng rng = check_rng(cfg, "pde/linearity");
    const Poly2 p = random_poly(rng, 4);
    const Poly2 q = random_poly(rng, 4);
    const Complex ca = rng.complex_in_box(1.0);
    const Complex cb = rng.complex_in_box(1.0);
    const Poly2 combo = p.scaled(ca) + q.scaled(cb);
    const Poly2 lhs = apply_p(combo);
    const Poly2 rhs = apply_p(p).scaled(ca) + apply_p(q).scaled(cb);
    double worst = 0.0;
    double scale = std::max({1.0, lhs.max_coeff(), rhs.max_coeff()});
    for (int a = 0; a <= lhs.deg1(); ++a)
      for (int b = 0; b <= lhs.deg2(); ++b)
        worst = std::max(worst, std::abs(lhs.coeff(a, b) - rhs.coeff(a, b)) / scale);
    const Poly2 spec = apply_p_general(p, Complex{1.0, 0.0}, Complex{1.0, 0.0});
    const Poly2 plain = apply_p(p);
    for (int a = 0; a <= plain.deg1(); ++a)
      for (int b = 0; b <= plain.deg2(); ++b)
        worst = std::max(worst, std::abs(spec.coeff(a, b) - plain.coeff(a, b)));
    out.push_back(make("pde/linearity-and-specialisation", worst, 1e-12));
  }
}

//=============================================================================
// holography: the segment transform and the exact inversion.
//=============================================================================
inline void suite_holography(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const DomainDesc disk = DomainDesc::disk({0.0, 0.0}, 2.0);
  {  // inversion constants across degrees and orders
    Rng rng = check_rng(cfg, "holography/inversion-constant");
    double worst = 0.0;
    for (int ell = 0; ell <= 8; ++ell) {
      std::vector<Complex> g(6);
      for (auto& c : g) c = rng.complex_in_box(1.0);
      g[0] += Complex{1.5, 0.0};  // keep g(z) away from zero
      const Complex got = inversion_check(g, ell, Complex{0.3, 0.2}, disk);
      worst = std::max(worst, rel_diff(got, Complex{inversion_constant(ell), 0.0}));
    }
    out.push_back(make("holography/inversion-constant", worst, 1e-10));
  }
  {  // image sits in the expected eigenspace
    Rng rng = check_rng(cfg, "holography/eigen-membership");
    double worst = 0.0;
    const std::vector<Complex> samples{{0.2, 0.1}, {-0.3, 0.4}};
    for (int ell = 0; ell <= 4; ++ell) {
      std::vector<Complex> g(4);
      for (auto& c : g) c = rng.complex_in_box(1.0);
      worst = std::max(worst, psi_eigen_check(g, ell, samples, disk));
    }
    out.push_back(make("holography/eigen-membership", worst, 1e-9));
  }
  {  // swap parity of the lifted function
    Rng rng = check_rng(cfg, "holography/swap-parity");
    double worst = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
      std::vector<Complex> g(4);
      for (auto& c : g) c = rng.complex_in_box(1.0);
      const Holo2 lifted = psi_holo2(g, ell, disk);
      for (int rep = 0; rep < 4; ++rep) {
        const Complex z1 = rng.complex_in_box(0.8);
        const Complex z2 = rng.complex_in_box(0.8);
        const Complex lhs = lifted(z2, z1);
        const Complex rhs = (ell % 2 == 0 ? 1.0 : -1.0) * lifted(z1, z2);
        worst = std::max(worst, rel_diff(lhs, rhs, 1.0));
      }
    }
    out.push_back(make("holography/swap-parity", worst, 1e-12));
  }
  {  // entire non-polynomial input through the adaptive path
    const auto g = [](Complex w) { return std::exp(kI * w); };
    const std::vector<Complex> samples{{0.1, 0.2}};
    const double res = psi_eigen_check(g, 1, samples, disk);
    out.push_back(make("holography/entire-smoke", res, 1e-8));
  }
  {  // bijectivity at finite rank: the composite acts as the constant
    Rng rng = check_rng(cfg, "holography/bijectivity-rank");
    double worst = 0.0;
    for (int ell : {0, 1, 2}) {
      for (int deg = 0; deg <= 3; ++deg) {
        std::vector<Complex> g(deg + 1);
        for (auto& c : g) c = rng.complex_in_box(1.0);
        g[deg] += Complex{1.0, 0.0};
        const Holo2 lifted = psi_holo2(g, ell, disk);
        for (int rep = 0; rep < 2; ++rep) {
          const Complex z = rng.complex_in_box(0.7);
          const TSeries series = t_series(lifted, z, ell);
          Complex gz{};
          for (int k = deg; k >= 0; --k) gz = gz * z + g[k];
          worst = std::max(worst,
                           rel_diff(series.coeffs[ell], inversion_constant(ell) * gz, 1.0));
        }
      }
    }
    out.push_back(make("holography/bijectivity-rank", worst, 1e-10));
  }
}

//=============================================================================
// hardy: Legendre facts, half-line transforms, norm identities.
//=============================================================================
inline void suite_hardy(const RunConfig& cfg, std::vector<CheckResult>& out) {
  {  // P_l(1) = 1 exactly under the recurrence
    double worst = 0.0;
    for (int ell = 0; ell <= 64; ++ell) worst = std::max(worst, std::abs(legendre(ell, 1.0) - 1.0));
    out.push_back(make("hardy/legendre-normalisation", worst, 0.0));
  }
  {  // orthogonality against the closed norm
    double worst = 0.0;
    for (int l = 0; l <= 12; ++l) {
      for (int lp = 0; lp <= 12; ++lp) {
        const double got = legendre_norm(l, lp);
        const double expected = (l == lp) ? 2.0 / (2.0 * l + 1.0) : 0.0;
        worst = std::max(worst, std::abs(got - expected));
      }
    }
    out.push_back(make("hardy/legendre-orthogonality", worst, 1e-12));
  }
  {  // the explicit-sum form agrees with the recurrence
    Rng rng = check_rng(cfg, "hardy/legendre-explicit-sum");
    double worst = 0.0;
    for (int ell = 0; ell <= 12; ++ell) {
      for (int rep = 0; rep < 8; ++rep) {
        const double v = rng.uniform(-1.0, 1.0);
        worst = std::max(worst, std::abs(legendre(ell, v) - legendre_explicit_sum(ell, v)));
      }
    }
    out.push_back(make("hardy/legendre-explicit-sum", worst, 1e-12));
  }
  {  // Legendre ODE residual
    std::vector<double> vs;
    for (int k = 0; k < 50; ++k) vs.push_back(-0.98 + 0.04 * k);
    double worst = 0.0;
    for (int ell = 0; ell <= 12; ++ell) worst = std::max(worst, ptilde_check(ell, vs));
    out.push_back(make("hardy/legendre-ode", worst, 1e-10));
  }
  {  // the two closed forms of the norm constant agree
    double worst = 0.0;
    for (int ell = 0; ell <= 20; ++ell) {
      const double central = static_cast<double>(binom_sq_sum(ell));
      const double form1 = central / (std::ldexp(1.0, 2 * ell + 2) * kPi * (2.0 * ell + 1.0));
      double ratio = 1.0;
      for (int k = 1; k <= ell; ++k) ratio *= (2.0 * k - 1.0) / (2.0 * k);
      const double form2 = ratio / (4.0 * kPi * (2.0 * ell + 1.0));
      worst = std::max(worst, std::abs(form1 - form2) / form1);
      if (b_ell(ell) != form1) worst = std::max(worst, 1.0);
    }
    out.push_back(make("hardy/b-ell-forms", worst, 1e-14));
  }
  {  // phase convention fixed by the l=1 brute-force bracket
    const CoeffPair pc = rg_legendre_check(1, 1.3, 0.4, Complex{0.2, 1.1});
    out.push_back(make("hardy/phase-oracle", rel_diff(pc.lhs, pc.rhs), 1e-9));
  }
  {  // plane-wave bracket closed form at higher orders
    double worst = 0.0;
    for (int ell = 0; ell <= 5; ++ell) {
      const CoeffPair pc = rg_legendre_check(ell, 0.9, 0.3, Complex{0.0, 1.0});
      worst = std::max(worst, rel_diff(pc.lhs, pc.rhs));
    }
    out.push_back(make("hardy/plane-wave-bracket", worst, 1e-9));
  }
  {  // half-line transform oracles
    const HalfLineProfile phi1{[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0};
    const HalfLineProfile phi2{[](double s) { return Complex{s * std::exp(-s), 0.0}; }, 1.0};
    const Complex z{0.3, 0.8};
    double worst = rel_diff(fourier_laplace(phi1, z), 1.0 / (1.0 - kI * z));
    worst = std::max(worst,
                     rel_diff(fourier_laplace(phi2, Complex{0.0, 1.0}), Complex{0.25, 0.0}));
    out.push_back(make("hardy/fourier-laplace", worst, 1e-10));
  }
  {  // weighted Bergman norm identity
    const HalfLineProfile phi1{[](double s) { return Complex{s * std::exp(-s), 0.0}; }, 1.0};
    const HalfLineProfile phi2{[](double s) { return Complex{s * s * std::exp(-s), 0.0}; }, 1.0};
    const NormPair a = bergman_norm_check(phi1, 2.0);
    const NormPair b = bergman_norm_check(phi2, 4.0);
    const double worst = std::max(std::abs(a.lhs - a.rhs) / a.rhs,
                                  std::abs(b.lhs - b.rhs) / b.rhs);
    out.push_back(make("hardy/bergman-norm", worst, 1e-6));
  }
  {  // unitarity ratio equals the closed constant, independent of the profile
    const std::vector<HalfLineProfile> hs{
        {[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0},
        {[](double s) { return Complex{s * std::exp(-s), 0.0}; }, 1.0},
        {[](double s) { return Complex{std::exp(-2.0 * s), 0.0}; }, 2.0}};
    double worst = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
      for (const auto& h : hs) {
        worst = std::max(worst, std::abs(hardy_norm_ratio(h, ell) - b_ell(ell)) / b_ell(ell));
      }
    }
    out.push_back(make("hardy/norm-ratio", worst, 1e-6));
  }
  {  // the lifted eigenfunction sits in the expected eigenspace
    const HalfLineProfile h{[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0};
    double worst = 0.0;
    for (int ell : {0, 1, 2}) {
      const Holo2 lifted = ftilde_holo2(h, ell, 64, 32);
      worst = std::max(worst, eigen_residual(lifted, ell, {Complex{0.2, 1.9}}, 4, 1e-9, 256));
    }
    out.push_back(make("hardy/lifted-eigenfunction", worst, 1e-7));
  }
  {  // both routes around the commuting square
    const HalfLineProfile h{[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0};
    double worst = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
      const CoeffPair pc = coeff_diagram_check(h, ell, Complex{0.0, 2.0});
      worst = std::max(worst, rel_diff(pc.lhs, pc.rhs));
    }
    out.push_back(make("hardy/coefficient-diagram", worst, 1e-6));
  }
  {  // Gram matrix diagonality across eigenspace indices
    const HalfLineProfile h{[](double s) { return Complex{std::exp(-s), 0.0}; }, 1.0};
    std::vector<std::pair<HalfLineProfile, int>> basis;
    for (int ell = 0; ell <= 4; ++ell) basis.push_back({h, ell});
    const auto gram = hardy_gram(basis);
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (a == b) continue;
        worst = std::max(worst, std::abs(gram[a][b]) /
                                    std::sqrt(std::abs(gram[a][a]) * std::abs(gram[b][b])));
      }
    }
    out.push_back(make("hardy/gram-diagonal", worst, 1e-6));
  }
  {  // Hermiticity of the operator matrix in the lifted basis
    std::vector<std::pair<HalfLineProfile, int>> basis;
    for (int m = 0; m <= 2; ++m) {
      for (int ell = 0; ell <= 2; ++ell) {
        basis.push_back({HalfLineProfile{[m](double s) {
                                           return Complex{std::pow(s, m) * std::exp(-s), 0.0};
                                         },
                                         1.0},
                         ell});
      }
    }
    const auto m = hardy_p_matrix(basis);
    double scale = 0.0, worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) scale = std::max(scale, std::abs(m[a][b]));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        worst = std::max(worst, std::abs(m[a][b] - std::conj(m[b][a])) / scale);
    out.push_back(make("hardy/self-adjoint-shadow", worst, 1e-6));
  }
}

//=============================================================================
// covariance: the fractional-linear action and the symmetry-breaking law.
//=============================================================================
inline void suite_covariance(const RunConfig& cfg, std::vector<CheckResult>& out) {
  {  // the identity element is exactly covariant
    Rng rng = check_rng(cfg, "covariance/identity-element");
    const Poly2 p = random_poly(rng, 3);
    const Holo2 f = Holo2::from_polynomial(DomainDesc::upper_half_plane(), p);
    double worst = 0.0;
    for (int ell = 0; ell <= 2; ++ell) {
      worst = std::max(worst,
                       covariance_residual(f, MobiusElem::identity(), ell, Complex{0.0, 3.0}));
    }
    out.push_back(make("covariance/identity-element", worst, 1e-10));
  }
  {  // model member under translation and scaling
    const double r1 = covariance_residual(eigen_family(1), MobiusElem::translation(0.7), 1,
                                          Complex{0.0, 2.0});
    const double r2 = covariance_residual(eigen_family(2), MobiusElem::scaling(1.3), 2,
                                          Complex{0.0, 2.0});
    out.push_back(make("covariance/model-members", std::max(r1, r2), 1e-7));
  }
  {  // random ensemble
    Rng rng = check_rng(cfg, "covariance/random-ensemble");
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const MobiusElem g = random_mobius(rng);
      const Poly2 p = random_poly(rng, 4);
      const Holo2 f = Holo2::from_polynomial(DomainDesc::upper_half_plane(), p);
      const Complex z{rng.uniform(-0.4, 0.4), rng.uniform(3.5, 4.5)};
      const int ell = static_cast<int>(rng.uniform() * 4.999);
      worst = std::max(worst, covariance_residual(f, g, ell, z));
    }
    out.push_back(make("covariance/random-ensemble", worst, 1e-7));
  }
  {  // cocycle property of the twist
    Rng rng = check_rng(cfg, "covariance/cocycle");
    const Poly2 p = random_poly(rng, 3);
    const Holo2 f = Holo2::from_polynomial(DomainDesc::upper_half_plane(), p);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const MobiusElem g1 = random_mobius(rng);
      const MobiusElem g2 = random_mobius(rng);
      const Holo2 lhs = twist(twist(f, g1), g2);
      const Holo2 rhs = twist(f, g1 * g2);
      for (int s = 0; s < 4; ++s) {
        const Complex z1{rng.uniform(-1.0, 1.0), rng.uniform(1.0, 3.0)};
        const Complex z2{rng.uniform(-1.0, 1.0), rng.uniform(1.0, 3.0)};
        worst = std::max(worst, rel_diff(lhs(z1, z2), rhs(z1, z2), 1.0));
      }
    }
    out.push_back(make("covariance/cocycle", worst, 1e-12));
  }
}

//=============================================================================
// residues: the root functions, the recurrence family, the kernel identities.
//=============================================================================
inline void suite_residues(const RunConfig& cfg, std::vector<CheckResult>& out) {
  {  // algebraic identities of the root functions on random samples
    Rng rng = check_rng(cfg, "residues/root-identities");
    double worst = 0.0;
    for (int rep = 0; rep < 24; ++rep) {
      const Complex z = rng.complex_in_box(1.0);
      const Complex t = 0.3 * rng.complex_in_box(1.0);
      const Complex z1 = z + rng.complex_in_box(1.0) + Complex{1.1, 0.0};
      const Complex z2 = z + rng.complex_in_box(1.0) + Complex{0.0, 1.2};
      const Complex x1 = xi(1, z2, z, t);
      const Complex x2 = xi(2, z1, z, t);
      const Complex zt1 = zeta_tilde1(z1, z, t);
      const Complex zt2 = zeta_tilde2(z2, z, t);
      const Complex q = q_eval(z1, z2, z, t);
      worst = std::max(worst, std::abs(q_eval(x1, z2, z, t)));
      worst = std::max(worst, std::abs(q_eval(z1, x2, z, t)));
      worst = std::max(worst, rel_diff(q, zt1 * zt2 + t * t, 1.0));
      worst = std::max(worst, rel_diff(q, zt2 * (z1 - x1), 1.0));
      worst = std::max(worst, rel_diff(q, zt1 * (z2 - x2), 1.0));
      worst = std::max(worst, rel_diff(x1 - z2, -(z2 - z) * (z2 - z) / zt2, 1.0));
      worst = std::max(worst, rel_diff(z1 - x1, q / zt2, 1.0));
      worst = std::max(worst, rel_diff(x1 - z, t * (z2 - z) / zt2, 1.0));
      worst = std::max(worst, rel_diff(zt1 * zt2 * x1, (z + t) * q - t * t * z1, 1.0));
      worst = std::max(worst, rel_diff(zt1 * zt2 * x2, (z - t) * q - t * t * z2, 1.0));
    }
    out.push_back(make("residues/root-identities", worst, 1e-12));
  }
  {  // recurrence values against the closed forms for b = 1, 2
    Rng rng = check_rng(cfg, "residues/recurrence-closed-forms");
    double worst = 0.0;
    for (int rep = 0; rep < 8; ++rep) {
      const Complex z = rng.complex_in_box(0.8);
      const Complex t = 0.25 * rng.complex_in_box(1.0) + Complex{0.05, 0.0};
      const Complex z1 = z + Complex{1.0, 0.4} + 0.5 * rng.complex_in_box(1.0);
      const Complex z2 = z + Complex{-0.3, 1.1} + 0.5 * rng.complex_in_box(1.0);
      for (int a = 0; a <= 5; ++a) {
        const Complex r1 = h_ab(a, 1, z1, z2, z, t);
        const Complex c1 = h_a1_closed(a, z2, z, t);
        const Complex r2 = h_ab(a, 2, z1, z2, z, t);
        const Complex c2 = h_a2_closed(a, z1, z2, z, t);
        worst = std::max(worst, rel_diff(r1, c1, 1.0));
        worst = std::max(worst, rel_diff(r2, c2, 1.0));
        worst = std::max(worst, std::abs(h_ab(a, 0, z1, z2, z, t)));
      }
    }
    out.push_back(make("residues/recurrence-closed-forms", worst, 1e-12));
  }
  {  // the derivative-shift identity under single-contour quadrature
    double worst = 0.0;
    const Complex z{0.2, 0.3};
    const Complex t{0.12, 0.05};
    const Complex other{1.4, 0.9};
    const auto fc = [](Complex) { return Complex{1.0, 0.0}; };
    const auto dfc = [](Complex) { return Complex{}; };
    const auto fq = [](Complex w) { return w * w; };
    const auto dfq = [](Complex w) { return 2.0 * w; };
    const auto fe = [](Complex w) { return std::exp(w); };
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        worst = std::max(worst, verify_hab_lemma(a, b, fc, dfc, z, t, other, 0.8));
        worst = std::max(worst, verify_hab_lemma(a, b, fq, dfq, z, t, other, 0.8));
        worst = std::max(worst, verify_hab_lemma(a, b, fe, fe, z, t, other, 0.8));
      }
    }
    out.push_back(make("residues/derivative-shift", worst, 1e-8));

    double worst_mirror = 0.0;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        worst_mirror =
            std::max(worst_mirror, verify_hab_lemma(a, b, fq, dfq, z, t, other, 0.8, 2));
      }
    }
    out.push_back(make("residues/derivative-shift-mirror", worst_mirror, 1e-8));
  }
  {  // the assembled kernel identities
    const Holo2 one = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::constant({1.0, 0.0}));
    const Holo2 cross = Holo2::from_polynomial(DomainDesc::entire_plane(), Poly2::monomial(1, 1));
    const Holo2 f1 = eigen_family(1);
    double worst = 0.0;
    worst = std::max(worst, verify_i_identities(one, Complex{0.0, 0.0}, Complex{0.1, 0.0}));
    worst = std::max(worst, verify_i_identities(cross, Complex{0.0, 0.0}, Complex{0.1, 0.0}));
    worst = std::max(worst, verify_i_identities(f1, Complex{0.0, 2.0}, Complex{0.2, 0.0}));
    out.push_back(make("residues/kernel-identities", worst, 1e-8));
  }
}

}  // namespace verify_detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gate",  "genop",      "pde",     "holography",
                                              "hardy", "covariance", "residues"};
  return names;
}

//! Runs a named suite ("all" runs every suite); results come back sorted by
//! check name so the report is independent of execution order.
inline std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const auto want = [&](const char* name) { return suite == name || suite == "all"; };
  if (want("gate")) verify_detail::suite_gate(cfg, out);
  if (want("genop")) verify_detail::suite_genop(cfg, out);
  if (want("pde")) verify_detail::suite_pde(cfg, out);
  if (want("holography")) verify_detail::suite_holography(cfg, out);
  if (want("hardy")) verify_detail::suite_hardy(cfg, out);
  if (want("covariance")) verify_detail::suite_covariance(cfg, out);
  if (want("residues")) verify_detail::suite_residues(cfg, out);
  if (out.empty()) throw usage_error("run_suite: unknown suite '" + suite + "'");
  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace rcgen
