#pragma once

#include <utility>
#include <vector>

#include "rcgen/brackets.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//=============================================================================
// The second-order operator
//   P = (zeta1-zeta2)^2 d^2/dzeta1 dzeta2 - (zeta1-zeta2)(d/dzeta1 - d/dzeta2)
// and its two-parameter generalisation with (lambda'', lambda') weighting the
// first-order part.  P preserves total degree, so jet output keeps exact
// coefficients through order N-2 of an order-N input.
//=============================================================================

inline BiJet apply_p_general(const BiJet& jet, Complex lambda1, Complex lambda2) {
  if (jet.order() < 2) throw truncation_error("apply_p: jet order must be >= 2");
  const int n = jet.order() - 2;
  const Complex z = jet.center();
  const BiJet d12 = jet.derived(1).derived(2);  // order N-2 = n
  const BiJet first = difference_power_jet(2, z, n) * d12;
  const BiJet dpart = jet.derived(1).scaled(lambda2) + jet.derived(2).scaled(-lambda1);
  const BiJet second = difference_power_jet(1, z, n) * dpart;
  return first + second.scaled(-1.0);
}

inline BiJet apply_p(const BiJet& jet) { return apply_p_general(jet, 1.0, 1.0); }

inline Poly2 apply_p_general(const Poly2& p, Complex lambda1, Complex lambda2) {
  const Poly2 diff = Poly2::monomial(1, 0) + Poly2::monomial(0, 1).scaled(-1.0);
  const Poly2 first = diff * diff * p.d1().d2();
  const Poly2 second = diff * (p.d1().scaled(lambda2) + p.d2().scaled(-lambda1));
  return first + second.scaled(-1.0);
}

inline Poly2 apply_p(const Poly2& p) { return apply_p_general(p, 1.0, 1.0); }

inline Holo2 apply_p_general(const Holo2& f, Complex lambda1, Complex lambda2) {
  if (f.is_polynomial()) {
    return Holo2::from_polynomial(f.domain(), apply_p_general(f.polynomial(), lambda1, lambda2));
  }
  Holo2 out = Holo2::from_callback(f.domain(), [f, lambda1, lambda2](Complex a, Complex b) {
    const Complex d = a - b;
    return d * d * holo2_d12(f, a, b) -
           d * (lambda2 * holo2_d(f, 1, a, b) - lambda1 * holo2_d(f, 2, a, b));
  });
  if (f.has_jet_hook()) {
    out.with_jet_hook([f, lambda1, lambda2](Complex z, int order) {
      return apply_p_general(f.jet_hook()(z, order + 2), lambda1, lambda2);
    });
  }
  return out;
}

inline Holo2 apply_p(const Holo2& f) { return apply_p_general(f, 1.0, 1.0); }

//=============================================================================
// Model eigenfunction family on the upper half-plane:
//   f_l = (zeta1-zeta2)^l (zeta1+i)^{-l-1} (zeta2+i)^{-l-1},
// stored as a closed term list so evaluation, partial derivatives and jets
// are all exact.
//=============================================================================

namespace detail {

struct ModelTerm {
  Complex coef;
  int k;  // power of (zeta1 - zeta2)
  int b;  // power of (zeta1 + i)^{-b}
  int c;  // power of (zeta2 + i)^{-c}
};

inline Complex model_eval(const std::vector<ModelTerm>& terms, Complex z1, Complex z2) {
  Complex acc{};
  for (const auto& t : terms) {
    Complex v = t.coef * UniJet::pow_int(z1 - z2, t.k);
    v /= UniJet::pow_int(z1 + kI, t.b);
    v /= UniJet::pow_int(z2 + kI, t.c);
    acc += v;
  }
  return acc;
}

inline std::vector<ModelTerm> model_d1(const std::vector<ModelTerm>& terms) {
  std::vector<ModelTerm> out;
  for (const auto& t : terms) {
    if (t.k > 0) out.push_back({t.coef * static_cast<double>(t.k), t.k - 1, t.b, t.c});
    out.push_back({-t.coef * static_cast<double>(t.b), t.k, t.b + 1, t.c});
  }
  return out;
}

inline std::vector<ModelTerm> model_d2(const std::vector<ModelTerm>& terms) {
  std::vector<ModelTerm> out;
  for (const auto& t : terms) {
    if (t.k > 0) out.push_back({-t.coef * static_cast<double>(t.k), t.k - 1, t.b, t.c});
    out.push_back({-t.coef * static_cast<double>(t.c), t.k, t.b, t.c + 1});
  }
  return out;
}

inline BiJet model_jet(const std::vector<ModelTerm>& terms, Complex z, int order) {
  BiJet acc(z, order);
  for (const auto& t : terms) {
    BiJet j = difference_power_jet(t.k, z, order);
    j = j * BiJet::lift(UniJet::affine_power(1.0, kI, -static_cast<double>(t.b), z, order), 1, order);
    j = j * BiJet::lift(UniJet::affine_power(1.0, kI, -static_cast<double>(t.c), z, order), 2, order);
    acc = acc + j.scaled(t.coef);
  }
  return acc;
}

inline Holo2 model_holo2(std::vector<ModelTerm> terms) {
  auto d1 = model_d1(terms);
  auto d2 = model_d2(terms);
  auto d12 = model_d2(d1);
  Holo2 h = Holo2::from_callback(DomainDesc::upper_half_plane(),
                                 [terms](Complex a, Complex b) { return model_eval(terms, a, b); });
  h.with_partials([d1](Complex a, Complex b) { return model_eval(d1, a, b); },
                  [d2](Complex a, Complex b) { return model_eval(d2, a, b); },
                  [d12](Complex a, Complex b) { return model_eval(d12, a, b); });
  h.with_jet_hook([terms](Complex z, int order) { return model_jet(terms, z, order); });
  return h;
}

}  // namespace detail

//! f_l, the l-th member of the model eigenfunction family on the upper
//! half-plane; satisfies P f_l = -l(l+1) f_l.
inline Holo2 eigen_family(int ell) {
  if (ell < 0) throw usage_error("eigen_family: l must be >= 0");
  return detail::model_holo2({{Complex{1.0, 0.0}, ell, ell + 1, ell + 1}});
}

//! A linear combination sum_k coef_k f_{l_k}.
inline Holo2 eigen_family_mixture(const std::vector<std::pair<int, Complex>>& parts) {
  std::vector<detail::ModelTerm> terms;
  for (const auto& [ell, coef] : parts) {
    if (ell < 0) throw usage_error("eigen_family_mixture: l must be >= 0");
    terms.push_back({coef, ell, ell + 1, ell + 1});
  }
  return detail::model_holo2(std::move(terms));
}

//! Closed form of the transform of f_l: C(2l,l) t^l (z+i)^{-2l-2}.
inline Complex eigen_family_transform(int ell, Complex z, Complex t) {
  const double binom = static_cast<double>(binom_sq_sum(ell));
  return binom * UniJet::pow_int(t, ell) / UniJet::pow_int(z + kI, 2 * ell + 2);
}

//=============================================================================
// Residual diagnostics.
//=============================================================================

//! max over l <= L of |c_l(P f) + l(l+1) c_l(f)| where c_l are the t-series
//! coefficients at z; near zero certifies the Euler-operator identity.
inline double euler_identity_residual(const Holo2& f, Complex z, int L) {
  if (L < 2) throw usage_error("euler_identity_residual: L must be >= 2");
  const BiJet jet = bijet_from_fn(f, z, L + 2);
  const BiJet pjet = apply_p(jet);  // exact through order L
  double residual = 0.0;
  for (int l = 0; l <= L; ++l) {
    const Complex cf = rc_bracket_from_jet(jet, l) / factorial(l);
    const Complex cp = rc_bracket_from_jet(pjet, l) / factorial(l);
    residual = std::max(residual, std::abs(cp + static_cast<double>(l) * (l + 1.0) * cf));
  }
  return residual;
}

//! max jet-coefficient magnitude of (P f + l(l+1) f) over the sampled
//! diagonal points; a membership test for the -l(l+1) eigenspace.
inline double eigen_residual(const Holo2& f, int ell, const std::vector<Complex>& samples,
                             int probe_order = 6, double jet_tol = 1e-12,
                             int jet_max_nodes = 1024) {
  if (ell < 0) throw usage_error("eigen_residual: l must be >= 0");
  double residual = 0.0;
  const double lam = static_cast<double>(ell) * (ell + 1.0);
  for (Complex z : samples) {
    const BiJet jet = bijet_from_fn(f, z, probe_order + 2, jet_tol, jet_max_nodes);
    const BiJet r = apply_p(jet) + jet.truncated(probe_order).scaled(lam);
    residual = std::max(residual, r.max_coeff());
  }
  return residual;
}

}  // namespace rcgen
