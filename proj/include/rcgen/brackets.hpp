#pragma once

#include "rcgen/holo2.hpp"
#include "rcgen/jet.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! sum_{j=0}^{l} C(l,j)^2 = C(2l,l), exact integer arithmetic.
inline std::uint64_t binom_sq_sum(int ell) {
  if (ell < 0 || ell > 30) throw std::range_error("binom_sq_sum: need 0 <= l <= 30 for exact 64-bit");
  return binomial_u64(2 * ell, ell);
}

//! The bracket combination of order-l mixed partials, read off a jet:
//! sum_j (-1)^j C(l,j)^2 d^l f / d zeta1^{l-j} d zeta2^j at the diagonal.
inline Complex rc_bracket_from_jet(const BiJet& jet, int ell) {
  if (ell > jet.order()) throw truncation_error("rc_bracket_from_jet: jet order too small");
  Complex acc{};
  for (int j = 0; j <= ell; ++j) {
    const double c = binomial(ell, j);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    acc += sign * c * c * jet.partial(ell - j, j);
  }
  return acc;
}

//! Bidifferential bracket R_l f at the diagonal point z.  Separable inputs
//! use two independent univariate derivative extractions; everything else
//! goes through a bivariate jet of order l.
inline Complex rc_bracket(const Holo2& f, int ell, Complex z, int jet_order_cap = 16) {
  if (ell < 0) throw usage_error("rc_bracket: l must be >= 0");
  if (ell > jet_order_cap) throw usage_error("rc_bracket: l exceeds the supported jet order");
  if (!f.domain().contains(z)) throw domain_error("rc_bracket: z outside domain");
  if (f.is_separable() && !f.is_polynomial() && !f.has_jet_hook()) {
    const double r = jet_radius(f.domain(), z);
    const UniJet a = f.has_separable_jets() ? f.separable_jet1()(z, ell)
                                            : unijet_from_callable(f.part1(), z, ell, r);
    const UniJet b = f.has_separable_jets() ? f.separable_jet2()(z, ell)
                                            : unijet_from_callable(f.part2(), z, ell, r);
    Complex acc{};
    for (int j = 0; j <= ell; ++j) {
      const double c = binomial(ell, j);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * c * c * a.derivative(ell - j) * b.derivative(j);
    }
    return acc;
  }
  return rc_bracket_from_jet(bijet_from_fn(f, z, ell), ell);
}

}  // namespace rcgen
