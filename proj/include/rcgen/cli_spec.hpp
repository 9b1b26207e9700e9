#pragma once

#include <string>
#include <vector>

#include "rcgen/holo2.hpp"
#include "rcgen/pde.hpp"
#include "rcgen/types.hpp"

namespace rcgen {

//! Parses complex literals of the shell-friendly form "a+bi": plain reals
//! ("1.5", "-2e-3"), pure imaginaries ("2i", "-i", "i"), and full pairs
//! ("1+2i", "0.5-0.25i", "1e-2+3.5e1i").
inline Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw usage_error("parse_complex: empty literal");
  const auto parse_real = [](const std::string& u) -> double {
    if (u == "+" || u.empty()) return 1.0;
    if (u == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(u, &used);
    } catch (const std::exception&) {
      throw usage_error("parse_complex: bad number '" + u + "'");
    }
    if (used != u.size()) throw usage_error("parse_complex: trailing characters in '" + u + "'");
    return v;
  };
  // locate the split between real and imaginary parts: the last sign that is
  // not leading and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (s.back() == 'i' || s.back() == 'I') {
    const std::string body = s.substr(0, s.size() - 1);
    if (split == std::string::npos) return {0.0, parse_real(body)};
    return {parse_real(s.substr(0, split)), parse_real(body.substr(split))};
  }
  if (split != std::string::npos) {
    // "a+b" without the trailing i is ambiguous; reject
    throw usage_error("parse_complex: two components but no trailing 'i' in '" + text + "'");
  }
  return {parse_real(s), 0.0};
}

inline std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(parse_complex(item));
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw usage_error("parse_complex_list: empty list");
  return out;
}

//! Built-in test functions addressable from the command line:
//!   "const <c>"             constant c
//!   "poly <rows>"           rows split by ';', entries by ','; entry (a,b)
//!                           is the coefficient of zeta1^a zeta2^b
//!   "f_ell <l>"             model eigenfunction on the upper half-plane
//!   "separable <p1>;<p2>"   product of two univariate polynomials given by
//!                           monomial coefficient lists
//!   "exp-profile <rate>"    the plane wave exp(i rate (zeta1+zeta2)/2)
inline Holo2 parse_function_spec(const std::string& spec) {
  const auto ws = spec.find(' ');
  const std::string head = spec.substr(0, ws);
  const std::string rest = ws == std::string::npos ? "" : spec.substr(ws + 1);
  if (head == "const") {
    return Holo2::from_polynomial(DomainDesc::entire_plane(),
                                  Poly2::constant(parse_complex(rest)));
  }
  if (head == "poly") {
    std::vector<std::vector<Complex>> rows;
    std::string row;
    for (char c : rest + ";") {
      if (c == ';') {
        if (!row.empty()) rows.push_back(parse_complex_list(row));
        row.clear();
      } else {
        row += c;
      }
    }
    if (rows.empty()) throw usage_error("poly: empty coefficient table");
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    Poly2 p(static_cast<int>(rows.size()) - 1, static_cast<int>(cols) - 1);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < rows[a].size(); ++b) p.at(static_cast<int>(a), static_cast<int>(b)) = rows[a][b];
    }
    return Holo2::from_polynomial(DomainDesc::entire_plane(), p);
  }
  if (head == "f_ell") {
    int ell = 0;
    try {
      ell = std::stoi(rest);
    } catch (const std::exception&) {
      throw usage_error("f_ell: bad index '" + rest + "'");
    }
    return eigen_family(ell);
  }
  if (head == "separable") {
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw usage_error("separable: need '<p1>;<p2>'");
    const std::vector<Complex> p1 = parse_complex_list(rest.substr(0, semi));
    const std::vector<Complex> p2 = parse_complex_list(rest.substr(semi + 1));
    Holo2 h = Holo2::from_separable(
        DomainDesc::entire_plane(),
        [p1](Complex z) {
          Complex acc{};
          for (int k = static_cast<int>(p1.size()) - 1; k >= 0; --k) acc = acc * z + p1[k];
          return acc;
        },
        [p2](Complex z) {
          Complex acc{};
          for (int k = static_cast<int>(p2.size()) - 1; k >= 0; --k) acc = acc * z + p2[k];
          return acc;
        });
    h.with_separable_jets(
        [p1](Complex z, int order) { return UniJet::from_polynomial(p1, z, order); },
        [p2](Complex z, int order) { return UniJet::from_polynomial(p2, z, order); });
    return h;
  }
  if (head == "exp-profile") {
    double rate = 0.0;
    try {
      rate = std::stod(rest);
    } catch (const std::exception&) {
      throw usage_error("exp-profile: bad rate '" + rest + "'");
    }
    const Complex a = kI * (0.5 * rate);
    Holo2 h = Holo2::from_separable(
        DomainDesc::entire_plane(), [a](Complex z) { return std::exp(a * z); },
        [a](Complex z) { return std::exp(a * z); });
    h.with_separable_jets(
        [a](Complex z, int order) { return UniJet::exponential(a, z, order); },
        [a](Complex z, int order) { return UniJet::exponential(a, z, order); });
    return h;
  }
  throw usage_error("unknown function spec '" + spec + "'");
}

}  // namespace rcgen
