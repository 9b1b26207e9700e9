#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rcgen {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const Complex kI{0.0, 1.0};

//! Evaluation point outside the declared domain, or inadmissible (z,t).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

//! API misuse: mismatched jet centers, bad argument combinations.
class usage_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

//! Requested derivative order exceeds the truncation order of a jet.
class truncation_error : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

//! Non-finite value produced during evaluation; message names the node.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Quadrature failed to reach the requested tolerance; carries the best value.
class accuracy_error : public std::runtime_error {
public:
  accuracy_error(const std::string& what, Complex best, double err)
      : std::runtime_error(what), best_value(best), err_estimate(err) {}
  Complex best_value;
  double err_estimate;
};

inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

//! |a-b| / max(|a|, |b|, floor); floor guards comparisons of near-zero pairs.
inline double rel_diff(Complex a, Complex b, double floor = 1e-300) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / scale;
}

//! Exact binomial coefficient; valid while the result fits in 64 bits.
inline std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 62) return static_cast<double>(binomial_u64(n, k));
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

//! i^k reduced mod 4, exact.
inline Complex ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

//! Deterministic splitmix64-based generator; identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  //! Uniform in [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  //! Uniform in [lo,hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_in_box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

private:
  std::uint64_t state_;
};

//! Stable per-check seed derived from a base seed and a check name (FNV-1a).
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
  std::uint64_t h = 14695981039346656037ULL ^ base;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace rcgen
