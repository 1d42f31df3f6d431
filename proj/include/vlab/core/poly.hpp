#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vlab/core/error.hpp"
#include "vlab/core/scalar.hpp"

namespace vlab {

/// Dense univariate polynomial, coefficients in ascending exponent order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has degree -1.
template <typename S>
class DensePoly {
 public:
  using scalar_type = S;

  DensePoly() = default;
  DensePoly(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }
  explicit DensePoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  template <typename T>
  static DensePoly from(std::span<const T> values) {
    std::vector<S> c;
    c.reserve(values.size());
    for (const auto& v : values) c.emplace_back(v);
    return DensePoly(std::move(c));
  }

  static DensePoly monomial(std::size_t exponent, S coeff = S(1)) {
    std::vector<S> c(exponent + 1, S(0));
    c[exponent] = std::move(coeff);
    return DensePoly(std::move(c));
  }

  static DensePoly constant(S value) { return DensePoly(std::vector<S>{std::move(value)}); }

  const std::vector<S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient of t^i; zero past the end.
  S operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }

  const S& leading() const { return coeffs_.back(); }

  // Coefficients 0..len-1, zero padded.
  std::vector<S> padded(std::size_t len) const {
    std::vector<S> out(len, S(0));
    for (std::size_t i = 0; i < std::min(len, coeffs_.size()); ++i) out[i] = coeffs_[i];
    return out;
  }

  template <typename X>
  X eval(const X& x) const {
    X acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc *= x;
      acc += coeffs_[i];
    }
    return acc;
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<S> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
    return DensePoly(std::move(c));
  }

  // t^width * p(1/t); requires width >= degree.
  DensePoly reflected(std::size_t width) const {
    std::vector<S> c(width + 1, S(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[width - i] = coeffs_[i];
    return DensePoly(std::move(c));
  }

  bool is_palindromic(std::size_t width) const {
    if (degree() > static_cast<int>(width)) return false;
    return *this == reflected(width);
  }

  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<S> c(k, S(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(c));
  }

  // Coefficients of t^k for k < len.
  DensePoly truncated(std::size_t len) const {
    if (len >= coeffs_.size()) return *this;
    return DensePoly(std::vector<S>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator*=(const S& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend DensePoly operator*(DensePoly a, const S& c) { return a *= c; }
  friend DensePoly operator*(const S& c, DensePoly a) { return a *= c; }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(c));
  }

  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << p.coeffs_[i];
      if (i == 1) os << "*t";
      if (i > 1) os << "*t^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

template <typename S>
DensePoly<S> poly_mul(const DensePoly<S>& p, const DensePoly<S>& q) {
  return p * q;
}

template <typename S>
DensePoly<S> poly_pow(DensePoly<S> base, unsigned e) {
  DensePoly<S> acc = DensePoly<S>::constant(S(1));
  while (e > 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return acc;
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<BigRat> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

// Exact conversion; throws if any coefficient has a denominator.
template <typename Error = NonIntegerCoefficient>
IntPoly to_integer(const RatPoly& p, const char* what = "coefficient") {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigRat& v = p.coeffs()[i];
    if (!is_integer(v)) throw Error(std::string("non-integer ") + what + " at t^" + std::to_string(i) + ": " + v.get_str());
    c.emplace_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

/// Quotient and remainder over the rationals.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw PreconditionFailed("polynomial division by zero");
  std::vector<BigRat> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPoly{}, num};
  std::vector<BigRat> quot(static_cast<std::size_t>(num.degree() - dd + 1), BigRat(0));
  const BigRat& lead = den.leading();
  for (int k = num.degree() - dd; k >= 0; --k) {
    BigRat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

// gcd of the coefficients, sign taken from the leading coefficient.
inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (!p.is_zero() && p.leading() < 0) g = -g;
  return g;
}

/// Positive rational multiple of p with coprime integer coefficients.
/// Sign pattern is preserved, so Sturm sign counts are unaffected.
inline IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> c;
  c.reserve(p.size());
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    BigInt x = v.get_num() * (den / v.get_den());
    g = gcd(g, x);
    c.push_back(std::move(x));
  }
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

inline IntPoly primitive_part(const IntPoly& p) { return primitive_part(to_rational(p)); }

/// Monic gcd over the rationals.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (BigRat(1) / a.leading());
}

// p(c*m) as a polynomial in m.
template <typename S>
DensePoly<S> scale_argument(const DensePoly<S>& p, const S& c) {
  std::vector<S> out = p.coeffs();
  S power = 1;
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return DensePoly<S>(std::move(out));
}

// (1 + t + ... + t^{n-1})
inline IntPoly geometric_kernel(unsigned n) { return IntPoly(std::vector<BigInt>(n, BigInt(1))); }

// (1 - t)^e
inline IntPoly one_minus_t_pow(unsigned e) { return poly_pow(IntPoly{1, -1}, e); }

inline std::string join(const std::vector<BigInt>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

}  // namespace vlab
