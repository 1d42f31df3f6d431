#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vlab/core/combinatorics.hpp"
#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"

namespace vlab {

/// Numerator h_0, ..., h_{d+1} of a series h(t) / (1 - t)^{d+1}, together
/// with the ambient degree d. The same coefficient list denotes different
/// series for different d, so d is part of the value.
class HVector {
 public:
  HVector(unsigned d, std::vector<BigInt> coeffs) : d_(d) {
    if (d == 0) throw PreconditionFailed("HVector requires ambient degree d >= 1");
    if (coeffs.size() > d + 2) {
      for (std::size_t i = d + 2; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) throw PreconditionFailed("h-vector has degree above d + 1");
      coeffs.resize(d + 2);
    }
    coeffs.resize(d + 2, BigInt(0));
    bool any = false;
    for (const auto& c : coeffs) any = any || c != 0;
    if (!any) throw PreconditionFailed("h-vector must not be identically zero");
    h_ = std::move(coeffs);
  }

  HVector(unsigned d, std::initializer_list<long> coeffs)
      : HVector(d, std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

  HVector(unsigned d, const IntPoly& p) : HVector(d, p.coeffs()) {}

  unsigned d() const { return d_; }

  // h_i for 0 <= i <= d + 1, zero beyond.
  const BigInt& operator[](std::size_t i) const {
    static const BigInt zero = 0;
    return i < h_.size() ? h_[i] : zero;
  }

  // Always d + 2 entries.
  const std::vector<BigInt>& coeffs() const { return h_; }

  IntPoly poly() const { return IntPoly(h_); }

  bool degree_at_most_d() const { return h_[d_ + 1] == 0; }

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& c : h_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const auto& c : h_)
      if (c < 0) return false;
    return true;
  }

  // h_0..h_d, or h_0..h_{d+1} when the top entry is nonzero.
  std::vector<BigInt> trimmed() const {
    std::vector<BigInt> out = h_;
    if (out.back() == 0) out.pop_back();
    return out;
  }

  std::string str() const { return join(trimmed()); }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  unsigned d_;
  std::vector<BigInt> h_;
};

/// g(m) = g_0 + g_1 m + ... + g_d m^d.
using GPolynomial = RatPoly;

/// g(m) = sum_i h_i C(m + d - i, d).
inline GPolynomial h_to_g(const HVector& h) {
  GPolynomial g;
  for (unsigned i = 0; i <= h.d() + 1; ++i) {
    if (h[i] == 0) continue;
    g += binom_poly(h.d(), static_cast<long>(i)) * BigRat(h[i]);
  }
  return g;
}

/// Numerator of sum_{m>=0} g(m) t^m over (1 - t)^{d+1}; the result always
/// has h_{d+1} = 0.
inline HVector g_to_h(const GPolynomial& g, unsigned d) {
  if (g.degree() > static_cast<int>(d)) throw PreconditionFailed("g_to_h: deg g exceeds d");
  std::vector<BigRat> values;
  values.reserve(d + 2);
  for (unsigned m = 0; m <= d + 1; ++m) values.push_back(g.eval(BigRat(m)));
  RatPoly series(std::move(values));
  RatPoly numer = (series * to_rational(one_minus_t_pow(d + 1))).truncated(d + 2);
  IntPoly h = to_integer<NonIntegerCoefficient>(numer, "numerator coefficient");
  return HVector(d, h.padded(d + 2));
}

/// First `terms` coefficients of h(t) / (1 - t)^{d+1}.
inline std::vector<BigInt> series_expand(const HVector& h, std::size_t terms) {
  if (terms == 0) throw PreconditionFailed("series_expand requires terms >= 1");
  // 1/(1-t)^{d+1} = sum_k C(k + d, d) t^k
  std::vector<BigInt> kernel(terms);
  for (std::size_t k = 0; k < terms; ++k) kernel[k] = binomial(BigInt(static_cast<unsigned long>(k + h.d())), h.d());
  std::vector<BigInt> out(terms, BigInt(0));
  for (std::size_t i = 0; i < h.coeffs().size() && i < terms; ++i) {
    if (h[i] == 0) continue;
    for (std::size_t k = 0; i + k < terms; ++k) out[i + k] += h[i] * kernel[k];
  }
  return out;
}

/// E_n: keep exponents divisible by n and divide them by n.
template <typename S>
DensePoly<S> sieve_En(const DensePoly<S>& p, unsigned n) {
  if (n == 0) throw PreconditionFailed("sieve_En requires n >= 1");
  std::vector<S> out;
  for (std::size_t k = 0; k * n < p.size(); ++k) out.push_back(p[k * n]);
  return DensePoly<S>(std::move(out));
}

}  // namespace vlab
