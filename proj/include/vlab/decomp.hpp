#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"
#include "vlab/core/sequences.hpp"
#include "vlab/hecke.hpp"
#include "vlab/series.hpp"

namespace vlab {

/// h = a + b with a(t) = t^d a(1/t) and b(t) = t^{d+1} b(1/t).
struct SymDecomp {
  IntPoly a;
  IntPoly b;
  unsigned d;
};

/// Coefficientwise: a_i = (h_0 + ... + h_i) - (h_{d+1} + ... + h_{d+1-i}),
/// b_i = h_i - a_i. So a_0 = h_0 - h_{d+1} and b_0 = h_{d+1}.
inline SymDecomp decompose(const IntPoly& h, unsigned d) {
  if (h.degree() > static_cast<int>(d) + 1) throw PreconditionFailed("decompose: deg h exceeds d + 1");
  const std::vector<BigInt> c = h.padded(d + 2);
  std::vector<BigInt> a(d + 1), b(d + 2);
  BigInt low = 0, high = 0;
  for (unsigned i = 0; i <= d; ++i) {
    low += c[i];
    high += c[d + 1 - i];
    a[i] = low - high;
  }
  for (unsigned i = 0; i <= d + 1; ++i) b[i] = c[i] - (i <= d ? a[i] : BigInt(0));
  return SymDecomp{IntPoly(std::move(a)), IntPoly(std::move(b)), d};
}

inline SymDecomp decompose(const HVector& h) { return decompose(h.poly(), h.d()); }

namespace detail {

inline IntPoly divide_by_one_minus_t(const IntPoly& num) {
  auto [q, r] = divmod(to_rational(num), RatPoly{BigRat(1), BigRat(-1)});
  if (!r.is_zero()) throw InternalRemainder("division by (1 - t) left a remainder");
  return to_integer<InternalRemainder>(q, "quotient");
}

}  // namespace detail

/// a(t) = (h(t) - t^{d+1} h(1/t)) / (1 - t),
/// b(t) = (t^{d+1} h(1/t) - t h(t)) / (1 - t).
inline SymDecomp decompose_closed_form(const IntPoly& h, unsigned d) {
  if (h.degree() > static_cast<int>(d) + 1) throw PreconditionFailed("decompose: deg h exceeds d + 1");
  const IntPoly mirror = h.reflected(d + 1);
  return SymDecomp{detail::divide_by_one_minus_t(h - mirror), detail::divide_by_one_minus_t(mirror - h.shifted(1)), d};
}

inline SymDecomp decompose_closed_form(const HVector& h) { return decompose_closed_form(h.poly(), h.d()); }

/// g(0), g'(1), g'(2), ... with g'(m) = g(m) - (-1)^d g(-m).
inline std::vector<BigRat> reciprocity_series(const HVector& h, std::size_t terms) {
  const GPolynomial g = h_to_g(h);
  std::vector<BigRat> out;
  out.reserve(terms);
  for (std::size_t m = 0; m < terms; ++m) {
    if (m == 0) {
      out.push_back(g.eval(BigRat(0)));
      continue;
    }
    const BigRat x(static_cast<unsigned long>(m));
    BigRat mirror = g.eval(BigRat(-x));
    if (h.d() % 2 == 1) mirror = -mirror;
    out.push_back(g.eval(x) - mirror);
  }
  return out;
}

/// Leading coefficients of a(t) / (1 - t)^d.
inline std::vector<BigInt> symmetric_part_series(const HVector& h, std::size_t terms) {
  const unsigned d = h.d();
  const IntPoly a = decompose(h).a;
  std::vector<BigInt> out(terms, BigInt(0));
  for (std::size_t k = 0; k < terms; ++k) {
    const BigInt c = binomial(BigInt(static_cast<unsigned long>(k + d - 1)), static_cast<long>(d - 1));
    for (std::size_t i = 0; i <= d && i + k < terms; ++i) out[i + k] += a[i] * c;
  }
  return out;
}

/// Coefficients of (1 + t + ... + t^{n-1})^{d+1}.
struct GammaVector {
  unsigned n;
  unsigned d;
  std::vector<BigInt> gamma;

  BigInt operator[](long i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= gamma.size()) return 0;
    return gamma[static_cast<std::size_t>(i)];
  }
};

inline GammaVector gamma_coeffs(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw PreconditionFailed("gamma_coeffs requires n >= 1 and d >= 1");
  GammaVector g{n, d, poly_pow(geometric_kernel(n), d + 1).coeffs()};
  if (!all_positive(g.gamma) || !is_symmetric(g.gamma) || !strict_unimodal_split(g.gamma))
    throw InvariantViolation("gamma coefficients not positive, symmetric and strictly unimodal");
  return g;
}

/// Tracks the symmetric decomposition through U_n:
/// U_n h = a~ + b~ with a~ = E_n(a K), b~ = E_n(b K), K the dilation kernel,
/// and a', b' the decomposition of U_n h itself.
struct DilatedDecomp {
  IntPoly p;  // a(t) K(t)
  IntPoly aTilde;
  IntPoly bTilde;
  IntPoly aPrime;
  IntPoly bPrime;
};

inline DilatedDecomp dilated_decomp(const HVector& h, unsigned n) {
  const UnResult un = un_definition(h, n);
  const unsigned d = h.d();
  const SymDecomp parts = decompose(h);
  const IntPoly kernel = poly_pow(geometric_kernel(n), d + 1);
  DilatedDecomp out;
  out.p = parts.a * kernel;
  out.aTilde = sieve_En(out.p, n);
  out.bTilde = sieve_En(parts.b * kernel, n);
  const SymDecomp prime = decompose(un.poly(), d);
  out.aPrime = prime.a;
  out.bPrime = prime.b;
  if (out.aTilde + out.bTilde != un.poly()) throw InvariantViolation("a~ + b~ differs from U_n h");
  if (!out.bTilde.is_palindromic(d + 1)) throw InvariantViolation("b~ is not palindromic about (d+1)/2");
  return out;
}

/// a'_i = p_0 + p_n + ... + p_{in} - p_{n-1} - p_{2n-1} - ... - p_{in-1}.
inline BigInt aprime_coeff(const HVector& h, unsigned n, unsigned i) {
  if (i > h.d() / 2) throw IndexOutOfRange("aprime_coeff: index " + std::to_string(i) + " exceeds floor(d/2)");
  if (!h.degree_at_most_d()) throw PreconditionFailed("aprime_coeff requires deg h <= d");
  if (n == 0) throw PreconditionFailed("aprime_coeff requires n >= 1");
  const IntPoly p = decompose(h).a * poly_pow(geometric_kernel(n), h.d() + 1);
  BigInt acc = p[0];
  for (unsigned k = 1; k <= i; ++k) acc += p[k * n] - p[k * n - 1];
  return acc;
}

/// n_d = d for even d, (d + 1) / 2 for odd d.
inline unsigned beijing_threshold(unsigned d) { return d % 2 == 0 ? d : (d + 1) / 2; }

struct BeijingResult {
  bool holds;
  unsigned threshold;
  bool certified;
};

/// Index of the first failure among a_0 > 0 and
/// h_0 + ... + h_{i+1} > h_d + ... + h_{d-i}, 0 <= i <= floor(d/2) - 1,
/// reported as -1 for a_0 and i otherwise.
inline std::optional<long> first_strict_cumulative_failure(const HVector& h) {
  if (h[0] - h[h.d() + 1] <= 0) return -1;
  const unsigned d = h.d();
  BigInt low = h[0], high = 0;
  for (unsigned i = 0; i + 1 <= d / 2; ++i) {
    low += h[i + 1];
    high += h[d - i];
    if (!(low > high)) return static_cast<long>(i);
  }
  return std::nullopt;
}

/// Evaluates h_{i+1}(n) > h_{d-i}(n), 0 <= i <= floor(d/2) - 1, and whether
/// n is at or above the certified threshold n_d.
inline BeijingResult beijing_guarantee(const HVector& h, unsigned n) {
  if (!h.degree_at_most_d()) throw PreconditionFailed("beijing_guarantee requires deg h <= d");
  if (auto bad = first_strict_cumulative_failure(h)) {
    if (*bad < 0) throw PreconditionFailed("a_0 = h_0 - h_{d+1} must be positive");
    throw PreconditionFailed("cumulative inequality h_0+...+h_{i+1} > h_d+...+h_{d-i} fails at i = " +
                             std::to_string(*bad));
  }
  const unsigned d = h.d();
  const UnResult un = un_definition(h, n);
  bool holds = true;
  for (unsigned i = 0; i + 1 <= d / 2; ++i) holds = holds && un.coeffs[i + 1] > un.coeffs[d - i];
  const unsigned threshold = beijing_threshold(d);
  const bool certified = n >= threshold;
  if (certified && !holds)
    throw InvariantViolation("certified instance h = " + h.str() + ", n = " + std::to_string(n) +
                             " violates h_{i+1}(n) > h_{d-i}(n)");
  return BeijingResult{holds, threshold, certified};
}

}  // namespace vlab
