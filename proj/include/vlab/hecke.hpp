#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/core/combinatorics.hpp"
#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"
#include "vlab/series.hpp"

namespace vlab {

// U_n h is the numerator of sum_{m>=0} g(nm) t^m over (1 - t)^{d+1}.

enum class UnMethod { Definition, Convolution, Eulerian };

inline std::string_view to_string(UnMethod m) {
  switch (m) {
    case UnMethod::Definition: return "definition";
    case UnMethod::Convolution: return "convolution";
    case UnMethod::Eulerian: return "eulerian";
  }
  return "?";
}

struct UnResult {
  HVector input;
  unsigned n;
  std::vector<BigInt> coeffs;  // h_0(n), ..., h_d(n)
  UnMethod method;

  IntPoly poly() const { return IntPoly(coeffs); }
  HVector as_hvector() const { return HVector(input.d(), coeffs); }
};

namespace detail {

inline void require_dilatable(const HVector& h, unsigned n) {
  if (n == 0) throw PreconditionFailed("U_n requires n >= 1");
  if (!h.degree_at_most_d()) throw PreconditionFailed("U_n is defined for deg h <= d only (h_{d+1} must be 0)");
}

inline UnResult make_result(const HVector& h, unsigned n, const IntPoly& p, UnMethod m) {
  if (p.degree() > static_cast<int>(h.d())) throw InternalError("U_n output exceeds degree d");
  return UnResult{h, n, p.padded(h.d() + 1), m};
}

}  // namespace detail

/// Normative engine: substitute m -> nm in g and convert back.
inline UnResult un_definition(const HVector& h, unsigned n) {
  detail::require_dilatable(h, n);
  GPolynomial dilated = scale_argument(h_to_g(h), BigRat(n));
  HVector out = [&] {
    try {
      return g_to_h(dilated, h.d());
    } catch (const NonIntegerCoefficient& e) {
      throw InternalNonInteger(std::string("un_definition: ") + e.what());
    }
  }();
  return detail::make_result(h, n, out.poly(), UnMethod::Definition);
}

/// E_n(h(t) (1 + t + ... + t^{n-1})^{d+1}).
inline UnResult un_convolution(const HVector& h, unsigned n) {
  detail::require_dilatable(h, n);
  IntPoly product = h.poly() * poly_pow(geometric_kernel(n), h.d() + 1);
  return detail::make_result(h, n, sieve_En(product, n), UnMethod::Convolution);
}

/// sum_j g_j A_j(t) (1 - t)^{d-j} n^j.
inline UnResult un_eulerian(const HVector& h, unsigned n) {
  detail::require_dilatable(h, n);
  const unsigned d = h.d();
  const GPolynomial g = h_to_g(h);
  const EulerianTable table(d);
  RatPoly acc;
  BigInt npow = 1;
  for (unsigned j = 0; j <= d; ++j, npow *= n) {
    const BigRat& gj = g[j];
    if (gj == 0) continue;
    IntPoly term = table.polynomial(j) * one_minus_t_pow(d - j);
    acc += to_rational(term) * BigRat(gj * npow);
  }
  IntPoly out = to_integer<InternalNonInteger>(acc, "Eulerian-expansion coefficient");
  return detail::make_result(h, n, out, UnMethod::Eulerian);
}

inline UnResult apply_un(const HVector& h, unsigned n, UnMethod method) {
  switch (method) {
    case UnMethod::Definition: return un_definition(h, n);
    case UnMethod::Convolution: return un_convolution(h, n);
    case UnMethod::Eulerian: return un_eulerian(h, n);
  }
  throw std::invalid_argument("unknown U_n method");
}

/// U_n(U_m h) == U_{nm} h.
inline bool un_compose_check(const HVector& h, unsigned n, unsigned m) {
  const HVector inner = un_definition(h, m).as_hvector();
  return un_definition(inner, n).coeffs == un_definition(h, n * m).coeffs;
}

/// h_1(n) == g(n) - (d + 1).
inline bool h1_formula_check(const HVector& h, unsigned n) {
  if (h[0] != 1) throw PreconditionFailed("h1_formula_check requires h_0 = 1");
  const UnResult r = un_definition(h, n);
  const BigRat expected = h_to_g(h).eval(BigRat(n)) - BigRat(h.d() + 1);
  return BigRat(r.coeffs[1]) == expected;
}

}  // namespace vlab
