#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "vlab/core/combinatorics.hpp"
#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"
#include "vlab/hecke.hpp"
#include "vlab/series.hpp"

namespace vlab {

inline constexpr unsigned kDefaultIsolationBits = 20;

/// Either the exact point lo == hi, or the open interval (lo, hi).
struct RootInterval {
  BigRat lo;
  BigRat hi;

  bool exact() const { return lo == hi; }
  BigRat width() const { return hi - lo; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct RootReport {
  int degree = 0;
  int realRootCount = 0;      // distinct real roots
  int negativeRootCount = 0;  // distinct roots < 0
  int zeroMultiplicity = 0;
  bool squarefree = false;
  std::vector<RootInterval> isolatingIntervals;  // ascending, one per distinct real root
  bool allRealSimpleNegative = false;

  bool all_real_simple() const { return squarefree && realRootCount == degree; }
};

/// Sign of p(x) for rational x, computed in integers as
/// sum_i c_i p^i q^{deg-i} with x = p/q, q > 0.
inline int sign_at(const IntPoly& poly, const BigRat& x) {
  if (poly.is_zero()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = poly.leading();
  BigInt qpow = 1;
  for (int i = poly.degree() - 1; i >= 0; --i) {
    qpow *= den;
    acc = acc * num + poly.coeffs()[static_cast<std::size_t>(i)] * qpow;
  }
  return sgn(acc);
}

/// 1 + max_{j<d} |p_j / p_d|; every complex root lies strictly inside the
/// disc of this radius.
template <typename S>
BigRat cauchy_bound(const DensePoly<S>& p) {
  if (p.degree() < 1) throw PreconditionFailed("cauchy_bound requires degree >= 1");
  BigRat lead(p.leading());
  BigRat best = 0;
  for (int j = 0; j < p.degree(); ++j) {
    BigRat r = BigRat(p[static_cast<std::size_t>(j)]) / lead;
    r = abs(r);
    if (r > best) best = r;
  }
  return BigRat(1) + best;
}

/// Sturm chain p, p', -rem(p, p'), ... with each term scaled by a positive
/// constant to a primitive integer polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionFailed("Sturm sequence of the zero polynomial");
    chain_.push_back(primitive_part(p));
    if (p.degree() == 0) return;
    chain_.push_back(primitive_part(p.derivative()));
    while (true) {
      RatPoly r = divmod(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back())).second;
      if (r.is_zero()) break;
      chain_.push_back(primitive_part(-r));
    }
  }

  const std::vector<IntPoly>& chain() const { return chain_; }

  // Sign variations at x, zeros skipped. Right-continuous for squarefree
  // p, so V(a) - V(b) counts distinct roots in (a, b].
  int variations(const BigRat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign_at(q, x));
    return count(signs);
  }

  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
      int s = sgn(q.leading());
      if (!positive && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count(signs);
  }

 private:
  static int count(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  std::vector<IntPoly> chain_;
};

namespace detail {

struct Isolator {
  const IntPoly& sf;
  const SturmSequence& sturm;
  BigRat maxWidth;
  std::vector<RootInterval>& out;

  void run(const BigRat& lo, const BigRat& hi, int vlo, int vhi) {
    const int c = vlo - vhi;
    if (c <= 0) return;
    if (c == 1) {
      if (sign_at(sf, hi) == 0) {
        out.push_back({hi, hi});
        return;
      }
      if (hi - lo <= maxWidth) {
        out.push_back({lo, hi});
        return;
      }
    }
    BigRat mid = (lo + hi) / 2;
    const int vmid = sturm.variations(mid);
    run(lo, mid, vlo, vmid);
    run(mid, hi, vmid, vhi);
  }
};

}  // namespace detail

/// Certified real-root count and isolation by Sturm sequences in exact
/// arithmetic. Roots at 0 are factored out first and reported as the exact
/// point [0, 0]; remaining intervals are refined to width <= 2^-bits.
inline RootReport sturm_real_roots(const IntPoly& p, unsigned widthBits = kDefaultIsolationBits) {
  if (p.is_zero()) throw PreconditionFailed("sturm_real_roots requires a nonzero polynomial");
  RootReport rep;
  rep.degree = p.degree();
  while (p[static_cast<std::size_t>(rep.zeroMultiplicity)] == 0) ++rep.zeroMultiplicity;
  const IntPoly q(std::vector<BigInt>(p.coeffs().begin() + rep.zeroMultiplicity, p.coeffs().end()));

  rep.squarefree = p.degree() < 1 || poly_gcd(to_rational(p), to_rational(p.derivative())).degree() == 0;

  std::vector<RootInterval> intervals;
  if (q.degree() >= 1) {
    const RatPoly g = poly_gcd(to_rational(q), to_rational(q.derivative()));
    const IntPoly sf = primitive_part(divmod(to_rational(q), g).first);
    const SturmSequence sturm(sf);
    const int vneg = sturm.variations_at_infinity(false);
    const int vpos = sturm.variations_at_infinity(true);
    rep.negativeRootCount = vneg - sturm.variations(BigRat(0));
    const BigRat bound = cauchy_bound(sf);
    BigRat width(1);
    mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), widthBits);
    detail::Isolator iso{sf, sturm, width, intervals};
    iso.run(-bound, bound, vneg, vpos);
    if (static_cast<int>(intervals.size()) != vneg - vpos) throw InternalError("root isolation lost a root");
  }
  if (rep.zeroMultiplicity > 0) intervals.push_back({BigRat(0), BigRat(0)});
  std::sort(intervals.begin(), intervals.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  rep.isolatingIntervals = std::move(intervals);
  rep.realRootCount = static_cast<int>(rep.isolatingIntervals.size());
  rep.allRealSimpleNegative =
      rep.squarefree && rep.zeroMultiplicity == 0 && rep.negativeRootCount == rep.degree && rep.realRootCount == rep.degree;
  return rep;
}

/// Isolating intervals for rho_1 < ... < rho_d = 0, the roots of A_d(t).
struct EulerianRoots {
  unsigned d;
  std::vector<RootInterval> intervals;
};

inline EulerianRoots eulerian_roots(unsigned d, unsigned widthBits = kDefaultIsolationBits) {
  if (d == 0) throw PreconditionFailed("eulerian_roots requires d >= 1");
  RootReport rep = sturm_real_roots(eulerian_poly(d), widthBits);
  if (!rep.squarefree || rep.realRootCount != static_cast<int>(d) || !rep.isolatingIntervals.back().exact() ||
      rep.isolatingIntervals.back().lo != 0)
    throw InvariantViolation("Eulerian polynomial roots not simple, real, with rho_d = 0");
  return EulerianRoots{d, std::move(rep.isolatingIntervals)};
}

/// Largest possible distance between a point of `a` and a point of `b`.
inline BigRat distance_bound(const RootInterval& a, const RootInterval& b) {
  BigRat x = abs(BigRat(a.hi - b.lo));
  BigRat y = abs(BigRat(b.hi - a.lo));
  return x > y ? x : y;
}

struct TraceRow {
  unsigned n;
  bool realRooted;  // false rows carry no root data
  unsigned i = 0;   // 1-based root index
  RootInterval beta{};
  BigRat distanceBound{};
};

/// For each n in [nFrom, nTo], the roots beta_i(n) of U_n h paired with the
/// Eulerian roots rho_i, with an upper bound on |beta_i(n) - rho_i|.
inline std::vector<TraceRow> convergence_trace(const HVector& h, unsigned nFrom, unsigned nTo,
                                               unsigned widthBits = kDefaultIsolationBits) {
  if (nFrom == 0 || nFrom > nTo) throw PreconditionFailed("convergence_trace requires 1 <= nFrom <= nTo");
  const unsigned d = h.d();
  const EulerianRoots rho = eulerian_roots(d, widthBits);
  std::vector<TraceRow> rows;
  for (unsigned n = nFrom; n <= nTo; ++n) {
    const RootReport rep = sturm_real_roots(un_convolution(h, n).poly(), widthBits);
    if (!rep.allRealSimpleNegative || rep.degree != static_cast<int>(d)) {
      rows.push_back(TraceRow{n, false});
      continue;
    }
    for (unsigned i = 0; i < d; ++i) {
      const RootInterval& beta = rep.isolatingIntervals[i];
      rows.push_back(TraceRow{n, true, i + 1, beta, distance_bound(beta, rho.intervals[i])});
    }
  }
  return rows;
}

}  // namespace vlab
