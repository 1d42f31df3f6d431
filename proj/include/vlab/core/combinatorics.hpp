#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vlab/core/poly.hpp"
#include "vlab/core/scalar.hpp"

namespace vlab {

/// Eulerian numbers A(d', i), 1 <= i <= d' <= d: permutations of d' letters
/// with i - 1 descents. Built from
///   A(d, i) = i A(d-1, i) + (d + 1 - i) A(d-1, i-1).
class EulerianTable {
 public:
  explicit EulerianTable(unsigned d) : d_(d), rows_(d + 1) {
    rows_[0] = {BigInt(1)};  // A_0(t) = 1, stored at index 0
    for (unsigned n = 1; n <= d; ++n) {
      std::vector<BigInt> row(n + 1, BigInt(0));
      for (unsigned i = 1; i <= n; ++i) {
        row[i] = BigInt(i) * at(rows_[n - 1], i) + BigInt(n + 1 - i) * at(rows_[n - 1], i - 1);
      }
      rows_[n] = std::move(row);
    }
  }

  unsigned max_degree() const { return d_; }

  // A(n, i); zero outside 1 <= i <= n (A(0, 0) = 1 by convention).
  BigInt operator()(unsigned n, long i) const {
    if (n > d_) throw std::out_of_range("EulerianTable row beyond table bound");
    if (i < 0) return 0;
    return at(rows_[n], static_cast<std::size_t>(i));
  }

  // A_n(t) = sum_i A(n, i) t^i, with A_0(t) = 1.
  IntPoly polynomial(unsigned n) const {
    if (n > d_) throw std::out_of_range("EulerianTable row beyond table bound");
    return IntPoly(rows_[n]);
  }

 private:
  static BigInt at(const std::vector<BigInt>& row, std::size_t i) { return i < row.size() ? row[i] : BigInt(0); }

  unsigned d_;
  std::vector<std::vector<BigInt>> rows_;
};

inline IntPoly eulerian_poly(unsigned d) { return EulerianTable(d).polynomial(d); }

/// Signed Stirling numbers of the first kind: S_i(d) is the coefficient of
/// t^i in t(t-1)...(t-d+1).
class StirlingTable {
 public:
  explicit StirlingTable(unsigned d) : d_(d) {
    if (d == 0) throw PreconditionFailed("stirling_first requires d >= 1");
    // s(n+1, i) = s(n, i-1) - n s(n, i)
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned n = 0; n < d; ++n) {
      std::vector<BigInt> next(row.size() + 1, BigInt(0));
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (i >= 1) next[i] += row[i - 1];
        if (i < row.size()) next[i] -= BigInt(n) * row[i];
      }
      row = std::move(next);
    }
    s_ = std::move(row);
  }

  unsigned d() const { return d_; }
  const std::vector<BigInt>& values() const { return s_; }

  BigInt operator[](long i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= s_.size()) return 0;
    return s_[static_cast<std::size_t>(i)];
  }

 private:
  unsigned d_;
  std::vector<BigInt> s_;
};

inline StirlingTable stirling_first(unsigned d) { return StirlingTable(d); }

/// C(m + d - shift, d) as a polynomial in m.
inline RatPoly binom_poly(unsigned d, long shift) {
  RatPoly p = RatPoly::constant(BigRat(1));
  for (unsigned k = 0; k < d; ++k) {
    const long c = static_cast<long>(d) - shift - static_cast<long>(k);
    p *= RatPoly{BigRat(c), BigRat(1)};
  }
  return p * BigRat(BigRat(1) / BigRat(factorial(d)));
}

}  // namespace vlab
