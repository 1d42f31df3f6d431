#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vlab/core/error.hpp"

namespace vlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionFailed("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Binomial coefficient C(n, k) extended to any integer n via the falling
// factorial n(n-1)...(n-k+1)/k!; zero for k < 0.
inline BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (long j = 0; j < k; ++j) num *= n - j;
  return num / factorial(static_cast<unsigned>(k));
}

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const BigRat& v) { return sgn(v); }

}  // namespace vlab
