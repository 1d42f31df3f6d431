#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "vlab/core/scalar.hpp"

namespace vlab {

inline bool all_positive(std::span<const BigInt> v) {
  for (const auto& x : v)
    if (x <= 0) return false;
  return true;
}

inline bool is_symmetric(std::span<const BigInt> v) {
  for (std::size_t i = 0; i < v.size() / 2; ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

/// First interior index i with v_i^2 <= v_{i-1} v_{i+1}, if any.
inline std::optional<std::size_t> first_log_concavity_failure(std::span<const BigInt> v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] * v[i] <= v[i - 1] * v[i + 1]) return i;
  return std::nullopt;
}

/// Split index j with v_0 < ... < v_j and v_{j+1} > ... > v_last.
///
/// Returns the largest such j (the end of the strictly increasing prefix);
/// if any split exists that one does.
inline std::optional<std::size_t> strict_unimodal_split(std::span<const BigInt> v) {
  if (v.empty()) return std::nullopt;
  std::size_t j = 0;
  while (j + 1 < v.size() && v[j] < v[j + 1]) ++j;
  for (std::size_t k = j + 1; k + 1 < v.size(); ++k)
    if (!(v[k] > v[k + 1])) return std::nullopt;
  return j;
}

}  // namespace vlab
