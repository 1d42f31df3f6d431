#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/core/combinatorics.hpp"
#include "vlab/core/error.hpp"
#include "vlab/core/sequences.hpp"
#include "vlab/decomp.hpp"
#include "vlab/hecke.hpp"
#include "vlab/roots.hpp"
#include "vlab/series.hpp"

namespace vlab {

enum class CheckStatus { Holds, Fails, NotApplicable };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

/// One evaluated inequality or predicate. `margin` is the exact slack
/// (right side minus left side for "<=" style bounds), so a non-strict
/// check holds iff margin >= 0 and a strict one iff margin > 0.
struct Check {
  std::string name;
  CheckStatus status;
  std::optional<long> index;
  std::optional<BigRat> margin;
  std::string note;
};

struct DiagnosticsReport {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::optional<long> index = std::nullopt, std::optional<BigRat> margin = std::nullopt) {
    checks.push_back(Check{std::move(name), ok ? CheckStatus::Holds : CheckStatus::Fails, index, std::move(margin), {}});
  }

  void not_applicable(std::string name, std::string note, std::optional<long> index = std::nullopt) {
    checks.push_back(Check{std::move(name), CheckStatus::NotApplicable, index, std::nullopt, std::move(note)});
  }

  void append(const DiagnosticsReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  bool none_fail() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fails) return false;
    return true;
  }

  bool none_fail(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name && c.status == CheckStatus::Fails) return false;
    return true;
  }

  std::vector<const Check*> named(std::string_view name) const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (c.name == name) out.push_back(&c);
    return out;
  }

  const Check* find(std::string_view name, std::optional<long> index = std::nullopt) const {
    for (const auto& c : checks)
      if (c.name == name && (!index || c.index == index)) return &c;
    return nullptr;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fails) return &c;
    return nullptr;
  }
};

namespace detail {

inline BigRat inv_factorial(unsigned k) { return BigRat(1) / BigRat(factorial(k)); }

inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// Partial sums h_0 + ... + h_i minus h_{d+1} + ... + h_{d+1-i}, i.e. a_i.
inline std::vector<BigInt> cumulative_differences(const HVector& h) { return decompose(h).a.padded(h.d() + 1); }

// h_0 + ... + h_i >= h_{d+1} + ... + h_{d+1-i} for 0 <= i <= floor(d/2),
// at least one strict. Returns the first violated i, or -1 if all are
// equalities.
inline std::optional<long> weak_cumulative_failure(const HVector& h) {
  const auto a = cumulative_differences(h);
  bool strict = false;
  for (unsigned i = 0; i <= h.d() / 2; ++i) {
    if (a[i] < 0) return static_cast<long>(i);
    strict = strict || a[i] > 0;
  }
  if (!strict) return -1;
  return std::nullopt;
}

inline std::string cumulative_message(long i) {
  if (i < 0) return "cumulative inequalities h_0+...+h_i >= h_{d+1}+...+h_{d+1-i} are all equalities";
  return "cumulative inequality h_0+...+h_i >= h_{d+1}+...+h_{d+1-i} fails at i = " + std::to_string(i);
}

}  // namespace detail

/// g_r <= (-1)^{d-r} S_r(d) g_d + (-1)^{d-r-1} h_0 S_{r+1}(d) / (d-1)!
/// for 1 <= r <= d - 1, given h_i >= 0.
inline DiagnosticsReport betke_mcmullen_bounds(const HVector& h) {
  for (unsigned i = 0; i <= h.d() + 1; ++i)
    if (h[i] < 0) throw PreconditionFailed("betke_mcmullen_bounds: h_" + std::to_string(i) + " is negative");
  DiagnosticsReport rep;
  const unsigned d = h.d();
  if (d < 2) {
    rep.not_applicable("betke_mcmullen", "empty range 1 <= r <= d - 1");
    return rep;
  }
  const GPolynomial g = h_to_g(h);
  const StirlingTable s(d);
  const BigRat gd = g[d];
  for (unsigned r = 1; r + 1 <= d; ++r) {
    const long dr = static_cast<long>(d - r);
    BigRat bound = BigRat(detail::neg_one_pow(dr) * s[r]) * gd +
                   BigRat(detail::neg_one_pow(dr - 1) * h[0] * s[r + 1]) * detail::inv_factorial(d - 1);
    BigRat margin = bound - g[r];
    rep.add("betke_mcmullen", margin >= 0, r, margin);
  }
  return rep;
}

/// g_{d-1-2r} <= S_{d-1-2r}(d-1) g_{d-1} - (h_0 - h_{d+1}) S_{d-2r}(d-1) / (2 (d-2)!)
/// for 1 <= r <= floor((d-1)/2), under the weak cumulative hypothesis.
///
/// The bound is derived from the Betke-McMullen bound for a(t) at index
/// d - 1 - 2r, which only exists for d - 1 - 2r >= 1. For odd d the last r
/// lands on g_0 and is reported not-applicable. The bound is checked exactly as
/// stated even though it can fail: the standard 4-simplex violates it at r = 1.
inline DiagnosticsReport runner_bounds(const HVector& h) {
  DiagnosticsReport rep;
  const unsigned d = h.d();
  if (d <= 2) {
    rep.not_applicable("runner", "empty range 1 <= r <= floor((d-1)/2)");
    return rep;
  }
  if (auto bad = detail::weak_cumulative_failure(h)) throw PreconditionFailed("runner_bounds: " + detail::cumulative_message(*bad));
  const GPolynomial g = h_to_g(h);
  const StirlingTable s(d - 1);
  const BigRat a0(h[0] - h[d + 1]);
  const BigRat denom = BigRat(2) * BigRat(factorial(d - 2));
  for (unsigned r = 1; 2 * r <= d - 1; ++r) {
    const unsigned j = d - 1 - 2 * r;
    if (j == 0) {
      rep.not_applicable("runner", "index d-1-2r = 0 lies outside the Betke-McMullen range r >= 1", r);
      continue;
    }
    BigRat bound = BigRat(s[j]) * g[d - 1] - a0 * BigRat(s[d - 2 * r]) / denom;
    BigRat margin = bound - g[j];
    rep.add("runner", margin >= 0, r, margin);
  }
  return rep;
}

/// g_d >= 1/d!; g_{d-1} >= 1/(2(d-1)!) under the weak cumulative hypothesis;
/// g_{d-1} >= (d+1)/(2(d-1)!) when a(t) has degree d and positive coefficients.
inline DiagnosticsReport deadset_bounds(const HVector& h) {
  DiagnosticsReport rep;
  const unsigned d = h.d();
  const GPolynomial g = h_to_g(h);
  if (h.sum() > 0) {
    BigRat margin = g[d] - detail::inv_factorial(d);
    rep.add("leading_lower", margin >= 0, d, margin);
  } else {
    rep.not_applicable("leading_lower", "sum of h_i is not positive");
  }
  const BigRat sub = g[d - 1];
  const BigRat unit = BigRat(1, 2) * detail::inv_factorial(d - 1);
  if (auto bad = detail::weak_cumulative_failure(h)) {
    rep.not_applicable("subleading_lower", detail::cumulative_message(*bad));
  } else {
    BigRat margin = sub - unit;
    rep.add("subleading_lower", margin >= 0, d - 1, margin);
  }
  const IntPoly a = decompose(h).a;
  if (a.degree() == static_cast<int>(d) && all_positive(a.coeffs())) {
    BigRat margin = sub - BigRat(d + 1) * unit;
    rep.add("subleading_refined", margin >= 0, d - 1, margin);
  } else {
    rep.not_applicable("subleading_refined", "a(t) is not of degree d with positive coefficients");
  }
  return rep;
}

namespace detail {

inline void require_delta(const HVector& delta, const char* who) {
  if (delta[0] != 1) throw PreconditionFailed(std::string(who) + ": delta_0 must be 1");
  if (!delta.nonnegative()) throw PreconditionFailed(std::string(who) + ": delta must be nonnegative");
  if (!delta.degree_at_most_d()) throw PreconditionFailed(std::string(who) + ": delta must have degree <= d");
}

}  // namespace detail

/// delta_0 + ... + delta_i >= delta_d + ... + delta_{d+1-i}, 1 <= i <= floor(d/2)
/// (i terms on the right). Reported both weakly and strictly.
inline DiagnosticsReport hibi_inequalities(const HVector& delta) {
  detail::require_delta(delta, "hibi_inequalities");
  DiagnosticsReport rep;
  const unsigned d = delta.d();
  if (d / 2 == 0) {
    rep.not_applicable("hibi_weak", "empty range 1 <= i <= floor(d/2)");
    rep.not_applicable("hibi_strict", "empty range 1 <= i <= floor(d/2)");
    return rep;
  }
  BigInt low = delta[0], high = 0;
  for (unsigned i = 1; i <= d / 2; ++i) {
    low += delta[i];
    high += delta[d + 1 - i];
    BigRat margin(low - high);
    rep.add("hibi_weak", margin >= 0, i, margin);
    rep.add("hibi_strict", margin > 0, i, margin);
  }
  return rep;
}

/// (a) delta_{i+1} >= delta_{d-i}, 0 <= i <= floor(d/2) - 1;
/// (b) delta_k >= delta_{k+1} for floor((d+1)/2) <= k <= d - 1;
/// (c) delta_i <= C(delta_1 + i - 1, i), 0 <= i <= d.
inline DiagnosticsReport ahs_inequalities(const HVector& delta) {
  DiagnosticsReport rep;
  if (delta[0] != 1 || !delta.nonnegative() || !delta.degree_at_most_d()) {
    rep.not_applicable("ahs", "requires delta_0 = 1, nonnegative entries, degree <= d");
    return rep;
  }
  const unsigned d = delta.d();
  for (unsigned i = 0; i + 1 <= d / 2; ++i) {
    BigRat margin(delta[i + 1] - delta[d - i]);
    rep.add("ahs_a", margin >= 0, i, margin);
  }
  for (unsigned k = (d + 1) / 2; k + 1 <= d; ++k) {
    BigRat margin(delta[k] - delta[k + 1]);
    rep.add("ahs_b", margin >= 0, k, margin);
  }
  for (unsigned i = 0; i <= d; ++i) {
    BigRat margin(binomial(delta[1] + static_cast<long>(i) - 1, static_cast<long>(i)) - delta[i]);
    rep.add("ahs_c", margin >= 0, i, margin);
  }
  return rep;
}

/// Strict log-concavity and strict unimodality of a positive sequence, plus
/// the implication between them.
inline DiagnosticsReport logconcave_unimodal(std::span<const BigInt> v) {
  DiagnosticsReport rep;
  std::optional<long> nonpos;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] <= 0) {
      nonpos = static_cast<long>(i);
      break;
    }
  rep.add("positive", !nonpos && !v.empty(), nonpos);
  if (nonpos || v.empty()) {
    rep.not_applicable("strictly_log_concave", "sequence is not positive");
    rep.not_applicable("strictly_unimodal", "sequence is not positive");
    rep.not_applicable("lc_implies_unimodal", "sequence is not positive");
    return rep;
  }
  std::optional<BigRat> minMargin;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    BigRat m(v[i] * v[i] - v[i - 1] * v[i + 1]);
    if (!minMargin || m < *minMargin) minMargin = m;
  }
  const auto lcFail = first_log_concavity_failure(v);
  if (lcFail) {
    rep.add("strictly_log_concave", false, static_cast<long>(*lcFail),
            BigRat(v[*lcFail] * v[*lcFail] - v[*lcFail - 1] * v[*lcFail + 1]));
  } else {
    rep.add("strictly_log_concave", true, std::nullopt, minMargin);
  }
  const auto split = strict_unimodal_split(v);
  Check um{"strictly_unimodal", split ? CheckStatus::Holds : CheckStatus::Fails, std::nullopt, std::nullopt, {}};
  if (split) {
    um.index = static_cast<long>(*split);
    um.note = "split index j";
  }
  rep.checks.push_back(um);
  rep.add("lc_implies_unimodal", lcFail.has_value() || split.has_value());
  return rep;
}

inline DiagnosticsReport logconcave_unimodal(const std::vector<BigInt>& v) { return logconcave_unimodal(std::span<const BigInt>(v)); }

/// m_d = A(d, floor((d+1)/2)) + 1.
inline BigInt lebron_md(unsigned d) { return EulerianTable(d)(d, (d + 1) / 2) + 1; }

/// Indices of the interleaved chain 0, d, 1, d-1, 2, ... ending at floor((d+1)/2).
inline std::vector<unsigned> lebron_chain_order(unsigned d) {
  std::vector<unsigned> order;
  unsigned lo = 0, hi = d;
  bool takeLow = true;
  while (lo <= hi) {
    if (takeLow) order.push_back(lo++);
    else order.push_back(hi--);
    takeLow = !takeLow;
  }
  return order;
}

/// The strict chain
///   h_0 = h_0(n) < h_d(n) < h_1(n) < h_{d-1}(n) < ... < h_{floor((d+1)/2)}(n) < m_d h_d(n)
/// on U_n h, the unconditional bounds h_i(n) < m_d h_d(n), and the
/// cumulative hypothesis h_0 + ... + h_{i+1} >= h_d + ... + h_{d-i}.
inline DiagnosticsReport lebron_chain(const HVector& h, unsigned n) {
  DiagnosticsReport rep;
  if (h[0] != 1 || !h.nonnegative() || !h.degree_at_most_d()) {
    rep.not_applicable("chain", "requires h_0 = 1, nonnegative entries, degree <= d");
    return rep;
  }
  const unsigned d = h.d();
  {
    BigInt low = h[0], high = 0;
    std::optional<long> bad;
    for (unsigned i = 0; i + 1 <= d / 2 && !bad; ++i) {
      low += h[i + 1];
      high += h[d - i];
      if (low < high) bad = static_cast<long>(i);
    }
    rep.add("chain_hypothesis", !bad, bad);
  }
  const UnResult un = un_convolution(h, n);
  const auto& c = un.coeffs;
  rep.add("chain_start", c[0] == h[0], 0);
  const auto order = lebron_chain_order(d);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    BigRat margin(c[order[k + 1]] - c[order[k]]);
    rep.add("chain_link", margin > 0, static_cast<long>(order[k + 1]), margin);
  }
  const BigInt md = lebron_md(d);
  const BigInt cap = md * c[d];
  {
    BigRat margin(cap - c[order.back()]);
    rep.add("chain_link", margin > 0, -1, margin);
    rep.checks.back().note = "top of chain against m_d h_d(n)";
  }
  for (unsigned i = 0; i <= d; ++i) {
    BigRat margin(cap - c[i]);
    rep.add("md_bound", margin > 0, i, margin);
  }
  return rep;
}

enum class Predicate { RealRooted, LogConcave, Unimodal, Chain, HibiStrict };

inline std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::RealRooted: return "real-rooted";
    case Predicate::LogConcave: return "log-concave";
    case Predicate::Unimodal: return "unimodal";
    case Predicate::Chain: return "chain";
    case Predicate::HibiStrict: return "hibi-strict";
  }
  return "?";
}

inline std::optional<Predicate> parse_predicate(std::string_view s) {
  for (Predicate p : {Predicate::RealRooted, Predicate::LogConcave, Predicate::Unimodal, Predicate::Chain, Predicate::HibiStrict})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

/// Predicate on U_n h:
///  RealRooted  - degree d with d simple negative real roots;
///  LogConcave  - coefficients h_0(n..d) positive and strictly log-concave;
///  Unimodal    - coefficients positive and strictly unimodal;
///  Chain       - every strict link of the chain and every m_d bound;
///  HibiStrict  - strict Hibi inequalities.
inline bool evaluate_predicate(const HVector& h, Predicate pred, unsigned n) {
  const UnResult un = un_convolution(h, n);
  switch (pred) {
    case Predicate::RealRooted: {
      const IntPoly p = un.poly();
      if (p.degree() != static_cast<int>(h.d())) return false;
      return sturm_real_roots(p).allRealSimpleNegative;
    }
    case Predicate::LogConcave:
      return all_positive(un.coeffs) && !first_log_concavity_failure(un.coeffs);
    case Predicate::Unimodal:
      return all_positive(un.coeffs) && strict_unimodal_split(un.coeffs).has_value();
    case Predicate::Chain: {
      const auto rep = lebron_chain(h, n);
      if (rep.find("chain") != nullptr) return false;
      return rep.none_fail("chain_link") && rep.none_fail("md_bound") && rep.none_fail("chain_start");
    }
    case Predicate::HibiStrict: {
      const HVector out = un.as_hvector();
      if (out[0] != 1 || !out.nonnegative()) return false;
      return hibi_inequalities(out).none_fail("hibi_strict");
    }
  }
  return false;
}

struct ThresholdSearch {
  unsigned nMin = 1;
  std::optional<unsigned> threshold;  // smallest n with the predicate true on [n, n_max]
  bool nonMonotone = false;           // true somewhere, then false later
  std::vector<bool> values;           // values[n - nMin]
};

inline ThresholdSearch minimal_n_search(const HVector& h, Predicate pred, unsigned nMax, unsigned nMin = 1) {
  if (nMin == 0 || nMax < nMin) throw PreconditionFailed("minimal_n_search requires 1 <= n_min <= n_max");
  ThresholdSearch out;
  out.nMin = nMin;
  out.values.reserve(nMax - nMin + 1);
  for (unsigned n = nMin; n <= nMax; ++n) out.values.push_back(evaluate_predicate(h, pred, n));
  bool seenTrue = false;
  for (bool v : out.values) {
    if (v) seenTrue = true;
    else if (seenTrue) out.nonMonotone = true;
  }
  if (out.values.back()) {
    std::size_t k = out.values.size() - 1;
    while (k > 0 && out.values[k - 1]) --k;
    out.threshold = nMin + static_cast<unsigned>(k);
  }
  return out;
}

}  // namespace vlab
