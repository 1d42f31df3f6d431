#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"
#include "vlab/hecke.hpp"
#include "vlab/series.hpp"

namespace vlab {

using Point = std::vector<std::int64_t>;

/// normal . x <= offset
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

inline constexpr unsigned kMaxAmbientDim = 4;
inline constexpr std::uint64_t kDefaultPointBudget = 100'000'000;

/// Full-dimensional lattice polytope in Z^k, k <= 4, given by its vertex
/// list (extra non-vertex points are harmless) and its facet inequalities.
class LatticePolytope {
 public:
  LatticePolytope(std::vector<Point> vertices, std::vector<Facet> facets, unsigned dim)
      : vertices_(std::move(vertices)), facets_(std::move(facets)), dim_(dim) {}

  unsigned ambient_dim() const { return dim_; }
  unsigned dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  // Per-coordinate [min, max] over the vertices.
  std::vector<std::pair<std::int64_t, std::int64_t>> bounding_box() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> box(dim_);
    for (unsigned c = 0; c < dim_; ++c) {
      box[c] = {vertices_[0][c], vertices_[0][c]};
      for (const auto& v : vertices_) {
        box[c].first = std::min(box[c].first, v[c]);
        box[c].second = std::max(box[c].second, v[c]);
      }
    }
    return box;
  }

 private:
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  unsigned dim_;
};

namespace detail {

inline BigInt det(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::size_t rank(std::vector<std::vector<BigRat>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Normal of the hyperplane through k points in Z^k: cofactors of the
// (k-1) x k matrix of differences.
inline std::vector<BigInt> hyperplane_normal(const std::vector<const Point*>& pts, unsigned k) {
  std::vector<std::vector<BigInt>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<BigInt> row(k);
    for (unsigned c = 0; c < k; ++c) row[c] = BigInt(static_cast<long>((*pts[i])[c] - (*pts[0])[c]));
    diffs.push_back(std::move(row));
  }
  std::vector<BigInt> normal(k);
  for (unsigned j = 0; j < k; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (const auto& row : diffs) {
      std::vector<BigInt> r;
      for (unsigned c = 0; c < k; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    normal[j] = (j % 2 == 0 ? 1 : -1) * det(std::move(minor));
  }
  return normal;
}

inline BigInt dot(const std::vector<BigInt>& a, const Point& p) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * BigInt(static_cast<long>(p[i]));
  return s;
}

}  // namespace detail

/// Facets by exhaustive enumeration of k-subsets of the vertices, keeping
/// supporting hyperplanes with primitive integer normals.
inline LatticePolytope ingest_polytope(std::vector<Point> vertices) {
  if (vertices.size() < 2) throw NotFullDimensional("a polytope needs at least 2 vertices");
  const std::size_t k = vertices[0].size();
  if (k == 0) throw NotFullDimensional("vertices must have at least one coordinate");
  for (const auto& v : vertices)
    if (v.size() != k) throw PreconditionFailed("vertices have inconsistent dimensions");
  if (k > kMaxAmbientDim) throw DimensionTooLarge("ambient dimension " + std::to_string(k) + " exceeds 4");

  std::vector<std::vector<BigRat>> diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::vector<BigRat> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = BigRat(static_cast<long>(vertices[i][c] - vertices[0][c]));
    diffs.push_back(std::move(row));
  }
  if (detail::rank(diffs) != k) throw NotFullDimensional("vertices do not span a full-dimensional polytope");

  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<Facet> facets;
  const std::size_t nv = vertices.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<const Point*> pts;
    for (std::size_t i : idx) pts.push_back(&vertices[i]);
    std::vector<BigInt> normal = detail::hyperplane_normal(pts, static_cast<unsigned>(k));
    BigInt g = 0;
    for (const auto& c : normal) g = gcd(g, c);
    if (g != 0) {
      for (auto& c : normal) c /= g;
      const BigInt offset = detail::dot(normal, *pts[0]);
      bool below = true, above = true;
      for (const auto& v : vertices) {
        const BigInt x = detail::dot(normal, v);
        below = below && x <= offset;
        above = above && x >= offset;
      }
      if (below || above) {
        const int s = below ? 1 : -1;
        Facet f{std::vector<std::int64_t>(k), BigInt(s * offset).get_si()};
        for (std::size_t c = 0; c < k; ++c) f.normal[c] = BigInt(s * normal[c]).get_si();
        if (std::find(facets.begin(), facets.end(), f) == facets.end()) facets.push_back(std::move(f));
      }
    }
    // next k-subset
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == nv - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return LatticePolytope(std::move(vertices), std::move(facets), static_cast<unsigned>(k));
}

/// n P.
inline LatticePolytope scale(const LatticePolytope& p, std::int64_t n) {
  std::vector<Point> verts = p.vertices();
  for (auto& v : verts)
    for (auto& c : v) c *= n;
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset *= n;
  return LatticePolytope(std::move(verts), std::move(facets), p.dim());
}

struct CountOptions {
  std::uint64_t budget = kDefaultPointBudget;
  unsigned threads = 1;
};

namespace detail {

enum class CountMode { All, Boundary };

inline std::uint64_t scan(const LatticePolytope& p, std::int64_t m, CountMode mode, const CountOptions& opt) {
  if (m < 0) throw PreconditionFailed("dilation factor must be nonnegative");
  const unsigned k = p.dim();
  auto box = p.bounding_box();
  std::uint64_t candidates = 1;
  for (auto& [lo, hi] : box) {
    lo *= m;
    hi *= m;
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    if (candidates > opt.budget / span + 1) throw BudgetExceeded("lattice-point scan exceeds the point budget");
    candidates *= span;
  }
  if (candidates > opt.budget) throw BudgetExceeded("lattice-point scan exceeds the point budget");

  auto scan_slab = [&](std::int64_t first, std::int64_t last) {
    std::uint64_t count = 0;
    Point x(k);
    // odometer over the box with the first coordinate restricted to [first, last]
    x[0] = first;
    for (unsigned c = 1; c < k; ++c) x[c] = box[c].first;
    if (first > last) return count;
    while (true) {
      bool inside = true, onBoundary = false;
      for (const auto& f : p.facets()) {
        std::int64_t s = 0;
        for (unsigned c = 0; c < k; ++c) s += f.normal[c] * x[c];
        const std::int64_t rhs = f.offset * m;
        if (s > rhs) {
          inside = false;
          break;
        }
        if (s == rhs) onBoundary = true;
      }
      if (inside && (mode == CountMode::All || onBoundary)) ++count;
      unsigned c = k;
      while (c-- > 0) {
        const std::int64_t hi = c == 0 ? last : box[c].second;
        const std::int64_t lo = c == 0 ? first : box[c].first;
        if (x[c] < hi) {
          ++x[c];
          break;
        }
        x[c] = lo;
        if (c == 0) return count;
      }
    }
  };

  const std::int64_t lo0 = box[0].first, hi0 = box[0].second;
  const auto width = static_cast<std::uint64_t>(hi0 - lo0 + 1);
  const unsigned threads = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::min<std::uint64_t>(width, 64))));
  if (threads == 1) return scan_slab(lo0, hi0);
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::int64_t a = lo0 + static_cast<std::int64_t>(width * t / threads);
      const std::int64_t b = lo0 + static_cast<std::int64_t>(width * (t + 1) / threads) - 1;
      pool.emplace_back([&, t, a, b] { partial[t] = scan_slab(a, b); });
    }
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace detail

/// #(mP cap Z^k) by scanning the bounding box of mP.
inline std::uint64_t count_points(const LatticePolytope& p, std::int64_t m, const CountOptions& opt = {}) {
  return detail::scan(p, m, detail::CountMode::All, opt);
}

/// Lattice points of mP lying on some facet.
inline std::uint64_t count_boundary_points(const LatticePolytope& p, std::int64_t m, const CountOptions& opt = {}) {
  return detail::scan(p, m, detail::CountMode::Boundary, opt);
}

/// Interpolates the degree-<=d polynomial through (m, values[m]), m = 0..,
/// by Newton forward differences: f(m) = sum_k Delta^k f(0) C(m, k).
inline RatPoly interpolate_forward(const std::vector<BigInt>& values) {
  std::vector<BigInt> diff = values;
  RatPoly out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (diff[0] != 0) {
      RatPoly basis = RatPoly::constant(BigRat(1));
      for (std::size_t j = 0; j < k; ++j) basis *= RatPoly{BigRat(-static_cast<long>(j)), BigRat(1)};
      out += basis * BigRat(BigRat(diff[0]) / BigRat(factorial(static_cast<unsigned>(k))));
    }
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.pop_back();
  }
  return out;
}

/// f_P as a polynomial in m, interpolated from counts at m = 0..d.
inline RatPoly ehrhart_polynomial(const LatticePolytope& p, const CountOptions& opt = {}) {
  std::vector<BigInt> counts;
  for (unsigned m = 0; m <= p.dim(); ++m) counts.emplace_back(static_cast<unsigned long>(count_points(p, m, opt)));
  return interpolate_forward(counts);
}

/// Counts at m = d+1..2d+2 agree with the interpolated polynomial.
inline bool interpolation_consistent(const LatticePolytope& p, const CountOptions& opt = {}) {
  const RatPoly f = ehrhart_polynomial(p, opt);
  for (unsigned m = p.dim() + 1; m <= 2 * p.dim() + 2; ++m)
    if (f.eval(BigRat(m)) != BigRat(BigInt(static_cast<unsigned long>(count_points(p, m, opt))))) return false;
  return true;
}

/// Numerator of sum_m f_P(m) t^m over (1 - t)^{d+1}.
struct DeltaVector {
  unsigned d;
  std::vector<BigInt> delta;  // delta_0..delta_d

  HVector as_hvector() const { return HVector(d, delta); }
};

inline DeltaVector delta_vector(const LatticePolytope& p, const CountOptions& opt = {}) {
  const unsigned d = p.dim();
  const HVector h = g_to_h(ehrhart_polynomial(p, opt), d);
  DeltaVector out{d, std::vector<BigInt>(h.coeffs().begin(), h.coeffs().begin() + d + 1)};
  for (std::size_t i = 0; i < out.delta.size(); ++i)
    if (out.delta[i] < 0) throw NegativeDelta("delta_" + std::to_string(i) + " is negative");
  if (out.delta[0] != 1) throw InternalError("delta_0 differs from 1");
  return out;
}

/// U_n delta_P == delta_{nP}, the right side by direct counting.
inline bool dilation_consistency(const LatticePolytope& p, unsigned n, const CountOptions& opt = {}) {
  const auto lhs = un_definition(delta_vector(p, opt).as_hvector(), n).coeffs;
  const auto rhs = delta_vector(scale(p, n), opt).delta;
  return lhs == rhs;
}

/// h_1(n) - h_2(n) == #(boundary of nP cap Z^2) - 3 for a lattice polygon.
inline bool boundary_identity_d2(const LatticePolytope& p, unsigned n, const CountOptions& opt = {}) {
  if (p.dim() != 2) throw WrongDimension("boundary identity requires a 2-dimensional polytope");
  const auto c = un_definition(delta_vector(p, opt).as_hvector(), n).coeffs;
  const BigInt boundary(static_cast<unsigned long>(count_boundary_points(p, n, opt)));
  return c[1] - c[2] == boundary - 3;
}

}  // namespace vlab
