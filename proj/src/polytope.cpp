#include "sparseres/polytope.hpp"

#include <algorithm>
#include <set>

namespace sparseres {

namespace {

constexpr std::size_t kDimCap = 4;

std::vector<IntVector> dedup_sorted(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Primitive generator of the rank-1 kernel of the row span of `diffs`
// (which must have rank d-1 in Z^d), or nullopt.
std::optional<IntVector> hyperplane_normal(const std::vector<IntVector>& diffs, std::size_t d) {
  IntMatrix m(diffs);
  SnfDecomposition snf = smith_normal_form(m);
  std::size_t rank = 0;
  for (const auto& x : snf.diagonal)
    if (x != 0) ++rank;
  if (rank != d - 1) return std::nullopt;
  IntVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = snf.right_unimodular.data[i][d - 1];
  return primitive(v);
}

// Facets and vertices of a full-dimensional hull in Z^d, d >= 1.
void hull_full_dim(const std::vector<IntVector>& pts, std::size_t d,
                   std::vector<IntVector>& vertices, std::vector<Facet>& facets) {
  if (d == 1) {
    Int lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    vertices = {{lo}, {hi}};
    facets = {{IntVector{1}, lo}, {IntVector{-1}, Int(-hi)}};
    return;
  }

  std::set<std::pair<IntVector, Int>> seen;
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  // enumerate d-subsets; every facet contains at least d points, so each
  // facet hyperplane arises from some subset
  for (;;) {
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < d; ++i) diffs.push_back(pts[idx[i]] - pts[idx[0]]);
    if (auto w = hyperplane_normal(diffs, d)) {
      Int h = dot(pts[idx[0]], *w);
      bool all_ge = true, all_le = true;
      for (const auto& p : pts) {
        Int val = dot(p, *w);
        if (val < h) all_ge = false;
        if (val > h) all_le = false;
      }
      if (all_ge) seen.insert({*w, h});
      if (all_le) seen.insert({-*w, -h});
    }
    // next combination
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }

  facets.clear();
  for (auto& [w, h] : seen) facets.push_back({w, h});

  vertices.clear();
  for (const auto& p : pts) {
    std::vector<IntVector> active;
    for (const auto& f : facets)
      if (dot(p, f.normal) == f.offset) active.push_back(f.normal);
    if (!active.empty() && integer_rank(IntMatrix(active)) == d) vertices.push_back(p);
  }
}

}  // namespace

std::vector<IntVector> Polytope::facet_points(const Facet& f) const {
  std::vector<IntVector> out;
  for (const auto& v : vertices)
    if (dot(v, f.normal) == f.offset) out.push_back(v);
  return out;
}

Polytope convex_hull(const std::vector<IntVector>& points) {
  if (points.empty()) throw std::invalid_argument("empty support");
  auto pts = dedup_sorted(points);
  const std::size_t n = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != n) throw std::invalid_argument("convex_hull: mixed ambient ranks");

  const IntVector& p0 = pts[0];
  std::vector<IntVector> diffs;
  for (const auto& p : pts) diffs.push_back(p - p0);
  LatticeBasis lat(n, diffs);
  const std::size_t d = lat.rank;

  Polytope out;
  out.ambient_rank = n;
  out.dim = d;
  if (d == 0) {
    out.vertices = {p0};
    return out;
  }
  if (d > kDimCap) throw std::invalid_argument("convex_hull: dimension cap exceeded (n <= 4)");

  LatticeBasis bsat = saturation(lat);
  std::vector<IntVector> coords = coordinates_in_basis(diffs, bsat);
  coords = dedup_sorted(std::move(coords));

  std::vector<IntVector> verts_d;
  std::vector<Facet> facets_d;
  hull_full_dim(coords, d, verts_d, facets_d);

  IntMatrix basis_mat = bsat.matrix();
  for (const auto& z : verts_d) out.vertices.push_back(mul(z, basis_mat) + p0);
  std::sort(out.vertices.begin(), out.vertices.end());

  if (d == n) {
    // map normals back: solve v . B^T = w, i.e. v = B^{-1} w (B unimodular)
    std::vector<IntVector> bt_rows = basis_mat.transposed().data;
    LatticeBasis bt(n, bt_rows);
    for (const auto& f : facets_d) {
      auto v = solve_in_lattice(f.normal, bt);
      if (!v) throw std::logic_error("convex_hull: normal lift failed");
      out.facets.push_back({*v, f.offset + dot(*v, p0)});
    }
    std::sort(out.facets.begin(), out.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  }
  return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_rank != q.ambient_rank)
    throw std::invalid_argument("minkowski_sum: ambient rank mismatch");
  std::vector<IntVector> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(a + b);
  return convex_hull(sums);
}

Int support_value(const std::vector<IntVector>& points, const IntVector& v) {
  if (points.empty()) throw std::invalid_argument("support_value: empty set");
  Int best = dot(points[0], v);
  for (const auto& p : points) best = std::min(best, dot(p, v));
  return best;
}

Int support_value(const Polytope& p, const IntVector& v) { return support_value(p.vertices, v); }

std::vector<IntVector> face_in_direction(const std::vector<IntVector>& points,
                                         const IntVector& v) {
  if (points.empty()) throw std::invalid_argument("face_in_direction: empty set");
  if (is_zero_vector(v)) return dedup_sorted(points);
  Int h = support_value(points, v);
  std::vector<IntVector> out;
  for (const auto& p : points)
    if (dot(p, v) == h) out.push_back(p);
  return dedup_sorted(out);
}

Rational normalized_volume(const Polytope& p) {
  const std::size_t n = p.ambient_rank;
  if (p.dim < n) return 0;
  if (n == 0) return 1;
  if (n == 1) return Rational(p.vertices.back()[0] - p.vertices.front()[0]);

  // pyramids over the facets not containing the base vertex; the lattice
  // distance to a facet with primitive normal v is <a0,v> - offset
  const IntVector& a0 = p.vertices.front();
  Rational vol = 0;
  for (const auto& f : p.facets) {
    Int h = dot(a0, f.normal) - f.offset;
    if (h == 0) continue;
    auto fpts = p.facet_points(f);
    LatticeBasis ortho = orthogonal_basis(f.normal);
    std::vector<IntVector> shifted;
    for (const auto& q : fpts) shifted.push_back(q - fpts[0]);
    Polytope facet_poly = convex_hull(coordinates_in_basis(shifted, ortho));
    vol += Rational(h) * normalized_volume(facet_poly);
  }
  return vol / n;
}

Rational mixed_volume(const std::vector<Polytope>& polytopes) {
  const std::size_t n = polytopes.size();
  if (n == 0) return 1;
  for (const auto& p : polytopes)
    if (p.ambient_rank != n)
      throw std::invalid_argument("mixed_volume: dimension/arity mismatch");
  if (n > kDimCap) throw std::invalid_argument("mixed_volume: dimension cap exceeded (n <= 4)");

  Rational mv = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Polytope sum;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      sum = first ? polytopes[i] : minkowski_sum(sum, polytopes[i]);
      first = false;
    }
    int popcount = __builtin_popcount(mask);
    Rational term = normalized_volume(sum);
    mv += ((n - popcount) % 2 == 0) ? term : -term;
  }
  if (denominator(mv) != 1 || mv < 0)
    throw std::logic_error("mixed_volume: non-integral or negative result (internal inconsistency)");
  return mv;
}

Rational mixed_volume_sublattice(const std::vector<Polytope>& polytopes,
                                 const LatticeBasis& lattice) {
  if (polytopes.size() != lattice.rank)
    throw std::invalid_argument("mixed_volume_sublattice: arity must equal lattice rank");
  std::vector<Polytope> reduced;
  for (const auto& p : polytopes) {
    std::vector<IntVector> shifted;
    for (const auto& v : p.vertices) shifted.push_back(v - p.vertices.front());
    reduced.push_back(convex_hull(coordinates_in_basis(shifted, lattice)));
  }
  return mixed_volume(reduced);
}

Polytope translate(const Polytope& p, const IntVector& b) {
  Polytope out = p;
  for (auto& v : out.vertices) v = v + b;
  for (auto& f : out.facets) f.offset += dot(b, f.normal);
  return out;
}

}  // namespace sparseres
