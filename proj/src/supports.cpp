#include "sparseres/supports.hpp"

#include <algorithm>
#include <cmath>

namespace sparseres {

namespace {

LatticeBasis joint_difference_lattice(const SupportFamily& f,
                                      const std::vector<std::size_t>& indices) {
  std::vector<IntVector> gens;
  for (std::size_t i : indices) {
    const auto& a = f.supports[i];
    for (std::size_t j = 1; j < a.size(); ++j) gens.push_back(a[j] - a[0]);
  }
  return LatticeBasis(f.n, std::move(gens));
}

}  // namespace

SupportFamily::SupportFamily(std::size_t rank, std::vector<std::vector<IntVector>> sup)
    : n(rank), supports(std::move(sup)) {
  if (supports.size() != n + 1)
    throw std::invalid_argument("SupportFamily: expected n+1 supports");
  for (auto& a : supports) {
    if (a.empty()) throw std::invalid_argument("SupportFamily: empty support");
    for (const auto& p : a)
      if (p.size() != n) throw std::invalid_argument("SupportFamily: point rank mismatch");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

LatticeBasis difference_lattice(const std::vector<IntVector>& support) {
  if (support.empty()) throw std::invalid_argument("difference_lattice: empty support");
  std::vector<IntVector> gens;
  for (std::size_t j = 1; j < support.size(); ++j) gens.push_back(support[j] - support[0]);
  return LatticeBasis(support[0].size(), std::move(gens));
}

std::vector<std::vector<std::size_t>> essential_subfamilies(const SupportFamily& f) {
  const std::size_t count = f.n + 1;
  // rank(L_{A_J}) for every index set, by brute force
  std::vector<std::size_t> rank_of(1u << count, 0);
  for (unsigned mask = 1; mask < (1u << count); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    rank_of[mask] = joint_difference_lattice(f, idx).rank;
  }

  std::vector<std::vector<std::size_t>> result;
  for (unsigned mask = 1; mask < (1u << count); ++mask) {
    std::size_t card = __builtin_popcount(mask);
    if (card != rank_of[mask] + 1) continue;
    bool ok = true;
    // proper subsets must satisfy #J' <= rank(L_{A_J'})
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (static_cast<std::size_t>(__builtin_popcount(sub)) > rank_of[sub]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    result.push_back(std::move(idx));
  }
  return result;
}

AnalysisReport analyze(const SupportFamily& f) {
  AnalysisReport rep;
  rep.essential_index_sets = essential_subfamilies(f);
  rep.degrees.assign(f.n + 1, 0);

  // Prop. 3 criterion (c): rank(L_{A_I}) >= #I - 1 for every index set
  bool rank_criterion = true;
  const std::size_t count = f.n + 1;
  for (unsigned mask = 1; mask < (1u << count) && rank_criterion; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (joint_difference_lattice(f, idx).rank + 1 < idx.size()) rank_criterion = false;
  }
  bool unique = rep.essential_index_sets.size() == 1;
  if (rank_criterion != unique)
    throw std::logic_error("analyze: essential-subfamily criteria disagree");
  rep.resultant_trivial = !unique;
  if (rep.resultant_trivial) return rep;

  rep.unique_essential = rep.essential_index_sets.front();

  std::vector<Polytope> hulls;
  for (const auto& a : f.supports) hulls.push_back(convex_hull(a));
  for (std::size_t i = 0; i <= f.n; ++i) {
    std::vector<Polytope> others;
    for (std::size_t j = 0; j <= f.n; ++j)
      if (j != i) others.push_back(hulls[j]);
    rep.degrees[i] = numerator(mixed_volume(others));
  }

  // exponent d_A (Res = +/- Elim^{d_A}): index of the essential lattice times
  // the mixed volume of the projections of the non-essential hulls
  const auto& J = *rep.unique_essential;
  LatticeBasis lj = joint_difference_lattice(f, J);
  LatticeBasis lsat = saturation(lj);
  IntMatrix proj = quotient_projection(lsat);
  std::vector<Polytope> projected;
  for (std::size_t i = 0; i <= f.n; ++i) {
    if (std::find(J.begin(), J.end(), i) != J.end()) continue;
    std::vector<IntVector> pts;
    for (const auto& p : f.supports[i]) pts.push_back(proj.mul(p));
    projected.push_back(convex_hull(pts));
  }
  rep.exponent_dA = lattice_index(lj) * numerator(mixed_volume(projected));

  for (std::size_t i = 0; i <= f.n; ++i)
    rep.height_bound += rep.degrees[i].convert_to<double>() *
                        std::log(static_cast<double>(f.supports[i].size()));
  return rep;
}

DirectionalFamily directional_family(const std::vector<std::vector<IntVector>>& tail,
                                     const IntVector& v) {
  if (is_zero_vector(v) || !is_primitive(v))
    throw std::invalid_argument("directional_family: direction must be primitive nonzero");
  const std::size_t n = v.size();
  if (tail.size() != n)
    throw std::invalid_argument("directional_family: expected n supports for rank n");

  DirectionalFamily df;
  df.direction = v;
  df.basis = orthogonal_basis(v);
  std::vector<std::vector<IntVector>> reduced;
  for (const auto& a : tail) {
    auto face = face_in_direction(a, v);
    IntVector b = *std::min_element(face.begin(), face.end());  // lex-smallest
    df.translations.push_back(b);
    std::vector<IntVector> shifted;
    for (const auto& p : face) shifted.push_back(p - b);
    reduced.push_back(coordinates_in_basis(shifted, df.basis));
  }
  df.reduced_supports = SupportFamily(n - 1, std::move(reduced));
  return df;
}

std::vector<IntVector> nontrivial_directions(const std::vector<std::vector<IntVector>>& tail) {
  if (tail.empty()) return {};
  const std::size_t n = tail[0][0].size();
  Polytope sum = convex_hull(tail[0]);
  for (std::size_t i = 1; i < tail.size(); ++i)
    sum = minkowski_sum(sum, convex_hull(tail[i]));

  std::vector<IntVector> dirs;
  if (sum.dim == n) {
    for (const auto& f : sum.facets) dirs.push_back(f.normal);
  } else if (sum.dim + 1 == n) {
    // the two normals of the affine hull
    std::vector<IntVector> diffs;
    for (const auto& p : sum.vertices) diffs.push_back(p - sum.vertices.front());
    LatticeBasis span(n, diffs);
    IntMatrix gens(span.generators.empty() ? std::vector<IntVector>{IntVector(n, 0)}
                                           : span.generators);
    SnfDecomposition snf = smith_normal_form(gens);
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = snf.right_unimodular.data[i][n - 1];
    w = primitive(w);
    dirs.push_back(w);
    dirs.push_back(-w);
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace sparseres
