#pragma once

#include "sparseres/lattice.hpp"

namespace sparseres {

struct Facet {
  IntVector normal;  // primitive inner normal: <x, normal> >= offset on the polytope
  Int offset;

  bool operator==(const Facet& o) const = default;
};

// Lattice polytope with exact vertex and facet data. Facets are stored only
// for full-dimensional polytopes (dim == ambient_rank); lower-dimensional
// bodies keep an empty facet list.
struct Polytope {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> vertices;  // extreme points, sorted lexicographically
  std::vector<Facet> facets;
  std::size_t dim = 0;

  std::vector<IntVector> facet_points(const Facet& f) const;
};

// Exact hull of a nonempty lattice point set; dimension cap is 4.
Polytope convex_hull(const std::vector<IntVector>& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// h(v) = min over the point set of <v, x>  (concave convention)
Int support_value(const std::vector<IntVector>& points, const IntVector& v);
Int support_value(const Polytope& p, const IntVector& v);

// { a in A : <a,v> = h_A(v) }; for v = 0 the whole set.
std::vector<IntVector> face_in_direction(const std::vector<IntVector>& points,
                                         const IntVector& v);

// Volume normalized so Z^n has covolume 1; zero for dim < ambient_rank.
Rational normalized_volume(const Polytope& p);

// Mixed volume by inclusion-exclusion; requires exactly n bodies in rank n
// (n = 0 gives 1). Integral for lattice polytopes (asserted).
Rational mixed_volume(const std::vector<Polytope>& polytopes);

// Mixed volume of bodies lying in translates of the span of `lattice`,
// measured against that lattice.
Rational mixed_volume_sublattice(const std::vector<Polytope>& polytopes,
                                 const LatticeBasis& lattice);

Polytope translate(const Polytope& p, const IntVector& b);

}  // namespace sparseres
