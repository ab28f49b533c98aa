#pragma once

#include "sparseres/polytope.hpp"

#include <optional>

namespace sparseres {

// An ordered tuple of n+1 nonempty finite subsets of Z^n.
struct SupportFamily {
  std::size_t n = 0;                       // ambient rank
  std::vector<std::vector<IntVector>> supports;  // n+1 entries, deduplicated

  SupportFamily() = default;
  SupportFamily(std::size_t rank, std::vector<std::vector<IntVector>> sup);
};

struct AnalysisReport {
  std::vector<std::vector<std::size_t>> essential_index_sets;
  std::optional<std::vector<std::size_t>> unique_essential;
  bool resultant_trivial = false;
  std::vector<Int> degrees;  // n+1 partial degrees deg_{u_i}(Res)
  Int exponent_dA = 0;       // Res = +/- Elim^{d_A}
  double height_bound = 0;   // sum_i degrees[i] * log(#A_i)
};

struct DirectionalFamily {
  IntVector direction;                 // primitive
  std::vector<IntVector> translations;  // b_{i,v}, lex-smallest face points
  LatticeBasis basis;                  // canonical basis of M cap v-perp
  SupportFamily reduced_supports;      // rank n-1 family of n supports
};

// Z-span of { a_j - a_0 } for a nonempty point set.
LatticeBasis difference_lattice(const std::vector<IntVector>& support);

// All index sets J that are essential in the sense of Sturmfels.
std::vector<std::vector<std::size_t>> essential_subfamilies(const SupportFamily& f);

AnalysisReport analyze(const SupportFamily& f);

// Reduce a tail of n supports to the rank n-1 lattice orthogonal to v.
DirectionalFamily directional_family(const std::vector<std::vector<IntVector>>& tail,
                                     const IntVector& v);

// Primitive directions v for which the directional sparse resultant of the
// tail can be nontrivial: facet normals of the Minkowski sum when it is
// full-dimensional, the two affine-hull normals when dim = n-1, else none.
std::vector<IntVector> nontrivial_directions(const std::vector<std::vector<IntVector>>& tail);

}  // namespace sparseres
