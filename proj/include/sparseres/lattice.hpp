#pragma once

#include "sparseres/numeric.hpp"

#include <optional>

namespace sparseres {

// A sublattice of Z^n given by a (possibly redundant) list of generators.
struct LatticeBasis {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> generators;  // rows, each of length ambient_rank
  std::size_t rank = 0;

  LatticeBasis() = default;
  LatticeBasis(std::size_t ambient, std::vector<IntVector> gens);

  IntMatrix matrix() const { return IntMatrix(generators.empty() ? std::vector<IntVector>{} : generators); }
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form, h = u * m
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
};

struct SnfDecomposition {
  std::vector<Int> diagonal;   // d_1 | d_2 | ... , nonnegative
  IntMatrix left_unimodular;   // P
  IntMatrix right_unimodular;  // Q, with P * m * Q = diag
  IntMatrix right_inverse;     // Q^{-1}
};

// Row-style Hermite normal form: echelon with positive pivots and entries
// above each pivot reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& m);

SnfDecomposition smith_normal_form(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

// Basis of L^sat = (L tensor Q) cap Z^n; canonicalized via HNF.
LatticeBasis saturation(const LatticeBasis& l);

// [L^sat : L], the product of the nonzero elementary divisors.
Int lattice_index(const LatticeBasis& l);

// v / gcd(entries); throws on the zero vector.
IntVector primitive(const IntVector& v);

bool is_primitive(const IntVector& v);

// Basis of the saturated rank n-1 lattice { a in Z^n : <a,v> = 0 },
// for primitive v. Canonicalized via HNF.
LatticeBasis orthogonal_basis(const IntVector& v);

// Exact integer coordinates of each point in the given basis; throws
// "not in lattice" if some point is outside the spanned lattice.
std::vector<IntVector> coordinates_in_basis(const std::vector<IntVector>& points,
                                            const LatticeBasis& basis);

// Matrix of a projection Z^n -> Z^{n-rank} whose kernel is exactly lsat
// (which must be saturated). Acts on column vectors.
IntMatrix quotient_projection(const LatticeBasis& lsat);

// Solve x * basis = p over Z if possible.
std::optional<IntVector> solve_in_lattice(const IntVector& p, const LatticeBasis& basis);

}  // namespace sparseres
