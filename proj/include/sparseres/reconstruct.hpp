#pragma once

#include "sparseres/engine.hpp"

#include <map>
#include <string>

namespace sparseres {

// An integer polynomial in the coefficient variables u_{i,j}, 0 <= i <= n,
// 0 <= j < #A_i, homogeneous of a fixed degree in each block of variables.
// Terms are keyed by the concatenation of the per-block exponent vectors.
struct MultihomogeneousIntPolynomial {
  std::vector<std::size_t> block_sizes;   // #A_i for each i
  std::vector<Int> multidegree;           // degree in each block
  std::map<std::vector<Int>, Int> terms;  // concatenated exponents -> coefficient

  // exact evaluation at rational values for the u_{i,j}
  Rational evaluate(const std::vector<std::vector<Rational>>& u) const;

  std::string to_text() const;
};

// Recover the resultant of a tiny family as a primitive integer polynomial,
// by interpolating high-precision numeric evaluations at random rational
// specializations and rounding the solved coefficients. The result is
// normalized to content 1 with the lexicographically first term positive;
// the overall sign is a convention of this routine, not of the resultant.
MultihomogeneousIntPolynomial reconstruct(const SupportFamily& family, int precision_bits,
                                          std::uint64_t seed = 1);

struct HeightBoundReport {
  double height = 0;  // log of the largest |coefficient|
  double bound = 0;   // sum_i multidegree[i] * log(#A_i)
  bool ok = false;
};

HeightBoundReport verify_height_bound(const MultihomogeneousIntPolynomial& p,
                                      const SupportFamily& family);

}  // namespace sparseres
