#include "sparseres/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace sparseres {

namespace {

// floor division for cpp_int (operator/ truncates toward zero)
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

LatticeBasis::LatticeBasis(std::size_t ambient, std::vector<IntVector> gens)
    : ambient_rank(ambient), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (g.size() != ambient_rank) throw std::invalid_argument("LatticeBasis: generator length mismatch");
  rank = generators.empty() ? 0 : integer_rank(IntMatrix(generators));
}

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows);
  auto& h = res.h;
  auto& u = res.u;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    // bring the row with smallest nonzero |entry| in this column to the
    // pivot position and eliminate below, repeating until the column is clear
    for (;;) {
      std::size_t best = m.rows;
      for (std::size_t r = pivot_row; r < m.rows; ++r)
        if (h.data[r][col] != 0 &&
            (best == m.rows || abs_int(h.data[r][col]) < abs_int(h.data[best][col])))
          best = r;
      if (best == m.rows) break;  // column clear below pivot_row
      std::swap(h.data[pivot_row], h.data[best]);
      std::swap(u.data[pivot_row], u.data[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < m.rows; ++r) {
        if (h.data[r][col] == 0) continue;
        Int q = floor_div(h.data[r][col], h.data[pivot_row][col]);
        if (q != 0) {
          for (std::size_t j = 0; j < m.cols; ++j) h.data[r][j] -= q * h.data[pivot_row][j];
          for (std::size_t j = 0; j < u.cols; ++j) u.data[r][j] -= q * u.data[pivot_row][j];
        }
        if (h.data[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.data[pivot_row][col] == 0) continue;  // no pivot in this column
    if (h.data[pivot_row][col] < 0) {
      for (auto& x : h.data[pivot_row]) x = -x;
      for (auto& x : u.data[pivot_row]) x = -x;
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = floor_div(h.data[r][col], h.data[pivot_row][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < m.cols; ++j) h.data[r][j] -= q * h.data[pivot_row][j];
      for (std::size_t j = 0; j < u.cols; ++j) u.data[r][j] -= q * u.data[pivot_row][j];
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::size_t integer_rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix p = IntMatrix::identity(m.rows);
  IntMatrix q = IntMatrix::identity(m.cols);
  IntMatrix qinv = IntMatrix::identity(m.cols);

  auto row_sub = [&](std::size_t r, std::size_t t, const Int& k) {  // row r -= k*row t
    for (std::size_t j = 0; j < s.cols; ++j) s.data[r][j] -= k * s.data[t][j];
    for (std::size_t j = 0; j < p.cols; ++j) p.data[r][j] -= k * p.data[t][j];
  };
  auto col_sub = [&](std::size_t c, std::size_t t, const Int& k) {  // col c -= k*col t
    for (std::size_t i = 0; i < s.rows; ++i) s.data[i][c] -= k * s.data[i][t];
    for (std::size_t i = 0; i < q.rows; ++i) q.data[i][c] -= k * q.data[i][t];
    for (std::size_t j = 0; j < qinv.cols; ++j) qinv.data[t][j] += k * qinv.data[c][j];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(s.data[a], s.data[b]);
    std::swap(p.data[a], p.data[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < s.rows; ++i) std::swap(s.data[i][a], s.data[i][b]);
    for (std::size_t i = 0; i < q.rows; ++i) std::swap(q.data[i][a], q.data[i][b]);
    std::swap(qinv.data[a], qinv.data[b]);
  };

  std::size_t t = 0;
  const std::size_t lim = std::min(m.rows, m.cols);
  while (t < lim) {
    // locate the entry of minimal nonzero absolute value in s[t:,t:]
    std::size_t pi = m.rows, pj = m.cols;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j)
        if (s.data[i][j] != 0 &&
            (pi == m.rows || abs_int(s.data[i][j]) < abs_int(s.data[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m.rows) break;  // remaining block is zero
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool again = false;
    for (std::size_t i = t + 1; i < m.rows; ++i) {
      if (s.data[i][t] == 0) continue;
      Int k = s.data[i][t] / s.data[t][t];
      row_sub(i, t, k);
      if (s.data[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < m.cols; ++j) {
      if (s.data[t][j] == 0) continue;
      Int k = s.data[t][j] / s.data[t][t];
      col_sub(j, t, k);
      if (s.data[t][j] != 0) again = true;
    }
    if (again) continue;  // pivot shrank; re-select

    // enforce divisibility of the remaining block by the pivot
    bool fixed = false;
    for (std::size_t i = t + 1; i < m.rows && !fixed; ++i)
      for (std::size_t j = t + 1; j < m.cols && !fixed; ++j)
        if (s.data[i][j] % s.data[t][t] != 0) {
          row_sub(t, i, Int(-1));  // row t += row i
          fixed = true;
        }
    if (fixed) continue;

    if (s.data[t][t] < 0) {
      for (std::size_t j = 0; j < s.cols; ++j) s.data[t][j] = -s.data[t][j];
      for (std::size_t j = 0; j < p.cols; ++j) p.data[t][j] = -p.data[t][j];
    }
    ++t;
  }

  SnfDecomposition d;
  for (std::size_t i = 0; i < t; ++i) d.diagonal.push_back(s.data[i][i]);
  d.left_unimodular = std::move(p);
  d.right_unimodular = std::move(q);
  d.right_inverse = std::move(qinv);
  return d;
}

LatticeBasis saturation(const LatticeBasis& l) {
  if (l.rank == 0) return LatticeBasis(l.ambient_rank, {});
  SnfDecomposition d = smith_normal_form(l.matrix());
  // rowspace_Q(B) cap Z^n is spanned by the first rank rows of Q^{-1}
  std::vector<IntVector> gens(d.right_inverse.data.begin(),
                              d.right_inverse.data.begin() + l.rank);
  HnfResult h = hermite_normal_form(IntMatrix(gens));
  std::vector<IntVector> rows(h.h.data.begin(), h.h.data.begin() + h.rank);
  return LatticeBasis(l.ambient_rank, std::move(rows));
}

Int lattice_index(const LatticeBasis& l) {
  if (l.rank == 0) return 1;
  SnfDecomposition d = smith_normal_form(l.matrix());
  Int idx = 1;
  for (const auto& x : d.diagonal)
    if (x != 0) idx *= x;
  return idx;
}

IntVector primitive(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero direction");
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

bool is_primitive(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g == 1;
}

LatticeBasis orthogonal_basis(const IntVector& v) {
  if (is_zero_vector(v)) throw std::invalid_argument("zero direction");
  if (!is_primitive(v)) throw std::invalid_argument("orthogonal_basis: vector not primitive");
  const std::size_t n = v.size();
  SnfDecomposition d = smith_normal_form(IntMatrix(std::vector<IntVector>{v}));
  // v * Q = (1, 0, ..., 0); the kernel of <.,v> is spanned by columns 2..n of Q
  std::vector<IntVector> gens;
  for (std::size_t j = 1; j < n; ++j) {
    IntVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = d.right_unimodular.data[i][j];
    gens.push_back(std::move(col));
  }
  if (gens.empty()) return LatticeBasis(n, {});
  HnfResult h = hermite_normal_form(IntMatrix(gens));
  std::vector<IntVector> rows(h.h.data.begin(), h.h.data.begin() + h.rank);
  return LatticeBasis(n, std::move(rows));
}

std::optional<IntVector> solve_in_lattice(const IntVector& p, const LatticeBasis& basis) {
  if (p.size() != basis.ambient_rank) throw std::invalid_argument("solve_in_lattice: length mismatch");
  if (basis.generators.empty()) {
    if (is_zero_vector(p)) return IntVector{};
    return std::nullopt;
  }
  HnfResult hr = hermite_normal_form(basis.matrix());
  const IntMatrix& h = hr.h;
  IntVector residual = p;
  IntVector y(hr.rank, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols && row < hr.rank; ++col) {
    if (h.data[row][col] == 0) {
      if (residual[col] != 0) return std::nullopt;
      continue;
    }
    if (residual[col] % h.data[row][col] != 0) return std::nullopt;
    y[row] = residual[col] / h.data[row][col];
    if (y[row] != 0)
      for (std::size_t j = col; j < h.cols; ++j) residual[j] -= y[row] * h.data[row][j];
    ++row;
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return y;
}

std::vector<IntVector> coordinates_in_basis(const std::vector<IntVector>& points,
                                            const LatticeBasis& basis) {
  // coordinates refer to the canonical (HNF) basis of the lattice
  std::vector<IntVector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    auto y = solve_in_lattice(p, basis);
    if (!y) throw std::invalid_argument("not in lattice: " + to_string(p));
    out.push_back(*y);
  }
  return out;
}

IntMatrix quotient_projection(const LatticeBasis& lsat) {
  const std::size_t n = lsat.ambient_rank;
  if (lsat.rank == 0) return IntMatrix::identity(n);
  SnfDecomposition d = smith_normal_form(lsat.matrix());
  for (const auto& x : d.diagonal)
    if (x != 1) throw std::invalid_argument("quotient_projection: lattice not saturated");
  const std::size_t r = lsat.rank;
  IntMatrix proj(n - r, n);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.data[i][j] = d.right_unimodular.data[j][r + i];
  return proj;
}

}  // namespace sparseres
