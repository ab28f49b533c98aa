#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace sparseres {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Row vector with entries in Z.
using IntVector = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Dense integer matrix, stored by rows.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<IntVector> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, IntVector(c, 0)) {}
  explicit IntMatrix(std::vector<IntVector> rows_in) : data(std::move(rows_in)) {
    rows = data.size();
    cols = rows ? data[0].size() : 0;
    for (const auto& r : data)
      if (r.size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
  }

  static IntMatrix identity(std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.data[i][i] = 1;
    return m;
  }

  Int& at(std::size_t i, std::size_t j) { return data[i][j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i][j]; }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }

  // this * m
  IntMatrix mul(const IntMatrix& m) const {
    if (cols != m.rows) throw std::invalid_argument("matrix mul: shape mismatch");
    IntMatrix r(rows, m.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        if (data[i][k] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) r.data[i][j] += data[i][k] * m.data[k][j];
      }
    return r;
  }

  // matrix * column vector
  IntVector mul(const IntVector& v) const {
    if (cols != v.size()) throw std::invalid_argument("matrix*vector: shape mismatch");
    IntVector r(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r[i] += data[i][j] * v[j];
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r.data[j][i] = data[i][j];
    return r;
  }
};

// row vector * matrix
inline IntVector mul(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows) throw std::invalid_argument("vector*matrix: shape mismatch");
  IntVector r(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.data[i][j];
  }
  return r;
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace sparseres
