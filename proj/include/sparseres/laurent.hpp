#pragma once

#include "sparseres/complex.hpp"
#include "sparseres/polytope.hpp"

#include <map>
#include <stdexcept>

namespace sparseres {

template <typename C>
struct LaurentPolynomial;

template <typename T>
bool is_zero_coeff(const Complex<T>& c) {
  return exactly_zero(c);
}

template <typename C>
bool is_zero_coeff(const LaurentPolynomial<C>& f) {
  return f.terms.empty();
}

// Sparse Laurent polynomial in n variables. Coefficients are pluggable:
// Complex<double>, Complex<BigFloat>, Complex<Rational>, or (for variable
// hiding) univariate LaurentPolynomials again. No zero coefficient is ever
// stored; the term map is ordered lexicographically, so iteration and
// serialization are deterministic.
template <typename C>
struct LaurentPolynomial {
  std::size_t n = 0;
  std::map<IntVector, C> terms;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t vars) : n(vars) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const IntVector& a, C c) {
    if (a.size() != n) throw std::invalid_argument("exponent arity mismatch");
    if (is_zero_coeff(c)) return;
    auto it = terms.find(a);
    if (it == terms.end()) {
      terms.emplace(a, std::move(c));
    } else {
      it->second += c;
      if (is_zero_coeff(it->second)) terms.erase(it);
    }
  }

  C coefficient(const IntVector& a) const {
    auto it = terms.find(a);
    return it == terms.end() ? C{} : it->second;
  }

  // Only meaningful for complex-scalar coefficients; xi on the torus.
  C evaluate(const std::vector<C>& xi) const {
    C acc{};
    for (const auto& [a, c] : terms) {
      C mono = c;
      for (std::size_t k = 0; k < n; ++k) mono *= cpow(xi[k], a[k]);
      acc += mono;
    }
    return acc;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    if (n != o.n) throw std::invalid_argument("variable arity mismatch");
    for (const auto& [a, c] : o.terms) add_term(a, c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.n != b.n) throw std::invalid_argument("variable arity mismatch");
    LaurentPolynomial out(a.n);
    for (const auto& [p, c] : a.terms)
      for (const auto& [q, d] : b.terms) out.add_term(p + q, c * d);
    return out;
  }

  friend LaurentPolynomial operator*(const C& s, const LaurentPolynomial& f) {
    LaurentPolynomial out(f.n);
    for (const auto& [a, c] : f.terms) out.add_term(a, s * c);
    return out;
  }

  bool operator==(const LaurentPolynomial&) const = default;
};

template <typename C>
std::vector<IntVector> support_of(const LaurentPolynomial<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no support");
  std::vector<IntVector> sup;
  sup.reserve(f.terms.size());
  for (const auto& [a, c] : f.terms) sup.push_back(a);
  return sup;
}

template <typename C>
Polytope newton_polytope(const LaurentPolynomial<C>& f) {
  return convex_hull(support_of(f));
}

// f_{i,v}: the sub-sum over exponents minimizing <a, v>.
template <typename C>
LaurentPolynomial<C> initial_part(const LaurentPolynomial<C>& f, const IntVector& v) {
  if (is_zero_vector(v)) throw std::invalid_argument("zero direction");
  Int h = support_value(support_of(f), v);
  LaurentPolynomial<C> out(f.n);
  for (const auto& [a, c] : f.terms)
    if (dot(a, v) == h) out.add_term(a, c);
  return out;
}

// f = chi^b * g with b the lexicographically smallest support point, so the
// origin lies in the support of g.
template <typename C>
std::pair<IntVector, LaurentPolynomial<C>> factor_out_monomial(const LaurentPolynomial<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no support");
  IntVector b = f.terms.begin()->first;
  LaurentPolynomial<C> g(f.n);
  for (const auto& [a, c] : f.terms) g.terms.emplace(a - b, c);
  return {b, g};
}

// Monomial substitution t^a -> t^{u a} (u acting on exponent columns).
template <typename C>
LaurentPolynomial<C> change_coordinates(const LaurentPolynomial<C>& f, const IntMatrix& u) {
  if (u.rows != f.n || u.cols != f.n) throw std::invalid_argument("coordinate matrix arity mismatch");
  auto hnf = hermite_normal_form(u);
  Int det = 1;
  for (std::size_t i = 0; i < hnf.rank; ++i) det *= hnf.h.at(i, i);
  if (hnf.rank != f.n || det != 1) throw std::invalid_argument("matrix is not unimodular");
  LaurentPolynomial<C> out(f.n);
  for (const auto& [a, c] : f.terms) out.terms.emplace(u.mul(a), c);
  return out;
}

// Regroup f by the exponents of all variables except t_k (1-based): the
// result lives in n-1 variables and its coefficients are univariate Laurent
// polynomials in t_k.
template <typename C>
LaurentPolynomial<LaurentPolynomial<C>> hide_variable(const LaurentPolynomial<C>& f,
                                                      std::size_t k) {
  if (k < 1 || k > f.n) throw std::invalid_argument("variable index out of range");
  LaurentPolynomial<LaurentPolynomial<C>> out(f.n - 1);
  for (const auto& [a, c] : f.terms) {
    IntVector outer;
    outer.reserve(f.n - 1);
    for (std::size_t j = 0; j < f.n; ++j)
      if (j != k - 1) outer.push_back(a[j]);
    LaurentPolynomial<C> inner(1);
    inner.add_term({a[k - 1]}, c);
    out.add_term(outer, inner);
  }
  return out;
}

template <typename C>
LaurentPolynomial<C> unhide_variable(const LaurentPolynomial<LaurentPolynomial<C>>& h,
                                     std::size_t k, std::size_t n) {
  LaurentPolynomial<C> out(n);
  for (const auto& [outer, inner] : h.terms)
    for (const auto& [e, c] : inner.terms) {
      IntVector a;
      a.reserve(n);
      for (std::size_t j = 0, p = 0; j < n; ++j)
        a.push_back(j == k - 1 ? e[0] : outer[p++]);
      out.add_term(a, c);
    }
  return out;
}

template <typename T>
LaurentPolynomial<Complex<T>> derivative(const LaurentPolynomial<Complex<T>>& f, std::size_t j) {
  LaurentPolynomial<Complex<T>> out(f.n);
  for (const auto& [a, c] : f.terms) {
    if (a[j] == 0) continue;
    IntVector b = a;
    b[j] -= 1;
    out.add_term(b, c * Complex<T>(to_field<T>(a[j])));
  }
  return out;
}

// Specialize the last variable to a fixed torus value; drops to n-1 variables.
template <typename T>
LaurentPolynomial<Complex<T>> specialize_last(const LaurentPolynomial<Complex<T>>& f,
                                              const Complex<T>& value) {
  LaurentPolynomial<Complex<T>> out(f.n - 1);
  for (const auto& [a, c] : f.terms) {
    IntVector b(a.begin(), a.end() - 1);
    out.add_term(b, c * cpow(value, a.back()));
  }
  return out;
}

}  // namespace sparseres
