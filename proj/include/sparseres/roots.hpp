#pragma once

#include "sparseres/complex.hpp"
#include "sparseres/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace sparseres {

// Horner evaluation of an ascending dense polynomial.
template <typename T>
Complex<T> horner(const std::vector<Complex<T>>& c, const Complex<T>& z) {
  Complex<T> acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// All complex roots of c[0] + c[1] z + ... + c[d] z^d by Aberth-Ehrlich
// simultaneous iteration. Requires c[0] != 0 and c[d] != 0 (callers strip the
// monomial factor first). Deterministic: initial guesses sit on a circle
// whose radius comes from the coefficient bounds.
template <typename T>
std::vector<Complex<T>> aberth_roots(const std::vector<Complex<T>>& c) {
  using C = Complex<T>;
  using std::pow;
  const std::size_t d = c.size() - 1;
  if (d == 0) return {};

  std::vector<C> dc(d);
  for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * C(to_field<T>(Int(i)));

  T radius = pow(abs(c[0] / c[d]), T(1) / to_field<T>(Int(d)));
  const T two_pi = 2 * const_pi<T>();
  std::vector<C> z(d);
  for (std::size_t k = 0; k < d; ++k)
    z[k] = polar(radius, two_pi * to_field<T>(Int(k)) / to_field<T>(Int(d)) + T(0.7));

  // residual noise floor: |p(z)| <= feps * sum |c_i||z|^i means we are done
  const T feps = std::numeric_limits<T>::epsilon();
  const T step_tol = FieldTraits<T>::root_step();
  auto noise_floor = [&](const T& az) {
    T scale = 0, p = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      scale += abs(c[i]) * p;
      p *= az;
    }
    return 8 * feps * scale;
  };

  std::vector<bool> done(d, false);
  for (int iter = 0; iter < 200; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      C pv = horner(c, z[k]);
      if (abs(pv) <= noise_floor(abs(z[k]))) {
        done[k] = true;
        continue;
      }
      C dv = horner(dc, z[k]);
      C w = exactly_zero(dv) ? C(T(0)) : pv / dv;
      C sum{};
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += C(T(1)) / (z[k] - z[j]);
      C denom = C(T(1)) - w * sum;
      C step = exactly_zero(denom) ? w : w / denom;
      z[k] -= step;
      if (abs(step) <= step_tol * (T(1) + abs(z[k])))
        done[k] = true;
      else
        all_done = false;
    }
    if (all_done) break;
    if (iter == 199) throw NumericalError("root finder did not converge in 200 iterations");
  }
  return z;
}

// Merge near-coincident roots: relative radius rho, transitively closed.
// Returns cluster centroids with multiplicities, deterministically ordered.
template <typename T>
std::vector<std::pair<Complex<T>, int>> cluster_roots(const std::vector<Complex<T>>& roots,
                                                      const T& rho) {
  using std::max;
  const std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      T scale = max(T(1), max(abs(roots[i]), abs(roots[j])));
      if (abs(roots[i] - roots[j]) <= rho * scale) parent[find(i)] = find(j);
    }
  std::vector<std::pair<Complex<T>, int>> out;
  for (std::size_t r = 0; r < m; ++r) {
    if (find(r) != r) continue;
    Complex<T> centroid{};
    int count = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (find(i) == r) {
        centroid += roots[i];
        ++count;
      }
    centroid /= Complex<T>(to_field<T>(Int(count)));
    out.emplace_back(centroid, count);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    T aa = abs(a.first), ab = abs(b.first);
    if (aa != ab) return aa < ab;
    using std::atan2;
    return atan2(a.first.im, a.first.re) < atan2(b.first.im, b.first.re);
  });
  return out;
}

template <typename T>
std::vector<std::pair<Complex<T>, int>> cluster_roots(const std::vector<Complex<T>>& roots) {
  return cluster_roots(roots, FieldTraits<T>::cluster());
}

}  // namespace sparseres
