#pragma once

#include "sparseres/errors.hpp"
#include "sparseres/laurent.hpp"
#include "sparseres/roots.hpp"
#include "sparseres/supports.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sparseres {

template <typename T>
using CPoly = LaurentPolynomial<Complex<T>>;

template <typename T>
struct RootList {
  std::vector<std::pair<std::vector<Complex<T>>, int>> roots;  // (point, multiplicity)
  T residual{};
};

template <typename T>
struct ResultantValue {
  Complex<T> value{};
  bool sign_ambiguous = true;  // the resultant itself is defined up to sign
  int precision = FieldTraits<T>::precision_bits;
  std::vector<std::string> trace;
};

template <typename T>
RootList<T> solve_square_system(const std::vector<CPoly<T>>& f, std::uint64_t seed);

template <typename T>
ResultantValue<T> eval_sparse_resultant(const SupportFamily& fam, const std::vector<CPoly<T>>& f,
                                        std::uint64_t seed);

template <typename T>
ResultantValue<T> eval_directional_resultant(const std::vector<std::vector<IntVector>>& tail,
                                             const IntVector& v, const std::vector<CPoly<T>>& f,
                                             std::uint64_t seed);

// --- small utilities ---------------------------------------------------

// platform-independent uniform in [0,1)
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
bool numerically_zero(const Complex<T>& z) {
  if constexpr (FieldTraits<T>::exact)
    return exactly_zero(z);
  else
    return abs(z) < FieldTraits<T>::tolerance();
}

// f as a dense univariate polynomial: f = chi^m * (g[0] + g[1] t + ...),
// g[0] != 0 and g.back() != 0.
template <typename T>
std::pair<Int, std::vector<Complex<T>>> dense_univariate(const CPoly<T>& f) {
  if (f.is_zero()) throw InputError("zero polynomial has no support");
  Int lo = f.terms.begin()->first[0];
  Int hi = f.terms.rbegin()->first[0];
  std::vector<Complex<T>> g(Int(hi - lo + 1).convert_to<std::size_t>());
  for (const auto& [a, c] : f.terms) g[Int(a[0] - lo).convert_to<std::size_t>()] = c;
  return {lo, std::move(g)};
}

// relative residual |f(x)| / (1 + sum_a |c_a x^a|)
template <typename T>
T relative_residual(const CPoly<T>& f, const std::vector<Complex<T>>& x) {
  using C = Complex<T>;
  C acc{};
  T scale = 1;
  for (const auto& [a, c] : f.terms) {
    C mono = c;
    for (std::size_t k = 0; k < f.n; ++k) mono *= cpow(x[k], a[k]);
    acc += mono;
    scale += abs(mono);
  }
  return abs(acc) / scale;
}

template <typename T>
void sort_roots(std::vector<std::pair<std::vector<Complex<T>>, int>>& roots) {
  auto key_less = [](const auto& a, const auto& b) {
    using std::atan2;
    for (std::size_t k = 0; k < a.first.size(); ++k) {
      T ma = abs(a.first[k]), mb = abs(b.first[k]);
      if (ma != mb) return ma < mb;
      T aa = atan2(a.first[k].im, a.first[k].re), ab = atan2(b.first[k].im, b.first[k].re);
      if (aa != ab) return aa < ab;
    }
    return false;
  };
  std::sort(roots.begin(), roots.end(), key_less);
}

// --- univariate solve ---------------------------------------------------

template <typename T>
RootList<T> solve_univariate(const CPoly<T>& f) {
  if (f.is_zero()) throw InputError("zero polynomial has no torus roots");
  if (f.n != 1) throw InputError("solve_univariate expects one variable");
  RootList<T> out;
  if (f.terms.size() < 2) return out;  // monomial
  auto [m, g] = dense_univariate(f);
  for (auto& [z, mult] : cluster_roots(aberth_roots(g))) {
    using std::max;
    out.residual = max(out.residual, relative_residual(f, {z}));
    out.roots.push_back({{z}, mult});
  }
  sort_roots(out.roots);
  return out;
}

// --- Bernstein count ------------------------------------------------------

inline Int bernstein_number(const std::vector<std::vector<IntVector>>& supports) {
  if (supports.empty()) return 1;
  if (supports[0].empty() || supports.size() != supports[0][0].size())
    throw InputError("bernstein_number needs exactly n supports in rank n");
  std::vector<Polytope> hulls;
  for (const auto& s : supports) hulls.push_back(convex_hull(s));
  return numerator(mixed_volume(hulls));
}

// --- determinants over a complex field -----------------------------------

// Gaussian elimination with pivoting by |.|^2 (works in exact domains too).
template <typename C>
C field_determinant(std::vector<std::vector<C>> m) {
  const std::size_t n = m.size();
  C det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (norm(m[r][col]) > norm(m[pivot][col])) pivot = r;
    if (exactly_zero(m[pivot][col])) return C(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      C factor = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[col][cc];
    }
  }
  return det;
}

// Res(p, q) = lc(p)^{deg q} * prod_{p(xi)=0} q(xi), as the Sylvester
// determinant. p, q ascending dense, p.back() != 0.
template <typename C>
C sylvester_resultant(const std::vector<C>& p, const std::vector<C>& q) {
  const std::size_t dp = p.size() - 1, dq = q.size() - 1;
  if (dp == 0) return cpow(p[0], Int(dq));
  if (dq == 0) return cpow(q[0], Int(dp));
  const std::size_t n = dp + dq;
  std::vector<std::vector<C>> m(n, std::vector<C>(n, C{}));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t j = 0; j <= dp; ++j) m[r][r + j] = p[dp - j];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t j = 0; j <= dq; ++j) m[dq + r][r + j] = q[dq - j];
  return field_determinant(std::move(m));
}

// Solve the square linear system a x = b in place; throws on singularity.
template <typename C>
std::vector<C> field_solve(std::vector<std::vector<C>> a, std::vector<C> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (norm(a[r][col]) > norm(a[pivot][col])) pivot = r;
    if (exactly_zero(a[pivot][col])) throw NumericalError("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      C factor = a[r][col] / a[col][col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= factor * a[col][cc];
      b[r] -= factor * b[col];
    }
  }
  std::vector<C> x(n);
  for (std::size_t r = n; r-- > 0;) {
    C acc = b[r];
    for (std::size_t cc = r + 1; cc < n; ++cc) acc -= a[r][cc] * x[cc];
    x[r] = acc / a[r][r];
  }
  return x;
}

// --- exact univariate resultant (Poisson, n = 1) --------------------------
//
// Res(f0, f1) = tc^{-min A0} * lc^{max A0} * prod_{f1(xi)=0} f0(xi), where
// tc/lc are f1's coefficients at the declared extremes of A1. The root
// product is evaluated exactly through a Sylvester determinant, so this path
// is deterministic and sign-consistent in the coefficients -- which the
// hidden-variable interpolation upstream relies on.
template <typename T>
Complex<T> eval_res_univariate(const SupportFamily& fam, const CPoly<T>& f0, const CPoly<T>& f1) {
  using C = Complex<T>;
  const Int lo0 = fam.supports[0].front()[0], hi0 = fam.supports[0].back()[0];
  const Int lo1 = fam.supports[1].front()[0], hi1 = fam.supports[1].back()[0];
  C tc = f1.coefficient({lo1});
  C lc = f1.coefficient({hi1});
  if (exactly_zero(tc) || exactly_zero(lc))
    throw HypothesisError("Poisson hypothesis fails: extreme coefficient of f1 vanishes");
  C prod(T(1));
  if (hi1 != lo1) {
    auto [m1, g1] = dense_univariate(f1);
    auto [m0, g0] = dense_univariate(f0);
    const std::size_t d1 = g1.size() - 1, d0 = g0.size() - 1;
    C prod_xi = (d1 % 2 ? -g1[0] : g1[0]) / g1[d1];
    C prod_g0 = d0 == 0 ? cpow(g0[0], Int(d1))
                        : sylvester_resultant(g1, g0) / cpow(g1[d1], Int(d0));
    prod = cpow(prod_xi, m0) * prod_g0;
  }
  return cpow(tc, -lo0) * cpow(lc, hi0) * prod;
}

// --- directional resultants ------------------------------------------------

template <typename T>
ResultantValue<T> eval_directional_resultant(const std::vector<std::vector<IntVector>>& tail,
                                             const IntVector& v, const std::vector<CPoly<T>>& f,
                                             std::uint64_t seed) {
  using C = Complex<T>;
  if (!is_primitive(v)) throw InputError("direction must be a primitive vector");
  auto df = directional_family(tail, v);
  auto repv = analyze(df.reduced_supports);
  std::vector<CPoly<T>> g;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    auto face = face_in_direction(tail[i], v);
    CPoly<T> gi(df.reduced_supports.n);
    std::vector<IntVector> shifted;
    std::vector<C> coeffs;
    for (const auto& a : face) {
      C c = f[i].coefficient(a);
      if (exactly_zero(c)) continue;
      shifted.push_back(a - df.translations[i]);
      coeffs.push_back(c);
    }
    if (shifted.empty()) {
      ResultantValue<T> rv;
      if (repv.resultant_trivial) {
        rv.value = C(T(1));
        rv.trace.push_back("trivial directional family at " + to_string(v));
        return rv;
      }
      if (repv.degrees[i] > 0) {
        rv.value = C(T(0));
        return rv;
      }
      throw HypothesisError("degenerate specialization in direction " + to_string(v));
    }
    auto reduced = coordinates_in_basis(shifted, df.basis);
    for (std::size_t k = 0; k < reduced.size(); ++k) gi.add_term(reduced[k], coeffs[k]);
    g.push_back(std::move(gi));
  }
  auto rv = eval_sparse_resultant(df.reduced_supports, g, seed);
  rv.trace.insert(rv.trace.begin(), "directional resultant at " + to_string(v));
  return rv;
}

template <typename T>
struct DirectionalCheck {
  IntVector direction;
  Complex<T> value;
  bool flagged = false;  // modulus below tolerance
};

template <typename T>
std::vector<DirectionalCheck<T>> directional_nonvanishing_check(const std::vector<CPoly<T>>& f,
                                                                std::uint64_t seed) {
  std::vector<std::vector<IntVector>> supports;
  for (const auto& fi : f) supports.push_back(support_of(fi));
  std::vector<DirectionalCheck<T>> out;
  for (const auto& v : nontrivial_directions(supports)) {
    auto rv = eval_directional_resultant(supports, v, f, seed);
    out.push_back({v, rv.value, numerically_zero(rv.value)});
  }
  return out;
}

// --- hidden-variable resultant ---------------------------------------------
//
// Interpolates R(t_n) = Res of the projected family at the specialized
// coefficients, sampled on a circle of seeded random radius in [0.5, 2] with
// 25% oversampling; the angular grid makes the normal equations diagonal, and
// the extra samples give a least-squares consistency check.
template <typename T>
CPoly<T> hidden_variable_resultant(const std::vector<std::vector<IntVector>>& supports,
                                   const std::vector<CPoly<T>>& f, std::size_t hide_index,
                                   std::uint64_t seed) {
  using C = Complex<T>;
  using std::max;
  const std::size_t n = f.size();
  if (hide_index != n) throw InputError("only the last variable can be hidden");
  if (n == 1) return f[0];

  std::vector<std::vector<IntVector>> proj(n);
  std::vector<Int> zlo(n), zhi(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto actual = support_of(f[i]);
    zlo[i] = zhi[i] = actual[0].back();
    for (const auto& a : actual) {
      proj[i].push_back(IntVector(a.begin(), a.end() - 1));
      zlo[i] = std::min(zlo[i], a.back());
      zhi[i] = std::max(zhi[i], a.back());
    }
  }
  SupportFamily proj_fam(n - 1, proj);
  auto rep = analyze(proj_fam);
  CPoly<T> r(1);
  if (rep.resultant_trivial) {
    r.add_term({0}, C(T(1)));
    return r;
  }
  Int lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo += rep.degrees[i] * zlo[i];
    hi += rep.degrees[i] * zhi[i];
  }
  const std::size_t width = (hi - lo).convert_to<std::size_t>();
  const std::size_t samples = (width + 1) + max<std::size_t>(2, (width + 1 + 3) / 4);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  T rho = T(0.5) + T(1.5) * T(uniform01(rng));
  T phase = 2 * const_pi<T>() * T(uniform01(rng));

  std::vector<C> omega(samples), values(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    T angle = 2 * const_pi<T>() * to_field<T>(Int(j)) / to_field<T>(Int(samples)) + phase;
    omega[j] = polar(T(1), angle);
    C t = C(rho) * omega[j];
    std::vector<CPoly<T>> spec;
    for (const auto& fi : f) spec.push_back(specialize_last(fi, t));
    values[j] = eval_sparse_resultant(proj_fam, spec, seed).value;
  }

  // diagonal least squares: c_{lo+m} * rho^{lo+m} = (1/S) sum_j R_j w_j^{-(lo+m)}
  std::vector<C> coeff(width + 1);
  for (std::size_t m = 0; m <= width; ++m) {
    C acc{};
    for (std::size_t j = 0; j < samples; ++j) acc += values[j] * cpow(omega[j], -(lo + Int(m)));
    coeff[m] = acc * cpow(C(rho), -(lo + Int(m))) / C(to_field<T>(Int(samples)));
  }

  // consistency of the fit at every sample point
  T scale = 0;
  for (const auto& vj : values) scale = max(scale, abs(vj));
  if (scale == 0)
    throw HypothesisError("hidden-variable resultant vanishes identically");
  T worst = 0;
  for (std::size_t j = 0; j < samples; ++j) {
    C pred{};
    C t = C(rho) * omega[j];
    for (std::size_t m = 0; m <= width; ++m) pred += coeff[m] * cpow(t, lo + Int(m));
    worst = max(worst, abs(pred - values[j]));
  }
  if (worst > FieldTraits<T>::tolerance() * scale)
    throw NumericalError("hidden-variable interpolation inconsistent; increase precision/samples");

  // strip noise: position m sees sampling error amplified by rho^{-(lo+m)},
  // so positions outside the true exponent range otherwise sprout tiny
  // spurious coefficients (and spurious near-zero roots)
  const T eps = std::numeric_limits<T>::epsilon();
  T peak = 0;
  for (const auto& cm : coeff) peak = max(peak, abs(cm));
  for (std::size_t m = 0; m <= width; ++m) {
    T floor = max(FieldTraits<T>::strip() * peak,
                  T(4096) * eps * scale * abs(cpow(C(rho), -(lo + Int(m)))));
    if (abs(coeff[m]) > floor) r.add_term({lo + Int(m)}, coeff[m]);
  }
  return r;
}

// --- square system solver ----------------------------------------------------

// Newton iteration on the full system; returns true when the relative
// residual of every equation drops below tol.
template <typename T>
bool newton_polish(const std::vector<CPoly<T>>& f, std::vector<Complex<T>>& x, const T& tol) {
  using C = Complex<T>;
  using std::max;
  const std::size_t n = f.size();
  std::vector<std::vector<CPoly<T>>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(derivative(f[i], j));
  const T floor = FieldTraits<T>::root_step();
  for (int iter = 0; iter < 60; ++iter) {
    T resid = 0;
    std::vector<C> fx(n);
    for (std::size_t i = 0; i < n; ++i) {
      fx[i] = f[i].evaluate(x);
      resid = max(resid, relative_residual(f[i], x));
    }
    if (resid <= floor) return true;  // iterate well past tol for sharp roots
    std::vector<std::vector<C>> jx(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) jx[i][j] = jac[i][j].evaluate(x);
    std::vector<C> dx;
    try {
      dx = field_solve(std::move(jx), fx);
    } catch (const NumericalError&) {
      return resid <= tol;  // singular Jacobian: accept what we have if good
    }
    for (std::size_t j = 0; j < n; ++j) x[j] -= dx[j];
    for (const auto& xk : x)
      if (exactly_zero(xk)) return false;  // left the torus
  }
  T resid = 0;
  for (std::size_t i = 0; i < n; ++i) resid = max(resid, relative_residual(f[i], x));
  return resid <= tol;
}

template <typename T>
RootList<T> solve_square_system(const std::vector<CPoly<T>>& f, std::uint64_t seed) {
  using C = Complex<T>;
  using std::max;
  const std::size_t n = f.size();
  if (n == 0) throw InputError("empty system");
  for (const auto& fi : f) {
    if (fi.n != n) throw InputError("system is not square");
    if (fi.is_zero()) throw InputError("zero polynomial in system");
  }
  if (n == 1) return solve_univariate(f[0]);

  for (const auto& check : directional_nonvanishing_check(f, seed))
    if (check.flagged)
      throw HypothesisError("Bernstein/Theorem 3 hypothesis fails: directional resultant at " +
                            to_string(check.direction) + " vanishes");

  std::vector<std::vector<IntVector>> supports;
  for (const auto& fi : f) supports.push_back(support_of(fi));
  const Int bernstein = bernstein_number(supports);
  RootList<T> out;
  if (bernstein == 0) return out;

  auto hidden = hidden_variable_resultant(supports, f, n, seed);
  std::vector<C> raw;  // unclustered roots of the hidden resultant
  if (hidden.terms.size() >= 2) raw = aberth_roots(dense_univariate(hidden).second);
  auto zclusters = cluster_roots(raw);

  const T tol = FieldTraits<T>::tolerance();
  using std::pow;
  // loose pre-polish filter: hidden roots of multiplicity m only carry
  // ~eps^(1/m) digits, so candidates can start far off before Newton fixes them
  const T loose = pow(tol, T(0.25));

  // each accepted root remembers the multiplicity its subsystem reported
  std::vector<std::pair<std::vector<C>, int>> accepted;
  auto try_accept = [&](std::vector<C> x, int submult) {
    if (!newton_polish(f, x, tol)) return;
    for (auto& [y, mult] : accepted) {
      T dist = 0, scale = 1;
      for (std::size_t k = 0; k < n; ++k) {
        dist = max(dist, abs(y[k] - x[k]));
        scale = max(scale, max(abs(y[k]), abs(x[k])));
      }
      if (dist <= FieldTraits<T>::cluster() * scale) return;  // already found
    }
    accepted.emplace_back(std::move(x), submult);
  };

  for (const auto& [zpt, zmult] : zclusters) {
    const C& zeta = zpt;
    std::vector<CPoly<T>> spec;
    for (const auto& fi : f) spec.push_back(specialize_last(fi, zeta));

    // prefer dropping the equation with the largest coefficient spread
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto spread = [&](std::size_t i) {
      if (spec[i].terms.size() < 2) return T(-1);  // drop first: no torus content
      T mx = 0, mn = 0;
      bool first = true;
      for (const auto& [a, c] : spec[i].terms) {
        T m = abs(c);
        mx = max(mx, m);
        mn = first ? m : std::min(mn, m);
        first = false;
      }
      return mn / mx;  // smaller ratio = larger spread = worse conditioned
    };
    std::vector<T> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = spread(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    std::size_t before = accepted.size();
    for (std::size_t drop : order) {
      std::vector<CPoly<T>> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) sub.push_back(spec[i]);
      RootList<T> subroots;
      try {
        subroots = solve_square_system(sub, seed);
      } catch (const std::runtime_error&) {
        continue;
      }
      // a monomial (or zero) dropped equation says nothing about eta: its
      // residual only reflects the error in zeta, so don't filter on it
      bool filter = spec[drop].terms.size() >= 2;
      for (const auto& [eta, submult] : subroots.roots) {
        if (filter && relative_residual(spec[drop], eta) > loose) continue;
        std::vector<C> x = eta;
        x.push_back(zeta);
        try_accept(std::move(x), submult);
      }
      if (accepted.size() > before) break;
    }
  }
  if (accepted.empty() != (raw.empty()))
    throw NumericalError("no back-substitution consistent with a hidden-variable root; "
                         "increase precision");

  // group the polished roots by their (accurate) last coordinate, then hand
  // out the hidden resultant's raw roots -- one unit of multiplicity each --
  // to the nearest group
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    bool placed = false;
    for (auto& g : groups) {
      const C& v = accepted[g[0]].first[n - 1];
      const C& w = accepted[i].first[n - 1];
      if (abs(v - w) <= FieldTraits<T>::cluster() * max(T(1), max(abs(v), abs(w)))) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  std::vector<int> allocation(groups.size(), 0);
  for (const auto& z : raw) {
    std::size_t best = 0;
    T best_dist{};
    for (std::size_t g = 0; g < groups.size(); ++g) {
      T dist = abs(z - accepted[groups[g][0]].first[n - 1]);
      if (g == 0 || dist < best_dist) {
        best = g;
        best_dist = dist;
      }
    }
    ++allocation[best];
  }
  Int total = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    int k = static_cast<int>(groups[g].size());
    int subsum = 0;
    for (std::size_t i : groups[g]) subsum += accepted[i].second;
    std::vector<int> mults;
    if (subsum == allocation[g]) {
      for (std::size_t i : groups[g]) mults.push_back(accepted[i].second);
    } else if (allocation[g] % k == 0) {
      mults.assign(k, allocation[g] / k);
    } else {
      throw NumericalError("ambiguous multiplicity distribution at a shared coordinate; "
                           "increase precision");
    }
    for (int j = 0; j < k; ++j) {
      auto& x = accepted[groups[g][j]].first;
      for (std::size_t i = 0; i < n; ++i)
        out.residual = max(out.residual, relative_residual(f[i], x));
      total += mults[j];
      out.roots.emplace_back(std::move(x), mults[j]);
    }
  }
  if (total != bernstein)
    throw NumericalError("root count " + total.str() + " does not match the Bernstein number " +
                         bernstein.str());
  sort_roots(out.roots);
  return out;
}

// --- the Poisson formula -------------------------------------------------

template <typename T>
ResultantValue<T> eval_sparse_resultant(const SupportFamily& fam, const std::vector<CPoly<T>>& f,
                                        std::uint64_t seed) {
  using C = Complex<T>;
  if (f.size() != fam.n + 1) throw InputError("family needs n+1 polynomials");
  for (std::size_t i = 0; i <= fam.n; ++i)
    for (const auto& [a, c] : f[i].terms)
      if (std::find(fam.supports[i].begin(), fam.supports[i].end(), a) == fam.supports[i].end())
        throw InputError("polynomial " + std::to_string(i) + " has a term outside its support");

  ResultantValue<T> rv;
  auto rep = analyze(fam);
  if (rep.resultant_trivial) {
    rv.value = C(T(1));
    rv.trace.push_back("trivial family");
    return rv;
  }
  for (std::size_t i = 0; i <= fam.n; ++i) {
    if (!f[i].is_zero()) continue;
    if (rep.degrees[i] > 0) {
      rv.value = C(T(0));
      rv.trace.push_back("f_" + std::to_string(i) + " = 0");
      return rv;
    }
    throw HypothesisError("zero polynomial at an index the resultant does not depend on");
  }
  if (fam.n == 0) {
    rv.value = f[0].terms.begin()->second;
    return rv;
  }
  if (fam.n == 1) {
    rv.value = eval_res_univariate(fam, f[0], f[1]);
    return rv;
  }

  if constexpr (FieldTraits<T>::exact) {
    throw InputError("exact-rational evaluation is only supported for n <= 1");
  } else {
    std::vector<std::vector<IntVector>> tail(fam.supports.begin() + 1, fam.supports.end());
    std::vector<CPoly<T>> tail_f(f.begin() + 1, f.end());

    C acc(T(1));
    for (const auto& v : nontrivial_directions(tail)) {
      Int e = -support_value(fam.supports[0], v);
      rv.trace.push_back("direction " + to_string(v) + " exponent " + e.str());
      if (e == 0) continue;
      C dir = eval_directional_resultant(tail, v, tail_f, seed).value;
      if (numerically_zero(dir))
        throw HypothesisError("Poisson hypothesis fails: directional resultant at " +
                              to_string(v) + " vanishes");
      acc *= cpow(dir, e);
    }

    // declared and actual tail mixed volumes must agree for the root product
    std::vector<Polytope> declared;
    for (const auto& s : tail) declared.push_back(convex_hull(s));
    std::vector<std::vector<IntVector>> actual;
    for (const auto& fi : tail_f) actual.push_back(support_of(fi));
    if (bernstein_number(actual) != numerator(mixed_volume(declared)))
      throw HypothesisError("actual supports span a smaller mixed volume than declared");

    auto roots = solve_square_system(tail_f, seed);
    rv.trace.push_back(std::to_string(roots.roots.size()) + " distinct tail roots");
    for (const auto& [x, m] : roots.roots) acc *= cpow(f[0].evaluate(x), Int(m));
    rv.value = acc;
    return rv;
  }
}

// --- corollaries -----------------------------------------------------------

template <typename T>
Complex<T> product_over_roots(const CPoly<T>& f0, const RootList<T>& roots) {
  Complex<T> acc(T(1));
  for (const auto& [x, m] : roots.roots) acc *= cpow(f0.evaluate(x), Int(m));
  return acc;
}

// right-hand side of the product-of-roots formula: prod_v Res_v^{<a,v>}
template <typename T>
Complex<T> product_of_roots_monomial(const std::vector<std::vector<IntVector>>& tail,
                                     const std::vector<CPoly<T>>& f, const IntVector& a,
                                     std::uint64_t seed) {
  Complex<T> acc(T(1));
  for (const auto& v : nontrivial_directions(tail)) {
    Int e = dot(a, v);
    if (e == 0) continue;
    Complex<T> dir = eval_directional_resultant(tail, v, f, seed).value;
    if (numerically_zero(dir))
      throw HypothesisError("directional resultant at " + to_string(v) + " vanishes");
    acc *= cpow(dir, e);
  }
  return acc;
}

// Additivity of the resultant in the 0-th support: lhs uses A0 + A0' with
// f0 * f0'; rhs multiplies the two separate evaluations.
template <typename T>
std::pair<Complex<T>, Complex<T>> addition_formula_check(
    const std::vector<IntVector>& a0, const std::vector<IntVector>& a0p,
    const std::vector<std::vector<IntVector>>& tail, const CPoly<T>& f0, const CPoly<T>& f0p,
    const std::vector<CPoly<T>>& f, std::uint64_t seed) {
  std::vector<IntVector> sum_support;
  for (const auto& p : a0)
    for (const auto& q : a0p) sum_support.push_back(p + q);

  auto family_with = [&](const std::vector<IntVector>& head) {
    std::vector<std::vector<IntVector>> sup = {head};
    sup.insert(sup.end(), tail.begin(), tail.end());
    return SupportFamily(tail.size(), sup);
  };
  std::vector<CPoly<T>> lhs_polys = {f0 * f0p};
  lhs_polys.insert(lhs_polys.end(), f.begin(), f.end());
  auto lhs = eval_sparse_resultant(family_with(sum_support), lhs_polys, seed).value;

  std::vector<CPoly<T>> p1 = {f0};
  p1.insert(p1.end(), f.begin(), f.end());
  std::vector<CPoly<T>> p2 = {f0p};
  p2.insert(p2.end(), f.begin(), f.end());
  auto rhs = eval_sparse_resultant(family_with(a0), p1, seed).value *
             eval_sparse_resultant(family_with(a0p), p2, seed).value;
  return {lhs, rhs};
}

}  // namespace sparseres
