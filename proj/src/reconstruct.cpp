#include "sparseres/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sparseres {

namespace {

using CB = Complex<BigFloat>;
using PB = LaurentPolynomial<CB>;

// exponent vectors of total degree d in k variables, in ascending lex order
void compositions(const Int& d, std::size_t k, std::vector<Int>& cur,
                  std::vector<std::vector<Int>>& out) {
  if (k == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (Int a = 0; a <= d; ++a) {
    cur.push_back(a);
    compositions(d - a, k - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Int>> candidate_monomials(const std::vector<Int>& multidegree,
                                                  const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<Int>> acc = {{}};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<std::vector<Int>> block;
    std::vector<Int> cur;
    compositions(multidegree[i], sizes[i], cur, block);
    std::vector<std::vector<Int>> next;
    next.reserve(acc.size() * block.size());
    for (const auto& head : acc)
      for (const auto& tailpart : block) {
        auto e = head;
        e.insert(e.end(), tailpart.begin(), tailpart.end());
        next.push_back(std::move(e));
      }
    acc = std::move(next);
    if (acc.size() > 10000)
      throw InputError("family exceeds the term-count gate for exact reconstruction");
  }
  return acc;
}

Rational random_rational(std::mt19937_64& rng) {
  auto draw = [&](int hi) { return 1 + static_cast<int>(uniform01(rng) * hi); };
  int p = draw(97), q = draw(97);
  if (uniform01(rng) < 0.5) p = -p;
  return Rational(p, q);
}

struct Sample {
  std::vector<Rational> u;  // flattened coefficients, block by block
  BigFloat value;           // signed numeric evaluation
};

// A random rational specialization where the evaluation goes through with all
// directional resultants bounded away from zero. The numeric route computes a
// fixed product formula, so its sign is consistent across samples.
Sample draw_sample(const SupportFamily& fam, std::mt19937_64& rng, std::uint64_t seed) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Sample s;
    std::vector<PB> f;
    for (std::size_t i = 0; i <= fam.n; ++i) {
      PB fi(fam.n);
      for (const auto& a : fam.supports[i]) {
        Rational c = random_rational(rng);
        s.u.push_back(c);
        fi.add_term(a, CB(to_field<BigFloat>(c)));
      }
      f.push_back(std::move(fi));
    }
    try {
      if (fam.n >= 2) {
        std::vector<PB> tail(f.begin() + 1, f.end());
        bool degenerate = false;
        for (const auto& c : directional_nonvanishing_check(tail, seed))
          if (abs(c.value) <= BigFloat("1e-3")) degenerate = true;
        if (degenerate) continue;
      }
      s.value = eval_sparse_resultant(fam, f, seed).value.re;
      return s;
    } catch (const HypothesisError&) {
      continue;
    }
  }
  throw NumericalError("could not find a generic rational specialization");
}

BigFloat monomial_value(const std::vector<Int>& e, const std::vector<Rational>& u) {
  Rational acc(1);
  for (std::size_t k = 0; k < e.size(); ++k)
    for (Int j = 0; j < e[k]; ++j) acc *= u[k];
  return to_field<BigFloat>(acc);
}

// dense real Gaussian elimination with partial pivoting
std::vector<BigFloat> real_solve(std::vector<std::vector<BigFloat>> m, std::vector<BigFloat> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0) throw NumericalError("singular interpolation matrix");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigFloat factor = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[col][cc];
      b[r] -= factor * b[col];
    }
  }
  std::vector<BigFloat> x(n);
  for (std::size_t row = n; row-- > 0;) {
    BigFloat acc = b[row];
    for (std::size_t cc = row + 1; cc < n; ++cc) acc -= m[row][cc] * x[cc];
    x[row] = acc / m[row][row];
  }
  return x;
}

}  // namespace

Rational MultihomogeneousIntPolynomial::evaluate(
    const std::vector<std::vector<Rational>>& u) const {
  std::vector<Rational> flat;
  for (const auto& block : u) flat.insert(flat.end(), block.begin(), block.end());
  Rational acc(0);
  for (const auto& [e, c] : terms) {
    Rational term(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (Int j = 0; j < e[k]; ++j) term *= flat[k];
    acc += term;
  }
  return acc;
}

std::string MultihomogeneousIntPolynomial::to_text() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    std::ostringstream mono;
    std::size_t k = 0;
    for (std::size_t i = 0; i < block_sizes.size(); ++i)
      for (std::size_t j = 0; j < block_sizes[i]; ++j, ++k) {
        if (e[k] == 0) continue;
        if (mono.tellp() > 0) mono << " ";
        mono << "u" << i << "," << j;
        if (e[k] > 1) mono << "^" << e[k];
      }
    std::string m = mono.str();
    if (m.empty())
      out << mag;
    else {
      if (mag != 1) out << mag << " ";
      out << m;
    }
  }
  return out.str();
}

MultihomogeneousIntPolynomial reconstruct(const SupportFamily& family, int precision_bits,
                                          std::uint64_t seed) {
  if (precision_bits < 53 || precision_bits > 256)
    throw InputError("reconstruction precision must be between 53 and 256 bits");
  auto rep = analyze(family);
  if (rep.resultant_trivial) throw InputError("the resultant of a trivial family is constant");

  MultihomogeneousIntPolynomial p;
  for (const auto& s : family.supports) p.block_sizes.push_back(s.size());
  p.multidegree = rep.degrees;
  auto monomials = candidate_monomials(p.multidegree, p.block_sizes);
  const std::size_t count = monomials.size();

  std::mt19937_64 rng(seed);
  std::vector<Sample> samples;
  samples.reserve(count);
  for (std::size_t s = 0; s < count; ++s) samples.push_back(draw_sample(family, rng, seed));

  std::vector<std::vector<BigFloat>> m(count, std::vector<BigFloat>(count));
  std::vector<BigFloat> rhs(count);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < count; ++t) m[s][t] = monomial_value(monomials[t], samples[s].u);
    rhs[s] = samples[s].value;
  }
  auto coeffs = real_solve(std::move(m), std::move(rhs));

  for (std::size_t t = 0; t < count; ++t) {
    BigFloat rounded = boost::multiprecision::round(coeffs[t]);
    if (abs(coeffs[t] - rounded) > BigFloat("0.25"))
      throw NumericalError("insufficient precision: interpolated coefficient is not near an integer");
    Int c = rounded.convert_to<Int>();
    if (c != 0) p.terms.emplace(std::move(monomials[t]), c);
  }
  if (p.terms.empty()) throw NumericalError("reconstruction produced the zero polynomial");

  Int content = 0;
  for (const auto& [e, c] : p.terms) content = boost::multiprecision::gcd(content, Int(abs(c)));
  bool flip = p.terms.begin()->second < 0;
  for (auto& [e, c] : p.terms) {
    c /= content;
    if (flip) c = -c;
  }

  // the result must reproduce the numeric evaluation at fresh specializations
  for (int check = 0; check < 20; ++check) {
    auto s = draw_sample(family, rng, seed);
    std::vector<std::vector<Rational>> u(family.n + 1);
    std::size_t k = 0;
    for (std::size_t i = 0; i <= family.n; ++i)
      for (std::size_t j = 0; j < family.supports[i].size(); ++j) u[i].push_back(s.u[k++]);
    BigFloat exact = abs(to_field<BigFloat>(p.evaluate(u)));
    BigFloat numeric = abs(s.value);
    if (abs(exact - numeric) > BigFloat("1e-6") * (1 + exact + numeric))
      throw NumericalError("reconstruction verification failed");
  }
  return p;
}

HeightBoundReport verify_height_bound(const MultihomogeneousIntPolynomial& p,
                                      const SupportFamily& family) {
  HeightBoundReport r;
  Int largest = 0;
  for (const auto& [e, c] : p.terms)
    if (Int a = abs(c); a > largest) largest = a;
  r.height = largest == 0 ? 0.0 : std::log(largest.convert_to<double>());
  r.bound = 0;
  for (std::size_t i = 0; i <= family.n; ++i)
    r.bound += p.multidegree[i].convert_to<double>() *
               std::log(static_cast<double>(family.supports[i].size()));
  r.ok = r.height <= r.bound + 1e-12;
  return r;
}

}  // namespace sparseres
