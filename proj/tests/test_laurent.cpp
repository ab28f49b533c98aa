#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sparseres/laurent.hpp"

#include <random>

using namespace sparseres;

using CD = Complex<double>;
using CQ = Complex<Rational>;
using PD = LaurentPolynomial<CD>;
using PQ = LaurentPolynomial<CQ>;

namespace {

PQ random_poly(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> coeff(1, 9);
  std::uniform_int_distribution<int> sz(1, 5);
  PQ f(n);
  int k = sz(rng);
  for (int i = 0; i < k; ++i) {
    IntVector a(n);
    for (auto& x : a) x = coord(rng);
    f.add_term(a, CQ(Rational(coeff(rng))));
  }
  return f;
}

std::vector<CQ> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 7);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<CQ> xi;
  for (std::size_t k = 0; k < n; ++k)
    xi.push_back(CQ(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return xi;
}

}  // namespace

TEST_CASE("support and zero handling") {
  PD f(1);
  f.add_term({0}, CD(1.0));
  f.add_term({-1}, CD(2.0));
  CHECK(support_of(f) == std::vector<IntVector>{{-1}, {0}});

  PD g(2);
  for (auto a : {IntVector{0, 0}, {1, 0}, {0, 1}, {0, 2}}) g.add_term(a, CD(1.0));
  CHECK(support_of(g).size() == 4);

  PD mono(2);
  mono.add_term({1, 1}, CD(5.0));
  CHECK(support_of(mono) == std::vector<IntVector>{{1, 1}});

  PD zero(1);
  CHECK_THROWS_AS(static_cast<void>(support_of(zero)), std::invalid_argument);

  // cancelling terms leave no stored zero coefficient
  PD c(1);
  c.add_term({2}, CD(3.0));
  c.add_term({2}, CD(-3.0));
  CHECK(c.is_zero());
}

TEST_CASE("newton polytope") {
  PD g(2);
  for (auto a : {IntVector{0, 0}, {1, 0}, {0, 1}, {0, 2}}) g.add_term(a, CD(1.0));
  auto np = newton_polytope(g);
  CHECK(np.vertices == std::vector<IntVector>{{0, 0}, {0, 2}, {1, 0}});

  PD constant(2);
  constant.add_term({3, -1}, CD(2.0));
  CHECK(newton_polytope(constant).dim == 0);

  PD binom(2);
  binom.add_term({0, 0}, CD(1.0));
  binom.add_term({2, 2}, CD(1.0));
  CHECK(newton_polytope(binom).dim == 1);
}

TEST_CASE("initial parts") {
  PD f(2);
  f.add_term({0, 0}, CD(3.0));
  f.add_term({-1, 0}, CD(5.0));
  f.add_term({0, -1}, CD(7.0));

  auto fv = initial_part(f, {1, 0});
  CHECK(fv.terms.size() == 1);
  CHECK(fv.coefficient({-1, 0}) == CD(5.0));

  PD g(2);
  g.add_term({0, 0}, CD(1.0));
  g.add_term({1, 0}, CD(1.0));
  g.add_term({0, 1}, CD(1.0));
  auto gv = initial_part(g, {1, 1});
  CHECK(gv.terms.size() == 1);
  CHECK(gv.coefficient({0, 0}) == CD(1.0));

  PD mono(2);
  mono.add_term({2, -1}, CD(4.0));
  CHECK(initial_part(mono, {1, 1}) == mono);

  CHECK(initial_part(initial_part(f, {1, 0}), {1, 0}) == initial_part(f, {1, 0}));
}

TEST_CASE("evaluation") {
  PD f(2);
  f.add_term({1, -1}, CD(1.0));
  CHECK(f.evaluate({CD(2.0), CD(4.0)}) == CD(0.5));

  PD c(2);
  c.add_term({0, 0}, CD(42.0));
  CHECK(c.evaluate({CD(3.0, 1.0), CD(-2.0)}) == CD(42.0));

  PD r(2);
  r.add_term({0, 0}, CD(1.0));
  r.add_term({1, 0}, CD(-1.0));
  CHECK(r.evaluate({CD(1.0), CD(17.0, 3.0)}) == CD(0.0));
}

TEST_CASE("evaluation is a ring homomorphism (exact rationals)") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 10; ++iter) {
    auto f = random_poly(rng, 2);
    auto g = random_poly(rng, 2);
    auto xi = random_point(rng, 2);
    CHECK((f + g).evaluate(xi) == f.evaluate(xi) + g.evaluate(xi));
    CHECK((f * g).evaluate(xi) == f.evaluate(xi) * g.evaluate(xi));
  }
}

TEST_CASE("newton polytope of a product is the minkowski sum") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 10; ++iter) {
    auto f = random_poly(rng, 2);
    auto g = random_poly(rng, 2);
    // positive coefficients: no cancellation in f*g
    auto prod = newton_polytope(f * g);
    auto sum = minkowski_sum(newton_polytope(f), newton_polytope(g));
    CHECK(prod.vertices == sum.vertices);
  }
}

TEST_CASE("factor_out_monomial") {
  PD f(1);
  f.add_term({-1}, CD(3.0));
  f.add_term({0}, CD(1.0));
  auto [b, g] = factor_out_monomial(f);
  CHECK(b == IntVector{-1});
  CHECK(g.coefficient({0}) == CD(3.0));
  CHECK(g.coefficient({1}) == CD(1.0));

  PD mono(2);
  mono.add_term({2, -3}, CD(5.0));
  auto [bm, gm] = factor_out_monomial(mono);
  CHECK(bm == IntVector{2, -3});
  CHECK(gm.coefficient({0, 0}) == CD(5.0));

  PD h(1);
  h.add_term({0}, CD(1.0));
  h.add_term({2}, CD(1.0));
  auto [bh, gh] = factor_out_monomial(h);
  CHECK(bh == IntVector{0});
  CHECK(gh == h);
}

TEST_CASE("change_coordinates") {
  PD f(2);
  f.add_term({1, 0}, CD(2.0));
  f.add_term({0, 1}, CD(3.0));

  IntMatrix id = IntMatrix::identity(2);
  CHECK(change_coordinates(f, id) == f);

  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  auto fs = change_coordinates(f, swap);
  CHECK(fs.coefficient({0, 1}) == CD(2.0));
  CHECK(fs.coefficient({1, 0}) == CD(3.0));

  IntMatrix u(2, 2);
  u.at(0, 0) = 1;
  u.at(0, 1) = 1;
  u.at(1, 1) = 1;
  auto fu = change_coordinates(f, u);
  CHECK(fu.coefficient({1, 0}) == CD(2.0));  // t1 -> t1
  CHECK(fu.coefficient({1, 1}) == CD(3.0));  // t2 -> t1 t2

  IntMatrix bad(2, 2);
  bad.at(0, 0) = 2;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(static_cast<void>(change_coordinates(f, bad)), std::invalid_argument);
}

TEST_CASE("change_coordinates commutes with evaluation") {
  std::mt19937_64 rng(23);
  IntMatrix u(2, 2);
  u.at(0, 0) = 1;
  u.at(0, 1) = 2;
  u.at(1, 0) = 1;
  u.at(1, 1) = 3;  // det 1
  for (int iter = 0; iter < 10; ++iter) {
    auto f = random_poly(rng, 2);
    auto fu = change_coordinates(f, u);
    auto eta = random_point(rng, 2);
    // xi_j = prod_k eta_k^{u_{kj}} makes eta^{u a} = xi^a
    std::vector<CQ> xi;
    for (std::size_t j = 0; j < 2; ++j) {
      CQ v(Rational(1));
      for (std::size_t k = 0; k < 2; ++k) v *= cpow(eta[k], u.at(k, j));
      xi.push_back(v);
    }
    CHECK(f.evaluate(xi) == fu.evaluate(eta));
  }
}

TEST_CASE("hide and unhide a variable") {
  PD f(2);
  f.add_term({0, 0}, CD(1.0));
  f.add_term({1, 0}, CD(1.0));
  f.add_term({1, 2}, CD(1.0));

  auto h = hide_variable(f, 2);
  CHECK(h.n == 1);
  CHECK(h.terms.size() == 2);
  const auto& at1 = h.terms.at({1});
  CHECK(at1.coefficient({0}) == CD(1.0));
  CHECK(at1.coefficient({2}) == CD(1.0));
  CHECK(unhide_variable(h, 2, 2) == f);

  PD constant(1);
  constant.add_term({0}, CD(9.0));
  auto hc = hide_variable(constant, 1);
  CHECK(hc.n == 0);
  CHECK(unhide_variable(hc, 1, 1) == constant);

  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 10; ++iter) {
    auto g = random_poly(rng, 3);
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK(unhide_variable(hide_variable(g, k), k, 3) == g);
  }
}

TEST_CASE("derivative and specialization") {
  PD f(2);
  f.add_term({2, 1}, CD(3.0));
  f.add_term({0, 1}, CD(5.0));
  auto d0 = derivative(f, 0);
  CHECK(d0.coefficient({1, 1}) == CD(6.0));
  CHECK(d0.terms.size() == 1);

  auto g = specialize_last(f, CD(2.0));
  CHECK(g.n == 1);
  CHECK(g.coefficient({2}) == CD(6.0));
  CHECK(g.coefficient({0}) == CD(10.0));
}
