#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sparseres/reconstruct.hpp"

using namespace sparseres;

namespace {

// supports are stored sorted lexicographically, so u_{i,j} refers to the
// j-th point of A_i in ascending lex order
SupportFamily example1() {
  return SupportFamily(1, {{{0}}, {{0}, {1}, {2}}});
}

SupportFamily example2() {
  return SupportFamily(2, {{{0, 1}, {1, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {0, 2}}});
}

SupportFamily example4() {
  std::vector<IntVector> tri = {{0, 0}, {-1, 0}, {0, -1}};
  std::vector<IntVector> a2 = {{0, 0}, {1, 0}, {0, 1}, {0, 2}};
  return SupportFamily(2, {tri, tri, a2});
}

void check_multihomogeneous(const MultihomogeneousIntPolynomial& p) {
  for (const auto& [e, c] : p.terms) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.block_sizes.size(); ++i) {
      Int deg = 0;
      for (std::size_t j = 0; j < p.block_sizes[i]; ++j) deg += e[k++];
      CHECK(deg == p.multidegree[i]);
    }
  }
}

Int content_of(const MultihomogeneousIntPolynomial& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms) g = boost::multiprecision::gcd(g, Int(abs(c)));
  return g;
}

}  // namespace

TEST_CASE("a singleton essential support reconstructs to a power of one variable") {
  auto p = reconstruct(example1(), 256, 1);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.begin()->first == std::vector<Int>{2, 0, 0, 0});
  CHECK(p.terms.begin()->second == 1);
  CHECK(p.multidegree == std::vector<Int>{2, 0});
  CHECK(p.to_text() == "u0,0^2");
}

TEST_CASE("three-term resultant is recovered exactly") {
  auto p = reconstruct(example2(), 256, 1);
  REQUIRE(p.terms.size() == 3);
  // u00^2 u11^2 u20 + u00 u01 u10 u11 u21 + u01^2 u10^2 u22, all signs equal
  std::map<std::vector<Int>, Int> expected = {
      {{2, 0, 0, 2, 1, 0, 0}, 1},
      {{1, 1, 1, 1, 0, 1, 0}, 1},
      {{0, 2, 2, 0, 0, 0, 1}, 1},
  };
  CHECK(p.terms == expected);
  CHECK(p.multidegree == std::vector<Int>{2, 2, 1});
  check_multihomogeneous(p);
}

TEST_CASE("the 24-term resultant of the triangle family") {
  auto p = reconstruct(example4(), 256, 1);
  CHECK(p.terms.size() == 24);
  CHECK(p.multidegree == std::vector<Int>{3, 3, 1});
  check_multihomogeneous(p);
  CHECK(content_of(p) == 1);

  auto hb = verify_height_bound(p, example4());
  CHECK(hb.ok);
  CHECK(hb.bound == doctest::Approx(3 * std::log(3.0) + 3 * std::log(3.0) + std::log(4.0)));

  // exact evaluation agrees with the numeric route at a fixed rational point
  std::vector<std::vector<Rational>> u = {{Rational(1), Rational(2), Rational(3)},
                                          {Rational(5), Rational(1, 2), Rational(-3)},
                                          {Rational(7), Rational(-2), Rational(1), Rational(4)}};
  using CD = Complex<double>;
  using PD = LaurentPolynomial<CD>;
  auto fam = example4();
  std::vector<PD> f;
  for (std::size_t i = 0; i < 3; ++i) {
    PD fi(2);
    for (std::size_t j = 0; j < fam.supports[i].size(); ++j)
      fi.add_term(fam.supports[i][j], CD(to_field<double>(u[i][j])));
    f.push_back(fi);
  }
  double numeric = abs(eval_sparse_resultant(fam, f, 5).value);
  double exact = std::abs(to_field<double>(p.evaluate(u)));
  CHECK(std::abs(numeric - exact) < 1e-6 * (1 + numeric + exact));
}

TEST_CASE("reconstruction is deterministic for a fixed seed") {
  auto a = reconstruct(example2(), 256, 9);
  auto b = reconstruct(example2(), 256, 9);
  CHECK(a.terms == b.terms);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("height bounds of the tiny examples") {
  auto p1 = reconstruct(example1(), 256, 1);
  auto h1 = verify_height_bound(p1, example1());
  CHECK(h1.height == 0.0);
  CHECK(h1.ok);

  auto p2 = reconstruct(example2(), 256, 1);
  auto h2 = verify_height_bound(p2, example2());
  CHECK(h2.height == 0.0);
  CHECK(h2.bound == doctest::Approx(2 * std::log(2.0) + 2 * std::log(2.0) + std::log(3.0)));
  CHECK(h2.ok);
}

TEST_CASE("reconstruction rejects unsuitable inputs") {
  // trivial family
  CHECK_THROWS_AS(static_cast<void>(reconstruct(SupportFamily(1, {{{0}}, {{0}}}), 256, 1)),
                  InputError);

  // term-count gate
  std::vector<IntVector> square;
  for (Int x = 0; x <= 2; ++x)
    for (Int y = 0; y <= 2; ++y) square.push_back({x, y});
  CHECK_THROWS_AS(static_cast<void>(reconstruct(SupportFamily(2, {square, square, square}), 256, 1)),
                  InputError);

  // unsupported precision
  CHECK_THROWS_AS(static_cast<void>(reconstruct(example1(), 16, 1)), InputError);
  CHECK_THROWS_AS(static_cast<void>(reconstruct(example1(), 1024, 1)), InputError);
}
