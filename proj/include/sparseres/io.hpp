#pragma once

#include "sparseres/engine.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sparseres {

using Json = nlohmann::ordered_json;

struct ProblemOptions {
  std::optional<int> precision;     // commands pick their own default
  std::optional<double> tolerance;  // engine defaults scale with precision
  std::uint64_t seed = 1;
};

// A problem instance: a list of supports (n+1 for resultant commands, n for
// square-system commands) with optional matching polynomials. Coefficients
// are kept exact; numeric evaluation converts on demand.
struct ProblemFile {
  std::size_t n = 0;
  std::vector<std::vector<IntVector>> supports;
  std::optional<std::vector<LaurentPolynomial<Complex<Rational>>>> polynomials;
  ProblemOptions options;

  SupportFamily family() const;  // requires exactly n+1 supports
};

ProblemFile parse_problem(const Json& j);
ProblemFile load_problem(const std::string& path);

// exact coefficients -> working field
template <typename T>
std::vector<CPoly<T>> numeric_polynomials(
    const std::vector<LaurentPolynomial<Complex<Rational>>>& polys) {
  std::vector<CPoly<T>> out;
  for (const auto& p : polys) {
    CPoly<T> q(p.n);
    for (const auto& [a, c] : p.terms)
      q.add_term(a, Complex<T>(to_field<T>(c.re), to_field<T>(c.im)));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace sparseres
