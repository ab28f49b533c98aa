#include "sparseres/io.hpp"

#include <fstream>

namespace sparseres {

namespace {

Rational parse_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational(j.get<double>());  // exact dyadic value
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": cannot parse rational '" +
                       j.get<std::string>() + "'");
    }
  }
  throw InputError(std::string(what) + ": expected a number or a \"p/q\" string");
}

Complex<Rational> parse_coefficient(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("complex coefficient must be a [re, im] pair");
    return {parse_rational(j[0], "coefficient"), parse_rational(j[1], "coefficient")};
  }
  return {parse_rational(j, "coefficient"), Rational(0)};
}

IntVector parse_exponent(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw InputError("exponent vector must be an array of " + std::to_string(n) + " integers");
  IntVector a;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("exponent entries must be integers");
    a.push_back(Int(x.get<long long>()));
  }
  return a;
}

}  // namespace

SupportFamily ProblemFile::family() const {
  if (supports.size() != n + 1)
    throw InputError("this command needs " + std::to_string(n + 1) +
                     " supports (one per polynomial of the resultant family)");
  return SupportFamily(n, supports);
}

ProblemFile parse_problem(const Json& j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  ProblemFile p;

  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw InputError("field 'n' must be a nonnegative integer");
  p.n = j["n"].get<std::size_t>();

  if (!j.contains("supports") || !j["supports"].is_array() || j["supports"].empty())
    throw InputError("field 'supports' must be a nonempty array of point lists");
  for (const auto& sup : j["supports"]) {
    if (!sup.is_array() || sup.empty())
      throw InputError("each support must be a nonempty array of exponent vectors");
    std::vector<IntVector> points;
    for (const auto& pt : sup) points.push_back(parse_exponent(pt, p.n));
    p.supports.push_back(std::move(points));
  }

  if (j.contains("polynomials")) {
    if (!j["polynomials"].is_array() || j["polynomials"].size() != p.supports.size())
      throw InputError("'polynomials' must list one term list per support");
    std::vector<LaurentPolynomial<Complex<Rational>>> polys;
    for (std::size_t i = 0; i < p.supports.size(); ++i) {
      LaurentPolynomial<Complex<Rational>> f(p.n);
      for (const auto& term : j["polynomials"][i]) {
        if (!term.is_array() || term.size() != 2)
          throw InputError("each term must be a [exponent, coefficient] pair");
        IntVector a = parse_exponent(term[0], p.n);
        if (std::find(p.supports[i].begin(), p.supports[i].end(), a) == p.supports[i].end())
          throw InputError("polynomial " + std::to_string(i) +
                           " has a term outside its declared support");
        f.add_term(a, parse_coefficient(term[1]));
      }
      polys.push_back(std::move(f));
    }
    p.polynomials = std::move(polys);
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw InputError("'options' must be an object");
    if (o.contains("precision")) {
      if (!o["precision"].is_number_integer()) throw InputError("precision must be an integer");
      p.options.precision = o["precision"].get<int>();
    }
    if (o.contains("tolerance")) {
      if (!o["tolerance"].is_number()) throw InputError("tolerance must be a number");
      p.options.tolerance = o["tolerance"].get<double>();
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_integer()) throw InputError("seed must be an integer");
      p.options.seed = o["seed"].get<std::uint64_t>();
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

}  // namespace sparseres
