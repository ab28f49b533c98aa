#pragma once

#include "sparseres/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace sparseres {

// Software float with 256 bits of mantissa, for high-precision evaluation.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

// Minimal complex type over a pluggable real/rational scalar. std::complex is
// only specified for the builtin floating types, and we also need an exact
// variant over the rationals.
template <typename T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r) {}

  bool operator==(const Complex&) const = default;

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

template <typename T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, -z.im};
}

// |z|^2; rational-exact, usable for pivot selection in any domain.
template <typename T>
T norm(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename T>
T abs(const Complex<T>& z) {
  using std::sqrt;
  return sqrt(norm(z));
}

template <typename T>
bool exactly_zero(const Complex<T>& z) {
  return z.re == 0 && z.im == 0;
}

template <typename T>
T const_pi() {
  using std::atan;
  return 4 * atan(T(1));
}

template <typename T>
Complex<T> polar(const T& radius, const T& angle) {
  using std::cos;
  using std::sin;
  return {radius * cos(angle), radius * sin(angle)};
}

template <typename T>
T to_field(const Int& v) {
  return v.template convert_to<T>();
}

template <typename T>
T to_field(const Rational& v) {
  return numerator(v).template convert_to<T>() / denominator(v).template convert_to<T>();
}

// Integer power; negative exponents invert (caller guarantees z != 0 then).
template <typename T>
Complex<T> cpow(const Complex<T>& z, const Int& e) {
  long long k = e.convert_to<long long>();
  bool invert = k < 0;
  unsigned long long m = invert ? -static_cast<unsigned long long>(k) : k;
  Complex<T> acc(T(1)), base = z;
  while (m) {
    if (m & 1) acc *= base;
    base *= base;
    m >>= 1;
  }
  return invert ? Complex<T>(T(1)) / acc : acc;
}

// Numeric policy per scalar domain: comparison tolerances scale with the
// working precision; exact domains use zero tolerance.
template <typename T>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr int precision_bits = 53;
  static double tolerance() { return 1e-8; }    // residual / agreement checks
  static double strip() { return 1e-10; }       // relative coefficient cutoff
  static double root_step() { return 1e-13; }   // iteration convergence
  static double cluster() { return 1e-6; }      // relative root clustering
};

template <>
struct FieldTraits<BigFloat> {
  static constexpr bool exact = false;
  static constexpr int precision_bits = 256;
  static BigFloat tolerance() { return BigFloat("1e-50"); }
  static BigFloat strip() { return BigFloat("1e-55"); }
  static BigFloat root_step() { return BigFloat("1e-68"); }
  static BigFloat cluster() { return BigFloat("1e-12"); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr int precision_bits = 0;  // unbounded
};

}  // namespace sparseres
