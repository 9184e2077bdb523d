#pragma once

// Exact integer and rational arithmetic used by every symbolic operation.
// Floating point never enters this layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace brieskorn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(Integer(p), Integer(q));
}

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

/// Complex number with exact rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(std::int64_t r) : re(r), im(0) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

inline GaussianRational ipow(GaussianRational base, unsigned exp) {
  GaussianRational result(1);
  while (exp) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.re == 0) return to_string(z.im) + "i";
  return to_string(z.re) + (z.im < 0 ? "" : "+") + to_string(z.im) + "i";
}

}  // namespace brieskorn
