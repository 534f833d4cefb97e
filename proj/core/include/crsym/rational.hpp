#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace crsym {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

std::string to_string(const Rat& r);

/// Floor of a nonnegative rational, as a machine integer.
inline long rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;  // negative inputs
  return q.convert_to<long>();
}

/// Exact square root of a rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& r);

/// Gaussian rational: a + b*i with exact rational a, b.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}
  GaussRat(long r, long i) : re(r), im(i) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_imaginary() const { return re == 0; }

  GaussRat conj() const { return {re, -im}; }
  /// |x|^2, always a rational.
  Rat norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.norm();
    GaussRat t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  friend bool operator==(const GaussRat&, const GaussRat&) = default;
  friend auto operator<=>(const GaussRat& a, const GaussRat& b) {
    if (auto c = a.re.compare(b.re); c != 0) return c <=> 0;
    return a.im.compare(b.im) <=> 0;
  }
};

/// Exact square root in Q(i), if one exists.
std::optional<GaussRat> gauss_sqrt(const GaussRat& x);

std::string to_string(const GaussRat& c);

}  // namespace crsym
