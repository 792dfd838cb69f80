// Exact scalars: GMP rationals and Gaussian rationals Q(i).
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace legvar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a" or "a/b" with an optional sign.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check(num, true) || !check(den, false))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Element a + b i of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(const Rational& r) : re(r) {}  // NOLINT: implicit embedding Q -> Q(i)
  Gaussian(long r) : re(r) {}             // NOLINT
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Gaussian i_unit() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return im == 0; }
  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline std::string to_string(const Gaussian& g) {
  if (g.im == 0) return g.re.get_str();
  std::string im = g.im == 1 ? "i" : g.im == -1 ? "-i" : g.im.get_str() + "*i";
  if (g.re == 0) return im;
  if (im[0] == '-') return g.re.get_str() + " - " + im.substr(1);
  return g.re.get_str() + " + " + im;
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << to_string(g); }

// ---- field helpers shared by the templated linear algebra ----

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Gaussian& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }

template <class T>
T from_rational(const Rational& r) {
  return T(r);
}

/// 64-bit FNV-1a, used to fingerprint bundled data files.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace legvar
