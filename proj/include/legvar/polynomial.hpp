// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include "legvar/rational.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace legvar {

class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exp> e) : e_(std::move(e)) {
    for (auto x : e_) deg_ += x;
  }
  static Monomial var(std::size_t nvars, std::size_t i, Exp power = 1) {
    Monomial m(nvars);
    m.e_.at(i) = power;
    m.deg_ = power;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned degree() const { return deg_; }
  Exp operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Exp>& exponents() const { return e_; }

  void set(std::size_t i, Exp v) {
    deg_ = deg_ - e_.at(i) + v;
    e_[i] = v;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = static_cast<Exp>(r.e_[i] + b.e_[i]);
    r.deg_ += b.deg_;
    return r;
  }
  bool divides(const Monomial& b) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }
  /// b / a, assuming a divides b.
  friend Monomial operator/(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = static_cast<Exp>(r.e_[i] - a.e_[i]);
    r.deg_ -= a.deg_;
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && b.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<Exp> e_;
  unsigned deg_ = 0;
};

/// Graded reverse lexicographic order with x0 > x1 > ...
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexDesc>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c) : n_(nvars) {
    if (c != 0) t_.emplace(Monomial(nvars), c);
  }
  static Polynomial var(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    p.t_.emplace(Monomial::var(nvars, i), Rational(1));
    return p;
  }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    if (c != 0) p.t_.emplace(m, c);
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Rational& leading_coefficient() const { return t_.begin()->second; }

  Rational coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
  }

  /// Total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }
  /// Common degree of all terms, nullopt when inhomogeneous or zero.
  std::optional<unsigned> homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    unsigned d = t_.begin()->first.degree();
    for (const auto& [m, c] : t_)
      if (m.degree() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return t_.empty() || homogeneous_degree().has_value(); }

  void add_term(const Monomial& m, const Rational& c) {
    check_vars(m.nvars());
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
  }
  /// this += s * m * o
  void add_scaled(const Rational& s, const Monomial& m, const Polynomial& o) {
    adopt(o);
    for (const auto& [om, c] : o.t_) add_term(m * om, s * c);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.n_ ? a.n_ : b.n_);
    if (a.n_ && b.n_ && a.n_ != b.n_) throw std::invalid_argument("polynomial product: nvars mismatch");
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end(); ++i, ++j)
      if (i->first != j->first || i->second != j->second) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Divides every coefficient by the leading coefficient.
  Polynomial monic() const {
    if (t_.empty()) return *this;
    Polynomial r = *this;
    Rational inv = 1 / leading_coefficient();
    r *= inv;
    return r;
  }

 private:
  void check_vars(std::size_t n) {
    if (n_ == 0) n_ = n;
    if (n != n_) throw std::invalid_argument("monomial has wrong number of variables");
  }
  void adopt(const Polynomial& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("polynomial sum: nvars mismatch");
  }
  std::size_t n_ = 0;
  Terms t_;
};

inline Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    auto e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, static_cast<Monomial::Exp>(e - 1));
    r.add_term(d, c * static_cast<long>(e));
  }
  return r;
}

inline Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial r(p.nvars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Exact evaluation at a point over Q or Q(i).
template <class T>
T evaluate(const Polynomial& p, const std::vector<T>& point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: point has wrong dimension");
  T sum{};
  for (const auto& [m, c] : p.terms()) {
    T v = T(c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

/// Substitutes polynomials (all over a common ring) for the variables.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitute: image count mismatch");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial r(target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial(target, Rational(1)));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[m[i]];
    }
    r += t;
  }
  return r;
}

/// sum_i x_i dp/dx_i; equals deg(p) p for homogeneous p.
inline Polynomial euler_weighted_sum(const Polynomial& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("euler_weighted_sum: inhomogeneous input");
  Polynomial r(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i)
    r += Polynomial::var(p.nvars(), i) * partial_derivative(p, i);
  return r;
}

// ---- text format ----

/// Optional variable names; index i prints as names[i].
using VarNames = std::vector<std::string>;

inline std::string to_string(const Polynomial& p, const VarNames& names = {}) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || m.degree() == 0) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t nvars, const VarNames& names)
      : s_(s), n_(nvars) {
    for (std::size_t i = 0; i < names.size(); ++i) table_.emplace(names[i], i);
  }

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial expr() {
    Polynomial acc(n_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial t = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        t = t * factor();
      } else if (starts_factor()) {
        t = t * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return t;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) throw ParseError("exponent too large", start);
      base = power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(start, pos_ - start));
      std::string den = "1";
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) throw ParseError("expected denominator", pos_);
        den = std::string(s_.substr(ds, pos_ - ds));
        if (Integer(den) == 0) throw ParseError("zero denominator", ds);
      } else {
        pos_ = save;
      }
      return Polynomial(n_, parse_rational(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (!known(id)) {
        // Juxtaposed names such as y1y2: take letters then digits only.
        std::size_t k = start;
        while (k < pos_ && (std::isalpha(static_cast<unsigned char>(s_[k])) || s_[k] == '_')) ++k;
        while (k < pos_ && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        std::string head(s_.substr(start, k - start));
        if (k < pos_ && known(head)) {
          pos_ = k;
          id = head;
        }
      }
      return Polynomial::var(n_, lookup(id, start));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  bool known(const std::string& id) const {
    if (table_.count(id)) return true;
    return (id[0] == 'x' || id[0] == 'y') && id.size() > 1 &&
           id.find_first_not_of("0123456789", 1) == std::string::npos;
  }

  std::size_t lookup(const std::string& id, std::size_t at) {
    auto it = table_.find(id);
    std::size_t idx;
    if (it != table_.end()) {
      idx = it->second;
    } else if ((id[0] == 'x' || id[0] == 'y') && id.size() > 1 &&
               id.find_first_not_of("0123456789", 1) == std::string::npos) {
      idx = std::stoul(id.substr(1));
    } else {
      throw ParseError("unknown variable '" + id + "'", at);
    }
    if (idx >= n_) throw ParseError("variable index out of range: " + id, at);
    return idx;
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> table_;
};

}  // namespace detail

/// Parses the polynomial grammar: signed terms of rational coefficients and
/// powers x<k>^e (aliases y<k>, or names from the optional table).
inline Polynomial parse_poly(std::string_view text, std::size_t nvars, const VarNames& names = {}) {
  if (nvars == 0) throw std::invalid_argument("parse_poly: nvars must be positive");
  return detail::PolyParser(text, nvars, names).parse();
}

}  // namespace legvar
