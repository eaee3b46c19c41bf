#pragma once

// Exact scalar arithmetic in the field Q(q): every scalar is a quotient of
// integer-coefficient polynomials in q, kept in a canonical reduced form so
// that equality is structural.  Laurent expressions (negative powers of q)
// are absorbed by scaling numerator and denominator with a power of q.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense polynomial over Z in the variable q, ascending coefficient order,
/// normalized so that the coefficient vector has no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly monomial(Int coeff, std::size_t power) {
    if (coeff == 0) return {};
    std::vector<Int> v(power + 1);
    v[power] = std::move(coeff);
    return ZPoly(std::move(v));
  }
  static ZPoly one() { return ZPoly(Int(1)); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
  }
  /// Multiplicity of the root q = 0, i.e. the largest k with q^k | p.
  std::size_t low_power() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly operator-() const {
    ZPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.c_.size()) v[i] += a.c_[i];
      if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return ZPoly(std::move(v));
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(v));
  }

  /// Multiply by q^k.
  ZPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> v(c_.size() + k);
    std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
    return ZPoly(std::move(v));
  }
  /// Coefficient reversal: q^{deg} * p(1/q).
  ZPoly reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return ZPoly(std::move(v));
  }

  /// gcd of all coefficients, non-negative.
  Int content() const {
    Int g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
  }
  ZPoly divided_by_int(const Int& d) const {
    ZPoly r(*this);
    for (auto& x : r.c_) {
      if (x % d != 0) throw std::domain_error("inexact integer division");
      x /= d;
    }
    return r;
  }

  /// Exact division; throws if the remainder is nonzero.
  friend ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly q, r;
    divmod_pseudo(a, b, q, r, /*exact=*/true);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  /// Polynomial gcd over Z[q] via the primitive PRS; result has positive
  /// leading coefficient and integer content gcd(content(a), content(b)).
  friend ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.leading_positive();
    if (b.is_zero()) return a.leading_positive();
    Int ca = a.content(), cb = b.content();
    ZPoly x = a.divided_by_int(ca), y = b.divided_by_int(cb);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      ZPoly q, r;
      divmod_pseudo(x, y, q, r, /*exact=*/false);
      x = y;
      if (r.is_zero())
        y = ZPoly{};
      else
        y = r.divided_by_int(r.content());
    }
    Int cg = boost::multiprecision::gcd(ca, cb);
    ZPoly g = x.divided_by_int(x.content());
    for (auto& t : g.c_) t *= cg;
    return g.leading_positive();
  }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
  }

  std::string to_string() const;

 private:
  std::vector<Int> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  ZPoly leading_positive() const {
    if (!c_.empty() && c_.back() < 0) return -*this;
    return *this;
  }
  /// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
  /// With exact=true no premultiplication happens and divisions must be exact.
  friend void divmod_pseudo(const ZPoly& a, const ZPoly& b, ZPoly& quo, ZPoly& rem,
                            bool exact) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Int> r = a.c_;
    long db = b.degree();
    std::vector<Int> q;
    if (static_cast<long>(r.size()) - 1 >= db) q.assign(r.size() - db, Int(0));
    const Int& lb = b.leading();
    if (!exact) {
      long steps = static_cast<long>(a.c_.size()) - 1 - db + 1;
      if (steps > 0) {
        Int f = 1;
        for (long i = 0; i < steps; ++i) f *= lb;
        for (auto& x : r) x *= f;
      }
    }
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (static_cast<long>(r.size()) - 1 < db || r.empty()) break;
      Int c = r.back();
      if (c % lb != 0) {
        if (exact) throw std::domain_error("inexact polynomial division");
        // primitive PRS guarantees divisibility after premultiplication
        throw std::domain_error("pseudo-division invariant violated");
      }
      c /= lb;
      std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
      q[shift] = c;
      for (long i = 0; i <= db; ++i)
        r[shift + static_cast<std::size_t>(i)] -= c * b.c_[static_cast<std::size_t>(i)];
      r.pop_back();
    }
    quo = ZPoly(std::move(q));
    rem = ZPoly(std::move(r));
  }
};

/// Element of Q(q) in canonical form: numerator and denominator are coprime
/// in Z[q], the denominator has positive leading coefficient, and at most one
/// of them is divisible by q.
class QScalar {
 public:
  QScalar() : num_(), den_(ZPoly::one()) {}
  QScalar(int n) : num_(ZPoly(Int(n))), den_(ZPoly::one()) {}  // NOLINT(implicit)
  explicit QScalar(Int n) : num_(ZPoly(std::move(n))), den_(ZPoly::one()) {}
  QScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  /// The generator q itself.
  static QScalar q() { return QScalar(ZPoly::monomial(1, 1), ZPoly::one()); }
  /// q^k for any integer k (negative exponents allowed).
  static QScalar q_power(long k) {
    if (k >= 0) return QScalar(ZPoly::monomial(1, static_cast<std::size_t>(k)), ZPoly::one());
    return QScalar(ZPoly::one(), ZPoly::monomial(1, static_cast<std::size_t>(-k)));
  }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  QScalar operator-() const {
    QScalar r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend QScalar operator+(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return QScalar(div_exact(a.num_, g1) * div_exact(b.num_, g2),
                   div_exact(a.den_, g2) * div_exact(b.den_, g1));
  }
  friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

  QScalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return QScalar(den_, num_);
  }
  QScalar pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QScalar r = 1, b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  /// Substitute q -> 1/q.
  QScalar subst_q_inverse() const {
    long dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return {};
    QScalar r(num_.reversed(), den_.reversed());
    return r * q_power(dd - dn);
  }

  /// Evaluate at a rational value of q; the value must not be a pole.
  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
  }

  std::string to_string() const;
  static QScalar parse(const std::string& text);

 private:
  ZPoly num_, den_;

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = ZPoly::one();
      return;
    }
    ZPoly g = gcd(num_, den_);
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

inline std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = a < 0 ? Int(-a) : a;
    if (out.empty())
      out += (a < 0 ? "-" : "");
    else
      out += (a < 0 ? "-" : "+");
    bool unit = (mag == 1);
    if (i == 0) {
      out += mag.str();
    } else {
      if (!unit) out += mag.str() + "*";
      out += (i == 1) ? "q" : "q^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string QScalar::to_string() const {
  if (den_ == ZPoly::one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

// term := [sign] [integer ['*']] ['q' ['^' integer]]
// poly := term { ('+'|'-') term }
inline ZPoly parse_poly(const std::string& s, std::size_t& i) {
  ZPoly acc;
  skip_ws(s, i);
  bool first = true;
  while (true) {
    skip_ws(s, i);
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      break;
    }
    skip_ws(s, i);
    Int coeff = 1;
    bool saw_digits = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coeff = Int(s.substr(i, j - i));
      i = j;
      saw_digits = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws(s, i);
      }
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad exponent");
        power = std::stoul(s.substr(i, j - i));
        i = j;
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("expected term");
    }
    acc = acc + ZPoly::monomial(sign * coeff, power);
    first = false;
  }
  return acc;
}

}  // namespace detail

inline QScalar QScalar::parse(const std::string& text) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  ZPoly num, den = ZPoly::one();
  if (i < text.size() && text[i] == '(') {
    ++i;
    num = detail::parse_poly(text, i);
    if (i >= text.size() || text[i] != ')') throw std::invalid_argument("expected ')'");
    ++i;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '/') {
      ++i;
      detail::skip_ws(text, i);
      if (i >= text.size() || text[i] != '(') throw std::invalid_argument("expected '('");
      ++i;
      den = detail::parse_poly(text, i);
      if (i >= text.size() || text[i] != ')') throw std::invalid_argument("expected ')'");
      ++i;
    }
  } else {
    num = detail::parse_poly(text, i);
  }
  detail::skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters");
  return QScalar(std::move(num), std::move(den));
}

/// Symmetric q-integer [n]_q = (q^n - q^-n)/(q - q^-1); [-n] = -[n], [0] = 0.
inline QScalar qint(long n) {
  if (n < 0) return -qint(-n);
  // [n]_q = q^{-(n-1)} (1 + q^2 + ... + q^{2(n-1)})
  ZPoly s;
  for (long k = 0; k < n; ++k) s = s + ZPoly::monomial(1, static_cast<std::size_t>(2 * k));
  return QScalar(s, ZPoly::one()) * QScalar::q_power(-(n - 1));
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
inline QScalar qfact(long n) {
  QScalar r = 1;
  for (long k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

/// One-sided q-number (z)_t = (t^z - 1)/(t - 1) = 1 + t + ... + t^{z-1}
/// for a scalar base t and non-negative integer z.
inline QScalar qparen(long z, const QScalar& t) {
  QScalar r = 0, p = 1;
  for (long k = 0; k < z; ++k) {
    r += p;
    p *= t;
  }
  return r;
}

/// (z)_t! = (1)_t (2)_t ... (z)_t.
inline QScalar qparen_fact(long z, const QScalar& t) {
  QScalar r = 1;
  for (long k = 2; k <= z; ++k) r *= qparen(k, t);
  return r;
}

}  // namespace qsl
