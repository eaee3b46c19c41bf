#pragma once

// Commutative multivariate polynomials and fractions over QScalar in the
// variables x_1..x_m, y_1..y_n, supersymmetric Schur polynomials via hook
// tableaux, the diagonal specialization map from the quantum coordinate
// algebra, and exact linear solving over the fraction field.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/aqmat.hpp"
#include "qsl/combinat.hpp"
#include "qsl/matrix.hpp"
#include "qsl/qscalar.hpp"

namespace qsl {

/// Polynomial in x_1..x_m, y_1..y_n with QScalar coefficients.  Exponent
/// vectors have length m+n (x block first).  A default-constructed value is a
/// constant of the null (0,0) variable set and mixes with any other.
class SPoly {
 public:
  using Expo = std::vector<int>;

  SPoly() = default;
  SPoly(long v) : SPoly(QScalar(v)) {}
  SPoly(const QScalar& c) {
    if (!c.is_zero()) terms_.emplace(Expo{}, c);
  }
  SPoly(int m, int n) : m_(m), n_(n) {}

  static SPoly x_var(int m, int n, int i) {
    if (i < 1 || i > m) throw std::out_of_range("x variable index");
    SPoly out(m, n);
    Expo e(static_cast<std::size_t>(m + n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    out.terms_.emplace(std::move(e), QScalar(1));
    return out;
  }
  static SPoly y_var(int m, int n, int j) {
    if (j < 1 || j > n) throw std::out_of_range("y variable index");
    SPoly out(m, n);
    Expo e(static_cast<std::size_t>(m + n), 0);
    e[static_cast<std::size_t>(m + j - 1)] = 1;
    out.terms_.emplace(std::move(e), QScalar(1));
    return out;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  const std::map<Expo, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second.is_one();
  }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
  }
  QScalar constant_term() const {
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == 0) return c;
    return QScalar(0);
  }
  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  friend SPoly operator+(const SPoly& a, const SPoly& b) {
    SPoly out = promote(a, merged(a, b));
    for (const auto& [e, c] : b.terms_) out.add_term(out.pad(e), c);
    return out;
  }
  friend SPoly operator-(const SPoly& a, const SPoly& b) {
    SPoly out = promote(a, merged(a, b));
    for (const auto& [e, c] : b.terms_) out.add_term(out.pad(e), -c);
    return out;
  }
  SPoly operator-() const {
    SPoly out(m_, n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  SPoly& operator+=(const SPoly& o) { return *this = *this + o; }
  SPoly& operator-=(const SPoly& o) { return *this = *this - o; }

  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    auto [m, n] = merged(a, b);
    SPoly out(m, n);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e = out.pad(ea);
        Expo f = out.pad(eb);
        for (std::size_t t = 0; t < e.size(); ++t) e[t] += f[t];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  SPoly& operator*=(const SPoly& o) { return *this = *this * o; }
  friend SPoly operator*(const QScalar& c, const SPoly& a) {
    SPoly out(a.m_, a.n_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, c * v);
    return out;
  }

  SPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    SPoly out(1);
    for (int t = 0; t < k; ++t) out = out * *this;
    return out;
  }

  friend bool operator==(const SPoly& a, const SPoly& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

  /// y_j -> -y_j for every j: negate each term by its total y-degree.
  SPoly substitute_neg_y() const {
    SPoly out(m_, n_);
    for (const auto& [e, c] : terms_) {
      int yd = 0;
      for (std::size_t t = static_cast<std::size_t>(m_); t < e.size(); ++t)
        yd += e[t];
      out.terms_.emplace(e, (yd & 1) ? -c : c);
    }
    return out;
  }

  /// Exchange two variables by their 0-based slots in the exponent vector.
  SPoly swapped_vars(std::size_t a, std::size_t b) const {
    SPoly out(m_, n_);
    for (const auto& [e, c] : terms_) {
      Expo f = e;
      if (std::max(a, b) < f.size()) std::swap(f[a], f[b]);
      out.add_term(std::move(f), c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    // graded-lexicographic printing, highest degree first
    std::vector<std::pair<Expo, QScalar>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& p, const auto& q) {
      int dp = degree_of(p.first), dq = degree_of(q.first);
      if (dp != dq) return dp > dq;
      return p.first > q.first;
    });
    std::string out;
    for (const auto& [e, c] : ts) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (!e[t]) continue;
        if (!mono.empty()) mono += "*";
        bool isx = t < static_cast<std::size_t>(m_);
        mono += (isx ? "x" : "y") +
                std::to_string(isx ? t + 1 : t + 1 - static_cast<std::size_t>(m_));
        if (e[t] != 1) mono += "^" + std::to_string(e[t]);
      }
      std::string cs = c.to_string();
      if (mono.empty()) {
        out += cs;
      } else if (c.is_one()) {
        out += mono;
      } else {
        bool wrap = cs.find_first_of("+-") != std::string::npos && cs.front() != '(';
        out += (wrap ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return out;
  }

 private:
  static int degree_of(const Expo& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }
  static std::pair<int, int> merged(const SPoly& a, const SPoly& b) {
    if (a.m_ == 0 && a.n_ == 0) return {b.m_, b.n_};
    if ((b.m_ == 0 && b.n_ == 0) || (a.m_ == b.m_ && a.n_ == b.n_))
      return {a.m_, a.n_};
    throw std::invalid_argument("mixing distinct variable sets");
  }
  static SPoly promote(const SPoly& a, std::pair<int, int> mn) {
    SPoly out(mn.first, mn.second);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(out.pad(e), c);
    return out;
  }
  Expo pad(const Expo& e) const {
    if (e.size() == static_cast<std::size_t>(m_ + n_)) return e;
    Expo f(static_cast<std::size_t>(m_ + n_), 0);
    std::copy(e.begin(), e.end(), f.begin());
    return f;
  }
  void add_term(Expo e, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int m_ = 0, n_ = 0;
  std::map<Expo, QScalar> terms_;
};

/// Fraction of two SPoly, reduced only by cheap scalar normalization;
/// equality is decided by cross-multiplication.
class SRat {
 public:
  SRat() : num_(0), den_(1) {}
  SRat(long v) : num_(v), den_(1) {}
  SRat(const SPoly& p) : num_(p), den_(1) {}
  SRat(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
  }

  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend SRat operator+(const SRat& a, const SRat& b) {
    return SRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SRat operator-(const SRat& a, const SRat& b) {
    return SRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  SRat operator-() const { return SRat(-num_, den_); }
  friend SRat operator*(const SRat& a, const SRat& b) {
    return SRat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend SRat operator/(const SRat& a, const SRat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return SRat(a.num_ * b.den_, a.den_ * b.num_);
  }
  SRat& operator+=(const SRat& o) { return *this = *this + o; }
  SRat& operator-=(const SRat& o) { return *this = *this - o; }
  SRat& operator*=(const SRat& o) { return *this = *this * o; }

  friend bool operator==(const SRat& a, const SRat& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const SRat& a, const SRat& b) { return !(a == b); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = SPoly(1);
      return;
    }
    // scale so the denominator's first stored coefficient is 1
    QScalar lead = den_.terms().begin()->second;
    num_ = lead.inverse() * num_;
    den_ = lead.inverse() * den_;
  }

  SPoly num_, den_;
};

/// Supersymmetric Schur polynomial: sum over (m|n)-hook semistandard tableaux
/// of shape lambda, sending entries i <= m to x_i and m+j to y_j.  Zero when
/// the shape leaves the fat hook.
inline SPoly super_schur(const Partition& lambda, int m, int n) {
  SPoly out(m, n);
  for (const Filling& f : hook_semistandard_tableaux(lambda, m, n)) {
    SPoly mono(1);
    for (const auto& row : f.rows)
      for (int entry : row)
        mono = mono * (entry <= m ? SPoly::x_var(m, n, entry)
                                  : SPoly::y_var(m, n, entry - m));
    out += mono;
  }
  return out;
}

/// y -> -y on a polynomial (free-standing form of the member).
inline SPoly substitute_neg_y(const SPoly& p) { return p.substitute_neg_y(); }

/// Diagonal specialization: kills off-diagonal generators, x_{ii} -> x_i for
/// i <= m and x_{m+j,m+j} -> -y_j; coefficients pass through.
inline SPoly phi_specialize(const NCPoly& p, int m, int n) {
  SPoly out(m, n);
  for (const auto& [word, coeff] : p.terms()) {
    SPoly mono(coeff);
    bool dead = false;
    for (const Gen& g : word) {
      if (g.first != g.second) {
        dead = true;
        break;
      }
      if (g.first <= m)
        mono = mono * SPoly::x_var(m, n, g.first);
      else
        mono = mono * (-SPoly::y_var(m, n, g.first - m));
    }
    if (!dead) out += mono;
  }
  return out;
}

/// Exact solution of a square linear system over the fraction field by
/// Gauss-Jordan elimination; throws on a singular matrix.
inline std::vector<SRat> solve_linear(Matrix<SRat> a, std::vector<SRat> b) {
  std::size_t nrows = a.rows();
  if (a.cols() != nrows || b.size() != nrows)
    throw std::invalid_argument("solve_linear needs a square system");
  for (std::size_t col = 0; col < nrows; ++col) {
    std::size_t piv = col;
    while (piv < nrows && a(piv, col).is_zero()) ++piv;
    if (piv == nrows) throw std::domain_error("singular linear system");
    if (piv != col) {
      for (std::size_t j = 0; j < nrows; ++j) std::swap(a(col, j), a(piv, j));
      std::swap(b[col], b[piv]);
    }
    SRat inv = SRat(1) / a(col, col);
    for (std::size_t j = 0; j < nrows; ++j) a(col, j) = inv * a(col, j);
    b[col] = inv * b[col];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      SRat f = a(i, col);
      for (std::size_t j = 0; j < nrows; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace qsl
