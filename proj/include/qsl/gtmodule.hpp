#pragma once

// Gelfand-Tsetlin realization of the covariant irreducible representations of
// the quantum enveloping superalgebra: triangular patterns with an explicit
// validity predicate, exact raising/lowering/Cartan actions on pattern
// vectors, the branching bijection with two-alphabet semistandard tableaux,
// unnormalized Schur-Weyl basis vectors obtained from primitive idempotents,
// and the weight-space supertrace evaluation of normalized immanants.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl/aqmat.hpp"
#include "qsl/combinat.hpp"
#include "qsl/hecke.hpp"
#include "qsl/identities.hpp"
#include "qsl/immanant.hpp"
#include "qsl/matrix.hpp"
#include "qsl/superlinear.hpp"

namespace qsl {

// ---------------------------------------------------------------------------
// Covariant highest weights
// ---------------------------------------------------------------------------

/// Highest weight of the covariant irreducible module attached to a hook
/// partition: entry i is lambda_i for i <= m, and entry m+j is
/// max(0, lambda'_j - m) for j <= n.
struct CovariantWeight {
  int m = 0, n = 0;
  std::vector<int> entries;  // size m + n

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < m + n; ++i) {
      if (i) s += (i == m ? "|" : ",");
      s += std::to_string(entries[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }
};

inline CovariantWeight covariant_weight(const Partition& lam, int m, int n) {
  if (!lam.fits_hook(m, n))
    throw std::invalid_argument("partition outside the (m,n) fat hook");
  CovariantWeight w{m, n, {}};
  w.entries.reserve(static_cast<std::size_t>(m + n));
  for (int i = 0; i < m; ++i) w.entries.push_back(lam.at(i));
  Partition lt = lam.transpose();
  for (int j = 0; j < n; ++j) w.entries.push_back(std::max(0, lt.at(j) - m));
  return w;
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

/// Triangular pattern: row k (1-based, k = 1..m+n) holds k entries
/// lambda_{k,1..k}; the top row m+n is the covariant highest weight.  Entries
/// outside the triangle read as 0.
class GTPattern {
 public:
  GTPattern(int m, int n, std::vector<std::vector<int>> rows)
      : m_(m), n_(n), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != m_ + n_)
      throw std::invalid_argument("pattern must have m+n rows");
    for (int k = 1; k <= m_ + n_; ++k)
      if (static_cast<int>(rows_[static_cast<std::size_t>(k - 1)].size()) != k)
        throw std::invalid_argument("pattern row k must have k entries");
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int depth() const { return m_ + n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Entry lambda_{k,i} (1-based), 0 outside the triangle.
  int at(int k, int i) const {
    if (k < 1 || k > depth() || i < 1 || i > k) return 0;
    return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
  }

  /// Shifted entry: l_{ki} = lambda_{ki} - i + 1 for i <= m and
  /// l_{ki} = -lambda_{ki} + i - 2m for i > m.
  long l(int k, int i) const {
    if (i <= m_) return static_cast<long>(at(k, i)) - i + 1;
    return -static_cast<long>(at(k, i)) + i - 2 * m_;
  }

  /// Step in the odd band: theta_{ki} = lambda_{k+1,i} - lambda_{k,i},
  /// meaningful for m <= k <= m+n-1 and i <= m, where it lies in {0,1}.
  int theta(int k, int i) const { return at(k + 1, i) - at(k, i); }

  /// Sign exponent for the odd-band actions:
  /// theta_{k,1}+...+theta_{k,i-1} + theta_{k-1,i+1}+...+theta_{k-1,m}.
  int vartheta(int k, int i) const {
    int s = 0;
    for (int j = 1; j < i; ++j) s += theta(k, j);
    for (int j = i + 1; j <= m_; ++j) s += theta(k - 1, j);
    return s;
  }

  long row_sum(int k) const {
    long s = 0;
    for (int i = 1; i <= k; ++i) s += at(k, i);
    return s;
  }

  /// Exponent vector of the Cartan action: entry k is the eigenvalue exponent
  /// of q^{eps_k}, the k-th row sum minus the (k-1)-st.
  std::vector<long> weight() const {
    std::vector<long> w(static_cast<std::size_t>(depth()));
    for (int k = 1; k <= depth(); ++k)
      w[static_cast<std::size_t>(k - 1)] = row_sum(k) - row_sum(k - 1);
    return w;
  }

  /// Validity of the triangular array below a fixed top row: nonnegative
  /// entries, interlacing inside the purely even and purely odd column
  /// blocks, {0,1} steps on the first m columns across the odd band,
  /// within-row monotonicity there, the column-count bound on entry
  /// lambda_{p,m}, and the boundary degeneration rule at the band corner.
  bool valid() const {
    for (const auto& row : rows_)
      for (int v : row)
        if (v < 0) return false;
    // even column block: lambda_{i,j} >= lambda_{i-1,j} >= lambda_{i,j+1}
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= i; ++j) {
        if (at(i, j) < at(i - 1, j)) return false;
        if (at(i - 1, j) < at(i, j + 1)) return false;
      }
    // odd column block, same interlacing on columns m+1..
    for (int i = m_ + 1; i <= depth(); ++i)
      for (int j = m_ + 1; j <= i; ++j) {
        if (at(i, j) < at(i - 1, j)) return false;
        if (at(i - 1, j) < at(i, j + 1)) return false;
      }
    // odd band: unit steps on the first m columns
    for (int p = m_ + 1; p <= depth(); ++p)
      for (int i = 1; i <= m_; ++i) {
        int t = at(p, i) - at(p - 1, i);
        if (t != 0 && t != 1) return false;
      }
    // within-row monotonicity of the first m columns in the odd band
    for (int p = m_ + 1; p <= depth() - 1; ++p)
      for (int i = 1; i + 1 <= m_; ++i)
        if (at(p, i) < at(p, i + 1)) return false;
    // column-count bound: lambda_{p,m} >= #{j > m : lambda_{p,j} > 0}
    for (int p = m_ + 1; p <= depth(); ++p) {
      int pos = 0;
      for (int j = m_ + 1; j <= p; ++j)
        if (at(p, j) > 0) ++pos;
      if (m_ >= 1 && at(p, m_) < pos) return false;
    }
    // band corner: lambda_{m+1,m} = 0 forces a zero step there
    if (n_ >= 1 && m_ >= 1 && at(m_ + 1, m_) == 0 && theta(m_, m_) != 0)
      return false;
    return true;
  }

  /// Copy with entry (k, i) shifted by d.
  GTPattern with_delta(int k, int i, int d) const {
    GTPattern out = *this;
    out.rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] += d;
    return out;
  }

  friend bool operator==(const GTPattern& a, const GTPattern& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const GTPattern& a, const GTPattern& b) { return !(a == b); }
  friend bool operator<(const GTPattern& a, const GTPattern& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rows_ < b.rows_;
  }

  /// Triangular row lists, bottom row first: [[l11],[l21,l22],...].
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ",";
      s += "[";
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows_[k][i]);
      }
      s += "]";
    }
    return s + "]";
  }
  std::string to_json() const { return to_string(); }

 private:
  int m_, n_;
  std::vector<std::vector<int>> rows_;
};

/// All valid patterns with the given top row, by downward branching.
inline std::vector<GTPattern> enumerate_patterns(const CovariantWeight& w) {
  int m = w.m, n = w.n, d = m + n;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
  rows[static_cast<std::size_t>(d - 1)] = w.entries;
  std::vector<GTPattern> out;
  // fill row k (k entries) given row k+1, from k = d-1 down to 1
  auto rec = [&](auto&& self, int k) -> void {
    if (k == 0) {
      GTPattern p(m, n, rows);
      if (p.valid()) out.push_back(p);
      return;
    }
    const std::vector<int>& up = rows[static_cast<std::size_t>(k)];
    auto upv = [&](int j) { return j >= 1 && j <= k + 1 ? up[static_cast<std::size_t>(j - 1)] : 0; };
    std::vector<int> row(static_cast<std::size_t>(k));
    auto choose = [&](auto&& go, int i) -> void {
      if (i > k) {
        rows[static_cast<std::size_t>(k - 1)] = row;
        self(self, k - 1);
        return;
      }
      int lo, hi;
      if (k >= m && i <= m) {
        lo = upv(i) - 1;  // unit step across the odd band
        hi = upv(i);
      } else {
        lo = upv(i + 1);  // interlacing inside a column block
        hi = upv(i);
      }
      for (int v = std::max(lo, 0); v <= hi; ++v) {
        row[static_cast<std::size_t>(i - 1)] = v;
        go(go, i + 1);
      }
    };
    choose(choose, 1);
  };
  rec(rec, d - 1);
  return out;
}

/// Patterns of the covariant module of a partition; empty off the fat hook.
inline std::vector<GTPattern> enumerate_patterns(const Partition& lam, int m, int n) {
  if (!lam.fits_hook(m, n)) return {};
  return enumerate_patterns(covariant_weight(lam, m, n));
}

/// The highest pattern: row k is the first k entries of the top row.
inline GTPattern highest_pattern(const CovariantWeight& w) {
  int d = w.m + w.n;
  std::vector<std::vector<int>> rows;
  for (int k = 1; k <= d; ++k)
    rows.emplace_back(w.entries.begin(), w.entries.begin() + k);
  return GTPattern(w.m, w.n, std::move(rows));
}

// ---------------------------------------------------------------------------
// Generator actions on pattern vectors
// ---------------------------------------------------------------------------

/// Generators acting on pattern vectors: the Cartan element q^{eps_k}
/// (k = 1..m+n) and the raising/lowering pair E_k, F_k (k = 1..m+n-1).
enum class GTGen { cartan, raising, lowering };

/// Scalar reading of the linear factors (l - l') in the action coefficients:
/// either the balanced q-integer [l - l']_q or the plain integer.  Exactly
/// one convention satisfies the defining relations; see
/// adjudicate_bracket_convention.
enum class BracketConvention { q_integer, plain_integer };

/// Finitely supported vector in the pattern basis.
using GTVector = std::map<GTPattern, QScalar>;

namespace detail {

inline QScalar gt_factor(long x, BracketConvention conv) {
  if (conv == BracketConvention::q_integer) return qint(x);
  return QScalar(static_cast<long>(x));
}

/// Evaluate a product of linear factors over another.  The printed
/// coefficients are rational expressions in the shifted entries; coincident
/// numerator and denominator factors cancel before evaluation (on patterns
/// with equal shifted entries the plain products would read 0/0).
inline QScalar gt_ratio(std::vector<long> num, std::vector<long> den,
                        BracketConvention conv) {
  for (auto it = den.begin(); it != den.end();) {
    auto hit = std::find(num.begin(), num.end(), *it);
    if (hit != num.end()) {
      num.erase(hit);
      it = den.erase(it);
    } else {
      ++it;
    }
  }
  QScalar out(1);
  for (long x : num) {
    out *= gt_factor(x, conv);
    if (out.is_zero()) return out;
  }
  for (long x : den) out = out / gt_factor(x, conv);
  return out;
}

inline void gt_add(GTVector& v, const GTPattern& p, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// Contribution of one generator applied to one basis pattern.
inline void gt_act_pattern(GTGen g, int k, const GTPattern& P, const QScalar& scale,
                           BracketConvention conv, GTVector& out) {
  const int m = P.m(), d = P.depth();
  auto push = [&](int i, int delta, const QScalar& coeff) {
    if (coeff.is_zero()) return;
    GTPattern t = P.with_delta(k, i, delta);
    if (!t.valid()) return;  // vectors of invalid patterns are zero
    gt_add(out, t, scale * coeff);
  };

  if (g == GTGen::cartan) {
    if (k < 1 || k > d) throw std::out_of_range("Cartan index out of range");
    gt_add(out, P, scale * QScalar::q_power(P.row_sum(k) - P.row_sum(k - 1)));
    return;
  }
  if (k < 1 || k > d - 1) throw std::out_of_range("generator index out of range");
  std::vector<long> num, den;

  if (g == GTGen::raising) {
    if (k < m) {  // purely even block
      for (int i = 1; i <= k; ++i) {
        num.clear();
        den.clear();
        for (int j = 1; j <= k + 1; ++j) num.push_back(P.l(k + 1, j) - P.l(k, i));
        for (int j = 1; j <= k; ++j)
          if (j != i) den.push_back(P.l(k, j) - P.l(k, i));
        push(i, +1, -gt_ratio(num, den, conv));
      }
    } else if (k == m) {  // odd simple generator
      for (int i = 1; i <= m; ++i) {
        if (P.theta(m, i) != 1) continue;
        int sgn = i - 1;
        for (int j = 1; j < i; ++j) sgn += P.theta(m, j);
        num.clear();
        den.clear();
        for (int j = 1; j < i; ++j) num.push_back(P.l(m, j) - P.l(m, i) - 1);
        for (int j = i + 1; j <= m; ++j) den.push_back(P.l(m, j) - P.l(m, i));
        for (int j = 1; j <= m; ++j)
          if (j != i) den.push_back(P.l(m + 1, j) - P.l(m, i) - 1);
        QScalar c = gt_ratio(num, den, conv);
        push(i, +1, (sgn & 1) ? -c : c);
      }
    } else {  // odd band
      for (int i = 1; i <= m; ++i) {
        if (P.theta(k, i) != 1 || P.theta(k - 1, i) != 0) continue;
        num.clear();
        den.clear();
        for (int j = 1; j <= m; ++j)
          if (j != i) {
            num.push_back(P.l(k, j) - P.l(k, i) - 1);
            den.push_back(P.l(k + 1, j) - P.l(k, i) - 1);
          }
        QScalar c = gt_ratio(num, den, conv);
        push(i, +1, (P.vartheta(k, i) & 1) ? -c : c);
      }
      for (int i = m + 1; i <= k; ++i) {
        num.clear();
        den.clear();
        for (int j = 1; j <= m; ++j) {
          num.push_back(P.l(k, j) - P.l(k, i));
          num.push_back(P.l(k, j) - P.l(k, i) + 1);
          den.push_back(P.l(k + 1, j) - P.l(k, i));
          den.push_back(P.l(k - 1, j) - P.l(k, i) + 1);
        }
        for (int j = m + 1; j <= k + 1; ++j) num.push_back(P.l(k + 1, j) - P.l(k, i));
        for (int j = m + 1; j <= k; ++j)
          if (j != i) den.push_back(P.l(k, j) - P.l(k, i));
        push(i, +1, -gt_ratio(num, den, conv));
      }
    }
    return;
  }

  // lowering
  if (k < m) {
    for (int i = 1; i <= k; ++i) {
      num.clear();
      den.clear();
      for (int j = 1; j <= k - 1; ++j) num.push_back(P.l(k - 1, j) - P.l(k, i));
      for (int j = 1; j <= k; ++j)
        if (j != i) den.push_back(P.l(k, j) - P.l(k, i));
      push(i, -1, gt_ratio(num, den, conv));
    }
  } else if (k == m) {
    for (int i = 1; i <= m; ++i) {
      if (P.theta(m, i) != 0) continue;
      int sgn = i - 1;
      for (int j = 1; j < i; ++j) sgn += P.theta(m, j);
      num.clear();
      den.clear();
      num.push_back(P.l(m, i) - P.l(m + 1, m + 1));
      for (int j = i + 1; j <= m; ++j) num.push_back(P.l(m, j) - P.l(m, i) + 1);
      for (int j = 1; j <= m - 1; ++j) num.push_back(P.l(m - 1, j) - P.l(m, i));
      for (int j = 1; j < i; ++j) den.push_back(P.l(m, j) - P.l(m, i));
      QScalar c = gt_ratio(num, den, conv);
      push(i, -1, (sgn & 1) ? -c : c);
    }
  } else {
    for (int i = 1; i <= m; ++i) {
      if (P.theta(k - 1, i) != 1 || P.theta(k, i) != 0) continue;
      num.clear();
      den.clear();
      for (int j = m + 1; j <= k + 1; ++j) num.push_back(P.l(k + 1, j) - P.l(k, i));
      for (int j = m + 1; j <= k - 1; ++j) num.push_back(P.l(k - 1, j) - P.l(k, i) + 1);
      for (int j = m + 1; j <= k; ++j) {
        den.push_back(P.l(k, j) - P.l(k, i));
        den.push_back(P.l(k, j) - P.l(k, i) + 1);
      }
      for (int j = 1; j <= m; ++j)
        if (j != i) {
          num.push_back(P.l(k, j) - P.l(k, i) + 1);
          den.push_back(P.l(k - 1, j) - P.l(k, i) + 1);
        }
      QScalar c = gt_ratio(num, den, conv);
      push(i, -1, (P.vartheta(k, i) & 1) ? -c : c);
    }
    for (int i = m + 1; i <= k; ++i) {
      num.clear();
      den.clear();
      for (int j = m + 1; j <= k - 1; ++j) num.push_back(P.l(k - 1, j) - P.l(k, i));
      for (int j = m + 1; j <= k; ++j)
        if (j != i) den.push_back(P.l(k, j) - P.l(k, i));
      push(i, -1, gt_ratio(num, den, conv));
    }
  }
}

}  // namespace detail

/// Linear extension of the generator action to pattern vectors.
inline GTVector gt_action(GTGen g, int k, const GTVector& v,
                          BracketConvention conv = BracketConvention::q_integer) {
  GTVector out;
  for (const auto& [P, c] : v) detail::gt_act_pattern(g, k, P, c, conv, out);
  return out;
}

inline GTVector scaled(const GTVector& v, const QScalar& c) {
  GTVector out;
  for (const auto& [P, x] : v) detail::gt_add(out, P, c * x);
  return out;
}

inline GTVector operator+(const GTVector& a, const GTVector& b) {
  GTVector out = a;
  for (const auto& [P, c] : b) detail::gt_add(out, P, c);
  return out;
}

inline GTVector operator-(const GTVector& a, const GTVector& b) {
  GTVector out = a;
  for (const auto& [P, c] : b) detail::gt_add(out, P, -c);
  return out;
}

// ---------------------------------------------------------------------------
// Branching bijection with two-alphabet semistandard tableaux
// ---------------------------------------------------------------------------

/// Predicate matching hook_semistandard_tableaux: rows and columns weakly
/// increase, letters <= m strictly increase down columns, letters > m
/// strictly increase along rows.
inline bool is_hook_semistandard(const Filling& f, int m, int n) {
  int nl = m + n;
  for (std::size_t i = 0; i < f.rows.size(); ++i)
    for (std::size_t j = 0; j < f.rows[i].size(); ++j) {
      int v = f.rows[i][j];
      if (v < 1 || v > nl) return false;
      if (j > 0) {
        int left = f.rows[i][j - 1];
        if (v < left || (v == left && v > m)) return false;
      }
      if (i > 0 && f.rows[i - 1].size() > j) {
        int up = f.rows[i - 1][j];
        if (v < up || (v == up && v <= m)) return false;
      }
    }
  return true;
}

/// Shape of the subtableau with letters <= k encoded by pattern row k: the
/// first min(k,m) entries are the leading rows, and for k > m the entry in
/// odd column m+j counts the rows of length >= j beyond row m.
inline Partition gt_row_shape(const GTPattern& P, int k) {
  int m = P.m();
  std::vector<int> parts;
  for (int i = 1; i <= std::min(k, m); ++i) parts.push_back(P.at(k, i));
  if (k > m)
    for (int s = 1;; ++s) {
      int c = 0;
      for (int j = m + 1; j <= k; ++j)
        if (P.at(k, j) >= s) ++c;
      if (c == 0) break;
      parts.push_back(c);
    }
  return Partition(std::move(parts));
}

/// Decode a valid pattern into the semistandard filling whose subtableau of
/// letters <= k has the shape encoded by row k.
inline Filling pattern_to_tableau(const GTPattern& P) {
  int d = P.depth();
  std::vector<Partition> shapes(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) shapes[static_cast<std::size_t>(k)] = gt_row_shape(P, k);
  Filling f;
  f.shape = shapes[static_cast<std::size_t>(d)];
  f.rows.assign(static_cast<std::size_t>(f.shape.rows()), {});
  for (int i = 0; i < f.shape.rows(); ++i)
    f.rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(f.shape.at(i)), 0);
  for (int k = 1; k <= d; ++k) {
    const Partition& prev = shapes[static_cast<std::size_t>(k - 1)];
    const Partition& cur = shapes[static_cast<std::size_t>(k)];
    for (int i = 0; i < cur.rows(); ++i) {
      if (cur.at(i) < prev.at(i)) throw std::logic_error("pattern rows do not nest");
      for (int j = prev.at(i); j < cur.at(i); ++j)
        f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
    }
  }
  return f;
}

/// Inverse decode: row k of the pattern encodes the shape of the subtableau
/// of letters <= k.
inline GTPattern tableau_to_pattern(const Filling& f, int m, int n) {
  int d = m + n;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    std::vector<int> parts;
    for (const auto& row : f.rows) {
      int c = 0;
      for (int v : row)
        if (v <= k) ++c;
      parts.push_back(c);
    }
    Partition mu(std::move(parts));
    std::vector<int> enc;
    for (int i = 1; i <= std::min(k, m); ++i) enc.push_back(mu.at(i - 1));
    if (k > m) {
      Partition mut = mu.transpose();
      for (int j = 1; j <= k - m; ++j) enc.push_back(std::max(0, mut.at(j - 1) - m));
    }
    rows[static_cast<std::size_t>(k - 1)] = std::move(enc);
  }
  return GTPattern(m, n, std::move(rows));
}

// ---------------------------------------------------------------------------
// Schur-Weyl basis vectors
// ---------------------------------------------------------------------------

/// Filling of the tableau cells by the letters of a non-decreasing index:
/// entry k of the standard tableau is replaced by the k-th letter.
inline Filling index_filling(const StandardTableau& tab, const MultiIndex& I) {
  Filling f;
  f.shape = tab.shape();
  f.rows.assign(static_cast<std::size_t>(f.shape.rows()), {});
  for (int i = 0; i < f.shape.rows(); ++i)
    f.rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(f.shape.at(i)), 0);
  for (int k = 0; k < tab.size(); ++k) {
    auto [i, j] = tab.cell(k);
    f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = I[static_cast<std::size_t>(k)];
  }
  return f;
}

/// Index multiset of a letter-multiplicity vector: (1^{mu_1}, 2^{mu_2}, ...).
inline MultiIndex composition_index(const std::vector<int>& mu) {
  MultiIndex I;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int c = 0; c < mu[i]; ++c) I.push_back(static_cast<int>(i) + 1);
  return I;
}

/// One unnormalized Schur-Weyl vector: the idempotent image of a basis
/// tensor, the filling it projects onto, and the squared normalization.
struct SchurWeylVector {
  StandardTableau tableau;
  TensorVec<QScalar> vector;  // E_T e_I, in the plain orthonormal basis
  Filling image;              // letters of I written into the tableau cells
  bool semistandard = false;  // image is a valid two-alphabet tableau
  QScalar norm2;              // (c_lambda / alpha_{q^2}(I)) <e_I, E_T e_I>
};

/// All unnormalized vectors E_T e_I over the standard tableaux of the shape,
/// for a non-decreasing index multiset I.
inline std::vector<SchurWeylVector> schur_weyl_basis(const Partition& lam,
                                                     const MultiIndex& I,
                                                     const SuperCfg& cfg) {
  if (I.size() != static_cast<std::size_t>(lam.size()))
    throw std::invalid_argument("index length must match the partition size");
  for (std::size_t k = 0; k + 1 < I.size(); ++k)
    if (I[k] > I[k + 1])
      throw std::invalid_argument("index multiset must be non-decreasing");
  QScalar clam = schur_element(lam);
  QScalar alpha = alpha_q2(I, cfg);
  std::vector<SchurWeylVector> out;
  for (const StandardTableau& tab : standard_tableaux(lam)) {
    ScalarOp op = hecke_to_tensor(primitive_idempotent(tab), cfg);
    TensorVec<QScalar> v = qsl::apply(op, TensorVec<QScalar>{{I, QScalar(1)}});
    SchurWeylVector sw{tab, std::move(v), index_filling(tab, I), false, QScalar(0)};
    sw.semistandard = is_hook_semistandard(sw.image, cfg.m, cfg.n);
    auto it = sw.vector.find(I);
    QScalar diag = it == sw.vector.end() ? QScalar(0) : it->second;
    sw.norm2 = clam * diag / alpha;
    out.push_back(std::move(sw));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight-space supertrace evaluation of normalized immanants
// ---------------------------------------------------------------------------

struct KostantReport {
  CheckReport report;
  NCPoly lhs, rhs;
};

/// Compare the normalized immanant of the repeated-index submatrix against
/// the weight-space supertrace: with I the non-decreasing index of letter
/// multiplicities mu and P_mu the projection onto tensors of content mu,
///   Imm(X_I) / alpha_{q^2}(I)  ==
///   (-1)^{|I|} (c_lambda / alpha_{q^2}(I)) sum_T <(P_mu ox 1) Pi_r (E_T e_I), E_T e_I>,
/// the right side computed through the coaction coefficient table.
inline KostantReport kostant_supertrace_check(const Partition& lam,
                                              const std::vector<int>& mu,
                                              const SuperCfg& cfg) {
  if (static_cast<int>(mu.size()) != cfg.dim())
    throw std::invalid_argument("content vector must have m+n parts");
  int total = 0;
  for (int c : mu) {
    if (c < 0) throw std::invalid_argument("negative content");
    total += c;
  }
  if (total != lam.size())
    throw std::invalid_argument("content must sum to the partition size");
  int r = lam.size();
  MultiIndex I = composition_index(mu);

  KostantReport rep;
  rep.report.identity = "kostant supertrace";
  rep.report.params = "lambda=" + lam.to_string() + " mu=" +
                      detail::index_string(MultiIndex(mu.begin(), mu.end())) + " " +
                      detail::cfg_string(cfg);

  QScalar alpha = alpha_q2(I, cfg);
  rep.lhs = alpha.inverse() * immanant(ImmanantQuery{lam, I, I, cfg});

  AqOp xop = x_operator(cfg, r);
  NCPoly acc(cfg);
  for (const StandardTableau& tab : standard_tableaux(lam)) {
    ScalarOp op = hecke_to_tensor(primitive_idempotent(tab), cfg);
    TensorVec<QScalar> v = qsl::apply(op, TensorVec<QScalar>{{I, QScalar(1)}});
    TensorVec<NCPoly> vn;
    for (const auto& [K, c] : v) vn.emplace(K, NCPoly(c));
    TensorVec<NCPoly> w = qsl::apply(xop, vn);
    for (const auto& [K, wk] : w) {
      if (letter_multiplicities(K, cfg) != mu) continue;  // (P_mu ox 1)
      auto it = v.find(K);
      if (it == v.end()) continue;
      acc += it->second * wk;
    }
  }
  QScalar scale = schur_element(lam) / alpha;
  if (parity_sum(I, cfg)) scale = -scale;
  rep.rhs = scale * acc;

  if (!(rep.lhs == rep.rhs))
    rep.report.fail("lhs=" + rep.lhs.to_string() + " rhs=" + rep.rhs.to_string());
  return rep;
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

/// Pattern counting, the tableau bijection, and weight compatibility for all
/// shapes of size <= rmax.
inline CheckReport gt_structure_report(int m, int n, int rmax) {
  CheckReport rep;
  rep.identity = "pattern/tableau branching";
  rep.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
               " rmax=" + std::to_string(rmax);
  for (int r = 1; r <= rmax; ++r)
    for (const Partition& lam : partitions_of(r)) {
      auto pats = enumerate_patterns(lam, m, n);
      auto tabs = hook_semistandard_tableaux(lam, m, n);
      if (!lam.fits_hook(m, n) && !tabs.empty())
        rep.fail("tableaux exist off the hook at " + lam.to_string());
      if (pats.size() != tabs.size()) {
        rep.fail("count mismatch at " + lam.to_string() + ": " +
                 std::to_string(pats.size()) + " patterns vs " +
                 std::to_string(tabs.size()) + " tableaux");
        continue;
      }
      std::set<std::vector<std::vector<int>>> expected;
      for (const Filling& f : tabs) expected.insert(f.rows);
      std::set<std::vector<std::vector<int>>> got;
      for (const GTPattern& p : pats) {
        Filling f = pattern_to_tableau(p);
        if (!is_hook_semistandard(f, m, n)) {
          rep.fail("non-semistandard image at " + p.to_string());
          continue;
        }
        if (!(tableau_to_pattern(f, m, n) == p)) {
          rep.fail("bijection does not round-trip at " + p.to_string());
          continue;
        }
        got.insert(f.rows);
        std::vector<int> wf = f.weight(m + n);
        std::vector<long> wp = p.weight();
        for (int k = 0; k < m + n; ++k)
          if (static_cast<long>(wf[static_cast<std::size_t>(k)]) !=
              wp[static_cast<std::size_t>(k)])
            rep.fail("weight mismatch at " + p.to_string());
      }
      if (got != expected) rep.fail("image set mismatch at " + lam.to_string());
    }
  return rep;
}

/// Defining relations on every pattern module of size <= rmax: squares of the
/// odd generators vanish, each raising/lowering pair closes onto the balanced
/// q-integer of its Cartan pairing, mixed pairs commute, and the highest
/// pattern is annihilated by every raising generator.
inline CheckReport gt_relation_report(int m, int n, int rmax, BracketConvention conv) {
  CheckReport rep;
  rep.identity = "pattern module relations";
  rep.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
               " rmax=" + std::to_string(rmax) +
               (conv == BracketConvention::q_integer ? " bracket=q-integer"
                                                     : " bracket=integer");
  int d = m + n;
  for (int r = 1; r <= rmax; ++r)
    for (const Partition& lam : partitions_of(r)) {
      if (!lam.fits_hook(m, n)) continue;
      CovariantWeight w = covariant_weight(lam, m, n);
      auto pats = enumerate_patterns(w);
      for (const GTPattern& P : pats) {
        GTVector v{{P, QScalar(1)}};
        std::vector<long> wt = P.weight();
        for (int k = 1; k <= d - 1; ++k) {
          GTVector Ev = gt_action(GTGen::raising, k, v, conv);
          GTVector Fv = gt_action(GTGen::lowering, k, v, conv);
          if (k == m) {
            if (!gt_action(GTGen::raising, k, Ev, conv).empty())
              rep.fail("raising square at " + P.to_string());
            if (!gt_action(GTGen::lowering, k, Fv, conv).empty())
              rep.fail("lowering square at " + P.to_string());
          }
          // bracket of the pair: anticommutator at the odd node
          GTVector ef = gt_action(GTGen::raising, k, Fv, conv);
          GTVector fe = gt_action(GTGen::lowering, k, Ev, conv);
          GTVector got = (k == m) ? ef + fe : ef - fe;
          long h = (k == m) ? wt[static_cast<std::size_t>(k - 1)] + wt[static_cast<std::size_t>(k)]
                            : wt[static_cast<std::size_t>(k - 1)] - wt[static_cast<std::size_t>(k)];
          GTVector expect = scaled(v, qint(h));
          if (!(got == expect))
            rep.fail("pair bracket at " + P.to_string() + " k=" + std::to_string(k));
          // mixed pairs commute
          for (int l = 1; l <= d - 1; ++l) {
            if (l == k) continue;
            GTVector a = gt_action(GTGen::raising, k, gt_action(GTGen::lowering, l, v, conv), conv);
            GTVector b = gt_action(GTGen::lowering, l, Ev, conv);
            if (!(a == b))
              rep.fail("mixed pair at " + P.to_string() + " k=" + std::to_string(k) +
                       " l=" + std::to_string(l));
          }
        }
      }
      if (!pats.empty()) {
        GTVector top{{highest_pattern(w), QScalar(1)}};
        for (int k = 1; k <= d - 1; ++k)
          if (!gt_action(GTGen::raising, k, top, conv).empty())
            rep.fail("highest pattern not annihilated at " + lam.to_string() +
                     " k=" + std::to_string(k));
      }
    }
  return rep;
}

struct BracketAdjudication {
  CheckReport q_convention, integer_convention, summary;
  BracketConvention passing = BracketConvention::q_integer;
};

/// Run the relation battery under both readings of the linear factors and
/// record which single convention survives.
inline BracketAdjudication adjudicate_bracket_convention(int m, int n, int rmax) {
  BracketAdjudication out;
  out.q_convention = gt_relation_report(m, n, rmax, BracketConvention::q_integer);
  out.integer_convention = gt_relation_report(m, n, rmax, BracketConvention::plain_integer);
  out.summary.identity = "bracket convention adjudication";
  out.summary.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       " rmax=" + std::to_string(rmax);
  if (out.q_convention.pass && !out.integer_convention.pass) {
    out.passing = BracketConvention::q_integer;
    out.summary.params += " passing=q-integer";
  } else if (!out.q_convention.pass && out.integer_convention.pass) {
    out.passing = BracketConvention::plain_integer;
    out.summary.params += " passing=integer";
  } else {
    out.summary.fail(out.q_convention.pass ? "both conventions pass"
                                           : "no convention passes");
  }
  return out;
}

/// Lemma-level checks on the unnormalized Schur-Weyl vectors: vanishing off
/// semistandard images, weight-vector support and Cartan scaling, covariance
/// under the braid generators via the idempotent exchange identity, and unit
/// class sums of the squared normalizations.
inline CheckReport schur_weyl_report(const Partition& lam, const MultiIndex& I,
                                     const SuperCfg& cfg) {
  CheckReport rep;
  rep.identity = "Schur-Weyl basis";
  rep.params = "lambda=" + lam.to_string() + " I=" + detail::index_string(I) + " " +
               detail::cfg_string(cfg);
  int r = lam.size();
  auto basis = schur_weyl_basis(lam, I, cfg);
  std::vector<int> content = letter_multiplicities(I, cfg);
  std::map<std::vector<std::vector<int>>, QScalar> class_sum;
  for (const SchurWeylVector& sw : basis) {
    bool zero = sw.vector.empty();
    if (zero != !sw.semistandard)
      rep.fail("vanishing/semistandard mismatch at T=" + sw.tableau.to_string());
    for (const auto& [K, c] : sw.vector) {
      (void)c;
      if (letter_multiplicities(K, cfg) != content)
        rep.fail("support leaves the weight space at T=" + sw.tableau.to_string());
    }
    for (int k = 1; k <= cfg.dim(); ++k) {
      std::vector<long> wk(static_cast<std::size_t>(cfg.dim()), 0);
      wk[static_cast<std::size_t>(k - 1)] = 1;
      TensorVec<QScalar> got = qsl::apply(qh_action(cfg, r, wk), sw.vector);
      TensorVec<QScalar> expect;
      for (const auto& [K, c] : sw.vector)
        expect.emplace(K, c * QScalar::q_power(content[static_cast<std::size_t>(k - 1)]));
      if (got != expect)
        rep.fail("Cartan scaling fails at T=" + sw.tableau.to_string());
    }
    // braid covariance: T_a (E_T e_I) = (q^d/[d]) E_T e_I
    //                    + E_{s_a T} T_a (E_T e_I)
    for (int a = 0; a + 1 < r; ++a) {
      ScalarOp ta = hecke_to_tensor(HeckeElt::generator(r, a), cfg);
      TensorVec<QScalar> w = qsl::apply(ta, sw.vector);
      int dax = sw.tableau.axial(a);
      TensorVec<QScalar> rhs;
      QScalar c0 = QScalar::q_power(dax) / qint(dax);
      for (const auto& [K, c] : sw.vector) {
        QScalar t = c0 * c;
        if (!t.is_zero()) rhs.emplace(K, t);
      }
      if (auto sw2 = sw.tableau.swapped(a)) {
        ScalarOp op2 = hecke_to_tensor(primitive_idempotent(*sw2), cfg);
        for (const auto& [K, c] : qsl::apply(op2, w)) {
          auto [it, fresh] = rhs.try_emplace(K, c);
          if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      }
      if (w != rhs)
        rep.fail("braid covariance fails at T=" + sw.tableau.to_string() +
                 " a=" + std::to_string(a));
    }
    if (sw.semistandard) {
      auto [it, fresh] = class_sum.try_emplace(sw.image.rows, sw.norm2);
      if (!fresh) it->second += sw.norm2;
    } else if (!sw.norm2.is_zero()) {
      rep.fail("nonzero normalization on a vanishing vector at T=" +
               sw.tableau.to_string());
    }
  }
  for (const auto& [rows, s] : class_sum) {
    (void)rows;
    if (!s.is_one()) rep.fail("squared normalizations of a class do not sum to 1");
  }
  return rep;
}

/// Dimension bookkeeping of the idempotent images: each E_T image has the
/// pattern count of its shape as rank, and the ranks resolve the full tensor
/// power.
inline CheckReport schur_weyl_completeness_report(const SuperCfg& cfg, int r) {
  CheckReport rep;
  rep.identity = "Schur-Weyl completeness";
  rep.params = detail::cfg_string(cfg) + " r=" + std::to_string(r);
  auto idx = all_indices(cfg, r);
  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t i = 0; i < idx.size(); ++i) pos.emplace(idx[i], i);
  long total = 0;
  for (const Partition& lam : partitions_of(r)) {
    long pat = static_cast<long>(enumerate_patterns(lam, cfg.m, cfg.n).size());
    for (const StandardTableau& tab : standard_tableaux(lam)) {
      ScalarOp op = hecke_to_tensor(primitive_idempotent(tab), cfg);
      Matrix<QScalar> M(idx.size(), idx.size());
      for (const MultiIndex& K : idx) {
        TensorVec<QScalar> col = qsl::apply(op, TensorVec<QScalar>{{K, QScalar(1)}});
        for (const auto& [J, c] : col) M(pos.at(J), pos.at(K)) = c;
      }
      long rk = static_cast<long>(rank(M));
      if (rk != pat)
        rep.fail("rank " + std::to_string(rk) + " differs from pattern count " +
                 std::to_string(pat) + " at " + lam.to_string());
      total += rk;
    }
  }
  long dim = 1;
  for (int i = 0; i < r; ++i) dim *= cfg.dim();
  if (total != dim)
    rep.fail("ranks sum to " + std::to_string(total) + ", expected " +
             std::to_string(dim));
  return rep;
}

}  // namespace qsl
