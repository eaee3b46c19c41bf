#pragma once

// The quantized coordinate superalgebra of (m|n) x (m|n) matrices: generators
// x_{ij} with the quadratic super relations, normal-ordered noncommutative
// polynomials, matrices over the algebra, the slot operators X_1 ... X_r, the
// twisted-trace star product, and matrix powers under it.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl/qscalar.hpp"
#include "qsl/superlinear.hpp"

namespace qsl {

/// One generator x_{ij}, stored as the 1-based index pair (row, column).
using Gen = std::pair<int, int>;
/// A word in the generators, kept normal-ordered inside NCPoly.
using Word = std::vector<Gen>;

namespace detail {

/// Which misordered adjacent pair a rewriting step reduces first.  The normal
/// form must not depend on the choice; tests compare the strategies.
enum class RewriteStrategy { leftmost, rightmost };

inline int gen_parity(const Gen& g, const SuperCfg& cfg) {
  return (cfg.parity(g.first) + cfg.parity(g.second)) & 1;
}

/// Letters sort by (row, column); a word is normal-ordered when weakly
/// increasing, with no repeated adjacent odd letter.
inline bool word_is_normal(const Word& w, const SuperCfg& cfg) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p + 1] < w[p]) return false;
    if (w[p] == w[p + 1] && gen_parity(w[p], cfg)) return false;
  }
  return true;
}

/// Rewrite coeff * word into normal order and accumulate the result.  Each
/// step eliminates one misordered adjacent pair using the defining relations;
/// every replacement word is strictly smaller in the length-lexicographic
/// order, so the worklist terminates.
inline void normalize_into(std::map<Word, QScalar>& out, const SuperCfg& cfg,
                           Word word, QScalar coeff, RewriteStrategy strategy) {
  const QScalar qdiff = QScalar::q() - QScalar::q_power(-1);
  std::vector<std::pair<Word, QScalar>> work;
  work.emplace_back(std::move(word), std::move(coeff));
  long guard = 0;
  while (!work.empty()) {
    if (++guard > 20000000L) throw std::logic_error("rewriting did not terminate");
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    // locate the pair to reduce
    long pos = -1;
    bool kill = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      std::size_t at = p;
      if (strategy == RewriteStrategy::rightmost) at = w.size() - 2 - p;
      if (w[at] == w[at + 1]) {
        if (gen_parity(w[at], cfg)) {
          kill = true;
          pos = static_cast<long>(at);
          break;
        }
        continue;
      }
      if (w[at + 1] < w[at]) {
        pos = static_cast<long>(at);
        break;
      }
    }
    if (kill) continue;  // square of an odd generator
    if (pos < 0) {
      auto [it, fresh] = out.try_emplace(w, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }

    std::size_t p = static_cast<std::size_t>(pos);
    Gen a = w[p], b = w[p + 1];  // a > b lexicographically
    int pa = gen_parity(a, cfg), pb = gen_parity(b, cfg);
    QScalar swap_coeff(1);
    if (a.first == b.first) {
      swap_coeff = cfg.qi(a.first);  // same row: x_{il} x_{ik} -> q_i ...
    } else if (a.second == b.second) {
      swap_coeff = cfg.qi(a.second);  // same column: x_{jk} x_{ik} -> q_k ...
    }
    if (pa & pb) swap_coeff = -swap_coeff;
    Word sw = w;
    std::swap(sw[p], sw[p + 1]);
    work.emplace_back(std::move(sw), c * swap_coeff);

    if (a.first != b.first && a.second != b.second && b.second < a.second) {
      // x_{jl} x_{ik} with i<j, k<l gains (q - q^{-1}) x_{il} x_{jk},
      // signed by j(i+k) + ik over parities
      int i = cfg.parity(b.first), k = cfg.parity(b.second), j = cfg.parity(a.first);
      int e = (j * (i + k) + i * k) & 1;
      Word extra = w;
      extra[p] = {b.first, a.second};
      extra[p + 1] = {a.first, b.second};
      QScalar cc = c * qdiff;
      work.emplace_back(std::move(extra), e ? -cc : cc);
    }
  }
}

}  // namespace detail

/// Normal-ordered noncommutative polynomial in the x_{ij}.  A
/// default-constructed value is the zero constant of a "null" configuration;
/// constants mix freely with any configuration, so Matrix<NCPoly> and
/// TensorOp<NCPoly> templates work unchanged.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(long v) : NCPoly(QScalar(v)) {}
  NCPoly(const QScalar& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
  }
  explicit NCPoly(SuperCfg cfg) : cfg_(cfg) {}

  static NCPoly generator(const SuperCfg& cfg, int i, int j) {
    if (i < 1 || j < 1 || i > cfg.dim() || j > cfg.dim())
      throw std::out_of_range("generator index");
    NCPoly out(cfg);
    out.terms_.emplace(Word{{i, j}}, QScalar(1));
    return out;
  }

  const SuperCfg& cfg() const { return cfg_; }
  const std::map<Word, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second.is_one();
  }
  int degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return static_cast<int>(d);
  }
  QScalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar(0) : it->second;
  }
  QScalar constant_term() const { return coeff(Word{}); }

  /// Parity of a homogeneous element (zero counts as even); throws when terms
  /// of both parities are present.
  int parity() const {
    int p = -1;
    for (const auto& [w, c] : terms_) {
      int wp = 0;
      for (const Gen& g : w) wp += detail::gen_parity(g, cfg_);
      wp &= 1;
      if (p < 0)
        p = wp;
      else if (p != wp)
        throw std::logic_error("parity of a non-homogeneous element");
    }
    return p < 0 ? 0 : p;
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly out(merged(a, b));
    out.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly out(merged(a, b));
    out.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
  }
  NCPoly operator-() const {
    NCPoly out(cfg_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    SuperCfg cfg = merged(a, b);
    NCPoly out(cfg);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        detail::normalize_into(out.terms_, cfg, std::move(w), ca * cb,
                               detail::RewriteStrategy::leftmost);
      }
    return out;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  friend NCPoly operator*(const QScalar& c, const NCPoly& a) {
    NCPoly out(a.cfg_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : a.terms_) out.terms_.emplace(w, c * v);
    return out;
  }

  NCPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    NCPoly out(1);
    for (int t = 0; t < k; ++t) out = out * *this;
    return out;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs = c.to_string();
      bool bare_one = c.is_one();
      bool needs_parens = cs.find_first_of("+-") != std::string::npos &&
                          cs.find('(') != 0;
      if (w.empty()) {
        out += cs;
        continue;
      }
      if (!bare_one) {
        out += needs_parens ? "(" + cs + ")" : cs;
        out += "*";
      }
      for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) out += "*";
        out += "x" + std::to_string(w[t].first) + std::to_string(w[t].second);
      }
    }
    return out;
  }

  std::string to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs = c.to_string();
      if (!c.is_one() || w.empty())
        out += "\\left(" + cs + "\\right)";
      for (const Gen& g : w)
        out += "x_{" + std::to_string(g.first) + std::to_string(g.second) + "}";
    }
    return out;
  }

  std::string to_json_string() const {
    std::ostringstream os;
    os << "{\"m\":" << cfg_.m << ",\"n\":" << cfg_.n << ",\"terms\":[";
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << ",";
      first = false;
      os << "{\"word\":[";
      for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) os << ",";
        os << "[" << w[t].first << "," << w[t].second << "]";
      }
      os << "],\"coeff\":\"" << c.to_string() << "\"}";
    }
    os << "]}";
    return os.str();
  }

 private:
  static SuperCfg merged(const NCPoly& a, const NCPoly& b) {
    if (a.cfg_.dim() == 0) return b.cfg_;
    if (b.cfg_.dim() == 0 || a.cfg_ == b.cfg_) return a.cfg_;
    throw std::invalid_argument("mixing distinct (m|n) configurations");
  }
  void add_term(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SuperCfg cfg_{0, 0};
  std::map<Word, QScalar> terms_;
};

/// Product in the coordinate algebra (same as operator*).
inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }

/// Parity hook used by TensorOp composition over algebra-valued coefficients.
inline int coeff_parity(const NCPoly& p, const SuperCfg&) { return p.parity(); }

// ---------------------------------------------------------------------------
// Matrices over the coordinate algebra
// ---------------------------------------------------------------------------

/// Square (m+n) x (m+n) matrix with NCPoly entries, indexed 1-based to match
/// the generator notation x_{ij}.
class AqMatrix {
 public:
  explicit AqMatrix(SuperCfg cfg)
      : cfg_(cfg), m_(static_cast<std::size_t>(cfg.dim()),
                      static_cast<std::size_t>(cfg.dim())) {}

  /// The generator matrix X = (x_{ij}).
  static AqMatrix x(const SuperCfg& cfg) {
    AqMatrix out(cfg);
    for (int i = 1; i <= cfg.dim(); ++i)
      for (int j = 1; j <= cfg.dim(); ++j)
        out.at(i, j) = NCPoly::generator(cfg, i, j);
    return out;
  }
  static AqMatrix identity(const SuperCfg& cfg) {
    AqMatrix out(cfg);
    for (int i = 1; i <= cfg.dim(); ++i) out.at(i, i) = NCPoly(1);
    return out;
  }

  const SuperCfg& cfg() const { return cfg_; }
  NCPoly& at(int i, int j) {
    return m_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }
  const NCPoly& at(int i, int j) const {
    return m_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }
  const Matrix<NCPoly>& raw() const { return m_; }

  friend AqMatrix operator+(const AqMatrix& a, const AqMatrix& b) {
    AqMatrix out(a.cfg_);
    out.m_ = a.m_ + b.m_;
    return out;
  }
  friend AqMatrix operator-(const AqMatrix& a, const AqMatrix& b) {
    AqMatrix out(a.cfg_);
    out.m_ = a.m_ - b.m_;
    return out;
  }
  /// Ordinary (row-by-column) matrix product with noncommutative entries.
  friend AqMatrix operator*(const AqMatrix& a, const AqMatrix& b) {
    AqMatrix out(a.cfg_);
    out.m_ = a.m_ * b.m_;
    return out;
  }
  AqMatrix scaled(const NCPoly& c) const {
    AqMatrix out(cfg_);
    out.m_ = c * m_;
    return out;
  }
  friend bool operator==(const AqMatrix& a, const AqMatrix& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const AqMatrix& a, const AqMatrix& b) { return !(a == b); }
  bool is_zero() const { return m_.is_zero(); }

  /// str M = sum_i (-1)^{parity(i)} M_{ii}.
  NCPoly supertrace() const {
    NCPoly out(cfg_);
    for (int i = 1; i <= cfg_.dim(); ++i)
      out += cfg_.parity(i) ? -at(i, i) : at(i, i);
    return out;
  }

 private:
  SuperCfg cfg_;
  Matrix<NCPoly> m_;
};

// ---------------------------------------------------------------------------
// Algebra-valued tensor operators
// ---------------------------------------------------------------------------

using AqOp = TensorOp<NCPoly>;

/// Promote a scalar tensor operator to algebra-valued coefficients.
inline AqOp lift(const ScalarOp& s) {
  AqOp out(s.cfg(), s.r());
  for (const auto& [k, v] : s.terms()) out.add(k.first, k.second, NCPoly(v));
  return out;
}

inline AqOp compose(const ScalarOp& s, const AqOp& a) { return compose(lift(s), a); }
inline AqOp compose(const AqOp& a, const ScalarOp& s) { return compose(a, lift(s)); }

/// The matrix M placed in one tensor slot, as an algebra-valued operator.
inline AqOp one_slot(const AqMatrix& M) { return one_slot(M.cfg(), M.raw()); }

/// X_k for the generator matrix: X placed in slot k (0-based) of r factors.
inline AqOp x_slot(const SuperCfg& cfg, int r, int k) {
  return embed_slots(one_slot(AqMatrix::x(cfg)), {k}, r);
}

/// The product X_1 X_2 ... X_r as one algebra-valued operator.  Entry (I,J)
/// carries the superalgebra product sign
/// (-1)^{sum_{a<b} (i_a + j_a)(i_b + j_b)} x_{i_1 j_1} ... x_{i_r j_r}.
inline AqOp x_operator(const SuperCfg& cfg, int r) {
  if (r < 1) throw std::invalid_argument("x_operator needs r >= 1");
  AqOp out = x_slot(cfg, r, 0);
  for (int k = 1; k < r; ++k) out = compose(out, x_slot(cfg, r, k));
  return out;
}

/// Y * Z = str_1 (P^q Y_1 Z_2): the twisted-trace product of two matrices.
inline AqMatrix star_product(const AqMatrix& Y, const AqMatrix& Z) {
  const SuperCfg& cfg = Y.cfg();
  if (!(cfg == Z.cfg())) throw std::invalid_argument("configuration mismatch");
  AqOp y1 = embed_slots(one_slot(Y), {0}, 2);
  AqOp z2 = embed_slots(one_slot(Z), {1}, 2);
  AqOp prod = compose(lift(pq_operator(cfg)), compose(y1, z2));
  AqOp traced = supertrace_slot(prod, 0);
  AqMatrix out(cfg);
  for (int i = 1; i <= cfg.dim(); ++i)
    for (int j = 1; j <= cfg.dim(); ++j) out.at(i, j) = traced.coeff({i}, {j});
  return out;
}

/// X^{[k]}: k-th power of the generator matrix under the star product,
/// X^{[0]} = identity.
inline AqMatrix x_power(const SuperCfg& cfg, int k) {
  AqMatrix out = AqMatrix::identity(cfg);
  AqMatrix X = AqMatrix::x(cfg);
  for (int t = 0; t < k; ++t) out = star_product(out, X);
  return out;
}

}  // namespace qsl
