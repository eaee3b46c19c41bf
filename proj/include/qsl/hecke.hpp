#pragma once

// The Iwahori-Hecke algebra H_r of type A with quadratic relation
// (T_i - q)(T_i + q^{-1}) = 0: T-basis arithmetic, square-root-free
// seminormal representations, q-characters, Jucys-Murphy elements,
// primitive idempotents and induced characters.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/combinat.hpp"
#include "qsl/matrix.hpp"
#include "qsl/qscalar.hpp"

namespace qsl {

/// Element of H_r as a finite sum of basis vectors T_sigma with QScalar
/// coefficients; zero coefficients are never stored.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(int r) : r_(r) {}

  static HeckeElt zero(int r) { return HeckeElt(r); }
  static HeckeElt one(int r) { return basis(Perm::identity(r)); }
  static HeckeElt basis(const Perm& s) {
    HeckeElt h(s.n());
    h.terms_[s] = 1;
    return h;
  }
  /// T_i for the adjacent transposition of strands i and i+1 (0-based).
  static HeckeElt generator(int r, int i) { return basis(Perm::transposition(r, i)); }
  /// Basis element at the (not necessarily adjacent) transposition (j k).
  static HeckeElt transposition(int r, int j, int k) {
    Perm p = Perm::identity(r);
    std::vector<std::uint8_t> v = p.one_line();
    std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(k)]);
    return basis(Perm(std::move(v)));
  }

  int r() const { return r_; }
  const std::map<Perm, QScalar>& terms() const { return terms_; }
  QScalar coeff(const Perm& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? QScalar(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& s, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt out = a;
    for (const auto& [s, c] : b.terms_) out.add_term(s, c);
    return out;
  }
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt out = a;
    for (const auto& [s, c] : b.terms_) out.add_term(s, -c);
    return out;
  }
  friend HeckeElt operator*(const QScalar& c, const HeckeElt& a) {
    HeckeElt out(a.r_);
    for (const auto& [s, v] : a.terms_) out.add_term(s, c * v);
    return out;
  }
  HeckeElt& operator+=(const HeckeElt& o) { return *this = *this + o; }
  HeckeElt& operator-=(const HeckeElt& o) { return *this = *this - o; }

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*T" + s.to_string();
    }
    return out;
  }

 private:
  int r_ = 0;
  std::map<Perm, QScalar> terms_;
};

namespace detail {

/// Left multiplication by the generator T_i.
inline HeckeElt lmul_generator(int i, const HeckeElt& h) {
  HeckeElt out(h.r());
  QScalar qdiff = QScalar::q() - QScalar::q_power(-1);
  Perm si = Perm::transposition(h.r(), i);
  for (const auto& [tau, c] : h.terms()) {
    Perm st = si * tau;
    if (st.length() > tau.length()) {
      out.add_term(st, c);
    } else {
      out.add_term(st, c);
      out.add_term(tau, qdiff * c);
    }
  }
  return out;
}

/// T_sigma * h by peeling left descents off sigma.
inline HeckeElt lmul_basis(const Perm& sigma, const HeckeElt& h) {
  if (sigma.length() == 0) return h;
  Perm inv = sigma.inverse();
  int i = -1;
  for (int k = 0; k + 1 < sigma.n(); ++k)
    if (inv(k) > inv(k + 1)) {
      i = k;
      break;
    }
  Perm rest = Perm::transposition(sigma.n(), i) * sigma;
  return lmul_generator(i, lmul_basis(rest, h));
}

}  // namespace detail

inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.r() != b.r()) throw std::invalid_argument("rank mismatch");
  HeckeElt out(a.r());
  for (const auto& [sigma, c] : a.terms()) out += c * detail::lmul_basis(sigma, b);
  return out;
}

/// Jucys-Murphy element y_k (1-based k): y_1 = 1,
/// y_k = 1 + (q - q^{-1}) (T_{(1,k)} + ... + T_{(k-1,k)}).
inline HeckeElt jm_element(int r, int k) {
  HeckeElt out = HeckeElt::one(r);
  QScalar qdiff = QScalar::q() - QScalar::q_power(-1);
  for (int j = 1; j < k; ++j)
    out += qdiff * HeckeElt::transposition(r, j - 1, k - 1);
  return out;
}

/// Algebra embedding H_k -> H_r acting on strands [offset, offset + k).
inline HeckeElt shift_embed(const HeckeElt& h, int offset, int r) {
  HeckeElt out(r);
  for (const auto& [s, c] : h.terms()) {
    Perm p = Perm::identity(r);
    std::vector<std::uint8_t> v = p.one_line();
    for (int i = 0; i < s.n(); ++i)
      v[static_cast<std::size_t>(offset + i)] = static_cast<std::uint8_t>(offset + s(i));
    out.add_term(Perm(std::move(v)), c);
  }
  return out;
}

/// Algebra embedding H_k -> H_r on the first k strands.
inline HeckeElt embed(const HeckeElt& h, int r) { return shift_embed(h, 0, r); }

// ---------------------------------------------------------------------------
// Seminormal representations
// ---------------------------------------------------------------------------

/// Irreducible representation of H_r on the standard tableaux of a shape, in
/// a square-root-free seminormal basis: diagonal entries agree with the
/// orthogonal form, T_i v_T = (q^d/[d]_q) v_T + b v_{s_i T} with b = 1 when
/// d = d_i(T) < 0 and b = [d+1]_q [d-1]_q / [d]_q^2 when d > 0.
class SeminormalRep {
 public:
  explicit SeminormalRep(Partition shape)
      : shape_(std::move(shape)), basis_(standard_tableaux(shape_)) {
    int r = shape_.size();
    std::size_t dim = basis_.size();
    for (int i = 0; i + 1 < r; ++i) {
      Matrix<QScalar> m(dim, dim);
      for (std::size_t t = 0; t < dim; ++t) {
        int d = basis_[t].axial(i);
        m(t, t) = QScalar::q_power(d) / qint(d);
        if (auto sw = basis_[t].swapped(i)) {
          std::size_t u = index_of(*sw);
          m(u, t) = d < 0 ? QScalar(1)
                          : qint(d + 1) * qint(d - 1) / (qint(d) * qint(d));
        }
      }
      gens_.push_back(std::move(m));
    }
  }

  const Partition& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix<QScalar>& generator(int i) const {
    return gens_[static_cast<std::size_t>(i)];
  }

  /// Matrix of the basis element T_sigma (memoized).
  const Matrix<QScalar>& matrix(const Perm& sigma) {
    auto it = cache_.find(sigma);
    if (it != cache_.end()) return it->second;
    Matrix<QScalar> m;
    int j = sigma.last_descent();
    if (j < 0) {
      m = Matrix<QScalar>::identity(dim());
    } else {
      Perm rest = sigma * Perm::transposition(sigma.n(), j);
      m = matrix(rest) * gens_[static_cast<std::size_t>(j)];
    }
    return cache_.emplace(sigma, std::move(m)).first->second;
  }

  Matrix<QScalar> matrix(const HeckeElt& h) {
    Matrix<QScalar> out(dim(), dim());
    for (const auto& [s, c] : h.terms()) out = out + c * matrix(s);
    return out;
  }

 private:
  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::vector<Matrix<QScalar>> gens_;
  std::map<Perm, Matrix<QScalar>> cache_;

  std::size_t index_of(const StandardTableau& t) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == t) return i;
    throw std::logic_error("tableau not in basis");
  }
};

/// q-character: trace of T_sigma in the seminormal representation of shape.
inline QScalar character_value(const Partition& shape, const Perm& sigma) {
  SeminormalRep rep(shape);
  return rep.matrix(sigma).trace();
}

// ---------------------------------------------------------------------------
// Idempotents and characters
// ---------------------------------------------------------------------------

/// Contents of the addable corners of a shape.
inline std::vector<int> addable_contents(const Partition& mu) {
  std::vector<int> out;
  for (int i = 0; i <= mu.rows(); ++i)
    if (i == 0 || mu.at(i - 1) > mu.at(i)) out.push_back(mu.at(i) - i);
  return out;
}

/// Primitive idempotent E_T by the Jucys-Murphy recurrence
/// E_T = E_{T^-} prod_a (y_r - q^{2a}) / (q^{2c} - q^{2a}), the product over
/// the contents a of the addable corners of shape(T^-) other than the corner
/// c where r sits.
inline HeckeElt primitive_idempotent(const StandardTableau& t) {
  int r = t.size();
  if (r == 1) return HeckeElt::one(1);
  StandardTableau tm = t.restricted();
  HeckeElt e = embed(primitive_idempotent(tm), r);
  auto [ci, cj] = t.cell(r - 1);
  int calpha = cj - ci;
  HeckeElt yr = jm_element(r, r);
  for (int a : addable_contents(tm.shape())) {
    if (a == calpha) continue;
    QScalar denom = QScalar::q_power(2 * calpha) - QScalar::q_power(2 * a);
    HeckeElt factor = yr - QScalar::q_power(2 * a) * HeckeElt::one(r);
    e = e * (denom.inverse() * factor);
  }
  return e;
}

/// The standard tableau numbering the boxes of shape row by row.
inline StandardTableau row_reading_tableau(const Partition& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.at(i); ++j) cells.emplace_back(i, j);
  return StandardTableau(shape, std::move(cells));
}

/// Central character element sum_sigma T_sigma E_T T_{sigma^{-1}}, built on
/// the row-reading tableau of the shape (the result is tableau-independent).
inline HeckeElt character_element(const Partition& shape) {
  int r = shape.size();
  HeckeElt e = primitive_idempotent(row_reading_tableau(shape));
  HeckeElt out(r);
  for (const Perm& s : symmetric_group(r))
    out += HeckeElt::basis(s) * e * HeckeElt::basis(s.inverse());
  return out;
}

enum class InducedKind { sign, trivial };

/// Induced character element of the parabolic H_mu inside H_r: conjugation
/// average of the product of block idempotents, sign blocks using shapes
/// (1^{mu_i}) and trivial blocks using shapes (mu_i).
inline HeckeElt induced_character(const Partition& mu, InducedKind kind) {
  int r = mu.size();
  HeckeElt block = HeckeElt::one(r);
  int offset = 0;
  for (int i = 0; i < mu.rows(); ++i) {
    int k = mu.at(i);
    Partition piece = kind == InducedKind::trivial
                          ? Partition{k}
                          : Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
    HeckeElt e = primitive_idempotent(row_reading_tableau(piece));
    block = block * shift_embed(e, offset, r);
    offset += k;
  }
  HeckeElt out(r);
  for (const Perm& s : symmetric_group(r))
    out += HeckeElt::basis(s) * block * HeckeElt::basis(s.inverse());
  return out;
}

}  // namespace qsl
