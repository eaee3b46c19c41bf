#pragma once

// Combinatorial backbone: integer partitions, standard and semistandard
// tableaux (including the two-alphabet "hook" variant), permutations,
// symmetric-group characters via border strips, Kostka numbers and their
// inverse, and the q-deformed Schur element attached to a partition.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl/qscalar.hpp"

namespace qsl {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  /// Part i (0-based), 0 beyond the last row.
  int at(int i) const {
    return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const {
    std::vector<int> t;
    for (int j = 0; j < at(0); ++j) {
      int c = 0;
      while (c < rows() && parts_[static_cast<std::size_t>(c)] > j) ++c;
      t.push_back(c);
    }
    return Partition(std::move(t));
  }

  bool contains_cell(int i, int j) const { return i >= 0 && j >= 0 && j < at(i); }
  /// Content j - i of a cell (0-based row i, column j).
  static int content(int i, int j) { return j - i; }
  int hook(int i, int j) const {
    int arm = at(i) - j - 1, leg = transpose().at(j) - i - 1;
    return arm + leg + 1;
  }

  /// True when the diagram avoids the cell (m, n), i.e. row m+1 has at most
  /// n boxes (0-based: at(m) <= n).
  bool fits_hook(int m, int n) const { return at(m) <= n; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
  void normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("not a partition");
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("negative part");
  }
};

/// All partitions of r in lexicographically decreasing order, (r) first.
inline std::vector<Partition> partitions_of(int r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

// ---------------------------------------------------------------------------
// Standard Young tableaux
// ---------------------------------------------------------------------------

/// Standard tableau of shape lambda with entries 1..r, stored as the cell
/// (row, col) holding each entry (all 0-based; entry k lives at cell(k-1)).
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::pair<int, int>> cells)
      : shape_(std::move(shape)), cells_(std::move(cells)) {}

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(cells_.size()); }
  std::pair<int, int> cell(int k) const { return cells_[static_cast<std::size_t>(k)]; }
  /// Content of the cell holding entry k+1 (0-based k).
  int content(int k) const {
    auto [i, j] = cell(k);
    return j - i;
  }
  /// Axial distance content(k+1) - content(k) between entries k+1 and k+2.
  int axial(int k) const { return content(k + 1) - content(k); }

  /// Swap entries k+1 and k+2 if the result is still standard.
  std::optional<StandardTableau> swapped(int k) const {
    auto [i1, j1] = cell(k);
    auto [i2, j2] = cell(k + 1);
    if (i1 == i2 || j1 == j2) return std::nullopt;
    auto c = cells_;
    std::swap(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k + 1)]);
    return StandardTableau(shape_, std::move(c));
  }

  /// Restriction to entries 1..r-1 (drop the largest entry).
  StandardTableau restricted() const {
    auto c = cells_;
    auto [i, j] = c.back();
    c.pop_back();
    std::vector<int> p = shape_.parts();
    p[static_cast<std::size_t>(i)] -= 1;
    (void)j;
    return StandardTableau(Partition(std::move(p)), std::move(c));
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.cells_ == b.cells_;
  }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
    return a.cells_ < b.cells_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int k = 0; k < size(); ++k) {
      if (k) s += " ";
      s += std::to_string(cells_[static_cast<std::size_t>(k)].first) + "," +
           std::to_string(cells_[static_cast<std::size_t>(k)].second);
    }
    return s + "]";
  }

 private:
  Partition shape_;
  std::vector<std::pair<int, int>> cells_;
};

/// All standard tableaux of the given shape, ordered by their cell chains.
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<int> rowlen(static_cast<std::size_t>(shape.rows()), 0);
  std::vector<std::pair<int, int>> cells;
  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == shape.size()) {
      out.emplace_back(shape, cells);
      return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
      int j = rowlen[static_cast<std::size_t>(i)];
      if (j >= shape.at(i)) continue;
      if (i > 0 && rowlen[static_cast<std::size_t>(i - 1)] <= j) continue;
      rowlen[static_cast<std::size_t>(i)] += 1;
      cells.emplace_back(i, j);
      self(self, placed + 1);
      cells.pop_back();
      rowlen[static_cast<std::size_t>(i)] -= 1;
    }
  };
  rec(rec, 0);
  return out;
}

inline long num_standard_tableaux(const Partition& shape) {
  return static_cast<long>(standard_tableaux(shape).size());
}

// ---------------------------------------------------------------------------
// Semistandard tableaux, ordinary and two-alphabet
// ---------------------------------------------------------------------------

/// Filling of a Young diagram, row-major storage of letters (1-based values).
struct Filling {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Multiplicity of each letter 1..nletters.
  std::vector<int> weight(int nletters) const {
    std::vector<int> w(static_cast<std::size_t>(nletters), 0);
    for (const auto& row : rows)
      for (int v : row) w[static_cast<std::size_t>(v - 1)] += 1;
    return w;
  }
};

/// Semistandard tableaux over the two-block alphabet 1..m, m+1..m+n: rows and
/// columns weakly increase, letters at most m repeat only along rows, letters
/// greater than m repeat only along columns.
inline std::vector<Filling> hook_semistandard_tableaux(const Partition& shape, int m,
                                                       int n) {
  std::vector<Filling> out;
  int nl = m + n;
  Filling f;
  f.shape = shape;
  f.rows.assign(static_cast<std::size_t>(shape.rows()), {});
  for (int i = 0; i < shape.rows(); ++i)
    f.rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.at(i)), 0);
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == shape.rows()) {
      out.push_back(f);
      return;
    }
    int ni = i, nj = j + 1;
    if (nj >= shape.at(i)) {
      ni = i + 1;
      nj = 0;
    }
    for (int v = 1; v <= nl; ++v) {
      if (j > 0) {
        int left = f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
        if (v < left) continue;
        if (v == left && v > m) continue;  // big letters strict along rows
      }
      if (i > 0 && shape.at(i - 1) > j) {
        int up = f.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        if (v < up) continue;
        if (v == up && v <= m) continue;  // small letters strict down columns
      }
      f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      self(self, ni, nj);
    }
    f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
  };
  if (shape.empty())
    out.push_back(f);
  else
    rec(rec, 0, 0);
  return out;
}

/// Ordinary semistandard tableaux on letters 1..nletters (single block).
inline std::vector<Filling> semistandard_tableaux(const Partition& shape, int nletters) {
  return hook_semistandard_tableaux(shape, nletters, 0);
}

/// Kostka number: semistandard tableaux of the given shape and weight.
inline long kostka(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) return 0;
  long c = 0;
  int nl = weight.rows();
  for (const auto& f : semistandard_tableaux(shape, nl)) {
    auto w = f.weight(nl);
    bool ok = true;
    for (int i = 0; i < nl; ++i)
      if (w[static_cast<std::size_t>(i)] != weight.at(i)) ok = false;
    if (ok) ++c;
  }
  return c;
}

/// Inverse of the Kostka matrix on partitions of r (entries are integers).
/// Returned as a map (lambda, mu) -> K^{-1}_{lambda mu} with
/// sum_mu K^{-1}_{lambda mu} K_{mu nu} = [lambda == nu].
inline std::map<std::pair<Partition, Partition>, Int> inverse_kostka(int r) {
  auto ps = partitions_of(r);
  std::size_t n = ps.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(kostka(ps[i], ps[j]));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Kostka matrix");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::map<std::pair<Partition, Partition>, Int> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = a[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("inverse Kostka entry not integral");
      if (v != 0) out[{ps[i], ps[j]}] = boost::multiprecision::numerator(v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// Permutation of {0, .., n-1} in one-line notation; (p*q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}

  static Perm identity(int n) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return Perm(std::move(v));
  }
  /// Adjacent transposition of i and i+1 (0-based).
  static Perm transposition(int n, int i) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(i + 1)]);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& one_line() const { return img_; }

  friend Perm operator*(const Perm& p, const Perm& q) {
    std::vector<std::uint8_t> v(q.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.img_[q.img_[i]];
    return Perm(std::move(v));
  }
  Perm inverse() const {
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint8_t>(i);
    return Perm(std::move(v));
  }

  int length() const {
    int l = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
      for (std::size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++l;
    return l;
  }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  /// Rightmost position j with p(j) > p(j+1), or -1 for the identity.
  int last_descent() const {
    for (int j = n() - 2; j >= 0; --j)
      if (img_[static_cast<std::size_t>(j)] > img_[static_cast<std::size_t>(j + 1)]) return j;
    return -1;
  }

  Partition cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = img_[j];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) {
      if (i) s += " ";
      s += std::to_string(img_[static_cast<std::size_t>(i)] + 1);
    }
    return s + "]";
  }

 private:
  std::vector<std::uint8_t> img_;
};

/// All permutations of {0..n-1} in lexicographic one-line order.
inline std::vector<Perm> symmetric_group(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric-group characters
// ---------------------------------------------------------------------------

namespace detail {

/// Remove the border strip corresponding to the hook of cell (i, j); returns
/// the smaller shape and the strip height (rows spanned minus one).
inline std::pair<Partition, int> remove_border_strip(const Partition& lam, int i, int j) {
  Partition t = lam.transpose();
  int bottom = t.at(j) - 1;  // last row of the strip
  std::vector<int> p = lam.parts();
  for (int k = i; k < bottom; ++k)
    p[static_cast<std::size_t>(k)] = lam.at(k + 1) - 1;
  p[static_cast<std::size_t>(bottom)] = j;
  return {Partition(std::move(p)), bottom - i};
}

inline long mn_character(const Partition& lam, std::vector<int> mu) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  int L = mu.back();
  mu.pop_back();
  long total = 0;
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.at(i); ++j)
      if (lam.hook(i, j) == L) {
        auto [rest, height] = remove_border_strip(lam, i, j);
        long sub = mn_character(rest, mu);
        total += (height % 2 == 0 ? 1 : -1) * sub;
      }
  return total;
}

}  // namespace detail

/// Irreducible character of the symmetric group: value of chi^lambda on the
/// conjugacy class of cycle type mu, by the border-strip recursion.
inline long character(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size()) throw std::invalid_argument("size mismatch");
  return detail::mn_character(lam, mu.parts());
}

/// Size of the conjugacy class of cycle type mu inside S_|mu|.
inline Int conjugacy_class_size(const Partition& mu) {
  Int fact = 1;
  for (int i = 2; i <= mu.size(); ++i) fact *= i;
  Int z = 1;
  int run = 1;
  for (int i = 0; i < mu.rows(); ++i) {
    z *= mu.at(i);
    if (i + 1 < mu.rows() && mu.at(i + 1) == mu.at(i))
      ++run;
    else {
      for (int k = 2; k <= run; ++k) z *= k;
      run = 1;
    }
  }
  return fact / z;
}

// ---------------------------------------------------------------------------
// q-deformed Schur element
// ---------------------------------------------------------------------------

/// Product over the cells of lambda of q^{content} [hook]_q.  For lambda = (2)
/// this equals q^2 + 1, and for (1,1) it equals 1 + q^{-2}.
inline QScalar schur_element(const Partition& lam) {
  QScalar out = 1;
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.at(i); ++j)
      out *= QScalar::q_power(Partition::content(i, j)) * qint(lam.hook(i, j));
  return out;
}

}  // namespace qsl
