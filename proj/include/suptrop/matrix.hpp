#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "suptrop/errors.hpp"
#include "suptrop/semiring.hpp"

namespace suptrop {

/// A permutation of {0, ..., n-1}; perm[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : p_(std::move(images)) {
    std::vector<bool> seen(p_.size(), false);
    for (std::size_t v : p_) {
      if (v >= p_.size() || seen[v]) throw DomainError("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
  }

  /// The transposition exchanging i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    auto p = identity(n);
    if (i >= n || j >= n) throw ShapeError("transposition index out of range");
    std::swap(p.p_[i], p.p_[j]);
    return p;
  }

  std::size_t size() const noexcept { return p_.size(); }
  std::size_t operator()(std::size_t i) const { return p_[i]; }
  std::span<const std::size_t> images() const noexcept { return p_; }

  Permutation inverse() const {
    std::vector<std::size_t> q(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) q[p_[i]] = i;
    return Permutation(std::move(q));
  }

  /// (this ∘ other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const {
    std::vector<std::size_t> q(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) q[i] = p_[other.p_[i]];
    return Permutation(std::move(q));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < p_.size(); ++i)
      if (p_[i] != i) return false;
    return true;
  }

  /// +1 for even, -1 for odd.
  int sign() const {
    std::vector<bool> seen(p_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.p_ <=> b.p_; }

 private:
  std::vector<std::size_t> p_;
};

/// Cycle notation with 1-based points, e.g. "(1 3 2)"; "id" for the identity.
inline std::string to_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

/// Dense square matrix over the supertropical semiring, row-major.
class Matrix {
 public:
  Matrix() = default;

  /// n x n matrix filled with -inf.
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw ShapeError("matrix dimension must be at least 1");
  }

  Matrix(std::initializer_list<std::initializer_list<TropElem>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw ShapeError("matrix rows must have length n");
      std::copy(row.begin(), row.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * n_));
      ++i;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = TropElem::one();
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  TropElem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const TropElem& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::span<const TropElem> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<TropElem> a_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.size() != b.size()) {
    throw ShapeError(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix product");
  const std::size_t n = a.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const TropElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix sum");
  Matrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline Matrix operator*(const TropElem& s, const Matrix& a) {
  Matrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Entrywise ghost map.
inline Matrix nu(const Matrix& a) {
  Matrix g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) g(i, j) = a(i, j).nu();
  return g;
}

/// Column vector of scalars.
using Vector = std::vector<TropElem>;

inline Vector operator*(const Matrix& a, const Vector& v) {
  if (v.size() != a.size()) throw ShapeError("matrix-vector product: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Matrix orders, all entrywise.

/// A |=gs B: A = B + G for a ghost matrix G.
inline bool ghost_surpasses(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "ghost surpassing");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!ghost_surpasses(a(i, j), b(i, j))) return false;
  return true;
}

/// A <=_nu B.
inline bool nu_leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "nu-order");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!nu_leq(a(i, j), b(i, j))) return false;
  return true;
}

inline bool nu_equiv(const Matrix& a, const Matrix& b) { return nu_leq(a, b) && nu_leq(b, a); }

// ---------------------------------------------------------------------------
// Special families.

/// P_pi with entry 1 at (i, pi(i)).
inline Matrix permutation_matrix(const Permutation& p) {
  Matrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p(i)) = TropElem::one();
  return m;
}

inline Matrix diagonal(std::span<const TropElem> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// Gaussian matrix E_{i,j}(a) = I + a e_{i,j}, i != j (0-based indices).
inline Matrix elementary(std::size_t n, std::size_t i, std::size_t j, const TropElem& a) {
  if (i == j) throw DomainError("Gaussian matrix E_{i,j} needs i != j");
  if (i >= n || j >= n) throw ShapeError("Gaussian matrix index out of range");
  Matrix m = Matrix::identity(n);
  m(i, j) = a;
  return m;
}

inline Matrix transposition_matrix(std::size_t n, std::size_t i, std::size_t j) {
  return permutation_matrix(Permutation::transposition(n, i, j));
}

/// Generalized permutation matrix: weight[i] sits at (i, perm(i)).
class GenPerm {
 public:
  GenPerm(Permutation perm, std::vector<TropElem> weights)
      : perm_(std::move(perm)), weights_(std::move(weights)) {
    if (weights_.size() != perm_.size()) throw ShapeError("generalized permutation: weight count");
    for (const auto& w : weights_)
      if (!w.is_tangible()) throw DomainError("generalized permutation weights must be tangible");
  }

  static GenPerm identity(std::size_t n) {
    return GenPerm(Permutation::identity(n), std::vector<TropElem>(n, TropElem::one()));
  }

  const Permutation& perm() const noexcept { return perm_; }
  const std::vector<TropElem>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return perm_.size(); }

  Matrix matrix() const {
    Matrix m(size());
    for (std::size_t i = 0; i < size(); ++i) m(i, perm_(i)) = weights_[i];
    return m;
  }

  GenPerm inverse() const {
    std::vector<TropElem> w(size());
    for (std::size_t i = 0; i < size(); ++i) w[perm_(i)] = suptrop::inverse(weights_[i]);
    return GenPerm(perm_.inverse(), std::move(w));
  }

  /// Permanent: the product of the weights.
  TropElem per() const {
    TropElem p = TropElem::one();
    for (const auto& w : weights_) p *= w;
    return p;
  }

  friend bool operator==(const GenPerm&, const GenPerm&) = default;

 private:
  Permutation perm_;
  std::vector<TropElem> weights_;
};

/// Recognizes a generalized permutation matrix (exactly one tangible entry
/// per row and column, -inf elsewhere).
inline std::optional<GenPerm> as_gen_perm(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> img(n);
  std::vector<TropElem> w(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      if (!a(i, j).is_tangible() || used[j]) return std::nullopt;
      img[i] = j;
      w[i] = a(i, j);
      ++count;
    }
    if (count != 1) return std::nullopt;
    used[img[i]] = true;
  }
  return GenPerm(Permutation(std::move(img)), std::move(w));
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os;
}

}  // namespace suptrop
