#pragma once

// Adjoint, the quasi-inverse A^nabla = per(A)^{-1} adj(A), quasi-identities
// and the related regularity notions.

#include <optional>

#include "suptrop/determinant.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop {

/// The matrix with row i and column j removed (0-based).
inline Matrix minor_matrix(const Matrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.size();
  Matrix m(n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

/// Adjoint: entry (i, j) is the permanent of the minor with row j and
/// column i removed. adj of a 1x1 matrix is [[1]].
inline Matrix adj(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return Matrix::identity(1);
  Matrix out(n);
  const bool enumerate = n - 1 <= kEnumerationBound;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix m = minor_matrix(a, j, i);
      out(i, j) = enumerate ? per(m) : per_assignment(m);
    }
  return out;
}

/// What nabla() does with a ghost determinant.
enum class GhostDet {
  Reject,  // raise SingularityError (the default)
  Allow,   // invert the ghost; every entry of the result is then a ghost
};

inline TropElem checked_det(const Matrix& a, GhostDet policy = GhostDet::Reject) {
  const TropElem d = a.size() <= kEnumerationBound ? per(a) : per_assignment(a);
  if (d.is_zero()) throw SingularityError("per(A) = -inf");
  if (d.is_ghost() && policy == GhostDet::Reject)
    throw SingularityError("per(A) = " + to_string(d) + " is a ghost");
  return d;
}

/// A^nabla = per(A)^{-1} adj(A).
inline Matrix nabla(const Matrix& a, GhostDet policy = GhostDet::Reject) {
  return inverse(checked_det(a, policy)) * adj(a);
}

/// (A^nabla)^nabla.
inline Matrix nabla2(const Matrix& a) { return nabla(nabla(a)); }

inline bool is_idempotent(const Matrix& e) { return e * e == e; }

/// Nonsingular idempotent.
inline bool is_quasi_identity(const Matrix& e) { return is_nonsingular(e) && is_idempotent(e); }

struct QuasiPack {
  Matrix left;        // A A^nabla
  Matrix right;       // A^nabla A
  Matrix core;        // left * right * left
  Matrix core_tilde;  // right * left * right
  bool reversible = false;
};

inline QuasiPack quasi_pack(const Matrix& a) {
  const Matrix an = nabla(a);
  QuasiPack q;
  q.left = a * an;
  q.right = an * a;
  q.core = q.left * q.right * q.left;
  q.core_tilde = q.right * q.left * q.right;
  q.reversible = q.core == q.core_tilde;
  return q;
}

/// A = A A^nabla A.
inline bool is_nabla_regular(const Matrix& a) { return a * nabla(a) * a == a; }

// ---------------------------------------------------------------------------
// 2x2 paired quasi-identities.

namespace detail {

struct OffDiag2 {
  TropElem u;  // (1,2) entry
  TropElem v;  // (2,1) entry
};

inline OffDiag2 check_2x2_quasi_identity(const Matrix& q, const char* name) {
  if (q.size() != 2) throw ShapeError(std::string(name) + " must be 2x2");
  if (!is_quasi_identity(q) || !(q(0, 0) == TropElem::one()) || !(q(1, 1) == TropElem::one()))
    throw DomainError(std::string(name) + " is not a quasi-identity");
  for (const auto& x : {q(0, 1), q(1, 0)})
    if (x.is_tangible()) throw DomainError(std::string(name) + " has a tangible off-diagonal entry");
  return {q(0, 1), q(1, 0)};
}

}  // namespace detail

/// 2x2 quasi-identities [[1, u^nu], [v^nu, 1]] and [[1, u'^nu], [v'^nu, 1]]
/// are paired when u v and u' v' are nu-equivalent.
inline bool is_paired(const Matrix& i1, const Matrix& i2) {
  const auto a = detail::check_2x2_quasi_identity(i1, "first quasi-identity");
  const auto b = detail::check_2x2_quasi_identity(i2, "second quasi-identity");
  return nu_equiv(a.u * a.v, b.u * b.v);
}

/// For paired 2x2 quasi-identities, a matrix A with per(A) = 1, A A^nabla = I
/// and A^nabla A = I'. Returns nothing when the pair is not paired, or when the
/// zero pattern cannot be realized by any determinant-one matrix (e.g. I = I_2
/// paired with an I' that has one nonzero off-diagonal entry).
inline std::optional<Matrix> paired_2x2(const Matrix& i1, const Matrix& i2) {
  if (!is_paired(i1, i2)) return std::nullopt;
  const auto [u, v] = detail::check_2x2_quasi_identity(i1, "first quasi-identity");
  const auto [u2, v2] = detail::check_2x2_quasi_identity(i2, "second quasi-identity");
  auto tangible = [](const TropElem& x) {
    return x.is_zero() ? x : TropElem::tangible(x.value());
  };
  const TropElem tu = tangible(u), tv = tangible(v), tu2 = tangible(u2), tv2 = tangible(v2);
  const TropElem zero = TropElem::zero();

  std::vector<Matrix> candidates;
  // Diagonal-dominant form [[a, b], [c, a^{-1}]]: ab = u, a^{-1}b = u',
  // a^{-1}c = v, ac = v'.
  if (tu.is_zero() == tu2.is_zero() && tv.is_zero() == tv2.is_zero()) {
    TropElem a = TropElem::one();
    if (tu.is_nonzero()) a = sqrt(tu * inverse(tu2));
    else if (tv.is_nonzero()) a = sqrt(tv2 * inverse(tv));
    const TropElem b = sqrt(tu * tu2);
    const TropElem c = sqrt(tv * tv2);
    candidates.push_back(Matrix{{a, b}, {c, inverse(a)}});
  }
  // Anti-diagonal-dominant form [[a, b], [b^{-1}, d]] with ad < 1: ab = u,
  // b^{-1}d = v, bd = u', a b^{-1} = v'.
  {
    std::optional<TropElem> b;
    if (tu.is_nonzero() && tv2.is_nonzero()) b = sqrt(tu * inverse(tv2));
    else if (tu2.is_nonzero() && tv.is_nonzero()) b = sqrt(tu2 * inverse(tv));
    if (b) {
      const TropElem a = tu.is_nonzero() ? tu * inverse(*b) : zero;
      const TropElem d = tu2.is_nonzero() ? tu2 * inverse(*b) : zero;
      candidates.push_back(Matrix{{a, *b}, {inverse(*b), d}});
    }
  }
  for (const Matrix& m : candidates) {
    if (!(per(m) == TropElem::one())) continue;
    const Matrix mn = nabla(m);
    if (m * mn == i1 && mn * m == i2) return m;
  }
  return std::nullopt;
}

}  // namespace suptrop
