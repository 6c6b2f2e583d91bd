#pragma once

// Semigroups with a quasi-identity as unit, conjugation by a nonsingular
// matrix, and the fixed space V_A of the left quasi-identity.

#include "suptrop/classify.hpp"
#include "suptrop/nabla.hpp"

namespace suptrop {

struct SemigroupMembership {
  bool in_BQSL = false;  // every set below is a subset of BQSL_n
  bool in_S_left = false;   // I^l_A B = B
  bool in_S_right = false;  // B I^r_A = B
  bool in_S_A = false;      // core_A B = B core_A = B
};

/// per(A) only needs to be nonzero; a ghost determinant is inverted with
/// the nu-compatible extension.
inline SemigroupMembership semigroup_membership(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "semigroup membership");
  const Matrix an = nabla(a, GhostDet::Allow);
  const Matrix left = a * an;
  const Matrix right = an * a;
  const Matrix core = left * right * left;
  SemigroupMembership s;
  s.in_BQSL = group_membership(b).in_BQSL;
  if (!s.in_BQSL) return s;
  s.in_S_left = left * b == b;
  s.in_S_right = b * right == b;
  s.in_S_A = core * b == b && b * core == b;
  return s;
}

/// B^A = A^nabla B A.
inline Matrix conjugate(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "conjugation");
  return nabla(a) * b * a;
}

/// v in V_A, i.e. I^l_A v = v.
inline bool in_v_space(const Matrix& a, const Vector& v) {
  return a * nabla(a) * v == v;
}

/// v -> A^nabla v, which maps V_A into V_{A^nabla}.
inline Vector nabla_map(const Matrix& a, const Vector& v) { return nabla(a) * v; }

}  // namespace suptrop
