#include "test_util.hpp"

using namespace suptrop;
using namespace suptrop::test;

namespace {
const Matrix kSingsq = M("-1 -1; 0 1");
}  // namespace

TEST(Monoid, LeftQuasiIdentityIsInLeftSemigroup) {
  const QuasiPack q = quasi_pack(kSingsq);
  const SemigroupMembership s = semigroup_membership(kSingsq, q.left);
  EXPECT_TRUE(s.in_BQSL);
  EXPECT_TRUE(s.in_S_left);
  EXPECT_TRUE(semigroup_membership(kSingsq, q.right).in_S_right);
}

TEST(Monoid, RegularMatrixLiesInBothSides) {
  const Matrix a = kSingsq * nabla(kSingsq) * kSingsq;
  ASSERT_TRUE(is_nabla_regular(a));
  const SemigroupMembership s = semigroup_membership(a, a);
  EXPECT_TRUE(s.in_S_left);
  EXPECT_TRUE(s.in_S_right);
}

TEST(Monoid, CoreTimesAIsInS_A) {
  const Matrix a = M("0 -1 _; _ 0 -2; -3 _ 0");
  const QuasiPack q = quasi_pack(a);
  ASSERT_TRUE(q.reversible);
  const Matrix b = q.core * a * nabla(a) * a;
  EXPECT_TRUE(semigroup_membership(a, b).in_S_A);
}

TEST(Monoid, OutsideBQSLShortCircuits) {
  const SemigroupMembership s = semigroup_membership(Matrix::identity(2), M("1 _; _ 0"));
  EXPECT_FALSE(s.in_BQSL);
  EXPECT_FALSE(s.in_S_left || s.in_S_right || s.in_S_A);
}

TEST(Monoid, SingularUnitRejected) {
  EXPECT_THROW(semigroup_membership(M("0 _; _ _"), Matrix::identity(2)), SingularityError);
}

TEST(Monoid, Conjugation) {
  EXPECT_EQ(conjugate(kSingsq, Matrix::identity(2)), quasi_pack(kSingsq).right);
  EXPECT_THROW(conjugate(M("4 6; 6 8"), Matrix::identity(2)), SingularityError);
}

TEST(Monoid, QuasiIdentityFailsToConjugateNicely) {
  const Matrix b = M("0 _; 1 0");
  const Matrix a = M("0 5v; _ 0");
  ASSERT_TRUE(is_quasi_identity(a));
  const Matrix bab = b * a * b;
  EXPECT_EQ(bab, M("6v 5v; 7v 6v"));
  EXPECT_FALSE(is_nonsingular(bab));
}

// x = 2, y = -2, z = w = -5, alpha = beta = -1 satisfy x > y, xy > zw,
// alpha, beta < 1 and alpha beta > y / x.
TEST(Monoid, TwoByTwoConjugateIsSingular) {
  const Matrix a = M("-1 0; 0 -1");
  const Matrix b = M("2 -5; -5 -2");
  ASSERT_TRUE(is_nonsingular(a));
  const TropElem p = per(conjugate(a, b));
  EXPECT_TRUE(p.is_ghost());
  EXPECT_EQ(p, g(2));
}

TEST(Monoid, VSpace) {
  const QuasiPack q = quasi_pack(kSingsq);
  for (std::size_t j = 0; j < 2; ++j) {
    const Vector col{q.left(0, j), q.left(1, j)};
    EXPECT_TRUE(in_v_space(kSingsq, col));
  }
  const Vector v{t(3), Z};
  EXPECT_FALSE(in_v_space(kSingsq, v));
  EXPECT_TRUE(in_v_space(kSingsq, q.left * v));
  EXPECT_TRUE(in_v_space(nabla(kSingsq), nabla_map(kSingsq, q.left * v)));
}

TEST(MonoidProperties, LeftRightClosure) { expect_property("s_left_right_closure", 5000); }
TEST(MonoidProperties, CoreIsUnit) { expect_property("s_a_unit", 5000); }
TEST(MonoidProperties, ConjugatedStrictlyNormalMonoid) { expect_property("conj_strictly_normal_monoid", 5000); }
TEST(MonoidProperties, VSpaceIntertwining) { expect_property("vspace_intertwine", 5000); }
