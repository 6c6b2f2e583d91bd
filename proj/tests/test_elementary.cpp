#include "test_util.hpp"

using namespace suptrop;
using namespace suptrop::test;

namespace {

// Indices below are 0-based: Gaussian{0, 1, a} is E_{1,2}(a).
ElemWord gaussians(std::initializer_list<Gaussian> gs) { return ElemWord(gs.begin(), gs.end()); }

}  // namespace

TEST(Elementary, WordProduct) {
  EXPECT_EQ(word_product({}, 3), Matrix::identity(3));
  // [[1 + a1 a2, a1], [a2, 1]]
  EXPECT_EQ(word_product(gaussians({{0, 1, t(2)}, {1, 0, t(-5)}}), 2), M("0 2; -5 0"));
  EXPECT_EQ(word_product(gaussians({{0, 1, t(2)}, {1, 0, t(-2)}}), 2), M("0v 2; -2 0"));
  EXPECT_EQ(word_product(gaussians({{0, 1, t(1)}, {1, 0, t(1)}}), 2), M("2 1; 1 0"));
  EXPECT_EQ(word_product({Transposition{0, 2}, DiagMult{1, t(4)}}, 3), M("_ _ 0; _ 4 _; 0 _ _"));
  EXPECT_THROW(word_product(gaussians({{0, 3, t(1)}}), 3), ShapeError);
}

TEST(Elementary, TransposedWord) {
  const ElemWord w{Gaussian{0, 1, t(2)}, Gaussian{2, 0, t(-1)}, DiagMult{1, t(3)}};
  EXPECT_EQ(word_product(transpose(w), 3), transpose(word_product(w, 3)));
}

TEST(Elementary, SteinbergSwapsCommutingPair) {
  const auto r = steinberg_rewrite(gaussians({{0, 1, t(-1)}, {1, 0, t(-2)}}), 2);
  ASSERT_TRUE(r.form.has_value()) << r.failure;
  EXPECT_EQ(r.form->lower, gaussians({{1, 0, t(-2)}}));
  EXPECT_EQ(r.form->upper, gaussians({{0, 1, t(-1)}}));
  EXPECT_EQ(r.steps, 1u);
}

TEST(Elementary, SteinbergLeavesSortedWord) {
  const ElemWord w = gaussians({{1, 0, t(-3)}, {2, 1, t(-4)}, {0, 2, t(-1)}});
  const auto r = steinberg_rewrite(w, 3);
  ASSERT_TRUE(r.form.has_value());
  EXPECT_EQ(r.form->lower, gaussians({{1, 0, t(-3)}, {2, 1, t(-4)}}));
  EXPECT_EQ(r.form->upper, gaussians({{0, 2, t(-1)}}));
  EXPECT_EQ(r.steps, 0u);
}

TEST(Elementary, SteinbergTripleRelation) {
  const ElemWord w = gaussians({{0, 2, t(-1)}, {2, 1, t(-2)}});
  const auto r = steinberg_rewrite(w, 3);
  ASSERT_TRUE(r.form.has_value()) << r.failure;
  EXPECT_EQ(r.form->lower, gaussians({{2, 1, t(-2)}}));
  EXPECT_EQ(r.form->upper, gaussians({{0, 2, t(-1)}, {0, 1, t(-3)}}));
  EXPECT_EQ(word_product(r.form->lower, 3) * word_product(r.form->upper, 3), word_product(w, 3));
}

TEST(Elementary, SteinbergReportsMissingRules) {
  // E_{1,2}(a) E_{3,1}(b) has no relation moving the lower factor left.
  const auto stuck = steinberg_rewrite(gaussians({{0, 1, t(-1)}, {2, 0, t(-2)}}), 3);
  EXPECT_FALSE(stuck.form.has_value());
  EXPECT_FALSE(stuck.failure.empty());
  EXPECT_FALSE(steinberg_normal_form(gaussians({{0, 1, t(-1)}, {2, 0, t(-2)}}), 3).has_value());
  // A pair E_{i,j}(a) E_{j,i}(b) with ab >= 1 has a ghost permanent, so it
  // never reaches the rewriter.
  EXPECT_THROW(steinberg_rewrite(gaussians({{0, 1, t(1)}, {1, 0, t(1)}}), 2), DomainError);
}

TEST(Elementary, SteinbergRejectsNonGaussians) {
  EXPECT_THROW(steinberg_rewrite({Transposition{0, 1}}, 2), DomainError);
  EXPECT_THROW(steinberg_rewrite(gaussians({{0, 4, t(1)}}), 3), ShapeError);
}

TEST(Elementary, SnsWitness) {
  const Matrix a = elementary(2, 0, 1, t(-1));
  const SnsWitness w = sns_witness(a);
  EXPECT_EQ(w.gen, (Gaussian{1, 0, t(1)}));
  const Matrix ea = elementary(2, 1, 0, t(1)) * a;
  EXPECT_EQ(ea, M("0 -1; 1 0v"));
  EXPECT_EQ(per(ea), g(0));

  const SnsWitness single = sns_witness(elementary(3, 0, 2, t(-2)));
  EXPECT_EQ(single.definite_gen, (Gaussian{2, 0, t(2)}));
}

TEST(Elementary, SnsWitnessThroughPermutation) {
  const GenPerm p(Permutation({1, 2, 0}), {t(0), t(0), t(0)});
  const Matrix a = p.matrix() * M("0 -1 _; _ 0 -4; -3 _ 0");
  const SnsWitness w = sns_witness(a);
  const Matrix ea = elementary(3, w.gen.i, w.gen.j, w.gen.a) * a;
  EXPECT_EQ(per(ea), g(0));
}

TEST(Elementary, SnsWitnessErrors) {
  EXPECT_THROW(sns_witness(permutation_matrix(Permutation({1, 0}))), WitnessError);
  EXPECT_THROW(sns_witness(M("1 _; _ 0")), DomainError);
}

TEST(Elementary, EdFactorOfQuasiIdentity) {
  const Matrix q = quasi_pack(M("-1 -1; 0 1")).left;
  const EdFactorization e = ed_factor(q);
  EXPECT_TRUE(e.word.empty());
  EXPECT_EQ(e.target, q);
}

TEST(Elementary, EdFactorThreeByThree) {
  const Matrix a = M("_ 5 0; 0 _ _; _ 0 _");
  const EdFactorization e = ed_factor(a);
  const Matrix& a1 = e.factored.definite;
  EXPECT_EQ(word_product(e.definite_word, 3) * a1, nabla2(a1));
  EXPECT_EQ(word_product(e.word, 3) * a, nabla2(a));
  EXPECT_EQ(e.target, nabla2(a));
  EXPECT_THROW(ed_factor(M("4 6; 6 8")), SingularityError);
}

TEST(Elementary, EdFactorRight) {
  const Matrix a = M("0 3 -1; -4 0 2; 1 -6 0");
  ASSERT_TRUE(is_nonsingular(a));
  const EdFactorization e = ed_factor_right(a);
  EXPECT_EQ(a * word_product(e.word, 3), nabla2(a));
}

TEST(Elementary, EdFactorRandomSL3) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Matrix a = oracle::random_special(seed, 3, oracle::MatrixKind::SL);
    const EdFactorization e = ed_factor(a);
    ASSERT_EQ(word_product(e.definite_word, 3) * e.factored.definite, nabla2(e.factored.definite)) << a;
  }
}

TEST(Elementary, LuAttempt) {
  const auto id = lu_attempt(Matrix::identity(3));
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->first, Matrix::identity(3));
  EXPECT_EQ(id->second, Matrix::identity(3));

  const Matrix l = elementary(2, 1, 0, t(-1)), u = elementary(2, 0, 1, t(-2));
  const auto lu = lu_attempt(l * u);
  ASSERT_TRUE(lu.has_value());
  EXPECT_EQ(lu->first, l);
  EXPECT_EQ(lu->second, u);

  EXPECT_FALSE(lu_attempt(M("0 0 _ _; _ 0 0 _; _ _ 0 0; 0 _ _ 0")).has_value());
  EXPECT_FALSE(lu_attempt(M("_ 0; 0 _")).has_value());
}

TEST(Elementary, ElementaryDecomposition) {
  const GenPerm p(Permutation({2, 0, 1}), {t(1), t(-3), t(2)});
  // No cross term between the factors, so the triangles of M are L and U.
  const Matrix m = p.matrix() * elementary(3, 2, 1, t(-1)) * elementary(3, 0, 2, t(-2));
  const auto w = elementary_decomposition(m);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(word_product(*w, 3), m);
  EXPECT_EQ(word_product(gen_perm_word(p), 3), p.matrix());
}

TEST(Elementary, BridgeSymmetricAndIdentity) {
  const Matrix a = M("0 3 -1; -4 0 2; 1 -6 0");
  const Bridge same = bridge(a, a);
  EXPECT_EQ(word_product(same.e1, 3) * a * same.e2, same.e3 * a * word_product(same.e4, 3));

  const Bridge id = bridge(Matrix::identity(3), a);
  EXPECT_TRUE(id.e1.empty());
  EXPECT_EQ(id.e3, Matrix::identity(3));
  EXPECT_EQ(id.e2, a * word_product(id.e4, 3));
  EXPECT_EQ(id.e2, nabla2(a));

  EXPECT_THROW(bridge(a, M("4 6 0; 6 8 0; 0 0 0")), SingularityError);
}

TEST(ElementaryProperties, SteinbergRelations) { expect_property("steinberg_relations", 3000); }
TEST(ElementaryProperties, EdExact) { expect_property("ed_exact", 3000); }
TEST(ElementaryProperties, SnsSingularizes) { expect_property("sns_singularizes", 3000); }
TEST(ElementaryProperties, BridgeExact) { expect_property("bridge_exact", 3000); }
