#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace suptrop;
using namespace suptrop::test;
namespace orc = suptrop::oracle;

TEST(Oracle, BruteForcePermanent) {
  const orc::BruteForce id = orc::brute_force_per(Matrix::identity(4));
  EXPECT_EQ(id.per, t(0));
  EXPECT_EQ(id.bid.per_plus, t(0));
  EXPECT_EQ(id.bid.per_minus, Z);
  EXPECT_EQ(id.dominant, std::vector<Permutation>{Permutation::identity(4)});
  EXPECT_EQ(orc::brute_force_per(M("4 6; 6 8")).per, g(12));
  EXPECT_THROW(orc::brute_force_per(Matrix::identity(11)), DomainError);
}

TEST(Oracle, AgreesWithDeterminantModule) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    orc::Rng rng(seed);
    const std::size_t n = static_cast<std::size_t>(orc::uniform_int(rng, 1, 6));
    const Matrix a = orc::random_special(rng, n, orc::MatrixKind::General);
    const orc::BruteForce b = orc::brute_force_per(a);
    ASSERT_EQ(b.per, per(a)) << a;
    ASSERT_EQ(b.bid, bid(a)) << a;
    ASSERT_EQ(b.dominant, dominance(a).dominant) << a;
    if (n <= 5) {
      ASSERT_EQ(orc::brute_force_adj(a), adj(a)) << a;
    }
  }
}

TEST(Oracle, GeneratorsProduceRequestedClass) {
  using K = orc::MatrixKind;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 5;
    EXPECT_EQ(per(orc::random_special(seed, n, K::SL)), t(0));
    EXPECT_TRUE(is_definite(orc::random_special(seed, n, K::Definite)));
    EXPECT_TRUE(is_strictly_normal(orc::random_special(seed, n, K::StrictlyNormal)));
    EXPECT_TRUE(in_SL1(orc::random_special(seed, n, K::SL1)));
    EXPECT_TRUE(as_gen_perm(orc::random_special(seed, n, K::GenPerm)).has_value());
    const Matrix tg = orc::random_special(seed, n, K::Tangible);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_FALSE(tg(i, j).is_ghost());
  }
}

TEST(Oracle, SeedStability) {
  for (const auto kind : {orc::MatrixKind::General, orc::MatrixKind::SL, orc::MatrixKind::SL1}) {
    EXPECT_EQ(orc::random_special(std::uint64_t{99}, 4, kind), orc::random_special(std::uint64_t{99}, 4, kind));
  }
  EXPECT_NE(orc::random_special(std::uint64_t{1}, 4, orc::MatrixKind::General),
            orc::random_special(std::uint64_t{2}, 4, orc::MatrixKind::General));
  // Trial seeds are splitmix64(seed ^ splitmix64(trial)).
  EXPECT_EQ(orc::trial_seed(0, 0), orc::splitmix64(orc::splitmix64(0)));
}

TEST(Oracle, KindNames) {
  for (const auto kind : {orc::MatrixKind::General, orc::MatrixKind::Tangible, orc::MatrixKind::SL,
                          orc::MatrixKind::Definite, orc::MatrixKind::StrictlyNormal, orc::MatrixKind::SL1,
                          orc::MatrixKind::GenPerm})
    EXPECT_EQ(orc::parse_kind(orc::to_string(kind)), kind);
  EXPECT_THROW(orc::parse_kind("banana"), DomainError);
}

TEST(Oracle, RegistryIsComplete) {
  const std::set<std::string> expected = {
      "semiring_laws", "nu_hom", "surpass_order", "surpass_compat", "collapse_hom", "passghost",
      "mat_assoc_distrib", "nu_order_identity", "mat_surpass_compat", "perm_inverse",
      "per_mul_surpass", "per_genperm_mul", "bid_mul_surpass", "uniform_dominance_product", "per_transpose",
      "adj_mul_surpass", "adj_genperm_mul", "quasi_idempotent", "quasi_per_one", "quasi_nabla_swap",
      "nabla_sandwich", "nabla2_surpass", "nabla_preserves_shape", "reversible_core_quasi", "core_tilde_nabla",
      "reversible_2x2", "definite_quasi_equal",
      "sl1_closure", "strictly_normal_monoid", "perij_maximality", "bqsl2_generation", "genmon1_witness",
      "s_left_right_closure", "s_a_unit", "conj_strictly_normal_monoid", "vspace_intertwine",
      "steinberg_relations", "ed_exact", "sns_singularizes", "bridge_exact",
      "oracle_agreement", "scalar_roundtrip"};
  std::set<std::string> got;
  for (const auto& p : orc::registry()) {
    EXPECT_TRUE(got.insert(p.id).second) << "duplicate id " << p.id;
    EXPECT_FALSE(p.description.empty()) << p.id;
    EXPECT_FALSE(p.module.empty()) << p.id;
  }
  EXPECT_EQ(got, expected);
  const std::set<std::string> modules = {"semiring", "matrix",     "determinant", "nabla", "classify",
                                         "monoid",   "elementary", "oracle",      "cli"};
  for (const auto& p : orc::registry()) EXPECT_TRUE(modules.count(p.module)) << p.id << ": " << p.module;
}

TEST(Oracle, UnknownPropertyIsDomainError) {
  EXPECT_THROW(orc::find_property("no_such_property"), DomainError);
  EXPECT_THROW(orc::property_run("no_such_property", 1, 0), DomainError);
}

TEST(Oracle, ReportsAreDeterministic) {
  const orc::PropertyReport a = orc::property_run("per_mul_surpass", 200, 5);
  const orc::PropertyReport b = orc::property_run("per_mul_surpass", 200, 5);
  EXPECT_EQ(a.trials, 200u);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.status(), "pass");
}

// A property that fails on purpose must report the failing seed, and
// replaying that seed must fail the same way.
TEST(Oracle, FailureReplay) {
  const orc::Property flaky{"flaky", "oracle", "fails when the first draw is odd", [](orc::Rng& rng) {
                              return rng() % 2 == 1 ? orc::TrialOutcome{orc::TrialOutcome::Verdict::Fail, "odd"}
                                                    : orc::TrialOutcome{};
                            }};
  std::optional<std::uint64_t> failing;
  for (std::size_t k = 0; k < 64 && !failing; ++k) {
    const std::uint64_t s = orc::trial_seed(3, k);
    if (orc::property_trial(flaky, s).verdict == orc::TrialOutcome::Verdict::Fail) failing = s;
  }
  ASSERT_TRUE(failing.has_value());
  const auto again = orc::property_trial(flaky, *failing);
  EXPECT_EQ(again.verdict, orc::TrialOutcome::Verdict::Fail);
  EXPECT_EQ(again.detail, "odd");
}

TEST(Oracle, ConjectureSearchReportsCandidatesOnly) {
  const orc::ConjectureReport r = orc::conjecture_search(200, 4, 3);
  EXPECT_EQ(r.trials, 200u);
  EXPECT_EQ(r.sampled, r.confirmed + r.candidates.size());
  for (const auto& c : r.candidates) EXPECT_FALSE(orc::is_triangular(c.b));
  EXPECT_TRUE(orc::is_triangular(Matrix::identity(3)));
}

TEST(OracleProperties, Agreement) { expect_property("oracle_agreement", 10000); }
TEST(CliProperties, ScalarRoundTrip) { expect_property("scalar_roundtrip", 10000); }
