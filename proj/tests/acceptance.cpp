// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "suptrop/suptrop.hpp"

using namespace suptrop;
namespace orc = suptrop::oracle;

namespace {

TropElem t(std::int64_t v) { return TropElem::tangible(v); }
TropElem g(std::int64_t v) { return TropElem::ghost(v); }
const TropElem Z = TropElem::zero();

struct Check {
  std::string failure;
  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

// Runs `count` trials of `trial` with per-trial seeds derived from `seed`.
// A trial returns an empty string on success, a description otherwise.
std::string seeded_loop(std::size_t count, std::uint64_t seed,
                        const std::function<std::string(orc::Rng&)>& trial) {
  for (std::size_t k = 0; k < count; ++k) {
    orc::Rng rng(orc::trial_seed(seed, k));
    std::string err;
    try {
      err = trial(rng);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (!err.empty()) return "trial " + std::to_string(k) + ": " + err;
  }
  return {};
}

std::string dump(const Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string c1() {
  Check c;
  const Matrix a{{t(1), t(0)}, {t(2), t(4)}};
  c.require(per(a * transpose(a)) == t(10), "per(A A^t) != 10");
  const Matrix ata = transpose(a) * a;
  c.require(per(ata) == g(12), "per(A^t A) != 12v");
  c.require(classify_singularity(ata) == Singularity::SymmetricallySingular, "A^t A not symmetrically singular");
  return c.failure;
}

std::string c2() {
  Check c;
  const Matrix a{{t(-1), t(-1)}, {t(0), t(1)}};
  const QuasiPack q = quasi_pack(a);
  c.require(nabla(a) == Matrix{{t(1), t(-1)}, {t(0), t(-1)}}, "A^nabla");
  c.require(q.left == Matrix{{t(0), g(-2)}, {g(1), t(0)}}, "I^l");
  c.require(q.right == Matrix{{t(0), g(0)}, {g(-1), t(0)}}, "I^r");
  const Matrix lr = q.left * q.right, rl = q.right * q.left;
  c.require(lr == Matrix{{t(0), g(0)}, {g(1), g(1)}}, "I^l I^r");
  c.require(rl == Matrix{{g(1), g(0)}, {g(1), t(0)}}, "I^r I^l");
  c.require(!(lr == rl), "I^l I^r == I^r I^l");
  return c.failure;
}

std::string c3() {
  Check c;
  const Matrix a{{Z, t(5), t(0)}, {t(0), Z, Z}, {Z, t(0), Z}};
  const QuasiPack q = quasi_pack(a);
  c.require(nabla(a) == Matrix{{Z, t(0), Z}, {Z, Z, t(0)}, {t(0), Z, t(5)}}, "A^nabla");
  c.require(q.left == Matrix{{t(0), Z, g(5)}, {Z, t(0), Z}, {Z, Z, t(0)}}, "I^l");
  c.require(q.right == Matrix{{t(0), Z, Z}, {Z, t(0), Z}, {Z, g(5), t(0)}}, "I^r");
  const Matrix lr = q.left * q.right, rl = q.right * q.left;
  c.require(lr == Matrix{{t(0), g(10), g(5)}, {Z, t(0), Z}, {Z, g(5), t(0)}}, "I^l I^r");
  c.require(rl == Matrix{{t(0), Z, g(5)}, {Z, t(0), Z}, {Z, g(5), t(0)}}, "I^r I^l");
  c.require(is_idempotent(lr), "I^l I^r not idempotent");
  c.require(is_nonsingular(lr), "I^l I^r singular");
  c.require(is_quasi_identity(lr), "I^l I^r not a quasi-identity");
  c.require(!(lr == rl), "I^l I^r == I^r I^l");
  return c.failure;
}

std::string c4() {
  Check c;
  const Matrix i1{{t(0), Z, Z}, {Z, t(0), g(1)}, {Z, Z, t(0)}};
  const Matrix i2{{t(0), g(1), Z}, {Z, t(0), Z}, {Z, Z, t(0)}};
  c.require(is_quasi_identity(i1) && is_quasi_identity(i2), "factors are not quasi-identities");
  const Matrix p = i1 * i2;
  c.require(p == Matrix{{t(0), g(1), Z}, {Z, t(0), g(1)}, {Z, Z, t(0)}}, "product");
  c.require(is_nonsingular(p), "product singular");
  c.require(!is_idempotent(p), "product idempotent");
  return c.failure;
}

std::string c5() {
  Check c;
  const Matrix b{{t(0), Z}, {t(1), t(0)}};
  const Matrix a{{t(0), g(5)}, {Z, t(0)}};
  c.require(is_quasi_identity(a), "A not a quasi-identity");
  const Matrix bab = b * a * b;
  c.require(bab == Matrix{{g(6), g(5)}, {g(7), g(6)}}, "B A B");
  c.require(!is_nonsingular(bab), "B A B nonsingular");
  return c.failure;
}

std::string c6() {
  Check c;
  const Matrix a{{t(0), t(0), Z}, {Z, t(0), t(0)}, {t(0), Z, t(0)}};
  const BidResult b = bid(a);
  c.require(b.per_plus == g(0) && b.per_minus == Z, "bid != (0v, -inf)");
  c.require(classify_singularity(a) == Singularity::Singular, "not singular, or symmetrically singular");
  return c.failure;
}

std::string c7() {
  Check c;
  const Matrix p = elementary(2, 0, 1, t(1)) * elementary(2, 1, 0, t(1));
  c.require(p == Matrix{{t(2), t(1)}, {t(1), t(0)}}, "product");
  c.require(per(p) == g(2), "per != 2v");
  c.require(!group_membership(p).in_SL, "product in SL_2");
  c.require(group_membership(elementary(2, 0, 1, t(1))).in_SL && group_membership(elementary(2, 1, 0, t(1))).in_SL,
            "factors not in SL_2");
  return c.failure;
}

std::string c8() {
  const char* ids[] = {"per_mul_surpass", "adj_mul_surpass",     "bid_mul_surpass",      "per_genperm_mul",
                       "quasi_idempotent", "quasi_per_one",       "quasi_nabla_swap",     "nabla2_surpass",
                       "definite_quasi_equal", "nabla_sandwich"};
  for (const char* id : ids) {
    const orc::PropertyReport r = orc::property_run(id, 10000, 8);
    if (!r.passed()) return std::string(id) + ": " + r.failures.front().detail;
  }
  return {};
}

std::string c9() {
  std::string err = seeded_loop(1000, 9, [](orc::Rng& rng) -> std::string {
    const Matrix a = orc::random_special(rng, 4, orc::MatrixKind::SL1);
    const Matrix b = orc::random_special(rng, 4, orc::MatrixKind::SL1);
    if (!in_SL1(a * b)) return "product left SL_4^1\nA=\n" + dump(a) + "B=\n" + dump(b);
    if (!in_SL1(nabla(a))) return "nabla left SL_4^1\nA=\n" + dump(a);
    return {};
  });
  if (!err.empty()) return "SL_4^1 closure, " + err;
  std::size_t found = 0;
  for (std::uint64_t k = 0; found < 1000; ++k) {
    orc::Rng rng(orc::trial_seed(90, k));
    const Matrix m = orc::random_special(rng, 3, orc::MatrixKind::SL);
    if (in_SL1(m)) continue;
    ++found;
    try {
      const PerijWitness w = perij_witness(m);
      const Matrix prod = w.mode == WitnessMode::MUM ? m * w.u * m : transpose(w.u) * m * w.u;
      if (!(prod == w.product) || classify_singularity(prod) != Singularity::SymmetricallySingular)
        return "perij witness not verified\nM=\n" + dump(m);
    } catch (const std::exception& e) {
      return std::string("perij: ") + e.what() + "\nM=\n" + dump(m);
    }
  }
  return {};
}

std::string c10() {
  std::size_t found = 0;
  for (std::uint64_t k = 0; found < 1000; ++k) {
    orc::Rng rng(orc::trial_seed(10, k));
    const Matrix a = orc::random_special(rng, 3, orc::MatrixKind::SL);
    if (as_gen_perm(a)) continue;
    ++found;
    try {
      const SnsWitness w = sns_witness(a);
      const Gaussian& e = w.definite_gen;
      if (!(per(elementary(3, e.i, e.j, e.a) * w.factored.definite) == g(0)))
        return "per(E A1) != 0v\nA=\n" + dump(a);
    } catch (const std::exception& e) {
      return std::string("sns: ") + e.what() + "\nA=\n" + dump(a);
    }
  }
  return {};
}

std::string c11() {
  std::string err = seeded_loop(1000, 11, [](orc::Rng& rng) -> std::string {
    const Matrix a = orc::random_special(rng, 3, orc::MatrixKind::SL);
    const EdFactorization f = ed_factor(a);
    const Matrix& a1 = f.factored.definite;
    if (!(word_product(f.definite_word, 3) * a1 == nabla2(a1))) return "ed word\nA=\n" + dump(a);
    return {};
  });
  if (!err.empty()) return "ed, " + err;
  err = seeded_loop(1000, 111, [](orc::Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(orc::uniform_int(rng, 1, 5));
    const Matrix a = orc::detail::nonsingular(rng, n), b = orc::detail::nonsingular(rng, n);
    const Bridge br = bridge(a, b);
    if (!(word_product(br.e1, n) * a * br.e2 == br.e3 * b * word_product(br.e4, n)))
      return "bridge\nA=\n" + dump(a) + "B=\n" + dump(b);
    return {};
  });
  return err.empty() ? err : "bridge, " + err;
}

std::string c12() {
  Check c;
  const Matrix m{{t(0), t(0), Z, Z}, {Z, t(0), t(0), Z}, {Z, Z, t(0), t(0)}, {t(0), Z, Z, t(0)}};
  const ClassReport r = classify(m);
  c.require(r.bid.per_plus == t(0) && r.bid.per_minus == t(0), "bid != (0, 0)");
  c.require(r.bid.per == g(0), "per != 0v");
  c.require(r.groups.in_BQSL, "not in BQSL_4");
  c.require(!r.groups.in_SL, "in SL_4");
  c.require(nonfact_pattern(m), "nonfact_pattern false");
  return c.failure;
}

std::string c13() {
  const orc::PropertyReport r = orc::property_run("oracle_agreement", 10000, 13);
  return r.passed() ? std::string{} : r.failures.front().detail;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"Bl1 replay", c1},
      {"singsq replay", c2},
      {"singsq3 replay", c3},
      {"Bl2 replay", c4},
      {"singsq41 replay", c5},
      {"3x3 singular but symmetrically nonsingular", c6},
      {"SL_2 not closed under products", c7},
      {"determinant and quasi-inverse properties (10^4 trials each)", c8},
      {"SL_n^1 monoid and perij witnesses", c9},
      {"sns witnesses", c10},
      {"ed and bridge factorizations", c11},
      {"two-track n = 4 witness", c12},
      {"permanent oracle cross-check (10^4 trials)", c13},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = criteria[k].second();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2zu: %s (%.2fs)\n", err.empty() ? "PASS" : "FAIL", k + 1, criteria[k].first, secs);
    if (!err.empty()) {
      std::printf("  %s\n", err.c_str());
      ++failed;
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
