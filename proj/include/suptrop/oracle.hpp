#pragma once

// Brute-force references, seeded random generators and the property
// registry used by the acceptance suite and `suptrop check`.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "suptrop/classify.hpp"
#include "suptrop/determinant.hpp"
#include "suptrop/elementary.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/monoid.hpp"
#include "suptrop/nabla.hpp"
#include "suptrop/semiring.hpp"

namespace suptrop::oracle {

// ---------------------------------------------------------------------------
// Brute force. Deliberately shares nothing with determinant.hpp beyond the
// scalar arithmetic.

struct BruteForce {
  TropElem per;
  BidResult bid;
  std::vector<Permutation> dominant;  // lexicographic order
};

inline BruteForce brute_force_per(const Matrix& a) {
  const std::size_t n = a.size();
  if (n > 10) throw DomainError("brute_force_per: n = " + std::to_string(n) + " > 10");
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  TropElem even = TropElem::zero(), odd = TropElem::zero();
  std::optional<Rational> best;
  std::vector<Permutation> best_perms;
  do {
    TropElem prod = TropElem::one();
    for (std::size_t i = 0; i < n && prod.is_nonzero(); ++i) prod = prod * a(i, img[i]);
    if (prod.is_zero()) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (img[i] > img[j]) ++inversions;
    (inversions % 2 ? odd : even) = (inversions % 2 ? odd : even) + prod;
    if (!best || *best < prod.value()) {
      best = prod.value();
      best_perms.clear();
    }
    if (*best == prod.value()) best_perms.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  const TropElem total = even + odd;
  return {total, BidResult{even, odd, total}, std::move(best_perms)};
}

inline Matrix brute_force_adj(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return Matrix::identity(1);
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) m(rr, cc++) = a(r, c);
        ++rr;
      }
      out(i, j) = brute_force_per(m).per;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Random generation.

struct RandomConfig {
  std::int64_t range = 8;   // log-values are integers in [-range, range]
  double ghost_prob = 0.2;
  double zero_prob = 0.15;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial t of a run started from `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Scalar with value in [lo, hi], possibly ghost or -inf.
inline TropElem random_scalar(Rng& rng, std::int64_t lo, std::int64_t hi, const RandomConfig& cfg = {},
                              bool ghosts = true, bool zeros = true) {
  if (zeros && coin(rng, cfg.zero_prob)) return TropElem::zero();
  const std::int64_t v = uniform_int(rng, lo, hi);
  return ghosts && coin(rng, cfg.ghost_prob) ? TropElem::ghost(v) : TropElem::tangible(v);
}

inline TropElem random_scalar(Rng& rng, const RandomConfig& cfg = {}) {
  return random_scalar(rng, -cfg.range, cfg.range, cfg);
}

enum class MatrixKind { General, Tangible, SL, Definite, StrictlyNormal, SL1, GenPerm };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::General: return "general";
    case MatrixKind::Tangible: return "tangible";
    case MatrixKind::SL: return "SL";
    case MatrixKind::Definite: return "definite";
    case MatrixKind::StrictlyNormal: return "strictly_normal";
    case MatrixKind::SL1: return "SL1";
    case MatrixKind::GenPerm: return "gen_perm";
  }
  return "?";
}

inline MatrixKind parse_kind(std::string_view s) {
  for (auto k : {MatrixKind::General, MatrixKind::Tangible, MatrixKind::SL, MatrixKind::Definite,
                 MatrixKind::StrictlyNormal, MatrixKind::SL1, MatrixKind::GenPerm})
    if (s == to_string(k)) return k;
  throw DomainError("unknown matrix kind '" + std::string(s) + "'");
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(img[i - 1], img[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  return Permutation(std::move(img));
}

/// Generalized permutation; with `unit_per` the weights sum to 0.
inline GenPerm random_gen_perm(Rng& rng, std::size_t n, bool unit_per, const RandomConfig& cfg = {}) {
  std::vector<TropElem> w(n);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = unit_per && i + 1 == n ? -sum : uniform_int(rng, -cfg.range, cfg.range);
    sum += v;
    w[i] = TropElem::tangible(v);
  }
  return GenPerm(random_permutation(rng, n), std::move(w));
}

namespace detail {

// Unit diagonal, off-diagonal w_ij + p_i - p_j with w_ij <= 0; rejected until
// every cycle is strictly negative.
inline Matrix random_definite(Rng& rng, std::size_t n, const RandomConfig& cfg) {
  for (;;) {
    std::vector<std::int64_t> p(n);
    for (auto& x : p) x = uniform_int(rng, -cfg.range / 2, cfg.range / 2);
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || coin(rng, cfg.zero_prob)) continue;
        const std::int64_t v = uniform_int(rng, -cfg.range, 0) + p[i] - p[j];
        m(i, j) = coin(rng, cfg.ghost_prob) ? TropElem::ghost(v) : TropElem::tangible(v);
      }
    if (is_definite(m)) return m;
  }
}

inline Matrix random_strictly_normal(Rng& rng, std::size_t n, const RandomConfig& cfg) {
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = random_scalar(rng, -cfg.range, -1, cfg);
  return m;
}

inline void require_class(bool ok, MatrixKind k) {
  if (!ok) throw InternalError(std::string("random_special: output is not of kind ") + to_string(k));
}

}  // namespace detail

inline Matrix random_special(Rng& rng, std::size_t n, MatrixKind kind, const RandomConfig& cfg = {}) {
  if (n == 0) throw ShapeError("random_special: n must be at least 1");
  Matrix m;
  switch (kind) {
    case MatrixKind::General:
    case MatrixKind::Tangible: {
      m = Matrix(n);
      const bool ghosts = kind == MatrixKind::General;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, -cfg.range, cfg.range, cfg, ghosts);
      if (!ghosts)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) detail::require_class(!m(i, j).is_ghost(), kind);
      return m;
    }
    case MatrixKind::Definite:
      m = detail::random_definite(rng, n, cfg);
      detail::require_class(is_definite(m), kind);
      return m;
    case MatrixKind::StrictlyNormal:
      m = detail::random_strictly_normal(rng, n, cfg);
      detail::require_class(is_strictly_normal(m), kind);
      return m;
    case MatrixKind::SL: {
      const GenPerm p = random_gen_perm(rng, n, true, cfg);
      m = p.matrix() * detail::random_definite(rng, n, cfg);
      detail::require_class(per(m) == TropElem::one(), kind);
      return m;
    }
    case MatrixKind::SL1: {
      const Matrix j = detail::random_strictly_normal(rng, n, cfg);
      const Permutation pi = random_permutation(rng, n);
      const Permutation sigma = random_permutation(rng, n);
      m = permutation_matrix(pi) * j * permutation_matrix(sigma);
      detail::require_class(in_SL1(m), kind);
      return m;
    }
    case MatrixKind::GenPerm:
      m = random_gen_perm(rng, n, false, cfg).matrix();
      detail::require_class(as_gen_perm(m).has_value(), kind);
      return m;
  }
  throw InternalError("random_special: unknown kind");
}

/// Deterministic in (seed, n, kind, cfg).
inline Matrix random_special(std::uint64_t seed, std::size_t n, MatrixKind kind, const RandomConfig& cfg = {}) {
  Rng rng(seed);
  return random_special(rng, n, kind, cfg);
}

// ---------------------------------------------------------------------------
// Property registry.

struct TrialOutcome {
  enum class Verdict { Pass, Skip, Fail } verdict = Verdict::Pass;
  std::string detail;
};

using PropertyFn = std::function<TrialOutcome(Rng&)>;

struct Property {
  std::string id;
  std::string module;
  std::string description;
  PropertyFn check;
};

struct PropertyFailure {
  std::size_t trial;
  std::uint64_t seed;  // trial seed; replay with property_trial(id, seed)
  std::string detail;
};

struct PropertyReport {
  std::string id;
  std::size_t trials = 0;
  std::size_t skipped = 0;  // trials whose precondition did not hold
  std::vector<PropertyFailure> failures;
  bool passed() const { return failures.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }
};

namespace detail {

inline TrialOutcome pass() { return {}; }
inline TrialOutcome skip() { return {TrialOutcome::Verdict::Skip, {}}; }

struct Detail {
  std::ostringstream os;
  template <typename T>
  Detail& operator<<(const T& x) {
    os << x;
    return *this;
  }
  operator TrialOutcome() const { return {TrialOutcome::Verdict::Fail, os.str()}; }
};

inline Detail fail(const std::string& what) {
  Detail d;
  d << what;
  return d;
}

inline std::size_t pick_n(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

inline Matrix gen(Rng& rng, std::size_t n, MatrixKind k = MatrixKind::General) {
  return random_special(rng, n, k);
}

/// A nonsingular matrix, usually with ghost entries off the dominant track.
inline Matrix nonsingular(Rng& rng, std::size_t n) {
  for (int tries = 0; tries < 64; ++tries) {
    Matrix m = gen(rng, n);
    if (is_nonsingular(m)) return m;
  }
  return gen(rng, n, MatrixKind::SL);
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_scalar(rng);
  return v;
}

inline Matrix ghost_noise(Rng& rng, std::size_t n) {
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, 0.5)) g(i, j) = TropElem::ghost(uniform_int(rng, -8, 8));
  return g;
}

inline TropElem ghost_or_zero(Rng& rng) {
  return coin(rng, 0.3) ? TropElem::zero() : TropElem::ghost(uniform_int(rng, -8, 8));
}

inline SymPair random_pair(Rng& rng) { return {random_scalar(rng), random_scalar(rng)}; }

/// Strictly dominant track pi with all track entries equal to c and every
/// track entry strictly nu-above the rest of its row.
inline std::pair<Matrix, Permutation> random_uniform(Rng& rng, std::size_t n) {
  const TropElem c = TropElem::tangible(uniform_int(rng, -4, 4));
  const Matrix j = c * random_special(rng, n, MatrixKind::StrictlyNormal);
  const Permutation sigma = random_permutation(rng, n);
  // (J P_sigma)(i, sigma(i)) = J(i, i).
  return {j * permutation_matrix(sigma), sigma};
}

using V = TrialOutcome::Verdict;

inline std::vector<Property> build_registry() {
  std::vector<Property> r;
  auto add = [&r](std::string id, std::string module, std::string desc, PropertyFn fn) {
    r.push_back({std::move(id), std::move(module), std::move(desc), std::move(fn)});
  };

  // semiring ---------------------------------------------------------------
  add("semiring_laws", "semiring", "associativity, commutativity and distributivity of + and *",
      [](Rng& rng) -> TrialOutcome {
        const TropElem a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        if (!((a + b) + c == a + (b + c)) || !(a + b == b + a)) return fail("addition law");
        if (!((a * b) * c == a * (b * c)) || !(a * b == b * a)) return fail("multiplication law");
        if (!(a * (b + c) == a * b + a * c)) return fail("distributivity") << " a=" << a << " b=" << b << " c=" << c;
        return pass();
      });
  add("nu_hom", "semiring", "nu(ab) = nu(a)nu(b) and nu(a+b) >=nu nu(a)+nu(b)", [](Rng& rng) -> TrialOutcome {
    const TropElem a = random_scalar(rng), b = random_scalar(rng);
    if (!((a * b).nu() == a.nu() * b.nu())) return fail("nu(ab)") << " a=" << a << " b=" << b;
    if (!nu_geq((a + b).nu(), a.nu() + b.nu())) return fail("nu(a+b)") << " a=" << a << " b=" << b;
    return pass();
  });
  add("surpass_order", "semiring", "ghost surpassing is reflexive, transitive, antisymmetric on tangibles",
      [](Rng& rng) -> TrialOutcome {
        const TropElem c = random_scalar(rng);
        const TropElem b = c + ghost_or_zero(rng);
        const TropElem a = b + ghost_or_zero(rng);
        if (!ghost_surpasses(a, a)) return fail("reflexivity") << " a=" << a;
        if (!ghost_surpasses(a, b) || !ghost_surpasses(b, c)) return fail("construction") << " a=" << a;
        if (!ghost_surpasses(a, c)) return fail("transitivity") << " a=" << a << " c=" << c;
        const TropElem x = random_scalar(rng, -2, 2, {}, false), y = random_scalar(rng, -2, 2, {}, false);
        if (ghost_surpasses(x, y) && ghost_surpasses(y, x) && !(x == y))
          return fail("antisymmetry") << " x=" << x << " y=" << y;
        return pass();
      });
  add("surpass_compat", "semiring", "a |= b and c |= d imply a+c |= b+d and ac |= bd",
      [](Rng& rng) -> TrialOutcome {
        const TropElem b = random_scalar(rng), d = random_scalar(rng);
        const TropElem a = b + ghost_or_zero(rng), c = d + ghost_or_zero(rng);
        if (!ghost_surpasses(a + c, b + d)) return fail("sum") << " a=" << a << " c=" << c;
        if (!ghost_surpasses(a * c, b * d)) return fail("product") << " a=" << a << " c=" << c;
        return pass();
      });
  add("collapse_hom", "semiring", "collapse(pq) = collapse(p) collapse(q)", [](Rng& rng) -> TrialOutcome {
    const SymPair p = random_pair(rng), q = random_pair(rng);
    if (!(collapse(p * q) == collapse(p) * collapse(q))) return fail("collapse") << " p=" << p << " q=" << q;
    return pass();
  });
  add("passghost", "semiring", "p >=o q implies collapse(p) |= collapse(q)", [](Rng& rng) -> TrialOutcome {
    const SymPair q = random_pair(rng);
    const std::int64_t x = uniform_int(rng, -8, 8);
    auto variant = [&rng](std::int64_t v) { return coin(rng, 0.5) ? TropElem::ghost(v) : TropElem::tangible(v); };
    const SymPair p = coin(rng, 0.2) ? random_pair(rng) : q + SymPair{variant(x), variant(x)};
    if (!sym_surpasses(p, p)) return fail("reflexivity") << " p=" << p;
    if (!sym_surpasses(p, q)) return p == q ? fail("construction") : pass();
    if (!ghost_surpasses(collapse(p), collapse(q))) return fail("collapse") << " p=" << p << " q=" << q;
    return pass();
  });

  // matrix -----------------------------------------------------------------
  add("mat_assoc_distrib", "matrix", "(AB)C = A(BC) and A(B+C) = AB+AC", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = gen(rng, n), c = gen(rng, n);
    if (!((a * b) * c == a * (b * c))) return fail("associativity");
    if (!(a * (b + c) == a * b + a * c)) return fail("distributivity");
    return pass();
  });
  add("nu_order_identity", "matrix", "B >=nu I implies AB >=nu A and BA >=nu A", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = Matrix::identity(n) + gen(rng, n);
    if (!nu_leq(a, a * b) || !nu_leq(a, b * a)) return fail("order") << "\nA=\n" << a << "B=\n" << b;
    return pass();
  });
  add("mat_surpass_compat", "matrix", "A1 |= A2 and B1 |= B2 imply A1B1 |= A2B2", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a2 = gen(rng, n), b2 = gen(rng, n);
    const Matrix a1 = a2 + ghost_noise(rng, n), b1 = b2 + ghost_noise(rng, n);
    if (!ghost_surpasses(a1, a2) || !ghost_surpasses(b1, b2)) return fail("construction");
    if (!ghost_surpasses(a1 * b1, a2 * b2)) return fail("product") << "\nA1=\n" << a1 << "B1=\n" << b1;
    return pass();
  });
  add("perm_inverse", "matrix", "P_pi P_{pi^-1} = I", [](Rng& rng) -> TrialOutcome {
    const Permutation p = random_permutation(rng, pick_n(rng, 1, 6));
    if (!(permutation_matrix(p) * permutation_matrix(p.inverse()) == Matrix::identity(p.size())))
      return fail("inverse") << " pi=" << to_string(p);
    return pass();
  });

  // determinant ------------------------------------------------------------
  add("per_mul_surpass", "determinant", "per(AB) |= per(A) per(B)", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = gen(rng, n);
    if (!ghost_surpasses(per(a * b), per(a) * per(b))) return fail("per") << "\nA=\n" << a << "B=\n" << b;
    return pass();
  });
  add("per_genperm_mul", "determinant", "per(AB) = per(A)per(B) = per(BA) for B a GenPerm",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const Matrix a = gen(rng, n), b = gen(rng, n, MatrixKind::GenPerm);
        const TropElem p = per(a) * per(b);
        if (!(per(a * b) == p) || !(per(b * a) == p)) return fail("per") << "\nA=\n" << a << "B=\n" << b;
        return pass();
      });
  add("bid_mul_surpass", "determinant", "bid(AB) >=o bid(A) bid(B)", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = gen(rng, n);
    if (!sym_surpasses(bid(a * b).pair(), bid(a).pair() * bid(b).pair()))
      return fail("bid") << "\nA=\n" << a << "B=\n" << b;
    return pass();
  });
  add("uniform_dominance_product", "determinant",
      "uniformly dominant tracks compose and the determinant is multiplicative", [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const auto [a, pa] = random_uniform(rng, n);
        const auto [b, pb] = random_uniform(rng, n);
        const DominanceReport d = dominance(a * b);
        if (!d.uniformly_dominant || !(*d.uniformly_dominant == pb.after(pa)))
          return fail("track") << "\nA=\n" << a << "B=\n" << b;
        if (!(per(a * b) == per(a) * per(b))) return fail("per") << "\nA=\n" << a << "B=\n" << b;
        return pass();
      });
  add("per_transpose", "determinant", "per(A^t) = per(A)", [](Rng& rng) -> TrialOutcome {
    const Matrix a = gen(rng, pick_n(rng, 1, 5));
    if (!(per(transpose(a)) == per(a))) return fail("per") << "\nA=\n" << a;
    return pass();
  });

  // nabla ------------------------------------------------------------------
  add("adj_mul_surpass", "nabla", "adj(AB) |= adj(B) adj(A)", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = gen(rng, n);
    if (!ghost_surpasses(adj(a * b), adj(b) * adj(a))) return fail("adj") << "\nA=\n" << a << "B=\n" << b;
    return pass();
  });
  add("adj_genperm_mul", "nabla", "adj(AB) = adj(B) adj(A) for B a GenPerm", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n), b = gen(rng, n, MatrixKind::GenPerm);
    if (!(adj(a * b) == adj(b) * adj(a))) return fail("adj") << "\nA=\n" << a << "B=\n" << b;
    return pass();
  });
  add("quasi_idempotent", "nabla", "I^l and I^r are idempotent", [](Rng& rng) -> TrialOutcome {
    const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
    const QuasiPack q = quasi_pack(a);
    if (!is_idempotent(q.left) || !is_idempotent(q.right)) return fail("idempotence") << "\nA=\n" << a;
    return pass();
  });
  add("quasi_per_one", "nabla", "per(I^l) and per(I^r) are nu-equivalent to 1", [](Rng& rng) -> TrialOutcome {
    const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
    const QuasiPack q = quasi_pack(a);
    if (!nu_equiv(per(q.left), TropElem::one()) || !nu_equiv(per(q.right), TropElem::one()))
      return fail("per") << "\nA=\n" << a;
    return pass();
  });
  add("quasi_nabla_swap", "nabla", "I^l of A^nabla is I^r of A and vice versa", [](Rng& rng) -> TrialOutcome {
    const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
    const QuasiPack q = quasi_pack(a);
    const QuasiPack qn = quasi_pack(nabla(a));
    if (!(qn.left == q.right) || !(qn.right == q.left)) return fail("swap") << "\nA=\n" << a;
    return pass();
  });
  add("nabla_sandwich", "nabla", "A^nabla A A^nabla |= A^nabla and A^nabla >=nu A^nabla A A^nabla",
      [](Rng& rng) -> TrialOutcome {
        const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
        const Matrix an = nabla(a);
        const Matrix s = an * a * an;
        if (!nu_leq(s, an)) return fail("nu upper bound") << "\nA=\n" << a;
        if (!ghost_surpasses(s, an)) return fail("surpass") << "\nA=\n" << a;
        return pass();
      });
  add("nabla2_surpass", "nabla", "A^{nabla nabla} |= A", [](Rng& rng) -> TrialOutcome {
    const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
    if (!ghost_surpasses(nabla2(a), a)) return fail("surpass") << "\nA=\n" << a;
    return pass();
  });
  add("nabla_preserves_shape", "nabla", "nabla keeps definite and strictly normal matrices in their class",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const Matrix d = gen(rng, n, MatrixKind::Definite);
        if (!is_definite(nabla(d))) return fail("definite") << "\nA=\n" << d;
        const Matrix s = gen(rng, n, MatrixKind::StrictlyNormal);
        if (!is_strictly_normal(nabla(s))) return fail("strictly normal") << "\nA=\n" << s;
        return pass();
      });
  add("reversible_core_quasi", "nabla", "reversible A with nonsingular core has a quasi-identity core",
      [](Rng& rng) -> TrialOutcome {
        const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
        const QuasiPack q = quasi_pack(a);
        if (!q.reversible || !is_nonsingular(q.core)) return skip();
        if (!is_quasi_identity(q.core)) return fail("core") << "\nA=\n" << a;
        return pass();
      });
  add("core_tilde_nabla", "nabla", "the reversed core of A is the core of A^nabla", [](Rng& rng) -> TrialOutcome {
    const Matrix a = nonsingular(rng, pick_n(rng, 1, 5));
    if (!(quasi_pack(a).core_tilde == quasi_pack(nabla(a)).core)) return fail("core") << "\nA=\n" << a;
    return pass();
  });
  add("reversible_2x2", "nabla", "2x2 A with per 1 and nonsingular I^l I^r is reversible",
      [](Rng& rng) -> TrialOutcome {
        Matrix a = gen(rng, 2);
        if (!(per(a) == TropElem::one())) a = gen(rng, 2, MatrixKind::SL);
        const QuasiPack q = quasi_pack(a);
        if (!is_nonsingular(q.left * q.right)) return skip();
        if (!q.reversible) return fail("not reversible") << "\nA=\n" << a;
        return pass();
      });
  add("definite_quasi_equal", "nabla", "definite A has I^l = I^r", [](Rng& rng) -> TrialOutcome {
    const Matrix a = gen(rng, pick_n(rng, 1, 5), MatrixKind::Definite);
    const QuasiPack q = quasi_pack(a);
    if (!(q.left == q.right)) return fail("I^l != I^r") << "\nA=\n" << a;
    return pass();
  });

  // classify ---------------------------------------------------------------
  add("sl1_closure", "classify", "SL_n^1 is closed under products and nabla", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = gen(rng, n, MatrixKind::SL1), b = gen(rng, n, MatrixKind::SL1);
    if (!in_SL1(a * b)) return fail("product") << "\nA=\n" << a << "B=\n" << b;
    if (!in_SL1(nabla(a))) return fail("nabla") << "\nA=\n" << a;
    return pass();
  });
  add("strictly_normal_monoid", "classify",
      "strictly normal matrices form a nonsingular monoid closed under nabla and transpose",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const Matrix a = gen(rng, n, MatrixKind::StrictlyNormal), b = gen(rng, n, MatrixKind::StrictlyNormal);
        const Matrix ab = a * b;
        if (!is_nonsingular(ab) || !nu_equiv(per(ab), TropElem::one())) return fail("per") << "\nA=\n" << a;
        if (!is_strictly_normal(ab)) return fail("product") << "\nA=\n" << a << "B=\n" << b;
        if (!is_strictly_normal(nabla(a)) || !is_strictly_normal(transpose(a))) return fail("closure") << "\nA=\n" << a;
        return pass();
      });
  add("perij_maximality", "classify", "every sampled M in SL_n \\ SL_n^1 has a verified witness",
      [](Rng& rng) -> TrialOutcome {
        const Matrix m = gen(rng, pick_n(rng, 2, 4), MatrixKind::SL);
        if (in_SL1(m)) return skip();
        const PerijWitness w = perij_witness(m);
        const Matrix prod = w.mode == WitnessMode::MUM ? m * w.u * m : transpose(w.u) * m * w.u;
        if (!(prod == w.product) || classify_singularity(prod) != Singularity::SymmetricallySingular)
          return fail("witness") << "\nM=\n" << m;
        return pass();
      });
  add("bqsl2_generation", "classify", "[[u,u'],[v,v']] with uv' = u'v and u'v >nu 1 factors as lower * upper",
      [](Rng& rng) -> TrialOutcome {
        const std::int64_t u = uniform_int(rng, -8, 8), u2 = uniform_int(rng, -8, 8);
        const std::int64_t v = uniform_int(rng, -8, 8);
        if (u2 + v <= 0) return skip();
        const Matrix m{{TropElem::tangible(u), TropElem::tangible(u2)},
                       {TropElem::tangible(v), TropElem::tangible(u2 + v - u)}};
        const auto f = bqsl2_factor(m);
        if (!f || !(f->first * f->second == m)) return fail("factor") << "\nM=\n" << m;
        if (!group_membership(m).in_BQSL) return fail("membership") << "\nM=\n" << m;
        return pass();
      });
  add("genmon1_witness", "classify", "two-track n = 4 matrices lie in BQSL_4 \\ SL_4 and match the pattern",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = 4;
        const Permutation sigma = random_permutation(rng, n);
        Matrix m(n);
        std::int64_t s1 = 0, s2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const std::int64_t x = i + 1 == n ? -s1 : uniform_int(rng, -8, 8);
          const std::int64_t y = i + 1 == n ? -s2 : uniform_int(rng, -8, 8);
          s1 += x;
          s2 += y;
          m(i, sigma(i)) = TropElem::tangible(x);
          m(i, (sigma(i) + 1) % n) = TropElem::tangible(y);
        }
        const GroupMembership g = group_membership(m);
        if (!g.in_BQSL || g.in_SL) return fail("membership") << "\nM=\n" << m;
        if (!nonfact_pattern(m)) return fail("pattern") << "\nM=\n" << m;
        return pass();
      });

  // monoid -----------------------------------------------------------------
  add("s_left_right_closure", "monoid",
      "S^l_A is closed under right multiplication, S^r_A under left; I^l and I^r are one-sided units",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const Matrix a = nonsingular(rng, n);
        const QuasiPack q = quasi_pack(a);
        const Matrix x = q.left * gen(rng, n), c = gen(rng, n);
        if (!(q.left * x == x) || !(q.left * (x * c) == x * c)) return fail("left") << "\nA=\n" << a;
        const Matrix y = gen(rng, n) * q.right;
        if (!(y * q.right == y) || !((c * y) * q.right == c * y)) return fail("right") << "\nA=\n" << a;
        return pass();
      });
  add("s_a_unit", "monoid", "for reversible A the core is a two-sided unit of S_A", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 4);
    const Matrix a = nonsingular(rng, n);
    const QuasiPack q = quasi_pack(a);
    if (!q.reversible) return skip();
    const Matrix b = q.core * gen(rng, n) * q.core;
    if (!(q.core * b == b) || !(b * q.core == b)) return fail("unit") << "\nA=\n" << a;
    return pass();
  });
  add("conj_strictly_normal_monoid", "monoid",
      "if I^l_A is strictly normal, products of A^nabla J A stay of that form", [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 4);
        const Matrix a = gen(rng, n, MatrixKind::StrictlyNormal) * gen(rng, n, MatrixKind::GenPerm);
        const QuasiPack q = quasi_pack(a);
        if (!is_strictly_normal(q.left)) return skip();
        const Matrix j1 = gen(rng, n, MatrixKind::StrictlyNormal), j2 = gen(rng, n, MatrixKind::StrictlyNormal);
        const Matrix an = nabla(a);
        const Matrix j = j1 * q.left * j2;
        if (!is_strictly_normal(j) || !((an * j1 * a) * (an * j2 * a) == an * j * a))
          return fail("closure") << "\nA=\n" << a;
        return pass();
      });
  add("vspace_intertwine", "monoid", "v -> A^nabla v maps V_A into V_{A^nabla} and intertwines conjugation",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 1, 5);
        const Matrix a = nonsingular(rng, n);
        const QuasiPack q = quasi_pack(a);
        const Vector v = q.left * random_vector(rng, n);
        if (!in_v_space(a, v)) return fail("I^l v not in V_A") << "\nA=\n" << a;
        const Matrix an = nabla(a);
        if (!in_v_space(an, nabla_map(a, v))) return fail("image") << "\nA=\n" << a;
        const Matrix b = q.left * gen(rng, n);
        if (!(conjugate(a, b) * nabla_map(a, v) == an * (b * v))) return fail("intertwine") << "\nA=\n" << a;
        return pass();
      });

  // elementary -------------------------------------------------------------
  add("steinberg_relations", "elementary", "commutation and triple relations among Gaussians",
      [](Rng& rng) -> TrialOutcome {
        const std::size_t n = pick_n(rng, 3, 5);
        const TropElem a = random_scalar(rng, -8, 8, {}, true, false);
        const TropElem b = random_scalar(rng, -8, 8, {}, true, false);
        auto prod = [n](std::initializer_list<Gaussian> gs) {
          ElemWord w;
          for (const auto& g : gs) w.push_back(g);
          return word_product(w, n);
        };
        const Permutation p = random_permutation(rng, n);
        const std::size_t i = p(0), j = p(1), k = p(2);
        // (i) disjoint
        if (n >= 4) {
          const std::size_t l = p(3);
          if (!(prod({{i, j, a}, {k, l, b}}) == prod({{k, l, b}, {i, j, a}}))) return fail("(i)");
        }
        // (ii) only under ab <nu 1
        if (nu_less(a * b, TropElem::one()) && !(prod({{i, j, a}, {j, i, b}}) == prod({{j, i, b}, {i, j, a}})))
          return fail("(ii)") << " a=" << a << " b=" << b;
        // (iii) with l = k
        const Matrix lhs = prod({{i, j, a}, {j, k, b}});
        const Matrix r1 = prod({{i, k, a * b}, {j, k, b}, {i, j, a}});
        const Matrix r2 = prod({{j, k, b}, {i, j, a}, {i, k, a * b}});
        if (!(lhs == r1) || !(lhs == r2)) return fail("(iii)") << " a=" << a << " b=" << b;
        return pass();
      });
  add("ed_exact", "elementary", "word_product(ed_factor(A)) A1 = A1^{nabla nabla} exactly",
      [](Rng& rng) -> TrialOutcome {
        const Matrix a = gen(rng, pick_n(rng, 1, 5), MatrixKind::SL);
        const EdFactorization e = ed_factor(a);
        if (!(word_product(e.definite_word, a.size()) * e.factored.definite == nabla2(e.factored.definite)))
          return fail("definite") << "\nA=\n" << a;
        if (!(word_product(e.word, a.size()) * a == nabla2(a))) return fail("conjugated") << "\nA=\n" << a;
        return pass();
      });
  add("sns_singularizes", "elementary", "the sns Gaussian makes A singular with per(E A1) = 1^nu",
      [](Rng& rng) -> TrialOutcome {
        const Matrix a = gen(rng, pick_n(rng, 2, 5), MatrixKind::SL);
        if (as_gen_perm(a)) return skip();
        const SnsWitness w = sns_witness(a);
        const std::size_t n = a.size();
        const Gaussian& e = w.definite_gen;
        if (!(per(elementary(n, e.i, e.j, e.a) * w.factored.definite) == TropElem::ghost(0)))
          return fail("E A1") << "\nA=\n" << a;
        const Matrix ea = elementary(n, w.gen.i, w.gen.j, w.gen.a) * a;
        if (classify_singularity(a) != Singularity::Nonsingular ||
            classify_singularity(ea) == Singularity::Nonsingular || !(per(ea).nu() == TropElem::ghost(0)))
          return fail("E A") << "\nA=\n" << a;
        return pass();
      });
  add("bridge_exact", "elementary", "E1 A E2 = E3 B E4 exactly", [](Rng& rng) -> TrialOutcome {
    const std::size_t n = pick_n(rng, 1, 5);
    const Matrix a = nonsingular(rng, n), b = nonsingular(rng, n);
    const Bridge br = bridge(a, b);
    if (!(word_product(br.e1, n) * a * br.e2 == br.e3 * b * word_product(br.e4, n)))
      return fail("bridge") << "\nA=\n" << a << "B=\n" << b;
    if (br.e2_word && !(word_product(*br.e2_word, n) == br.e2)) return fail("E2 word");
    if (br.e3_word && !(word_product(*br.e3_word, n) == br.e3)) return fail("E3 word");
    return pass();
  });

  // oracle -----------------------------------------------------------------
  add("oracle_agreement", "oracle", "brute force and subset evaluation agree on per, bid, adj and dominance",
      [](Rng& rng) -> TrialOutcome {
        const Matrix a = gen(rng, pick_n(rng, 1, 6));
        const BruteForce bf = brute_force_per(a);
        if (!(bf.bid == bid(a)) || !(bf.per == per(a))) return fail("bid") << "\nA=\n" << a;
        if (!(bf.dominant == dominance(a).dominant)) return fail("dominance") << "\nA=\n" << a;
        if (!(per_assignment(a) == bf.per)) return fail("assignment") << "\nA=\n" << a;
        if (!(brute_force_adj(a) == adj(a))) return fail("adj") << "\nA=\n" << a;
        return pass();
      });

  // cli --------------------------------------------------------------------
  add("scalar_roundtrip", "cli", "parse(print(x)) = x for scalar tokens", [](Rng& rng) -> TrialOutcome {
    TropElem x = random_scalar(rng);
    if (x.is_nonzero() && coin(rng, 0.5)) {
      const Rational r{uniform_int(rng, -50, 50), uniform_int(rng, 1, 12)};
      x = x.is_ghost() ? TropElem::ghost(r) : TropElem::tangible(r);
    }
    if (!(parse_scalar(to_string(x)) == x)) return fail("round trip") << " x=" << x;
    return pass();
  });
  return r;
}

}  // namespace detail

inline const std::vector<Property>& registry() {
  static const std::vector<Property> r = detail::build_registry();
  return r;
}

inline const Property& find_property(std::string_view id) {
  for (const auto& p : registry())
    if (p.id == id) return p;
  throw DomainError("unknown property '" + std::string(id) + "'");
}

/// One trial from its own seed; exceptions count as failures.
inline TrialOutcome property_trial(const Property& p, std::uint64_t seed) {
  Rng rng(seed);
  try {
    return p.check(rng);
  } catch (const std::exception& e) {
    return {TrialOutcome::Verdict::Fail, std::string("exception: ") + e.what()};
  }
}

inline TrialOutcome property_trial(std::string_view id, std::uint64_t seed) {
  return property_trial(find_property(id), seed);
}

inline PropertyReport property_run(std::string_view id, std::size_t trials, std::uint64_t seed) {
  const Property& p = find_property(id);
  PropertyReport rep{p.id, trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    TrialOutcome o = property_trial(p, s);
    if (o.verdict == TrialOutcome::Verdict::Skip) ++rep.skipped;
    if (o.verdict == TrialOutcome::Verdict::Fail) rep.failures.push_back({t, s, std::move(o.detail)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Search harness for the question whether every non-triangular definite
// matrix in T^l T^u is some A^nabla with A in SL_n.

struct ConjectureCandidate {
  std::size_t trial;
  std::uint64_t seed;
  Matrix b;
  Matrix b_nabla2;  // differs from b
};

struct ConjectureReport {
  std::size_t trials = 0;
  std::size_t sampled = 0;    // non-triangular definite products L U
  std::size_t confirmed = 0;  // B = (B^nabla)^nabla, so B is the quasi-inverse of B^nabla in SL_n
  std::vector<ConjectureCandidate> candidates;  // unresolved
};

inline bool is_triangular(const Matrix& m) {
  bool lower = false, upper = false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j).is_nonzero()) {
        lower = lower || i > j;
        upper = upper || i < j;
      }
  return !(lower && upper);
}

inline ConjectureReport conjecture_search(std::size_t trials, std::uint64_t seed, std::size_t n = 3) {
  ConjectureReport rep;
  rep.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    Rng rng(s);
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = random_scalar(rng);
        u(j, i) = random_scalar(rng);
      }
    const Matrix b = l * u;
    if (is_triangular(b) || !is_definite(b)) continue;
    ++rep.sampled;
    const Matrix b2 = nabla2(b);
    if (b2 == b) ++rep.confirmed;
    else rep.candidates.push_back({t, s, b, b2});
  }
  return rep;
}

}  // namespace suptrop::oracle
