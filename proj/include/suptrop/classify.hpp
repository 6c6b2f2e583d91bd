#pragma once

// Shape classes (definite / normal / strictly normal), membership in the
// special-linear families, the definite factorization A = P A1, the
// two-track nonfactorizable pattern and witnesses for the maximality of the
// monoid SL_n^1.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "suptrop/determinant.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/nabla.hpp"

namespace suptrop {

struct ShapeClass {
  bool definite = false;
  bool normal = false;
  bool strictly_normal = false;
};

/// definite: identity is the unique dominant permutation and the diagonal is
/// all 1; normal: also every off-diagonal entry is <=_nu 1; strictly normal:
/// strictly below 1.
inline ShapeClass shape_class(const Matrix& a) {
  ShapeClass s;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!(a(i, i) == TropElem::one())) return s;
  // With a unit diagonal, the identity is the unique dominant permutation
  // exactly when the permanent is the tangible 1.
  s.definite = per(a) == TropElem::one();
  if (!s.definite) return s;
  s.normal = true;
  s.strictly_normal = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (nu_greater(a(i, j), TropElem::one())) s.normal = false;
      if (!nu_less(a(i, j), TropElem::one())) s.strictly_normal = false;
    }
  s.strictly_normal = s.strictly_normal && s.normal;
  return s;
}

inline bool is_definite(const Matrix& a) { return shape_class(a).definite; }
inline bool is_strictly_normal(const Matrix& a) { return shape_class(a).strictly_normal; }

struct GroupMembership {
  bool in_SL = false;        // per(A) = 1
  bool in_BQSL = false;      // per(A) |=gs 1
  bool in_QSL_circ = false;  // SL, or BQSL with bid = (1^nu, beta), 1^nu >_nu beta (or mirrored)
};

inline GroupMembership group_membership(const BidResult& b) {
  GroupMembership g;
  const TropElem one = TropElem::one();
  const TropElem one_nu = TropElem::ghost(0);
  g.in_SL = b.per == one;
  g.in_BQSL = ghost_surpasses(b.per, one);
  const bool plus_side = b.per_plus == one_nu && nu_greater(b.per_plus, b.per_minus);
  const bool minus_side = b.per_minus == one_nu && nu_greater(b.per_minus, b.per_plus);
  g.in_QSL_circ = g.in_SL || (g.in_BQSL && (plus_side || minus_side));
  return g;
}

inline GroupMembership group_membership(const Matrix& a) { return group_membership(bid(a)); }

inline bool in_SL1(const DominanceReport& d, const Matrix& a) {
  if (!d.uniformly_dominant) return false;
  return a(0, (*d.uniformly_dominant)(0)) == TropElem::one();
}

/// Membership in SL_n^1, the permutation closure of the strictly normal
/// matrices: a uniformly dominant permutation whose entries are all 1.
inline bool in_SL1(const Matrix& a) { return in_SL1(dominance(a), a); }

struct ClassReport {
  Singularity singularity = Singularity::Singular;
  BidResult bid;
  ShapeClass shape;
  GroupMembership groups;
  bool in_SL1 = false;
  DominanceReport dominance;
};

inline ClassReport classify(const Matrix& a) {
  ClassReport r;
  r.bid = bid(a);
  r.singularity = in_circ(r.bid.pair()) ? Singularity::SymmetricallySingular
                  : r.bid.per.is_tangible() ? Singularity::Nonsingular
                                            : Singularity::Singular;
  r.shape = shape_class(a);
  r.groups = group_membership(r.bid);
  r.dominance = dominance(a);
  r.in_SL1 = suptrop::in_SL1(r.dominance, a);
  return r;
}

// ---------------------------------------------------------------------------
// A = P A1 (left) or A = A2 Q (right), P and Q generalized permutations and
// A1, A2 definite.

enum class Side { Left, Right };

struct Factored {
  GenPerm perm;
  Matrix definite;
};

/// The lexicographically least dominant permutation of a nonsingular matrix.
inline Permutation dominant_track(const Matrix& a) {
  if (a.size() <= kEnumerationBound) {
    const auto d = dominance(a);
    if (d.dominant.empty()) throw SingularityError("per(A) = -inf");
    return d.dominant.front();
  }
  detail::WeightGrid w(a.size(), std::vector<std::optional<Rational>>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j).is_nonzero()) w[i][j] = a(i, j).value();
  auto best = detail::max_assignment(w);
  if (!best) throw SingularityError("per(A) = -inf");
  return Permutation(best->col_of_row);
}

inline Factored factor_out(const Matrix& a, Side side = Side::Left) {
  if (!is_nonsingular(a)) throw SingularityError("factor_out needs a nonsingular matrix");
  const std::size_t n = a.size();
  const Permutation pi = dominant_track(a);
  std::vector<TropElem> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a(i, pi(i));
  Matrix d(n);
  if (side == Side::Left) {
    // Row i of A is w_i times row pi(i) of A1.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(pi(i), j) = inverse(w[i]) * a(i, j);
  } else {
    // Column pi(k) of A is column k of A2 times w_k.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) d(i, k) = a(i, pi(k)) * inverse(w[k]);
  }
  return {GenPerm(pi, std::move(w)), std::move(d)};
}

// ---------------------------------------------------------------------------
// Two-track pattern: support is exactly {(i, pi(i))} u {(i, sigma(i))} with
// tangible entries and pi(i) = sigma(i) + t (mod n), 0 < t < n/2.

struct TwoTrack {
  Permutation pi;
  Permutation sigma;
  std::size_t shift = 0;
};

inline std::optional<TwoTrack> two_track_pattern(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::pair<std::size_t, std::size_t>> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      if (!a(i, j).is_tangible()) return std::nullopt;
      support.push_back(j);
    }
    if (support.size() != 2) return std::nullopt;
    cols[i] = {support[0], support[1]};
  }
  for (std::size_t t = 1; 2 * t < n; ++t) {
    std::vector<std::size_t> pi(n), sigma(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto [c1, c2] = cols[i];
      if ((c1 + n - c2) % n == t) {
        pi[i] = c1;
        sigma[i] = c2;
      } else if ((c2 + n - c1) % n == t) {
        pi[i] = c2;
        sigma[i] = c1;
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (seen[pi[i]]) ok = false;
      else seen[pi[i]] = true;
    }
    if (ok) return TwoTrack{Permutation(pi), Permutation(sigma), t};
  }
  return std::nullopt;
}

/// True for the known nonfactorizable two-track matrices.
inline bool nonfact_pattern(const Matrix& a) { return two_track_pattern(a).has_value(); }

// ---------------------------------------------------------------------------
// Witnesses that a matrix M in SL_n \ SL_n^1 cannot join SL_n^1 in a
// nonsingular monoid.

enum class WitnessMode { MUM, UtMU };

inline const char* to_string(WitnessMode m) { return m == WitnessMode::MUM ? "MUM" : "UtMU"; }

struct PerijWitness {
  Matrix u;
  WitnessMode mode = WitnessMode::MUM;
  Matrix product;       // M U M or U^t M U, symmetrically singular
  bool direct = true;   // false when found by the fallback search
};

namespace detail {

inline std::optional<PerijWitness> try_witness(const Matrix& m, const Matrix& u, WitnessMode mode) {
  Matrix prod = mode == WitnessMode::MUM ? m * u * m : transpose(u) * m * u;
  if (classify_singularity(prod) != Singularity::SymmetricallySingular) return std::nullopt;
  return PerijWitness{u, mode, std::move(prod), true};
}

/// Rational u (log scale) with a < u < 0 and d + 2u > a, the midpoint of the
/// admissible interval.
inline TropElem gaussian_parameter(const TropElem& a, const TropElem& d) {
  const Rational lo = std::max(a.value(), (a.value() - d.value()) / 2);
  return TropElem::tangible(lo / 2);
}

}  // namespace detail

inline PerijWitness perij_witness(const Matrix& m) {
  if (!(per(m) == TropElem::one())) throw WitnessError("perij_witness: matrix is not in SL_n");
  const DominanceReport dom = dominance(m);
  if (in_SL1(dom, m)) throw WitnessError("perij_witness: matrix is already in SL_n^1");
  const std::size_t n = m.size();
  const Permutation& pi = *dom.strictly_dominant;
  const Permutation pinv = pi.inverse();
  const TropElem one = TropElem::one();

  bool all_one = true;
  for (std::size_t i = 0; i < n; ++i) all_one = all_one && m(i, pi(i)) == one;

  if (all_one) {
    // Some off-track a_{i,pi(j)} >=_nu 1; swap the roles of i and j between
    // the two factors: U = P_rho with rho = (i j) o pi^{-1}.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || nu_less(m(i, pi(j)), one)) continue;
        const Permutation rho = Permutation::transposition(n, i, j).after(pinv);
        if (auto w = detail::try_witness(m, permutation_matrix(rho), WitnessMode::MUM)) return *w;
      }
  } else {
    // Track entries a = a_{i,pi(i)} < 1 < d = a_{j,pi(j)}: a Gaussian on the
    // 2x2 block with a < u < 1 and d u^2 > a.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const TropElem& a = m(i, pi(i));
        const TropElem& d = m(j, pi(j));
        if (!nu_less(a, one) || !nu_greater(d, one)) continue;
        const TropElem u = detail::gaussian_parameter(a, d);
        for (auto [r, c] : {std::pair{j, i}, std::pair{i, j}, std::pair{pi(j), pi(i)},
                            std::pair{pi(i), pi(j)}}) {
          if (r == c) continue;
          if (auto w = detail::try_witness(m, elementary(n, r, c, u), WitnessMode::UtMU)) return *w;
        }
      }
  }

  // Fallback: every permutation matrix (n <= 6) and every Gaussian whose
  // parameter is one of the admissible midpoints.
  std::vector<TropElem> params{TropElem::tangible(Rational{-1, 2})};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && nu_less(m(i, pi(i)), one) && nu_greater(m(j, pi(j)), one))
        params.push_back(detail::gaussian_parameter(m(i, pi(i)), m(j, pi(j))));
  if (n <= 6) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    do {
      if (auto w = detail::try_witness(m, permutation_matrix(Permutation(img)), WitnessMode::MUM)) {
        w->direct = false;
        return *w;
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
  for (const auto& u : params)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) continue;
        if (auto w = detail::try_witness(m, elementary(n, r, c, u), WitnessMode::UtMU)) {
          w->direct = false;
          return *w;
        }
      }

  // Two-parameter U = I + x e_{r,c} + y e_{c,r} with x + y = a - d for track
  // entries a < d. This balances the 2x2 block when the small entry sits
  // below the large one on an anti-diagonal track, where a single Gaussian
  // cannot. y runs over differences of entry values and their midpoints.
  std::vector<Rational> diffs;
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t q = 0; q < n * n; ++q) {
      const TropElem& e = m(p / n, p % n);
      const TropElem& f = m(q / n, q % n);
      if (e.is_nonzero() && f.is_nonzero()) diffs.push_back(e.value() - f.value());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TropElem& a = m(i, pi(i));
      const TropElem& d = m(j, pi(j));
      if (i == j || !nu_less(a, d)) continue;
      const Rational sum = a.value() - d.value();
      std::vector<Rational> ys;
      for (const auto& v : diffs)
        if (sum < v && v < Rational{0}) ys.push_back(v);
      ys.push_back(sum);
      ys.push_back(Rational{0});
      std::sort(ys.begin(), ys.end());
      ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
      std::vector<Rational> cand;
      for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        cand.push_back((ys[k] + ys[k + 1]) / 2);
        if (k > 0) cand.push_back(ys[k]);
      }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          for (const auto& y : cand) {
            Matrix u = Matrix::identity(n);
            u(r, c) = TropElem::tangible(sum - y);
            u(c, r) = TropElem::tangible(y);
            for (auto mode : {WitnessMode::UtMU, WitnessMode::MUM})
              if (auto w = detail::try_witness(m, u, mode)) {
                w->direct = false;
                return *w;
              }
          }
    }

  // Last resort: a fixed-seed sample of U = P_s J P_t with J strictly normal,
  // entries on a 1/8 grid scaled to the spread of M.
  Rational spread{1};
  for (std::size_t p = 0; p < n * n; ++p) {
    const TropElem& e = m(p / n, p % n);
    if (e.is_nonzero()) spread = std::max(spread, e.value() < 0 ? -e.value() : e.value());
  }
  const auto lo = -static_cast<std::int64_t>(16 * boost::rational_cast<double>(spread)) - 8;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> val(lo, -1);
  std::uniform_int_distribution<int> keep(0, 9);
  std::vector<std::size_t> s(n), t(n);
  for (int sample = 0; sample < 20000; ++sample) {
    Matrix j = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c && keep(rng) < 7) j(r, c) = TropElem::tangible(Rational{val(rng), 8});
    std::iota(s.begin(), s.end(), std::size_t{0});
    std::iota(t.begin(), t.end(), std::size_t{0});
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    const Matrix u = permutation_matrix(Permutation(s)) * j * permutation_matrix(Permutation(t));
    for (auto mode : {WitnessMode::UtMU, WitnessMode::MUM})
      if (auto w = detail::try_witness(m, u, mode)) {
        w->direct = false;
        return *w;
      }
  }
  throw WitnessError("perij_witness: no witness found");
}

// ---------------------------------------------------------------------------
// 2x2 generation: M = [[u, u'], [v, v']] with u v' = u' v and u' v >_nu 1 is
// [[1, -inf], [v/u, 1]] * [[u, u'], [-inf, u^{-1}]].

inline std::optional<std::pair<Matrix, Matrix>> bqsl2_factor(const Matrix& m) {
  if (m.size() != 2 || m(0, 0).is_zero()) return std::nullopt;
  const TropElem one = TropElem::one(), zero = TropElem::zero();
  const TropElem& u = m(0, 0);
  const TropElem b = m(1, 0) * inverse(u);
  Matrix lower{{one, zero}, {b, one}};
  Matrix upper{{u, m(0, 1)}, {zero, inverse(u)}};
  if (!(per(lower) == one) || !(per(upper) == one) || !(lower * upper == m)) return std::nullopt;
  return std::pair{std::move(lower), std::move(upper)};
}

}  // namespace suptrop
