#pragma once

// Tropical determinant (permanent), bideterminant, dominant permutations and
// an optimal-assignment evaluation of the permanent.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/semiring.hpp"

namespace suptrop {

/// Largest dimension for which per/bid/dominance are evaluated exactly over
/// all permutations. Beyond it only per_assignment is available.
inline constexpr std::size_t kEnumerationBound = 10;

struct BidResult {
  TropElem per_plus;   // sum over even permutations
  TropElem per_minus;  // sum over odd permutations
  TropElem per;        // per_plus + per_minus

  SymPair pair() const { return {per_plus, per_minus}; }
  friend bool operator==(const BidResult&, const BidResult&) = default;
};

namespace detail {

inline void require_enumerable(const Matrix& a, const char* what) {
  if (a.size() > kEnumerationBound) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(a.size()) +
                      " exceeds the enumeration bound " + std::to_string(kEnumerationBound) +
                      "; use per_assignment");
  }
}

// Rows are assigned in order; dp[mask] holds the (even, odd) sums over all
// injections of rows 0..|mask|-1 onto the columns in mask. Assigning row r to
// column c adds one inversion per already-used column larger than c.
inline BidResult bideterminant_by_subsets(const Matrix& a) {
  const std::size_t n = a.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<SymPair> dp(std::size_t{full} + 1);
  dp[0] = {TropElem::one(), TropElem::zero()};
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const SymPair cur = dp[mask];
    if (cur.pos.is_zero() && cur.neg.is_zero()) continue;
    const auto r = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if ((mask & bit) || a(r, c).is_zero()) continue;
      const int inversions = std::popcount(mask >> (c + 1));
      SymPair term{cur.pos * a(r, c), cur.neg * a(r, c)};
      if (inversions % 2) std::swap(term.pos, term.neg);
      dp[mask | bit] = dp[mask | bit] + term;
    }
  }
  const SymPair& res = dp[full];
  return {res.pos, res.neg, res.pos + res.neg};
}

}  // namespace detail

/// Bideterminant (per^+, per^-) and the permanent.
inline BidResult bid(const Matrix& a) {
  detail::require_enumerable(a, "bid");
  return detail::bideterminant_by_subsets(a);
}

/// Tropical determinant: the permanent sum over all permutations of the
/// diagonal products.
inline TropElem per(const Matrix& a) {
  detail::require_enumerable(a, "per");
  return detail::bideterminant_by_subsets(a).per;
}

/// Product a_{0,pi(0)} ... a_{n-1,pi(n-1)}.
inline TropElem track_product(const Matrix& a, const Permutation& p) {
  TropElem prod = TropElem::one();
  for (std::size_t i = 0; i < a.size(); ++i) prod *= a(i, p(i));
  return prod;
}

enum class Singularity { Nonsingular, Singular, SymmetricallySingular };

inline const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::Nonsingular: return "nonsingular";
    case Singularity::Singular: return "singular";
    case Singularity::SymmetricallySingular: return "symmetrically_singular";
  }
  return "?";
}

/// Symmetric singularity implies singularity, so the classes are reported
/// from most to least specific.
inline Singularity classify_singularity(const Matrix& a) {
  const BidResult b = bid(a);
  if (in_circ(b.pair())) return Singularity::SymmetricallySingular;
  return b.per.is_tangible() ? Singularity::Nonsingular : Singularity::Singular;
}

inline bool is_nonsingular(const Matrix& a) { return per(a).is_tangible(); }

struct DominanceReport {
  TropElem value;  // nu(per(A))
  std::vector<Permutation> dominant;
  std::optional<Permutation> strictly_dominant;
  std::optional<Permutation> uniformly_dominant;
};

/// Strictly dominant pi with equal entries along its track, each of which
/// nu-dominates the rest of its row.
inline bool is_uniform_track(const Matrix& a, const Permutation& p) {
  const TropElem& first = a(0, p(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a(i, p(i)) == first)) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != p(i) && !nu_less(a(i, j), a(i, p(i)))) return false;
  }
  return true;
}

/// All permutations whose track product is nu-equivalent to per(A). When
/// per(A) = -inf no permutation is reported.
inline DominanceReport dominance(const Matrix& a) {
  detail::require_enumerable(a, "dominance");
  const std::size_t n = a.size();
  DominanceReport rep;
  rep.value = per(a).nu();
  if (rep.value.is_zero()) return rep;
  const Rational target = rep.value.value();

  // Upper bound on what rows i..n-1 can still contribute.
  std::vector<std::optional<Rational>> row_max(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_nonzero() && (!row_max[i] || *row_max[i] < a(i, j).value()))
        row_max[i] = a(i, j).value();
  std::vector<Rational> suffix(n + 1, Rational{0});
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + row_max[i].value_or(Rational{0});

  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, std::size_t row, const Rational& partial) -> void {
    if (row == n) {
      if (partial == target) rep.dominant.emplace_back(img);
      return;
    }
    if (partial + suffix[row] < target) return;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || a(row, c).is_zero()) continue;
      used[c] = true;
      img[row] = c;
      self(self, row + 1, partial + a(row, c).value());
      used[c] = false;
    }
  };
  dfs(dfs, 0, Rational{0});
  std::sort(rep.dominant.begin(), rep.dominant.end());

  if (rep.dominant.size() == 1) {
    rep.strictly_dominant = rep.dominant.front();
    if (is_uniform_track(a, rep.dominant.front())) rep.uniformly_dominant = rep.dominant.front();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Optimal assignment.

namespace detail {

struct Assignment {
  Rational value;
  std::vector<std::size_t> col_of_row;
};

using WeightGrid = std::vector<std::vector<std::optional<Rational>>>;

inline bool has_perfect_matching(const WeightGrid& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> match_col(n, n);
  auto augment = [&](auto&& self, std::size_t r, std::vector<bool>& seen) -> bool {
    for (std::size_t c = 0; c < n; ++c) {
      if (!w[r][c] || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] == n || self(self, match_col[c], seen)) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (!augment(augment, r, seen)) return false;
  }
  return true;
}

// Maximum-weight perfect matching restricted to present edges (Hungarian
// method with potentials, exact arithmetic).
inline std::optional<Assignment> max_assignment(const WeightGrid& w) {
  const std::size_t n = w.size();
  if (!has_perfect_matching(w)) return std::nullopt;

  // Missing edges get a weight low enough that no optimum can use them.
  Rational lo{0}, hi{0};
  bool first = true;
  for (const auto& row : w)
    for (const auto& x : row)
      if (x) {
        if (first || *x < lo) lo = *x;
        if (first || hi < *x) hi = *x;
        first = false;
      }
  const auto nn = static_cast<std::int64_t>(n);
  const Rational forbidden = lo * nn - hi * (nn - 1) - 1;

  // Costs are negated weights; 1-based arrays as in the classical layout.
  std::vector<std::vector<Rational>> cost(n + 1, std::vector<Rational>(n + 1, Rational{0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i + 1][j + 1] = -(w[i][j] ? *w[i][j] : forbidden);

  std::vector<Rational> u(n + 1, Rational{0}), v(n + 1, Rational{0});
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Rational cur = cost[i0][j] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment res;
  res.col_of_row.assign(n, 0);
  res.value = Rational{0};
  for (std::size_t j = 1; j <= n; ++j) res.col_of_row[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) res.value += *w[i][res.col_of_row[i]];
  return res;
}

}  // namespace detail

/// Permanent via a maximum-weight assignment on nu-values. The result is
/// tangible iff the optimal assignment is unique (checked by forbidding each
/// chosen edge and re-solving) and all of its entries are tangible.
inline TropElem per_assignment(const Matrix& a) {
  const std::size_t n = a.size();
  detail::WeightGrid w(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_nonzero()) w[i][j] = a(i, j).value();

  const auto best = detail::max_assignment(w);
  if (!best) return TropElem::zero();

  bool tangible = true;
  for (std::size_t i = 0; i < n && tangible; ++i)
    tangible = a(i, best->col_of_row[i]).is_tangible();
  for (std::size_t i = 0; i < n && tangible; ++i) {
    auto saved = w[i][best->col_of_row[i]];
    w[i][best->col_of_row[i]].reset();
    const auto alt = detail::max_assignment(w);
    if (alt && alt->value == best->value) tangible = false;
    w[i][best->col_of_row[i]] = saved;
  }
  return tangible ? TropElem::tangible(best->value) : TropElem::ghost(best->value);
}

}  // namespace suptrop
