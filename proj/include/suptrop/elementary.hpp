#pragma once

// Words in the tropical elementary generators (transpositions, diagonal
// multipliers, Gaussian matrices E_{i,j}(a) = I + a e_{i,j}) and the
// constructive factorization results built on them.

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suptrop/classify.hpp"
#include "suptrop/determinant.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/nabla.hpp"

namespace suptrop {

struct Transposition {
  std::size_t i, j;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

struct DiagMult {
  std::size_t i;
  TropElem a;  // tangible
  friend bool operator==(const DiagMult&, const DiagMult&) = default;
};

struct Gaussian {
  std::size_t i, j;  // i != j
  TropElem a;
  bool is_upper() const { return i < j; }
  bool is_lower() const { return i > j; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

using ElemGen = std::variant<Transposition, DiagMult, Gaussian>;
using ElemWord = std::vector<ElemGen>;

inline Matrix expand(const ElemGen& g, std::size_t n) {
  return std::visit(
      [n](const auto& x) -> Matrix {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Transposition>) {
          return transposition_matrix(n, x.i, x.j);
        } else if constexpr (std::is_same_v<T, DiagMult>) {
          if (x.i >= n) throw ShapeError("diagonal multiplier index out of range");
          if (!x.a.is_tangible()) throw DomainError("diagonal multiplier must be tangible");
          Matrix m = Matrix::identity(n);
          m(x.i, x.i) = x.a;
          return m;
        } else {
          return elementary(n, x.i, x.j, x.a);
        }
      },
      g);
}

/// Left-to-right product of the expanded generators; the empty word is I.
inline Matrix word_product(const ElemWord& w, std::size_t n) {
  Matrix m = Matrix::identity(n);
  for (const auto& g : w) m = m * expand(g, n);
  return m;
}

inline ElemGen transpose(const ElemGen& g) {
  if (const auto* x = std::get_if<Gaussian>(&g)) return Gaussian{x->j, x->i, x->a};
  return g;
}

/// W^t, so that word_product(transpose(W)) = word_product(W)^t.
inline ElemWord transpose(const ElemWord& w) {
  ElemWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(transpose(*it));
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting a word of Gaussians into lower * upper form.

struct LowerUpper {
  ElemWord lower;
  ElemWord upper;
};

struct SteinbergResult {
  std::optional<LowerUpper> form;
  std::size_t steps = 0;
  std::string failure;  // empty on success
};

/// Moves every lower Gaussian left of every upper one using
///   (i)   E_{i,j}(a) E_{k,l}(b) = E_{k,l}(b) E_{i,j}(a)           i != l, j != k
///   (ii)  E_{i,j}(a) E_{j,i}(b) = E_{j,i}(b) E_{i,j}(a)           ab <_nu 1
///   (iii) E_{i,j}(a) E_{j,k}(b) = E_{i,k}(ab) E_{j,k}(b) E_{i,j}(a)  k < i < j
///                               = E_{j,k}(b) E_{i,j}(a) E_{i,k}(ab)  i < k < j
/// The product is re-checked after every step. A pair with no applicable
/// relation, or more than n^2 |w| steps, ends the rewrite with a failure.
inline SteinbergResult steinberg_rewrite(const ElemWord& w, std::size_t n) {
  std::vector<Gaussian> word;
  for (const auto& g : w) {
    const auto* x = std::get_if<Gaussian>(&g);
    if (!x) throw DomainError("steinberg_normal_form: word contains a non-Gaussian generator");
    if (x->i >= n || x->j >= n) throw ShapeError("Gaussian index out of range");
    if (x->i == x->j) throw DomainError("Gaussian matrix E_{i,j} needs i != j");
    if (x->a.is_nonzero()) word.push_back(*x);
  }
  const Matrix target = word_product(w, n);
  if (!(per(target) == TropElem::one()))
    throw DomainError("steinberg_normal_form: word product is not in SL_n");

  auto as_word = [](const std::vector<Gaussian>& gs) { return ElemWord(gs.begin(), gs.end()); };
  SteinbergResult res;
  const std::size_t bound = n * n * std::max<std::size_t>(w.size(), 1);
  for (;;) {
    std::size_t pos = word.size();
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k].is_upper() && word[k + 1].is_lower()) {
        pos = k;
        break;
      }
    if (pos == word.size()) break;
    if (res.steps >= bound) {
      res.failure = "step bound " + std::to_string(bound) + " exhausted";
      return res;
    }
    const Gaussian x = word[pos], y = word[pos + 1];
    std::vector<Gaussian> repl;
    if (x.i != y.j && x.j != y.i) {
      repl = {y, x};
    } else if (y.i == x.j && y.j == x.i) {
      if (!nu_less(x.a * y.a, TropElem::one())) {
        res.failure = "no relation for E_{" + std::to_string(x.i + 1) + "," + std::to_string(x.j + 1) +
                      "}(a) E_{" + std::to_string(y.i + 1) + "," + std::to_string(y.j + 1) +
                      "}(b) with ab >=_nu 1";
        return res;
      }
      repl = {y, x};
    } else if (y.i == x.j) {
      const Gaussian corner{x.i, y.j, x.a * y.a};
      if (y.j < x.i) repl = {corner, y, x};
      else repl = {y, x, corner};
    } else {
      res.failure = "no relation for E_{" + std::to_string(x.i + 1) + "," + std::to_string(x.j + 1) +
                    "} followed by E_{" + std::to_string(y.i + 1) + "," + std::to_string(y.j + 1) + "}";
      return res;
    }
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(pos),
               word.begin() + static_cast<std::ptrdiff_t>(pos + 2));
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
    ++res.steps;
    if (!(word_product(as_word(word), n) == target))
      throw InternalError("steinberg rewrite changed the word product");
  }
  LowerUpper lu;
  for (const auto& g : word) (g.is_lower() ? lu.lower : lu.upper).push_back(g);
  res.form = std::move(lu);
  return res;
}

inline std::optional<LowerUpper> steinberg_normal_form(const ElemWord& w, std::size_t n) {
  return steinberg_rewrite(w, n).form;
}

// ---------------------------------------------------------------------------
// Conjugating a Gaussian by a generalized permutation gives a Gaussian.

inline Gaussian conjugate_gaussian(const GenPerm& p, const Gaussian& g) {
  const std::size_t n = p.size();
  const Matrix m = p.matrix() * elementary(n, g.i, g.j, g.a) * p.inverse().matrix();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && m(r, c).is_nonzero()) return Gaussian{r, c, m(r, c)};
  throw InternalError("conjugated Gaussian has no off-diagonal entry");
}

// ---------------------------------------------------------------------------
// A Gaussian that makes a nonsingular, non-invertible matrix singular.

struct SnsWitness {
  Factored factored;     // A = P A1, A1 definite
  Gaussian definite_gen; // E with per(E A1) = 1^nu
  Gaussian gen;          // P E P^{-1}, with per(gen A) = 1^nu
};

/// For a definite A1 the chosen entry a_{i,j} is one that no longer path
/// from i to j beats (nu(a_{i,j}) = nu(A1^nabla_{i,j})); then
/// E = E_{j,i}(a_{i,j}^{-1}) gives per(E A1) = 1^nu exactly.
inline SnsWitness sns_witness(const Matrix& a) {
  if (!(per(a) == TropElem::one())) throw DomainError("sns_witness: matrix is not in SL_n");
  if (as_gen_perm(a)) throw WitnessError("sns_witness: matrix is invertible");
  Factored f = factor_out(a, Side::Left);
  const Matrix& a1 = f.definite;
  const Matrix a1n = nabla(a1);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a1(i, j).is_zero() || !nu_equiv(a1(i, j), a1n(i, j))) continue;
      const Gaussian e{j, i, inverse(a1(i, j))};
      if (!(per(elementary(n, e.i, e.j, e.a) * a1) == TropElem::ghost(0)))
        throw InternalError("sns_witness: E A1 is not of determinant 1^nu");
      const Gaussian g = conjugate_gaussian(f.perm, e);
      if (!(per(elementary(n, g.i, g.j, g.a) * a) == TropElem::ghost(0)))
        throw InternalError("sns_witness: conjugated E A is not of determinant 1^nu");
      return {std::move(f), e, g};
    }
  throw InternalError("sns_witness: no tight off-diagonal entry in the definite part");
}

// ---------------------------------------------------------------------------
// A^{nabla nabla} = E A with E a word of Gaussians.

struct EdFactorization {
  Factored factored;      // A = P A1
  ElemWord definite_word; // word_product(definite_word) A1 = A1^{nabla nabla}
  ElemWord word;          // word_product(word) A = A^{nabla nabla}
  Matrix target;          // A^{nabla nabla}
};

/// Gaussians E_{i,j}(D_{i,j}) for each entry where D = A1^{nabla nabla}
/// differs from A1: lower ones on the left, upper ones on the right (so the
/// upper entries are applied first), lexicographic inside each block.
inline EdFactorization ed_factor(const Matrix& a) {
  if (!is_nonsingular(a)) throw SingularityError("ed_factor needs a nonsingular matrix");
  EdFactorization r{factor_out(a, Side::Left), {}, {}, nabla2(a)};
  const Matrix& a1 = r.factored.definite;
  const Matrix d = nabla2(a1);
  const std::size_t n = a.size();
  ElemWord lower, upper;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || d(i, j) == a1(i, j)) continue;
      (j < i ? lower : upper).push_back(Gaussian{i, j, d(i, j)});
    }
  r.definite_word = lower;
  r.definite_word.insert(r.definite_word.end(), upper.begin(), upper.end());
  if (!(word_product(r.definite_word, n) * a1 == d))
    throw InternalError("ed_factor: word does not reproduce A1^{nabla nabla}");
  for (const auto& g : r.definite_word)
    r.word.push_back(conjugate_gaussian(r.factored.perm, std::get<Gaussian>(g)));
  if (!(word_product(r.word, n) * a == r.target))
    throw InternalError("ed_factor: conjugated word does not reproduce A^{nabla nabla}");
  return r;
}

/// Mirror image: A word_product(word) = A^{nabla nabla}.
inline EdFactorization ed_factor_right(const Matrix& a) {
  EdFactorization t = ed_factor(transpose(a));
  EdFactorization r{factor_out(a, Side::Right), transpose(t.definite_word), transpose(t.word),
                    transpose(t.target)};
  if (!(a * word_product(r.word, a.size()) == r.target))
    throw InternalError("ed_factor_right: word does not reproduce A^{nabla nabla}");
  return r;
}

// ---------------------------------------------------------------------------
// Triangular splitting and elementary decompositions.

/// For definite M, L = lower triangle and U = upper triangle (both with unit
/// diagonal), returned only when L U = M exactly.
inline std::optional<std::pair<Matrix, Matrix>> lu_attempt(const Matrix& m) {
  if (!is_definite(m)) return std::nullopt;
  const std::size_t n = m.size();
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) l(i, j) = m(i, j);
      if (i < j) u(i, j) = m(i, j);
    }
  if (!(l * u == m)) return std::nullopt;
  return std::pair{std::move(l), std::move(u)};
}

/// Column by column; no cross terms arise, so the product is exactly L.
inline ElemWord lower_word(const Matrix& l) {
  ElemWord w;
  for (std::size_t j = 0; j + 1 < l.size(); ++j)
    for (std::size_t i = j + 1; i < l.size(); ++i)
      if (l(i, j).is_nonzero()) w.push_back(Gaussian{i, j, l(i, j)});
  return w;
}

/// Row by row from the bottom.
inline ElemWord upper_word(const Matrix& u) {
  ElemWord w;
  for (std::size_t i = u.size() - 1; i-- > 0;)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u(i, j).is_nonzero()) w.push_back(Gaussian{i, j, u(i, j)});
  return w;
}

/// P = D P_pi as diagonal multipliers followed by transpositions.
inline ElemWord gen_perm_word(const GenPerm& p) {
  const std::size_t n = p.size();
  ElemWord w;
  for (std::size_t i = 0; i < n; ++i)
    if (!(p.weights()[i] == TropElem::one())) w.push_back(DiagMult{i, p.weights()[i]});
  // A cycle c0 -> c1 -> ... -> c_{m-1} is (c0 c_{m-1}) o ... o (c0 c1), and
  // P_s P_t = P_{t o s}.
  std::vector<bool> seen(n, false);
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    if (seen[c0]) continue;
    seen[c0] = true;
    for (std::size_t c = p.perm()(c0); c != c0; c = p.perm()(c)) {
      seen[c] = true;
      w.push_back(Transposition{c0, c});
    }
  }
  if (!(word_product(w, n) == p.matrix()))
    throw InternalError("gen_perm_word: word does not reproduce the matrix");
  return w;
}

/// A fully elementary word for a nonsingular M whose definite part splits
/// triangularly; nothing otherwise.
inline std::optional<ElemWord> elementary_decomposition(const Matrix& m) {
  if (!is_nonsingular(m)) return std::nullopt;
  const Factored f = factor_out(m, Side::Left);
  const auto lu = lu_attempt(f.definite);
  if (!lu) return std::nullopt;
  ElemWord w = gen_perm_word(f.perm);
  for (auto&& g : lower_word(lu->first)) w.push_back(g);
  for (auto&& g : upper_word(lu->second)) w.push_back(g);
  if (!(word_product(w, m.size()) == m)) return std::nullopt;
  return w;
}

// ---------------------------------------------------------------------------
// E1 A E2 = E3 B E4 for nonsingular A, B.

struct Bridge {
  ElemWord e1;  // word_product(e1) A = A^{nabla nabla}
  Matrix e2;    // B^{nabla nabla}
  Matrix e3;    // A^{nabla nabla}
  ElemWord e4;  // B word_product(e4) = B^{nabla nabla}
  std::optional<ElemWord> e2_word;
  std::optional<ElemWord> e3_word;
  bool fully_elementary() const { return e2_word.has_value() && e3_word.has_value(); }
};

inline Bridge bridge(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "bridge");
  if (!is_nonsingular(a) || !is_nonsingular(b))
    throw SingularityError("bridge needs nonsingular matrices");
  const auto ea = ed_factor(a);
  const auto eb = ed_factor_right(b);
  Bridge r{ea.word, eb.target, ea.target, eb.word, std::nullopt, std::nullopt};
  const std::size_t n = a.size();
  if (!(word_product(r.e1, n) * a * r.e2 == r.e3 * b * word_product(r.e4, n)))
    throw InternalError("bridge: E1 A E2 != E3 B E4");
  r.e2_word = elementary_decomposition(r.e2);
  r.e3_word = elementary_decomposition(r.e3);
  return r;
}

}  // namespace suptrop
