#pragma once

// Supertropical scalars over exact rationals, in logarithmic notation:
// the multiplicative unit is the tangible 0, the additive unit is -inf,
// tropical multiplication is rational addition and tropical addition keeps
// the nu-larger argument (a tie produces a ghost).

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "suptrop/errors.hpp"

namespace suptrop {

using Rational = boost::rational<std::int64_t>;

enum class Kind : std::uint8_t { Zero, Tangible, Ghost };

class TropElem {
 public:
  /// Default-constructs the additive identity (-inf).
  constexpr TropElem() = default;

  static TropElem zero() { return TropElem{}; }
  static TropElem one() { return TropElem{Kind::Tangible, Rational{0}}; }
  static TropElem tangible(Rational v) { return TropElem{Kind::Tangible, v}; }
  static TropElem ghost(Rational v) { return TropElem{Kind::Ghost, v}; }
  static TropElem tangible(std::int64_t v) { return tangible(Rational{v}); }
  static TropElem ghost(std::int64_t v) { return ghost(Rational{v}); }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_tangible() const noexcept { return kind_ == Kind::Tangible; }
  bool is_ghost() const noexcept { return kind_ == Kind::Ghost; }
  /// Tangible or ghost, i.e. not -inf.
  bool is_nonzero() const noexcept { return kind_ != Kind::Zero; }

  /// Log-scale value. Meaningless for zero (returns 0).
  const Rational& value() const noexcept { return value_; }

  /// The ghost map.
  TropElem nu() const { return is_zero() ? *this : ghost(value_); }

  friend bool operator==(const TropElem& a, const TropElem& b) {
    if (a.kind_ != b.kind_) return false;
    return a.is_zero() || a.value_ == b.value_;
  }

 private:
  TropElem(Kind k, Rational v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::Zero;
  Rational value_{0};
};

// ---------------------------------------------------------------------------
// nu-order. Zero is below everything, otherwise compare log-values.

inline std::strong_ordering nu_compare(const TropElem& a, const TropElem& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_nonzero() <=> b.is_nonzero();
  }
  if (a.value() < b.value()) return std::strong_ordering::less;
  if (b.value() < a.value()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool nu_equiv(const TropElem& a, const TropElem& b) { return nu_compare(a, b) == 0; }
inline bool nu_less(const TropElem& a, const TropElem& b) { return nu_compare(a, b) < 0; }
inline bool nu_leq(const TropElem& a, const TropElem& b) { return nu_compare(a, b) <= 0; }
inline bool nu_greater(const TropElem& a, const TropElem& b) { return nu_compare(a, b) > 0; }
inline bool nu_geq(const TropElem& a, const TropElem& b) { return nu_compare(a, b) >= 0; }

// ---------------------------------------------------------------------------
// Arithmetic.

inline TropElem operator+(const TropElem& a, const TropElem& b) {
  const auto c = nu_compare(a, b);
  if (c > 0) return a;
  if (c < 0) return b;
  return a.nu();
}

inline TropElem& operator+=(TropElem& a, const TropElem& b) { return a = a + b; }

inline TropElem operator*(const TropElem& a, const TropElem& b) {
  if (a.is_zero() || b.is_zero()) return TropElem::zero();
  const Rational v = a.value() + b.value();
  return (a.is_ghost() || b.is_ghost()) ? TropElem::ghost(v) : TropElem::tangible(v);
}

inline TropElem& operator*=(TropElem& a, const TropElem& b) { return a = a * b; }

/// Multiplicative inverse. Ghosts are inverted to ghosts (nu-compatible
/// extension; the semifield itself only inverts tangibles).
inline TropElem inverse(const TropElem& a) {
  if (a.is_zero()) throw DomainError("cannot invert the zero element -inf");
  return a.is_ghost() ? TropElem::ghost(-a.value()) : TropElem::tangible(-a.value());
}

/// Square root: halves the log-value, keeping the variant.
inline TropElem sqrt(const TropElem& a) {
  if (a.is_zero()) return a;
  const Rational v = a.value() / 2;
  return a.is_ghost() ? TropElem::ghost(v) : TropElem::tangible(v);
}

/// a^k for k >= 0.
inline TropElem power(const TropElem& a, unsigned k) {
  if (k == 0) return TropElem::one();
  if (a.is_zero()) return a;
  const Rational v = a.value() * static_cast<std::int64_t>(k);
  return a.is_ghost() ? TropElem::ghost(v) : TropElem::tangible(v);
}

/// Ghost surpassing, a |=gs b: a = b + g for some g in the ghost ideal.
/// Closed form: a == b, or a is a ghost with nu(a) >= nu(b).
inline bool ghost_surpasses(const TropElem& a, const TropElem& b) {
  if (a == b) return true;
  return a.is_ghost() && nu_geq(a, b);
}

// ---------------------------------------------------------------------------
// Text form: "-inf" (or "_") for zero, a rational literal for a tangible,
// the same literal with a trailing 'v' for a ghost.

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline std::string to_string(const TropElem& a) {
  if (a.is_zero()) return "-inf";
  std::string s = to_string(a.value());
  if (a.is_ghost()) s += 'v';
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const TropElem& a) { return os << to_string(a); }

namespace detail {

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

inline std::optional<Rational> parse_rational(std::string_view s) {
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(s.substr(0, slash));
    auto den = parse_int(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational{*num, *den};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') {
      return std::nullopt;
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    auto w = (whole.empty() || whole == "-" || whole == "+") ? std::optional<std::int64_t>{0}
                                                              : parse_int(whole);
    auto f = parse_int(frac);
    if (!w || !f) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational{*w} + Rational{*f, scale} * (negative || *w < 0 ? -1 : 1);
    return r;
  }
  auto v = parse_int(s);
  if (!v) return std::nullopt;
  return Rational{*v};
}

}  // namespace detail

/// Parses one scalar token; returns nullopt on malformed input.
inline std::optional<TropElem> try_parse_scalar(std::string_view tok) {
  if (tok == "_" || tok == "-inf") return TropElem::zero();
  bool ghost = false;
  if (!tok.empty() && tok.back() == 'v') {
    ghost = true;
    tok.remove_suffix(1);
  }
  auto r = detail::parse_rational(tok);
  if (!r) return std::nullopt;
  return ghost ? TropElem::ghost(*r) : TropElem::tangible(*r);
}

inline TropElem parse_scalar(std::string_view tok) {
  auto v = try_parse_scalar(tok);
  if (!v) throw ParseError("bad scalar token '" + std::string(tok) + "'", 1, 1);
  return *v;
}

// ---------------------------------------------------------------------------
// Symmetrized semiring: (positive, negative) pairs with the twisted product.

struct SymPair {
  TropElem pos;
  TropElem neg;

  friend bool operator==(const SymPair&, const SymPair&) = default;
};

inline SymPair operator+(const SymPair& p, const SymPair& q) {
  return {p.pos + q.pos, p.neg + q.neg};
}

inline SymPair operator*(const SymPair& p, const SymPair& q) {
  return {p.pos * q.pos + p.neg * q.neg, p.pos * q.neg + p.neg * q.pos};
}

/// The homomorphism onto the supertropical semiring, (a, b) -> a + b.
inline TropElem collapse(const SymPair& p) { return p.pos + p.neg; }

/// Membership in the ideal R° of balanced pairs.
inline bool in_circ(const SymPair& p) { return nu_equiv(p.pos, p.neg); }

/// p >=° q: p = q + (c1, c2) for some c1 nu-equivalent to c2.
inline bool sym_surpasses(const SymPair& p, const SymPair& q) {
  if (p == q) return true;  // c = (-inf, -inf)
  // A nonzero balancing pair has a common log-value x. Adding an element of
  // value x to a slot s gives s itself (x < nu(s)), the ghost of x
  // (x == nu(s)), or either variant at x (x > nu(s)). The only useful
  // values of x are those appearing in p.
  auto reachable = [](const TropElem& target, const TropElem& base, const Rational& x) {
    const TropElem probe = TropElem::tangible(x);
    const auto c = nu_compare(probe, base);
    if (c < 0) return target == base;
    if (c == 0) return target == TropElem::ghost(x);
    return target.is_nonzero() && target.value() == x;
  };
  for (const TropElem* slot : {&p.pos, &p.neg}) {
    if (slot->is_zero()) continue;
    const Rational x = slot->value();
    if (reachable(p.pos, q.pos, x) && reachable(p.neg, q.neg, x)) return true;
  }
  return false;
}

inline std::ostream& operator<<(std::ostream& os, const SymPair& p) {
  return os << '(' << p.pos << ", " << p.neg << ')';
}

}  // namespace suptrop
