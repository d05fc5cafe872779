#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jacrees/errors.hpp"

namespace jacrees {

/// Hard cap on ring arity. Base rings here have at most 3 variables; the
/// widest derived ring (Rees elimination for n = 3 plus an auxiliary
/// intersection variable) needs 9 slots.
inline constexpr int kMaxVars = 12;

/// Exponent vector with a cached total degree. Slots beyond the ring arity
/// stay zero, so divisibility, products and degree work on the full array
/// without knowing the arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }

  static Monomial var(int i, std::uint16_t k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.e == b.e;
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

/// Does a divide b?
inline bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

/// b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

inline std::uint64_t mono_hash(const Monomial& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxVars; ++i) {
    h ^= m.e[i];
    h *= 1099511628211ull;
  }
  return h;
}

/// Total multiplicative monomial order. Every kind keeps 1 as the unique
/// minimum, so Buchberger terminates:
///   lex                  — plain lexicographic, first variable dominant;
///   grevlex              — degree first, ties by smallest exponent in the
///                          last differing variable (the bigger monomial);
///   block_elimination(k) — grevlex on the first k variables, ties broken by
///                          grevlex on the rest; leading terms free of the
///                          front block certify elimination;
///   graded_then_grevlex  — weighted degree first (weights >= 0), ties by
///                          full grevlex. Used with weight 0 on base-ring
///                          variables to keep presentation degrees dominant.
struct MonomialOrder {
  enum class Kind : std::uint8_t { lex, grevlex, block_elimination, graded_then_grevlex };

  Kind kind = Kind::grevlex;
  int front = 0;                  // block_elimination only
  std::vector<int> weights;       // graded_then_grevlex only

  static MonomialOrder lex() { return {Kind::lex, 0, {}}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0, {}}; }

  static MonomialOrder block_elimination(int front_vars) {
    if (front_vars < 0) throw UsageError("negative elimination block");
    return {Kind::block_elimination, front_vars, {}};
  }

  static MonomialOrder graded_then_grevlex(std::vector<int> w) {
    for (int wi : w)
      if (wi < 0) throw UsageError("negative weight in graded order");
    return {Kind::graded_then_grevlex, 0, std::move(w)};
  }

  bool operator==(const MonomialOrder&) const = default;

  /// Stable key for per-order caches.
  std::string key() const {
    switch (kind) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block_elimination: return "block:" + std::to_string(front);
      case Kind::graded_then_grevlex: {
        std::string k = "graded:";
        for (std::size_t i = 0; i < weights.size(); ++i) {
          if (i) k += ',';
          k += std::to_string(weights[i]);
        }
        return k;
      }
    }
    return "?";
  }
};

namespace detail {

inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi,
                             std::uint32_t dega, std::uint32_t degb) {
  if (dega != degb) return dega < degb ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

/// Three-way compare: negative when a comes before (is smaller than) b.
inline int mono_cmp(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  switch (o.kind) {
    case MonomialOrder::Kind::lex:
      for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::grevlex:
      return detail::cmp_grevlex_range(a, b, 0, kMaxVars, a.deg, b.deg);
    case MonomialOrder::Kind::block_elimination: {
      std::uint32_t fa = 0, fb = 0;
      for (int i = 0; i < o.front; ++i) {
        fa += a.e[i];
        fb += b.e[i];
      }
      if (int c = detail::cmp_grevlex_range(a, b, 0, o.front, fa, fb)) return c;
      return detail::cmp_grevlex_range(a, b, o.front, kMaxVars, a.deg - fa, b.deg - fb);
    }
    case MonomialOrder::Kind::graded_then_grevlex: {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < o.weights.size(); ++i) {
        wa += static_cast<long>(o.weights[i]) * a.e[i];
        wb += static_cast<long>(o.weights[i]) * b.e[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return detail::cmp_grevlex_range(a, b, 0, kMaxVars, a.deg, b.deg);
    }
  }
  return 0;
}

inline long weighted_degree(const Monomial& m, const std::vector<int>& w) {
  long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += static_cast<long>(w[i]) * m.e[i];
  return d;
}

}  // namespace jacrees
