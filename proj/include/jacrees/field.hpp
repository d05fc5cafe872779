#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "jacrees/errors.hpp"

namespace jacrees {

enum class FieldKind : std::uint8_t { rationals, prime_field };

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Which exact coefficient field a computation runs over.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t characteristic = 0;  // prime p for GF(p), 0 for Q

  static FieldSpec rationals() { return {}; }

  static FieldSpec gf(std::uint32_t p) {
    if (p <= 2 || !is_prime_u32(p))
      throw UsageError("field characteristic must be a prime > 2, got " + std::to_string(p));
    return {FieldKind::prime_field, p};
  }

  /// Accepts "q" or "gf:<p>".
  static FieldSpec parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
      unsigned long p = 0;
      try {
        p = std::stoul(text.substr(3));
      } catch (const std::exception&) {
        throw UsageError("bad field spec '" + text + "'");
      }
      if (p > 0xffffffffUL) throw UsageError("prime too large in '" + text + "'");
      return gf(static_cast<std::uint32_t>(p));
    }
    throw UsageError("bad field spec '" + text + "' (expected 'q' or 'gf:<p>')");
  }

  std::string to_string() const {
    return kind == FieldKind::rationals ? "q" : "gf:" + std::to_string(characteristic);
  }

  bool operator==(const FieldSpec&) const = default;
};

/// Q with arbitrary-precision values. mpq_class keeps every value canonical
/// (gcd(num, den) = 1, den > 0), which is exactly the invariant we need.
class RationalField {
 public:
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const { return Elem(n); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem inv(const Elem& a) const {
    if (a == 0) throw ArithError("inversion of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_negative(const Elem& a) const { return a < 0; }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string(const Elem& a) const { return a.get_str(); }

  mpq_class to_rational(const Elem& a) const { return a; }
};

/// GF(p) for an odd prime p, residues stored in [0, p). p < 2^31 so that
/// sums never overflow and products fit in 64 bits.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p <= 2 || !is_prime_u32(p))
      throw UsageError("field characteristic must be a prime > 2, got " + std::to_string(p));
    if (p >= (1u << 31)) throw UsageError("prime too large for machine-word field");
  }

  FieldSpec spec() const { return FieldSpec::gf(p_); }
  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem from_long(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class r = den % p_;
    Elem d = static_cast<Elem>(r.get_ui());
    if (d == 0) throw ArithError("denominator vanishes mod " + std::to_string(p_));
    mpz_class n = num % p_;
    if (n < 0) n += p_;
    return mul(static_cast<Elem>(n.get_ui()), inv(d));
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem inv(Elem a) const {
    if (a == 0) throw ArithError("inversion of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }
  bool is_negative(Elem) const { return false; }  // residues carry no sign

  /// "k mod p".
  std::string to_string(Elem a) const {
    return std::to_string(a) + " mod " + std::to_string(p_);
  }

 private:
  std::uint32_t p_;
};

/// Community-conventional default prime for the fast mode; large enough that
/// no corpus member has total degree anywhere near it.
inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace jacrees
