#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace secant {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest prime below 2^30. Products of two residues fit in 64 bits.
inline constexpr std::uint32_t kDefaultPrime = 1073741789u;
/// Second fixed prime used to recompute every prime-field rank.
inline constexpr std::uint32_t kSecondPrime = 1073741783u;

bool is_prime(std::uint64_t n);

/// Canonical "num/den" text form (denominator always written).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "n", "n/d" and surrounding whitespace. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Element of the prime field F_p. The modulus travels with the value so
/// generic code can build constants; mixing moduli throws InvalidInput.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p);

  static ModP from_rational(const Rational& q, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  ModP inverse() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o);
  ModP operator-() const;

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP&, const ModP&) = default;

 private:
  void check_same_field(const ModP& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

/// Runtime description of the scalar field a tensor or evaluation lives in.
struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_rational(const Rational& q) const { return q; }
  Rational from_integer(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
  using value_type = ModP;
  std::uint32_t p = kDefaultPrime;
  ModP zero() const { return ModP(0, p); }
  ModP one() const { return ModP(1, p); }
  ModP from_rational(const Rational& q) const { return ModP::from_rational(q, p); }
  ModP from_integer(std::int64_t v) const { return ModP(v, p); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

using ScalarDomain = std::variant<RationalField, PrimeField>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

/// Text form used in JSON: "num/den" for rationals, decimal residue for F_p.
inline std::string scalar_text(const Rational& q) { return to_string(q); }
inline std::string scalar_text(const ModP& x) { return std::to_string(x.value()); }

/// Field of an existing value (for generic code that only has elements).
inline RationalField field_of(const Rational&) { return {}; }
inline PrimeField field_of(const ModP& x) { return PrimeField{x.modulus()}; }

/// Modular arithmetic on raw residues, used by the sparse eliminator.
struct Residues {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t v) const;
  std::uint32_t reduce(const Rational& q) const;
};

}  // namespace secant
