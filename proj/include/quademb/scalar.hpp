#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quademb {

/// One of the supported commutative base rings: Z, Q or Z/m.
class Ring {
 public:
  enum class Kind : std::uint8_t { Integers, Rationals, IntegersMod };

  Ring() = default;

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers_mod(std::uint32_t m);

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_modular() const { return kind_ == Kind::IntegersMod; }
  /// Z and Q embed in a field (Q) where ranks are computed.
  bool has_fraction_field() const { return kind_ != Kind::IntegersMod; }

  /// "z", "q" or "zmod:m".
  std::string name() const;
  static Ring parse(std::string_view text);

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::uint32_t m) : kind_(k), modulus_(m) {}

  Kind kind_ = Kind::Integers;
  std::uint32_t modulus_ = 0;
};

/// Exact ring element. Rationals are kept in lowest terms with a positive
/// denominator; modular values are canonical representatives in [0, m).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Ring ring, long value);
  Scalar(Ring ring, const mpz_class& value);
  /// Throws InputError when `value` has no image in `ring` (e.g. 1/2 in Z).
  Scalar(Ring ring, const mpq_class& value);

  static Scalar zero(Ring ring) { return Scalar(ring, 0L); }
  static Scalar one(Ring ring) { return Scalar(ring, 1L); }

  const Ring& ring() const { return ring_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  std::optional<Scalar> inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

  /// "-7", "3/4" or "5 mod 6".
  std::string to_string() const;
  static Scalar parse(std::string_view text, Ring ring);
  /// Infers the ring: "a mod m" is modular, "p/q" rational, otherwise Z.
  static Scalar parse(std::string_view text);

 private:
  void normalize();

  Ring ring_;
  mpq_class value_;
};

bool is_unit(const Scalar& r);
bool is_nonzerodivisor(const Scalar& r);
Scalar pow(Scalar base, unsigned exponent);

using Coords = std::vector<Scalar>;

Coords zero_coords(Ring ring, std::size_t n);
Coords unit_coords(Ring ring, std::size_t n, std::size_t index);
/// Parses "1,2,-3" or "1/2,3" into coordinates over `ring`.
Coords parse_coords(std::string_view text, Ring ring);

}  // namespace quademb
