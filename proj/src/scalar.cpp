#include "quademb/scalar.hpp"

#include <charconv>

#include "quademb/error.hpp"

namespace quademb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  bool digits = !s.empty();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '-' && i == 0) continue;
    if (c < '0' || c > '9') digits = false;
  }
  if (!digits || s == "-") throw InputError("not an integer: '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

mpq_class parse_rational(std::string_view s) {
  s = trim(s);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Ring Ring::integers_mod(std::uint32_t m) {
  if (m < 2) throw InputError("modulus must be at least 2");
  return Ring(Kind::IntegersMod, m);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::IntegersMod: return "zmod:" + std::to_string(modulus_);
  }
  return "?";
}

Ring Ring::parse(std::string_view text) {
  text = trim(text);
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("zmod:")) {
    std::uint32_t m = 0;
    const auto digits = text.substr(5);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("bad modulus in ring '" + std::string(text) + "'");
    return integers_mod(m);
  }
  throw InputError("unknown ring '" + std::string(text) + "' (expected z, q or zmod:m)");
}

Scalar::Scalar(Ring ring, long value) : ring_(ring), value_(value) { normalize(); }

Scalar::Scalar(Ring ring, const mpz_class& value) : ring_(ring), value_(value) { normalize(); }

Scalar::Scalar(Ring ring, const mpq_class& value) : ring_(ring), value_(value) {
  value_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  switch (ring_.kind()) {
    case Ring::Kind::Rationals:
      return;
    case Ring::Kind::Integers:
      if (value_.get_den() != 1)
        throw InputError("value " + value_.get_str() + " is not an integer");
      return;
    case Ring::Kind::IntegersMod: {
      const mpz_class m(ring_.modulus());
      mpz_class num = value_.get_num();
      if (value_.get_den() != 1) {
        mpz_class den_inv;
        const mpz_class den = value_.get_den();
        if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
          throw InputError("denominator of " + value_.get_str() + " is not invertible mod " +
                           m.get_str());
        num *= den_inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
      value_ = r;
      return;
    }
  }
}

static void require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring()))
    throw InputError("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(*this, other);
  value_ += other.value_;
  if (ring_.is_modular()) normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_ring(*this, other);
  value_ -= other.value_;
  if (ring_.is_modular()) normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(*this, other);
  value_ *= other.value_;
  if (ring_.is_modular()) normalize();
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  r.value_ = -r.value_;
  if (r.ring_.is_modular()) r.normalize();
  return r;
}

std::optional<Scalar> Scalar::inverse() const {
  switch (ring_.kind()) {
    case Ring::Kind::Integers:
      if (value_ == 1 || value_ == -1) return *this;
      return std::nullopt;
    case Ring::Kind::Rationals:
      if (is_zero()) return std::nullopt;
      return Scalar(ring_, mpq_class(1) / value_);
    case Ring::Kind::IntegersMod: {
      const mpz_class m(ring_.modulus());
      const mpz_class v = value_.get_num();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
      return Scalar(ring_, inv);
    }
  }
  return std::nullopt;
}

std::string Scalar::to_string() const {
  if (ring_.is_modular())
    return value_.get_num().get_str() + " mod " + std::to_string(ring_.modulus());
  return value_.get_str();
}

Scalar Scalar::parse(std::string_view text, Ring ring) {
  text = trim(text);
  const auto mod_pos = text.find(" mod ");
  if (mod_pos != std::string_view::npos) {
    const Ring stated = Ring::integers_mod(static_cast<std::uint32_t>(
        parse_integer(text.substr(mod_pos + 5)).get_ui()));
    if (!(stated == ring))
      throw InputError("scalar '" + std::string(text) + "' does not belong to ring " +
                       ring.name());
    text = text.substr(0, mod_pos);
  }
  return Scalar(ring, parse_rational(text));
}

Scalar Scalar::parse(std::string_view text) {
  text = trim(text);
  const auto mod_pos = text.find(" mod ");
  if (mod_pos != std::string_view::npos) {
    const mpz_class m = parse_integer(text.substr(mod_pos + 5));
    if (m < 2 || !m.fits_uint_p()) throw InputError("bad modulus in '" + std::string(text) + "'");
    return Scalar(Ring::integers_mod(static_cast<std::uint32_t>(m.get_ui())),
                  parse_rational(text.substr(0, mod_pos)));
  }
  if (text.find('/') != std::string_view::npos)
    return Scalar(Ring::rationals(), parse_rational(text));
  return Scalar(Ring::integers(), parse_integer(text));
}

bool is_unit(const Scalar& r) { return r.inverse().has_value(); }

bool is_nonzerodivisor(const Scalar& r) {
  // Z and Q are domains; in the finite ring Z/m the non-zero divisors are the units.
  if (r.ring().is_modular()) return is_unit(r);
  return !r.is_zero();
}

Scalar pow(Scalar base, unsigned exponent) {
  Scalar result = Scalar::one(base.ring());
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

Coords zero_coords(Ring ring, std::size_t n) { return Coords(n, Scalar::zero(ring)); }

Coords unit_coords(Ring ring, std::size_t n, std::size_t index) {
  Coords c = zero_coords(ring, n);
  c.at(index) = Scalar::one(ring);
  return c;
}

Coords parse_coords(std::string_view text, Ring ring) {
  Coords out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Scalar::parse(text.substr(start, comma - start), ring));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace quademb
