#pragma once

#include <bit>
#include <cstdint>

namespace quademb {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity parity_of_mask(std::uint32_t mask) {
  return (std::popcount(mask) & 1) ? Parity::Odd : Parity::Even;
}

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Three-valued outcome for checks whose hypothesis may not apply.
enum class Verdict : std::uint8_t { Holds, Fails, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace quademb
