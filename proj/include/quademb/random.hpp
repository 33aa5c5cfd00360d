#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "quademb/scalar.hpp"

namespace quademb {

/// Seed for sample `index` of the check named `tag` under a run seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) h = (h ^ c) * 1099511628211ULL;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1) + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]. Implemented directly on the engine output so the
  /// stream does not depend on the standard library's distributions.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

  /// Small ring element: an integer in [lo, hi]; over Q sometimes a fraction
  /// with denominator 2 or 3.
  Scalar scalar(const Ring& ring, long lo = -3, long hi = 3) {
    const long num = integer(lo, hi);
    if (ring.kind() == Ring::Kind::Rationals && integer(0, 3) == 0)
      return Scalar(ring, mpq_class(num, integer(2, 3)));
    return Scalar(ring, num);
  }

  Coords coords(const Ring& ring, std::size_t n, long lo = -3, long hi = 3) {
    Coords out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(ring, lo, hi));
    return out;
  }

  Coords integer_coords(const Ring& ring, std::size_t n, long lo, long hi) {
    Coords out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(Scalar(ring, integer(lo, hi)));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quademb
