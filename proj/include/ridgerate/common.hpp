#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ridgerate {

using Cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Cplx kI{0.0, 1.0};

// Lattice multi-index; unused trailing axes stay zero so the natural
// lexicographic order on the array is the tie-break order everywhere.
using Nu = std::array<int, 3>;

inline constexpr int kMaxDim = 3;

// A point in up to kMaxDim coordinates.
using Point = std::array<double, 3>;

inline Point to_point(std::span<const double> x) {
  Point p{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < x.size() && i < 3; ++i) p[i] = x[i];
  return p;
}

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

inline Cplx unit_phase(double angle_turns) {  // e^{2 pi i * angle_turns}
  return std::polar(1.0, 2.0 * kPi * angle_turns);
}

// Deterministic counter-based generator (splitmix64 over a mixed key).
// Used wherever draws must not depend on thread scheduling.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  std::uint64_t z = mix64(seed ^ mix64(stream ^ mix64(counter)));
  return (z >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace ridgerate
