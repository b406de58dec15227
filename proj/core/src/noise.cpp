#include "qbif/noise.hpp"

#include <cmath>

namespace qbif {

namespace {

// splitmix64 finalizer; full-avalanche 64 -> 64 mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t keyed_word(StreamSeed seed, std::uint64_t draw, std::uint64_t lane) {
  std::uint64_t h = mix64(seed.master_seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (seed.stream_index + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (draw + 0x94d049bb133111ebULL));
  return mix64(h ^ lane);
}

// Uniform in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t w) { return static_cast<double>(w >> 11) * 0x1.0p-53; }

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

cplx disk_offset(StreamSeed seed, std::uint64_t draw_index) {
  const double u = to_unit(keyed_word(seed, draw_index, 0));
  const double theta = kTwoPi * to_unit(keyed_word(seed, draw_index, 1));
  const double rho = std::sqrt(u);
  return {rho * std::cos(theta), rho * std::sin(theta)};
}

cplx sample_disk(const DiskLaw& law, StreamSeed seed, std::uint64_t draw_index) {
  if (law.radius == 0) return law.center;
  return law.center + law.radius * disk_offset(seed, draw_index);
}

NoiseRealization realize_sequence(const DiskLaw& law, StreamSeed seed, int length) {
  if (length < 1) throw InvalidArgument("realize_sequence: length >= 1 required");
  std::vector<cplx> params(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n)
    params[static_cast<std::size_t>(n)] = sample_disk(law, seed, static_cast<std::uint64_t>(n));
  return NoiseRealization(std::move(params), law.center, law.radius);
}

}  // namespace qbif
