#ifndef QBIF_NOISE_HPP
#define QBIF_NOISE_HPP

#include <cstdint>
#include <utility>

#include "qbif/dynamics.hpp"

namespace qbif {

/// The uniform law on the closed disk B(center, radius); radius 0 degenerates
/// to the Dirac mass at the center.
struct DiskLaw {
  cplx center;
  double radius;

  DiskLaw(cplx c, double r) : center(c), radius(r) {
    if (!(r >= 0)) throw InvalidArgument("DiskLaw: radius must be >= 0");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(r))
      throw InvalidArgument("DiskLaw: non-finite parameter");
  }
};

/// Key for a counter-based substream. Distinct (master_seed, stream_index)
/// pairs give statistically independent streams regardless of scheduling.
struct StreamSeed {
  std::uint64_t master_seed = 42;
  std::uint64_t stream_index = 0;

  StreamSeed substream(std::uint64_t offset) const {
    return {master_seed, stream_index + offset};
  }

  friend bool operator==(const StreamSeed&, const StreamSeed&) = default;
};

/// Law-independent unit-disk offset sqrt(u) e^{i theta} for draw `draw_index`
/// of the given stream. The sqrt(u) radial law makes the planar density
/// uniform; sharing the (u, theta) representation across radii couples draws
/// of nested disk laws.
cplx disk_offset(StreamSeed seed, std::uint64_t draw_index);

/// center + radius * disk_offset(seed, draw_index); lies in the closed disk.
cplx sample_disk(const DiskLaw& law, StreamSeed seed, std::uint64_t draw_index);

/// First `length` draws of the stream. Entry n equals
/// sample_disk(law, seed, n), so extending a prefix never changes earlier
/// entries.
NoiseRealization realize_sequence(const DiskLaw& law, StreamSeed seed, int length);

}  // namespace qbif

#endif  // QBIF_NOISE_HPP
