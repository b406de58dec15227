#ifndef QBIF_RENDER_HPP
#define QBIF_RENDER_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qbif/noise.hpp"

namespace qbif {

/// Row-major RGB8 image.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

  std::uint8_t* at(int x, int y) {
    return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
};

struct Viewport {
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
};

/// Render the sampled random filled Julia set of one realization: pixels are
/// colored by smooth escape step, black where the orbit survives the horizon.
ImageBuffer render_random_julia(const DiskLaw& law, StreamSeed seed, const Viewport& viewport,
                                int width, int height, int horizon);

/// Mandelbrot membership by escape time (2000 iterations, bailout 2) with
/// circles of the given radii stroked around `center`.
ImageBuffer render_parameter_overlay(cplx center, const std::vector<double>& radii,
                                     const Viewport& viewport, int width, int height);

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by raw RGB bytes.
void write_ppm(const ImageBuffer& image, std::ostream& os);
void write_ppm(const ImageBuffer& image, const std::string& path);

}  // namespace qbif

#endif  // QBIF_RENDER_HPP
