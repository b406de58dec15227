#include "qbif/render.hpp"

#include <cmath>
#include <fstream>

#include "qbif/detail/parallel.hpp"
#include "qbif/escape_stats.hpp"

namespace qbif {

namespace {

void smooth_color(double t, std::uint8_t* px) {
  // Sinusoidal palette over the smooth escape count.
  const double v = 0.12 * t;
  px[0] = static_cast<std::uint8_t>(127.5 * (1 + std::sin(v * 2 * M_PI)));
  px[1] = static_cast<std::uint8_t>(127.5 * (1 + std::sin(v * 2 * M_PI + 2.0)));
  px[2] = static_cast<std::uint8_t>(127.5 * (1 + std::sin(v * 2 * M_PI + 4.0)));
}

cplx pixel_point(const Viewport& vp, int width, int height, int x, int y) {
  const double re = vp.xmin + (vp.xmax - vp.xmin) * (x + 0.5) / width;
  const double im = vp.ymax - (vp.ymax - vp.ymin) * (y + 0.5) / height;
  return {re, im};
}

}  // namespace

ImageBuffer render_random_julia(const DiskLaw& law, StreamSeed seed, const Viewport& viewport,
                                int width, int height, int horizon) {
  if (width < 16 || height < 16)
    throw InvalidArgument("render_random_julia: width and height must be >= 16");
  if (!(viewport.xmax > viewport.xmin) || !(viewport.ymax > viewport.ymin))
    throw InvalidArgument("render_random_julia: empty viewport");
  if (horizon < 1) throw InvalidArgument("render_random_julia: horizon >= 1 required");

  const NoiseRealization omega = realize_sequence(law, seed, horizon);
  const double R = escape_radius(law.center, law.radius);
  const double logR = std::log(R);

  ImageBuffer img{width, height, std::vector<std::uint8_t>(3u * width * height, 0)};
  detail::parallel_for(static_cast<std::size_t>(height), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t y = lo; y < hi; ++y) {
      for (int x = 0; x < width; ++x) {
        const cplx z0 = pixel_point(viewport, width, height, x, static_cast<int>(y));
        const OrbitOutcome out = iterate_orbit(z0, omega.view(), R, horizon);
        std::uint8_t* px = img.at(x, static_cast<int>(y));
        if (out.escaped()) {
          const double l = std::log(std::max(out.last_modulus, R * (1 + 1e-12)));
          const double t = out.escape_step + 1 - std::log2(l / logR);
          smooth_color(t, px);
        }
        // survived: stays black
      }
    }
  });
  return img;
}

ImageBuffer render_parameter_overlay(cplx center, const std::vector<double>& radii,
                                     const Viewport& viewport, int width, int height) {
  if (width < 16 || height < 16)
    throw InvalidArgument("render_parameter_overlay: width and height must be >= 16");
  if (!(viewport.xmax > viewport.xmin) || !(viewport.ymax > viewport.ymin))
    throw InvalidArgument("render_parameter_overlay: empty viewport");

  const int iters = 2000;
  const double px_w = (viewport.xmax - viewport.xmin) / width;
  const double px_h = (viewport.ymax - viewport.ymin) / height;
  const double stroke = std::hypot(px_w, px_h);

  // Distinct stroke colors cycled per radius.
  static const std::uint8_t palette[][3] = {
      {230, 60, 60}, {60, 200, 80}, {70, 120, 240}, {240, 200, 40}, {200, 80, 220}};

  ImageBuffer img{width, height, std::vector<std::uint8_t>(3u * width * height, 0)};
  detail::parallel_for(static_cast<std::size_t>(height), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t y = lo; y < hi; ++y) {
      for (int x = 0; x < width; ++x) {
        const cplx q = pixel_point(viewport, width, height, x, static_cast<int>(y));
        std::uint8_t* px = img.at(x, static_cast<int>(y));

        cplx z(0, 0);
        int n = 0;
        while (n < iters && std::norm(z) <= 4.0) {
          z = z * z + q;
          ++n;
        }
        if (n >= iters) {
          px[0] = px[1] = px[2] = 40;  // interior
        } else {
          const double shade = 255.0 * (1.0 - std::exp(-0.06 * n));
          px[0] = px[1] = px[2] = static_cast<std::uint8_t>(shade);
        }

        const double d = std::abs(q - center);
        for (std::size_t i = 0; i < radii.size(); ++i) {
          if (std::abs(d - radii[i]) <= stroke) {
            const auto& col = palette[i % 5];
            px[0] = col[0];
            px[1] = col[1];
            px[2] = col[2];
            break;
          }
        }
      }
    }
  });
  return img;
}

void write_ppm(const ImageBuffer& image, std::ostream& os) {
  os << "P6\n" << image.width << " " << image.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(image.pixels.data()),
           static_cast<std::streamsize>(image.pixels.size()));
}

void write_ppm(const ImageBuffer& image, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidArgument("write_ppm: cannot open " + path);
  write_ppm(image, os);
}

}  // namespace qbif
