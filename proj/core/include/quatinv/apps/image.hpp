#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "quatinv/qmatrix.hpp"

namespace quatinv::apps {

/// RGB image with channel samples in [0, 1], one real plane per channel.
struct ColorImage {
  std::size_t height = 0;
  std::size_t width = 0;
  RMatrix r, g, b;

  ColorImage() = default;
  ColorImage(std::size_t h, std::size_t w);

  RMatrix& channel(int c);
  const RMatrix& channel(int c) const;
  /// Copy with every sample clamped to [0, 1] (non-finite samples become 0).
  ColorImage clamped() const;
};

enum class PpmFormat { binary, ascii };

/// Reads P6 (binary) or P3 (ASCII) PPM; samples are mapped linearly from
/// [0, maxval] to [0, 1]. Throws FormatError on malformed input.
ColorImage read_ppm(std::istream& in);
ColorImage read_ppm(const std::filesystem::path& path);

/// Writes maxval 255; samples are clamped and rounded.
void write_ppm(std::ostream& out, const ColorImage& img, PpmFormat fmt = PpmFormat::binary);
void write_ppm(const std::filesystem::path& path, const ColorImage& img,
               PpmFormat fmt = PpmFormat::binary);

/// X = R i + G j + B k.
QMatrix to_quaternion(const ColorImage& img);
/// Channels from the i, j, k parts; the real part is dropped. Clamped to [0, 1].
ColorImage from_quaternion(const QMatrix& x);

/// Deterministic smooth test image with correlated channels.
ColorImage synthetic_image(std::size_t height, std::size_t width, std::uint64_t seed = 0);

}  // namespace quatinv::apps
