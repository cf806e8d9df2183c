#include "quatinv/apps/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "quatinv/errors.hpp"

namespace quatinv::apps {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& in) {
  std::string tok;
  int ch = 0;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  if (tok.empty()) throw FormatError("ppm: truncated header");
  return tok;
}

std::size_t header_number(std::istream& in, const char* what) {
  const std::string tok = header_token(in);
  if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); })) {
    throw FormatError(std::string("ppm: bad ") + what + " '" + tok + "'");
  }
  return std::stoul(tok);
}

double clamp01(double v) { return std::isfinite(v) ? std::clamp(v, 0.0, 1.0) : 0.0; }

}  // namespace

ColorImage::ColorImage(std::size_t h, std::size_t w)
    : height(h),
      width(w),
      r(RMatrix::Zero(idx(h), idx(w))),
      g(RMatrix::Zero(idx(h), idx(w))),
      b(RMatrix::Zero(idx(h), idx(w))) {}

RMatrix& ColorImage::channel(int c) { return c == 0 ? r : (c == 1 ? g : b); }
const RMatrix& ColorImage::channel(int c) const { return c == 0 ? r : (c == 1 ? g : b); }

ColorImage ColorImage::clamped() const {
  ColorImage out = *this;
  for (int c = 0; c < 3; ++c) out.channel(c) = channel(c).unaryExpr(&clamp01);
  return out;
}

ColorImage read_ppm(std::istream& in) {
  const std::string magic = header_token(in);
  if (magic != "P6" && magic != "P3") throw FormatError("ppm: unsupported magic '" + magic + "'");
  const std::size_t w = header_number(in, "width");
  const std::size_t h = header_number(in, "height");
  const std::size_t maxval = header_number(in, "maxval");
  if (w == 0 || h == 0) throw FormatError("ppm: empty image");
  if (maxval == 0 || maxval > 65535) throw FormatError("ppm: maxval out of range");
  ColorImage img(h, w);
  const double scale = 1.0 / static_cast<double>(maxval);

  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      for (int c = 0; c < 3; ++c) {
        std::size_t v = 0;
        if (magic == "P3") {
          if (!(in >> v)) throw FormatError("ppm: truncated ASCII data");
        } else if (maxval < 256) {
          const int byte = in.get();
          if (byte == EOF) throw FormatError("ppm: truncated binary data");
          v = static_cast<std::size_t>(byte);
        } else {
          const int hi = in.get();
          const int lo = in.get();
          if (lo == EOF || hi == EOF) throw FormatError("ppm: truncated binary data");
          v = static_cast<std::size_t>(hi) * 256 + static_cast<std::size_t>(lo);
        }
        if (v > maxval) throw FormatError("ppm: sample exceeds maxval");
        img.channel(c)(idx(i), idx(j)) = static_cast<double>(v) * scale;
      }
    }
  }
  return img;
}

ColorImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const ColorImage& img, PpmFormat fmt) {
  out << (fmt == PpmFormat::binary ? "P6" : "P3") << '\n'
      << img.width << ' ' << img.height << "\n255\n";
  for (std::size_t i = 0; i < img.height; ++i) {
    for (std::size_t j = 0; j < img.width; ++j) {
      for (int c = 0; c < 3; ++c) {
        const auto v = static_cast<int>(std::lround(clamp01(img.channel(c)(idx(i), idx(j))) * 255));
        if (fmt == PpmFormat::binary) {
          out.put(static_cast<char>(v));
        } else {
          out << v << (c == 2 ? '\n' : ' ');
        }
      }
    }
  }
  if (!out) throw FormatError("ppm: write failed");
}

void write_ppm(const std::filesystem::path& path, const ColorImage& img, PpmFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_ppm(out, img, fmt);
}

QMatrix to_quaternion(const ColorImage& img) {
  return QMatrix::from_imaginary(img.r, img.g, img.b);
}

ColorImage from_quaternion(const QMatrix& x) {
  ColorImage img(x.rows(), x.cols());
  img.r = x.i_part();
  img.g = x.j_part();
  img.b = x.k_part();
  return img.clamped();
}

ColorImage synthetic_image(std::size_t height, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double p1 = phase(rng);
  const double p2 = phase(rng);
  const double p3 = phase(rng);
  ColorImage img(height, width);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < height; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      const double u = static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(height, 1));
      const double v = static_cast<double>(j) / static_cast<double>(std::max<std::size_t>(width, 1));
      const double base = 0.5 + 0.3 * std::sin(two_pi * (u + 0.5 * v) + p1);
      const double d2 = (u - 0.45) * (u - 0.45) + (v - 0.55) * (v - 0.55);
      const double disk = d2 < 0.06 ? 0.15 : 0.0;
      const double wave = 0.5 + 0.3 * std::cos(two_pi * (1.5 * v - u) + p2);
      const double ripple = 0.5 + 0.3 * std::sin(two_pi * 2.0 * (u * v) + p3);
      const auto at = [&](RMatrix& m, double val) {
        m(idx(i), idx(j)) = std::clamp(val, 0.05, 0.95);
      };
      at(img.r, base + disk);
      at(img.g, 0.6 * base + 0.4 * wave - disk);
      at(img.b, 0.5 * base + 0.5 * ripple + 0.5 * disk);
    }
  }
  return img;
}

}  // namespace quatinv::apps
