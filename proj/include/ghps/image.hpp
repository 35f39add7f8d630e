#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ghps {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// 8-bit RGB raster, row 0 at the top.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 3

  Image() = default;
  Image(int w, int h, Rgb fill = {});

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }

  /// Copy `src` with its top-left corner at (x0, y0), clipped to this image.
  void blit(const Image& src, int x0, int y0);
  Image crop(int x0, int y0, int w, int h) const;

  bool operator==(const Image&) const = default;
};

enum class ImageFormat { kPng, kPpm };

bool png_available();

/// Binary PPM (P6).
std::vector<std::uint8_t> encode_ppm(const Image& img);

/// Throws std::runtime_error when the build has no PNG support.
std::vector<std::uint8_t> encode_png(const Image& img);

std::vector<std::uint8_t> encode_image(const Image& img, ImageFormat format);

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

ImageFormat parse_image_format(const std::string& name);

}  // namespace ghps
