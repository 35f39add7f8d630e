#include "ghps/image.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#ifdef GHPS_HAVE_PNG
#include <png.h>
#endif

namespace ghps {

Image::Image(int w, int h, Rgb fill) : width(w), height(h), pixels(std::size_t(w) * h * 3) {
  if (w < 0 || h < 0) throw std::invalid_argument("image dimensions must be non-negative");
  for (std::size_t k = 0; k < pixels.size(); k += 3) {
    pixels[k] = fill.r;
    pixels[k + 1] = fill.g;
    pixels[k + 2] = fill.b;
  }
}

Rgb Image::at(int x, int y) const {
  const std::size_t k = (std::size_t(y) * width + x) * 3;
  return {pixels[k], pixels[k + 1], pixels[k + 2]};
}

void Image::set(int x, int y, Rgb c) {
  if (!contains(x, y)) return;
  const std::size_t k = (std::size_t(y) * width + x) * 3;
  pixels[k] = c.r;
  pixels[k + 1] = c.g;
  pixels[k + 2] = c.b;
}

void Image::blit(const Image& src, int x0, int y0) {
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x) set(x0 + x, y0 + y, src.at(x, y));
}

Image Image::crop(int x0, int y0, int w, int h) const {
  Image out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (contains(x0 + x, y0 + y)) out.set(x, y, at(x0 + x, y0 + y));
  return out;
}

bool png_available() {
#ifdef GHPS_HAVE_PNG
  return true;
#else
  return false;
#endif
}

std::vector<std::uint8_t> encode_ppm(const Image& img) {
  const std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

#ifdef GHPS_HAVE_PNG
namespace {

void append_png_data(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void flush_nothing(png_structp) {}

}  // namespace
#endif

std::vector<std::uint8_t> encode_png(const Image& img) {
#ifdef GHPS_HAVE_PNG
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  std::vector<std::uint8_t> out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("PNG encoding failed");
  }
  png_set_write_fn(png, &out, append_png_data, flush_nothing);
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(img.pixels.data() + std::size_t(y) * img.width * 3));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
#else
  (void)img;
  throw std::runtime_error("this build has no PNG support; use the ppm format");
#endif
}

std::vector<std::uint8_t> encode_image(const Image& img, ImageFormat format) {
  return format == ImageFormat::kPng ? encode_png(img) : encode_ppm(img);
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

ImageFormat parse_image_format(const std::string& name) {
  if (name == "png") return ImageFormat::kPng;
  if (name == "ppm") return ImageFormat::kPpm;
  throw std::invalid_argument("unknown image format '" + name + "' (expected png or ppm)");
}

}  // namespace ghps
