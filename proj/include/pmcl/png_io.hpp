#pragma once

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcl/image.hpp"

namespace pmcl {

inline std::uint16_t quantize_u16(float v) {
  const float c = std::clamp(v, 0.f, 1.f);
  return static_cast<std::uint16_t>(std::lround(c * 65535.0));
}

inline std::uint8_t quantize_u8(float v) {
  const float c = std::clamp(v, 0.f, 1.f);
  return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

/// Writes an RGB image as an 8- or 16-bit PNG. 16-bit samples are stored
/// big-endian per the PNG format.
inline void write_png_rgb(const std::string& path, const ImageRgb& img, int bit_depth = 16) {
  if (bit_depth != 8 && bit_depth != 16) throw std::invalid_argument("png bit depth must be 8 or 16");
  if (img.height <= 0 || img.width <= 0) throw std::invalid_argument("empty image: " + path);
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width) * 3 * (bit_depth / 8));
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("png write failed: " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, img.width, img.height, bit_depth, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int i = 0; i < img.height; ++i) {
    const float* src = img.px(i, 0);
    if (bit_depth == 16) {
      for (int j = 0; j < img.width * 3; ++j) {
        const std::uint16_t q = quantize_u16(src[j]);
        row[2 * j] = static_cast<std::uint8_t>(q >> 8);
        row[2 * j + 1] = static_cast<std::uint8_t>(q & 0xff);
      }
    } else {
      for (int j = 0; j < img.width * 3; ++j) row[j] = quantize_u8(src[j]);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

/// Reads a PNG into a float RGB image in [0, 1]. Grayscale and palette inputs
/// are expanded to RGB; an alpha channel is dropped.
inline ImageRgb read_png_rgb(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("cannot open: " + path);
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  ImageRgb img;
  std::vector<std::uint8_t> row;
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw std::runtime_error("png read failed: " + path);
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  const int h = static_cast<int>(png_get_image_height(png, info));
  const int w = static_cast<int>(png_get_image_width(png, info));
  const int depth = png_get_bit_depth(png, info);
  img = ImageRgb(h, w);
  row.resize(static_cast<std::size_t>(w) * 3 * (depth / 8));
  for (int i = 0; i < h; ++i) {
    png_read_row(png, row.data(), nullptr);
    float* dst = img.px(i, 0);
    if (depth == 16) {
      for (int j = 0; j < w * 3; ++j) {
        const std::uint16_t q = static_cast<std::uint16_t>((row[2 * j] << 8) | row[2 * j + 1]);
        dst[j] = static_cast<float>(q) / 65535.f;
      }
    } else {
      for (int j = 0; j < w * 3; ++j) dst[j] = static_cast<float>(row[j]) / 255.f;
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

/// Writes a 16-bit grayscale PNG from raw u16 samples (row-major).
inline void write_png_gray16(const std::string& path, const std::vector<std::uint16_t>& samples,
                             int height, int width) {
  if (samples.size() != static_cast<std::size_t>(height) * width)
    throw std::invalid_argument("gray16 sample count mismatch");
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * 2);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("png write failed: " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, width, height, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      const std::uint16_t q = samples[static_cast<std::size_t>(i) * width + j];
      row[2 * j] = static_cast<std::uint8_t>(q >> 8);
      row[2 * j + 1] = static_cast<std::uint8_t>(q & 0xff);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

/// Reads a 16-bit grayscale PNG written by write_png_gray16.
inline std::vector<std::uint16_t> read_png_gray16(const std::string& path, int& height, int& width) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("cannot open: " + path);
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  std::vector<std::uint16_t> out;
  std::vector<std::uint8_t> row;
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw std::runtime_error("png read failed: " + path);
  }
  png_init_io(png, fp);
  png_read_info(png, info);
  if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY || png_get_bit_depth(png, info) != 16) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw std::runtime_error("expected 16-bit grayscale png: " + path);
  }
  height = static_cast<int>(png_get_image_height(png, info));
  width = static_cast<int>(png_get_image_width(png, info));
  out.resize(static_cast<std::size_t>(height) * width);
  row.resize(static_cast<std::size_t>(width) * 2);
  for (int i = 0; i < height; ++i) {
    png_read_row(png, row.data(), nullptr);
    for (int j = 0; j < width; ++j)
      out[static_cast<std::size_t>(i) * width + j] =
          static_cast<std::uint16_t>((row[2 * j] << 8) | row[2 * j + 1]);
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return out;
}

}  // namespace pmcl
