// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// PNG/JPEG decoding and grayscale PNG encoding. Decoding is delegated to
// libpng/libjpeg; the rest of the library only sees RgbImage/GrayImage.

#pragma once

#include <csetjmp>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "asciigen/core.hpp"
#include "asciigen/io/binary.hpp"
#include "asciigen/preprocess.hpp"

namespace asciigen::io {

inline RgbImage decode_png(const std::vector<std::uint8_t>& data) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, data.data(), data.size()))
    throw std::runtime_error(std::string("png decode failed: ") + img.message);
  img.format = PNG_FORMAT_RGB;
  RgbImage out;
  out.width = static_cast<int>(img.width);
  out.height = static_cast<int>(img.height);
  out.pixels.resize(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, out.pixels.data(), 0, nullptr)) {
    png_image_free(&img);
    throw std::runtime_error(std::string("png decode failed: ") + img.message);
  }
  return out;
}

namespace detail {
struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};
inline void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(err->jump, 1);
}
}  // namespace detail

inline RgbImage decode_jpeg(const std::vector<std::uint8_t>& data) {
  jpeg_decompress_struct cinfo{};
  detail::JpegErrorMgr err{};
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = detail::jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error("jpeg decode failed");
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, data.data(), static_cast<unsigned long>(data.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  RgbImage out;
  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() +
                   static_cast<std::size_t>(cinfo.output_scanline) * out.width * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

// Sniffs PNG/JPEG by magic bytes.
inline RgbImage load_rgb(const std::string& path) {
  std::vector<std::uint8_t> data = read_file(path);
  if (data.size() >= 8 && data[0] == 0x89 && data[1] == 'P' && data[2] == 'N' &&
      data[3] == 'G')
    return decode_png(data);
  if (data.size() >= 2 && data[0] == 0xff && data[1] == 0xd8) return decode_jpeg(data);
  throw std::runtime_error("unsupported image format (expected PNG or JPEG): " + path);
}

inline GrayImage load_grayscale(const std::string& path) {
  return to_grayscale(load_rgb(path));
}

inline void save_png_gray(const GrayImage& img, const std::string& path) {
  png_image out{};
  out.version = PNG_IMAGE_VERSION;
  out.width = static_cast<png_uint_32>(img.width);
  out.height = static_cast<png_uint_32>(img.height);
  out.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&out, path.c_str(), 0, img.pixels.data(), 0, nullptr))
    throw std::runtime_error(std::string("png encode failed: ") + out.message);
}

}  // namespace asciigen::io
