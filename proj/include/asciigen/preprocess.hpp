// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Image preprocessing: grayscale conversion, aspect-corrected rescale,
// binarization to the stroke=1 polarity, and tiling.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asciigen/core.hpp"

namespace asciigen {

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 3 bytes per pixel
};

// Normalized float raster, stroke=1.0 / background=0.0, produced by
// binarize_normalize and consumed by tiling.
struct NormGrid {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
inline GrayImage to_grayscale(const RgbImage& rgb) {
  if (rgb.width < 1 || rgb.height < 1) throw std::invalid_argument("empty image");
  GrayImage out(rgb.width, rgb.height);
  const std::size_t count = static_cast<std::size_t>(rgb.width) * rgb.height;
  for (std::size_t i = 0; i < count; ++i) {
    double luma = 0.299 * rgb.pixels[3 * i] + 0.587 * rgb.pixels[3 * i + 1] +
                  0.114 * rgb.pixels[3 * i + 2];
    long v = std::lround(luma);
    if (v < 0) v = 0;
    if (v > 255) v = 255;
    out.pixels[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

// Bilinear resample to explicit output dimensions.
inline GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw std::invalid_argument("degenerate scale");
  GrayImage out(out_w, out_h);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    // pixel-center mapping
    double fy = (y + 0.5) * sy - 0.5;
    if (fy < 0) fy = 0;
    int y0 = static_cast<int>(fy);
    int y1 = y0 + 1 < img.height ? y0 + 1 : y0;
    double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      if (fx < 0) fx = 0;
      int x0 = static_cast<int>(fx);
      int x1 = x0 + 1 < img.width ? x0 + 1 : x0;
      double wx = fx - x0;
      double top = (1 - wx) * img.at(x0, y0) + wx * img.at(x1, y0);
      double bot = (1 - wx) * img.at(x0, y1) + wx * img.at(x1, y1);
      double v = (1 - wy) * top + wy * bot;
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return out;
}

// Rescale by `scale`; when aspect_correct, height is additionally halved so
// ASCII output is not stretched vertically by the 2:1 text-cell aspect.
inline GrayImage rescale(const GrayImage& img, double scale,
                         bool aspect_correct = true) {
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  int out_w = static_cast<int>(std::lround(img.width * scale));
  double hf = aspect_correct ? scale / 2.0 : scale;
  int out_h = static_cast<int>(std::lround(img.height * hf));
  if (out_w < 1 || out_h < 1) throw std::invalid_argument("degenerate scale");
  return resize_bilinear(img, out_w, out_h);
}

// Maps pixels to {0,1} with stroke=1. With invert=false the image is assumed
// dark-on-light, so intensities below threshold become stroke.
inline NormGrid binarize_normalize(const GrayImage& img, int threshold = 128,
                                   bool invert = false) {
  if (threshold < 0 || threshold > 255)
    throw std::invalid_argument("threshold out of range");
  NormGrid out;
  out.width = img.width;
  out.height = img.height;
  out.values.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    bool stroke = invert ? img.pixels[i] >= threshold : img.pixels[i] < threshold;
    out.values[i] = stroke ? 1.0 : 0.0;
  }
  return out;
}

// Mean intensity below 128 suggests light strokes on a dark background.
inline bool auto_invert(const GrayImage& img) {
  std::uint64_t sum = 0;
  for (std::uint8_t p : img.pixels) sum += p;
  return sum < 128ULL * img.pixels.size();
}

struct TileGrid {
  int rows = 0;
  int cols = 0;
  std::vector<Tile> tiles;  // row-major

  const Tile& at(int r, int c) const {
    return tiles[static_cast<std::size_t>(r) * cols + c];
  }
};

// Splits into ceil(h/n) x ceil(w/n) tiles; partial edge tiles are padded
// with background (0.0).
inline TileGrid tile(const NormGrid& grid, int n) {
  if (n < 2) throw std::invalid_argument("tile size must be >= 2");
  TileGrid out;
  out.rows = (grid.height + n - 1) / n;
  out.cols = (grid.width + n - 1) / n;
  out.tiles.reserve(static_cast<std::size_t>(out.rows) * out.cols);
  for (int r = 0; r < out.rows; ++r) {
    for (int c = 0; c < out.cols; ++c) {
      Tile t(n);
      for (int y = 0; y < n; ++y) {
        int gy = r * n + y;
        if (gy >= grid.height) break;
        for (int x = 0; x < n; ++x) {
          int gx = c * n + x;
          if (gx >= grid.width) break;
          t.at(x, y) = grid.at(gx, gy);
        }
      }
      out.tiles.push_back(std::move(t));
    }
  }
  return out;
}

// Inverse of tile() for testing: reassembles and crops padding.
inline NormGrid untile(const TileGrid& tg, int width, int height) {
  NormGrid out;
  out.width = width;
  out.height = height;
  out.values.assign(static_cast<std::size_t>(width) * height, 0.0);
  const int n = tg.tiles.empty() ? 0 : tg.tiles.front().n;
  for (int r = 0; r < tg.rows; ++r) {
    for (int c = 0; c < tg.cols; ++c) {
      const Tile& t = tg.at(r, c);
      for (int y = 0; y < n; ++y) {
        int gy = r * n + y;
        if (gy >= height) break;
        for (int x = 0; x < n; ++x) {
          int gx = c * n + x;
          if (gx >= width) break;
          out.values[static_cast<std::size_t>(gy) * width + gx] = t.at(x, y);
        }
      }
    }
  }
  return out;
}

}  // namespace asciigen
