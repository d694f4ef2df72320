// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Glyph rasterization from the embedded bitmap font and synthesis of the
// augmented labeled training dataset.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "asciigen/core.hpp"
#include "asciigen/features.hpp"
#include "asciigen/font8x16.hpp"
#include "asciigen/rng.hpp"

namespace asciigen {

// Rasterizes `code` from the embedded 8x16 font into an n-by-n tile via
// area averaging. Deterministic; stroke=1.0 polarity.
inline Tile render_glyph(int code, int n) {
  if (n < 2) throw std::invalid_argument("tile size must be >= 2");
  if (code < font::kFirstCode || code > font::kLastCode)
    throw std::invalid_argument("unknown character");
  const auto& rows = font::kGlyphRows[code - font::kFirstCode];

  Tile out(n);
  // Each output pixel covers an axis-aligned box of the 8x16 source cell;
  // its value is the covered-area-weighted mean of source bits.
  const double sx = static_cast<double>(font::kGlyphWidth) / n;
  const double sy = static_cast<double>(font::kGlyphHeight) / n;
  for (int oy = 0; oy < n; ++oy) {
    double y0 = oy * sy, y1 = (oy + 1) * sy;
    for (int ox = 0; ox < n; ++ox) {
      double x0 = ox * sx, x1 = (ox + 1) * sx;
      double acc = 0.0;
      for (int gy = static_cast<int>(y0); gy < font::kGlyphHeight && gy < y1; ++gy) {
        double hy = std::min(y1, gy + 1.0) - std::max(y0, static_cast<double>(gy));
        if (hy <= 0) continue;
        for (int gx = static_cast<int>(x0); gx < font::kGlyphWidth && gx < x1; ++gx) {
          double hx = std::min(x1, gx + 1.0) - std::max(x0, static_cast<double>(gx));
          if (hx <= 0) continue;
          if (rows[gy] & (0x80u >> gx)) acc += hx * hy;
        }
      }
      double v = acc / (sx * sy);
      out.at(ox, oy) = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
  }
  return out;
}

struct AugmentParams {
  int max_shift = 2;          // pixels, each axis
  double max_blur_sigma = 1.0;
  double max_noise = 0.1;
};

namespace detail {

inline Tile shift_tile(const Tile& t, int dx, int dy) {
  Tile out(t.n);
  for (int y = 0; y < t.n; ++y) {
    int sy = y - dy;
    if (sy < 0 || sy >= t.n) continue;
    for (int x = 0; x < t.n; ++x) {
      int sx = x - dx;
      if (sx < 0 || sx >= t.n) continue;
      out.at(x, y) = t.at(sx, sy);
    }
  }
  return out;
}

inline Tile gaussian_blur(const Tile& t, double sigma) {
  if (sigma <= 0.0) return t;
  int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += kernel[i + radius];
  }
  for (double& k : kernel) k /= sum;

  // separable, background (0) outside the tile
  Tile tmp(t.n), out(t.n);
  for (int y = 0; y < t.n; ++y)
    for (int x = 0; x < t.n; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        int sx = x + i;
        if (sx >= 0 && sx < t.n) acc += kernel[i + radius] * t.at(sx, y);
      }
      tmp.at(x, y) = acc;
    }
  for (int y = 0; y < t.n; ++y)
    for (int x = 0; x < t.n; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        int sy = y + i;
        if (sy >= 0 && sy < t.n) acc += kernel[i + radius] * tmp.at(x, sy);
      }
      out.at(x, y) = acc;
    }
  return out;
}

}  // namespace detail

// Applies, in order: positional shift (background fill), Gaussian blur,
// additive uniform noise; clamps to [0,1]. Deterministic given rng state.
inline Tile augment(const Tile& t, Rng& rng, const AugmentParams& params = {}) {
  int dx = rng.uniform_int(-params.max_shift, params.max_shift);
  int dy = rng.uniform_int(-params.max_shift, params.max_shift);
  double sigma = rng.uniform(0.0, params.max_blur_sigma);
  double amplitude = rng.uniform(0.0, params.max_noise);

  Tile out = detail::gaussian_blur(detail::shift_tile(t, dx, dy), sigma);
  for (double& v : out.values) {
    v += rng.uniform(-amplitude, amplitude);
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
  }
  return out;
}

// Synthesizes `count` labeled samples spread as evenly as possible across the
// charset (difference <= 1 per class). The first sample of every class is the
// clean, un-augmented glyph. Per-sample RNG streams derive from
// (seed, sample index), so output is bit-reproducible.
inline Dataset synthesize(const Charset& charset, int n, int count,
                          std::uint64_t seed, FeatureMode mode,
                          const AugmentParams& params = {}) {
  const int classes = charset.size();
  if (count < classes) throw std::invalid_argument("too few samples");

  Dataset d;
  d.tile_size = n;
  d.feature_mode = mode;
  d.charset = charset;
  d.seed = seed;
  d.samples.reserve(count);

  const int base = count / classes;
  const int extra = count % classes;
  std::uint64_t sample_index = 0;
  for (int cls = 0; cls < classes; ++cls) {
    const Tile clean = render_glyph(charset.code_of(cls), n);
    const int per_class = base + (cls < extra ? 1 : 0);
    for (int i = 0; i < per_class; ++i, ++sample_index) {
      Tile t = clean;
      if (i > 0) {
        Rng rng = Rng::derive(seed, sample_index);
        t = augment(clean, rng, params);
      }
      d.samples.push_back({extract_features(t, mode), cls});
    }
  }
  return d;
}

// Deterministic stratified split; test gets round(class_count * fraction)
// per class.
inline std::pair<Dataset, Dataset> split(const Dataset& d, double test_fraction,
                                         std::uint64_t seed) {
  if (test_fraction <= 0.0 || test_fraction >= 1.0)
    throw std::invalid_argument("test fraction must be in (0,1)");
  const int classes = d.charset.size();
  std::vector<std::vector<std::size_t>> per_class(classes);
  for (std::size_t i = 0; i < d.samples.size(); ++i)
    per_class[d.samples[i].label].push_back(i);

  Dataset train = d, test = d;
  train.samples.clear();
  test.samples.clear();
  for (int cls = 0; cls < classes; ++cls) {
    auto& idx = per_class[cls];
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(cls));
    rng.shuffle(idx);
    std::size_t k = static_cast<std::size_t>(
        std::lround(static_cast<double>(idx.size()) * test_fraction));
    for (std::size_t i = 0; i < idx.size(); ++i)
      (i < k ? test : train).samples.push_back(d.samples[idx[i]]);
  }
  if (train.samples.empty() || test.samples.empty())
    throw std::invalid_argument("split fraction yields an empty split");
  return {std::move(train), std::move(test)};
}

}  // namespace asciigen
