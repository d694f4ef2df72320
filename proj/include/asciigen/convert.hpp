// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end pipeline: GrayImage -> rescale -> binarize -> tiles ->
// features -> classifier -> AsciiGrid, plus text and image rendering of
// the result.

#pragma once

#include <optional>
#include <string>

#include "asciigen/classify.hpp"
#include "asciigen/core.hpp"
#include "asciigen/features.hpp"
#include "asciigen/glyphset.hpp"
#include "asciigen/preprocess.hpp"

namespace asciigen {

struct ConvertOptions {
  double scale = 1.0;
  int threshold = 128;
  // unset -> auto-detect polarity from mean intensity
  std::optional<bool> invert;
  // halve height for the 2:1 text-cell aspect; turn off when the output
  // will be compared against the input at matching geometry
  bool aspect_correct = true;
};

inline AsciiGrid convert_image(const GrayImage& img, const ModelArtifact& m,
                               const ConvertOptions& opts = {}) {
  const int n = m.tile_size;
  if (n < 2) throw std::invalid_argument("model tile size must be >= 2");
  GrayImage scaled = rescale(img, opts.scale, opts.aspect_correct);
  bool invert = opts.invert.value_or(auto_invert(scaled));
  NormGrid norm = binarize_normalize(scaled, opts.threshold, invert);
  TileGrid tiles = tile(norm, n);

  std::vector<std::vector<float>> batch;
  batch.reserve(tiles.tiles.size());
  for (const Tile& t : tiles.tiles)
    batch.push_back(extract_features(t, m.feature_mode));

  AsciiGrid grid;
  grid.rows = tiles.rows;
  grid.cols = tiles.cols;
  grid.charset = m.charset;
  grid.cells = Predictor(m).predict_batch(batch);
  return grid;
}

// Rows joined by LF; each cell emitted as its ASCII character.
inline std::string grid_to_text(const AsciiGrid& g) {
  std::string violation = validate(g);
  if (!violation.empty()) throw std::invalid_argument("invalid grid: " + violation);
  std::string out;
  out.reserve(static_cast<std::size_t>(g.rows) * (g.cols + 1));
  for (int r = 0; r < g.rows; ++r) {
    if (r > 0) out.push_back('\n');
    for (int c = 0; c < g.cols; ++c)
      out.push_back(static_cast<char>(
          g.charset.code_of(g.cells[static_cast<std::size_t>(r) * g.cols + c])));
  }
  return out;
}

// Renders each cell with the embedded font at n x n, dark strokes (0) on a
// light background (255); used by the SSIM evaluation.
inline GrayImage grid_to_image(const AsciiGrid& g, int n) {
  std::string violation = validate(g);
  if (!violation.empty()) throw std::invalid_argument("invalid grid: " + violation);
  GrayImage out(g.cols * n, g.rows * n, 255);
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      Tile glyph = render_glyph(
          g.charset.code_of(g.cells[static_cast<std::size_t>(r) * g.cols + c]), n);
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
          out.at(c * n + x, r * n + y) = static_cast<std::uint8_t>(
              std::lround(255.0 * (1.0 - glyph.at(x, y))));
    }
  }
  return out;
}

}  // namespace asciigen
