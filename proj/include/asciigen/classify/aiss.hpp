// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Non-learned glyph matcher: stores the log-polar histogram of every clean
// charset glyph and predicts by minimum L2 distance.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "asciigen/core.hpp"
#include "asciigen/features.hpp"
#include "asciigen/glyphset.hpp"
#include "asciigen/io/binary.hpp"

namespace asciigen::classify {

struct AissModel {
  int classes = 0;
  std::size_t dim = 0;
  std::vector<float> references;  // classes x dim log-polar histograms

  static AissModel build(const Charset& charset, int tile_size,
                         const LogPolarConfig& cfg = {}) {
    AissModel m;
    m.classes = charset.size();
    m.dim = static_cast<std::size_t>(cfg.radial_bins) * cfg.angular_bins;
    m.references.reserve(m.dim * m.classes);
    for (int c = 0; c < m.classes; ++c) {
      std::vector<float> h =
          log_polar_histogram(render_glyph(charset.code_of(c), tile_size), cfg);
      m.references.insert(m.references.end(), h.begin(), h.end());
    }
    return m;
  }

  int predict(std::span<const float> x) const {
    if (x.size() != dim) throw std::invalid_argument("feature dimension mismatch");
    int best = 0;
    double best_d = -1.0;
    for (int c = 0; c < classes; ++c) {
      const float* row = references.data() + static_cast<std::size_t>(c) * dim;
      double d2 = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        double diff = static_cast<double>(row[j]) - x[j];
        d2 += diff * diff;
      }
      if (best_d < 0.0 || d2 < best_d) {  // strict < keeps the smaller index on ties
        best_d = d2;
        best = c;
      }
    }
    return best;
  }

  void save(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(classes));
    w.u32(static_cast<std::uint32_t>(dim));
    for (float f : references) w.f32(f);
  }

  static AissModel load(io::ByteReader& r) {
    AissModel m;
    m.classes = static_cast<int>(r.u32());
    m.dim = r.u32();
    m.references.resize(m.dim * m.classes);
    for (float& f : m.references) f = r.f32();
    return m;
  }
};

}  // namespace asciigen::classify
