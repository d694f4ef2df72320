// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact k-nearest-neighbor classifier: Euclidean distance, majority vote,
// ties broken by smallest class index.

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "asciigen/io/binary.hpp"

namespace asciigen::classify {

struct KnnModel {
  int k = 5;
  int classes = 0;
  std::size_t dim = 0;
  std::vector<float> features;  // train_count x dim, row-major
  std::vector<int> labels;

  std::size_t count() const { return labels.size(); }

  int predict(std::span<const float> x) const {
    if (x.size() != dim) throw std::invalid_argument("feature dimension mismatch");
    const std::size_t n = count();
    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
      const float* row = features.data() + i * dim;
      double d2 = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        double diff = static_cast<double>(row[j]) - x[j];
        d2 += diff * diff;
      }
      dist[i] = {d2, i};
    }
    const std::size_t kk = std::min<std::size_t>(k, n);
    std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());
    std::vector<int> votes(classes, 0);
    for (std::size_t i = 0; i < kk; ++i) ++votes[labels[dist[i].second]];
    int best = 0;
    for (int c = 1; c < classes; ++c)
      if (votes[c] > votes[best]) best = c;
    return best;
  }

  void save(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(k));
    w.u32(static_cast<std::uint32_t>(classes));
    w.u32(static_cast<std::uint32_t>(dim));
    w.u64(count());
    for (int l : labels) w.u32(static_cast<std::uint32_t>(l));
    for (float f : features) w.f32(f);
  }

  static KnnModel load(io::ByteReader& r) {
    KnnModel m;
    m.k = static_cast<int>(r.u32());
    m.classes = static_cast<int>(r.u32());
    m.dim = r.u32();
    std::uint64_t n = r.u64();
    m.labels.resize(n);
    for (int& l : m.labels) l = static_cast<int>(r.u32());
    m.features.resize(n * m.dim);
    for (float& f : m.features) f = r.f32();
    return m;
  }
};

}  // namespace asciigen::classify
