// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Feature extractors mapping a Tile to a feature vector: raw pixels,
// Histogram of Oriented Gradients, and log-polar stroke histograms.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "asciigen/core.hpp"

namespace asciigen {

inline std::vector<float> raw_features(const Tile& t) {
  return std::vector<float>(t.values.begin(), t.values.end());
}

struct HogConfig {
  int cell_size = 5;
  int block = 1;  // cells per block side
  int bins = 9;
};

inline std::size_t hog_dim(int n, const HogConfig& cfg) {
  int cells = n / cfg.cell_size;
  int blocks_per_side = cells - cfg.block + 1;
  return static_cast<std::size_t>(blocks_per_side) * blocks_per_side *
         cfg.block * cfg.block * cfg.bins;
}

// Unsigned-orientation HoG with central-difference gradients, magnitude
// weighted linear interpolation between adjacent orientation bins, and
// L2-hys block normalization (clip 0.2, renormalize).
inline std::vector<float> hog_features(const Tile& t, const HogConfig& cfg = {}) {
  if (cfg.cell_size < 1 || cfg.bins < 2) throw std::invalid_argument("bad hog config");
  if (t.n % cfg.cell_size != 0)
    throw std::invalid_argument("cell size must divide tile size");
  const int n = t.n;
  const int cells = n / cfg.cell_size;
  if (cells < cfg.block) throw std::invalid_argument("block larger than cell grid");

  // per-cell orientation histograms
  std::vector<double> hist(static_cast<std::size_t>(cells) * cells * cfg.bins, 0.0);
  const double bin_width = 180.0 / cfg.bins;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      // clamped central differences; constant rows/cols yield zero gradient
      int xl = x > 0 ? x - 1 : 0, xr = x < n - 1 ? x + 1 : n - 1;
      int yu = y > 0 ? y - 1 : 0, yd = y < n - 1 ? y + 1 : n - 1;
      double gx = t.at(xr, y) - t.at(xl, y);
      double gy = t.at(x, yd) - t.at(x, yu);
      double mag = std::hypot(gx, gy);
      if (mag == 0.0) continue;
      double ang = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
      if (ang < 0) ang += 180.0;
      if (ang >= 180.0) ang -= 180.0;
      // split magnitude between the two nearest bin centers
      double pos = ang / bin_width - 0.5;
      int b0 = static_cast<int>(std::floor(pos));
      double frac = pos - b0;
      int lo = (b0 % cfg.bins + cfg.bins) % cfg.bins;
      int hi = (lo + 1) % cfg.bins;
      int cell = (y / cfg.cell_size) * cells + (x / cfg.cell_size);
      hist[static_cast<std::size_t>(cell) * cfg.bins + lo] += mag * (1.0 - frac);
      hist[static_cast<std::size_t>(cell) * cfg.bins + hi] += mag * frac;
    }
  }

  // block normalization
  const double eps = 1e-6;
  const int blocks_per_side = cells - cfg.block + 1;
  std::vector<float> out;
  out.reserve(hog_dim(n, cfg));
  std::vector<double> block_vec(static_cast<std::size_t>(cfg.block) * cfg.block * cfg.bins);
  for (int by = 0; by < blocks_per_side; ++by) {
    for (int bx = 0; bx < blocks_per_side; ++bx) {
      std::size_t k = 0;
      for (int cy = by; cy < by + cfg.block; ++cy)
        for (int cx = bx; cx < bx + cfg.block; ++cx)
          for (int b = 0; b < cfg.bins; ++b)
            block_vec[k++] = hist[(static_cast<std::size_t>(cy) * cells + cx) * cfg.bins + b];
      double norm = 0;
      for (double v : block_vec) norm += v * v;
      norm = std::sqrt(norm + eps * eps);
      for (double& v : block_vec) {
        v /= norm;
        if (v > 0.2) v = 0.2;  // hys clip
      }
      double norm2 = 0;
      for (double v : block_vec) norm2 += v * v;
      norm2 = std::sqrt(norm2 + eps * eps);
      for (double v : block_vec) out.push_back(static_cast<float>(v / norm2));
    }
  }
  return out;
}

struct LogPolarConfig {
  int radial_bins = 5;
  int angular_bins = 12;
};

// Accumulates stroke mass into (log radius, angle) bins around the tile
// center and L1-normalizes. The innermost bin covers r < n/8; remaining
// radial edges are log-spaced out to the center-to-corner distance.
inline std::vector<float> log_polar_histogram(const Tile& t,
                                              const LogPolarConfig& cfg = {}) {
  if (cfg.radial_bins < 1 || cfg.angular_bins < 1)
    throw std::invalid_argument("bad log-polar config");
  const int n = t.n;
  const double cx = (n - 1) / 2.0;
  const double cy = (n - 1) / 2.0;
  const double r_inner = n / 8.0;
  const double r_max = std::hypot(n / 2.0, n / 2.0);
  const double log_lo = std::log(r_inner);
  const double log_hi = std::log(r_max);

  std::vector<double> hist(static_cast<std::size_t>(cfg.radial_bins) * cfg.angular_bins, 0.0);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      double v = t.at(x, y);
      if (v <= 0.0) continue;
      double dx = x - cx, dy = y - cy;
      double r = std::hypot(dx, dy);
      int rb = 0;
      if (r >= r_inner && cfg.radial_bins > 1) {
        double frac = (std::log(r) - log_lo) / (log_hi - log_lo);
        rb = 1 + static_cast<int>(frac * (cfg.radial_bins - 1));
        if (rb >= cfg.radial_bins) rb = cfg.radial_bins - 1;
      }
      double ang = std::atan2(dy, dx);
      if (ang < 0) ang += 2.0 * std::numbers::pi;
      int ab = static_cast<int>(ang / (2.0 * std::numbers::pi) * cfg.angular_bins);
      if (ab >= cfg.angular_bins) ab = cfg.angular_bins - 1;
      hist[static_cast<std::size_t>(rb) * cfg.angular_bins + ab] += v;
    }
  }
  double total = 0;
  for (double v : hist) total += v;
  std::vector<float> out(hist.size());
  if (total > 0)
    for (std::size_t i = 0; i < hist.size(); ++i)
      out[i] = static_cast<float>(hist[i] / total);
  return out;
}

// Extracts features for `mode` with default configs; the conversion
// pipeline and dataset synthesis both go through here.
inline std::vector<float> extract_features(const Tile& t, FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kRaw: return raw_features(t);
    case FeatureMode::kHog: return hog_features(t);
    case FeatureMode::kLogPolar: return log_polar_histogram(t);
  }
  throw std::invalid_argument("unknown feature mode");
}

inline std::size_t feature_dim(int n, FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kRaw: return static_cast<std::size_t>(n) * n;
    case FeatureMode::kHog: return hog_dim(n, HogConfig{});
    case FeatureMode::kLogPolar: {
      LogPolarConfig c;
      return static_cast<std::size_t>(c.radial_bins) * c.angular_bins;
    }
  }
  throw std::invalid_argument("unknown feature mode");
}

}  // namespace asciigen
