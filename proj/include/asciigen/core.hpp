// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Domain types shared by every module. No I/O here; only invariant checks.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asciigen {

// Grayscale raster, row-major, 8-bit luminance.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("empty image");
  }

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

// n-by-n block of normalized intensities in [0,1], stroke mapped to 1.0.
struct Tile {
  int n = 0;
  std::vector<double> values;

  Tile() = default;
  explicit Tile(int side, double fill = 0.0)
      : n(side), values(static_cast<std::size_t>(side) * side, fill) {}

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * n + x];
  }
  double& at(int x, int y) {
    return values[static_cast<std::size_t>(y) * n + x];
  }
};

// Ordered set of character codes eligible for tile replacement.
// Class index of entry i is i; codes must be strictly increasing.
class Charset {
 public:
  Charset() = default;
  explicit Charset(std::vector<int> codes) : codes_(std::move(codes)) {
    for (std::size_t i = 1; i < codes_.size(); ++i) {
      if (codes_[i] <= codes_[i - 1])
        throw std::invalid_argument("charset codes must be strictly increasing");
    }
    bool has_space = false;
    for (int c : codes_) has_space |= (c == 32);
    if (!has_space) throw std::invalid_argument("charset must contain space (32)");
  }

  // Printable ASCII 32..126, 95 classes.
  static Charset printable_ascii() {
    std::vector<int> codes;
    for (int c = 32; c <= 126; ++c) codes.push_back(c);
    return Charset(std::move(codes));
  }

  int size() const { return static_cast<int>(codes_.size()); }
  int code_of(int class_index) const { return codes_.at(class_index); }
  const std::vector<int>& codes() const { return codes_; }

  std::optional<int> class_of(int code) const {
    for (std::size_t i = 0; i < codes_.size(); ++i)
      if (codes_[i] == code) return static_cast<int>(i);
    return std::nullopt;
  }

  bool operator==(const Charset& o) const { return codes_ == o.codes_; }

 private:
  std::vector<int> codes_;
};

// Conversion output: rectangular grid of class indices into a charset.
struct AsciiGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;  // row-major class indices
  Charset charset;
};

// Checks AsciiGrid invariants; returns the first violation, or empty if ok.
inline std::string validate(const AsciiGrid& g) {
  if (g.rows < 1 || g.cols < 1) return "grid dimensions must be positive";
  if (g.cells.size() != static_cast<std::size_t>(g.rows) * g.cols)
    return "cell count does not match rows x cols";
  for (int c : g.cells) {
    if (c < 0 || c >= g.charset.size()) return "class index out of range";
  }
  return {};
}

enum class FeatureMode : std::uint8_t { kRaw = 0, kHog = 1, kLogPolar = 2 };

inline const char* to_string(FeatureMode m) {
  switch (m) {
    case FeatureMode::kRaw: return "raw";
    case FeatureMode::kHog: return "hog";
    case FeatureMode::kLogPolar: return "logpolar";
  }
  return "?";
}

inline FeatureMode feature_mode_from_string(const std::string& s) {
  if (s == "raw") return FeatureMode::kRaw;
  if (s == "hog") return FeatureMode::kHog;
  if (s == "logpolar") return FeatureMode::kLogPolar;
  throw std::invalid_argument("unknown feature mode: " + s);
}

// One labeled training record.
struct Sample {
  std::vector<float> features;
  int label = 0;
};

struct Dataset {
  std::vector<Sample> samples;
  int tile_size = 10;
  FeatureMode feature_mode = FeatureMode::kRaw;
  Charset charset;
  std::uint64_t seed = 0;

  std::size_t feature_dim() const {
    return samples.empty() ? 0 : samples.front().features.size();
  }
};

enum class ModelKind : std::uint8_t {
  kKnn = 0,
  kSvm = 1,
  kRandomForest = 2,
  kMlp = 3,
  kCnn = 4,
  kAiss = 5,
};

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::kKnn: return "knn";
    case ModelKind::kSvm: return "svm";
    case ModelKind::kRandomForest: return "rf";
    case ModelKind::kMlp: return "mlp";
    case ModelKind::kCnn: return "cnn";
    case ModelKind::kAiss: return "aiss";
  }
  return "?";
}

inline ModelKind model_kind_from_string(const std::string& s) {
  if (s == "knn") return ModelKind::kKnn;
  if (s == "svm") return ModelKind::kSvm;
  if (s == "rf") return ModelKind::kRandomForest;
  if (s == "mlp") return ModelKind::kMlp;
  if (s == "cnn") return ModelKind::kCnn;
  if (s == "aiss") return ModelKind::kAiss;
  throw std::invalid_argument("unknown model kind: " + s);
}

// Serialized trained classifier plus the metadata needed to run it.
struct ModelArtifact {
  ModelKind kind = ModelKind::kKnn;
  int tile_size = 10;
  FeatureMode feature_mode = FeatureMode::kRaw;
  Charset charset;
  std::map<std::string, double> hyperparams;
  std::vector<std::uint8_t> payload;
  std::uint32_t format_version = 1;

  double hyper(const std::string& key) const {
    auto it = hyperparams.find(key);
    if (it == hyperparams.end())
      throw std::invalid_argument("missing hyperparameter: " + key);
    return it->second;
  }
};

}  // namespace asciigen
