// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Metrics (accuracy, macro F1/recall, SSIM) and the benchmark runner that
// regenerates the comparison tables.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asciigen/classify.hpp"
#include "asciigen/convert.hpp"
#include "asciigen/core.hpp"
#include "asciigen/glyphset.hpp"

namespace asciigen {

struct ClassificationMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double macro_recall = 0.0;
};

// Macro averages run over classes that appear in `truth`; a class with no
// predictions or no instances contributes 0 to the affected ratio.
inline ClassificationMetrics classification_metrics(const std::vector<int>& pred,
                                                    const std::vector<int>& truth,
                                                    int classes) {
  if (pred.size() != truth.size() || pred.empty())
    throw std::invalid_argument("prediction/truth length mismatch");
  std::vector<int> tp(classes, 0), fp(classes, 0), fn(classes, 0), support(classes, 0);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    ++support[truth[i]];
    if (pred[i] == truth[i]) {
      ++tp[truth[i]];
      ++correct;
    } else {
      ++fp[pred[i]];
      ++fn[truth[i]];
    }
  }
  double f1_sum = 0, recall_sum = 0;
  int present = 0;
  for (int c = 0; c < classes; ++c) {
    if (support[c] == 0) continue;
    ++present;
    double precision = tp[c] + fp[c] > 0 ? static_cast<double>(tp[c]) / (tp[c] + fp[c]) : 0.0;
    double recall = static_cast<double>(tp[c]) / (tp[c] + fn[c]);
    recall_sum += recall;
    if (precision + recall > 0) f1_sum += 2.0 * precision * recall / (precision + recall);
  }
  ClassificationMetrics m;
  m.accuracy = static_cast<double>(correct) / static_cast<double>(pred.size());
  m.macro_f1 = present > 0 ? f1_sum / present : 0.0;
  m.macro_recall = present > 0 ? recall_sum / present : 0.0;
  return m;
}

struct SsimConfig {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
};

// Mean SSIM over all positions where the full Gaussian window fits, with
// Gaussian-weighted local statistics (population covariance).
inline double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg = {}) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("ssim: dimension mismatch");
  if (cfg.window < 3 || cfg.window % 2 == 0)
    throw std::invalid_argument("ssim: window must be odd and >= 3");
  if (a.width < cfg.window || a.height < cfg.window)
    throw std::invalid_argument("ssim: image smaller than window");
  if (cfg.k1 <= 0 || cfg.k2 <= 0) throw std::invalid_argument("ssim: K1,K2 must be > 0");

  const int w = cfg.window, half = w / 2;
  std::vector<double> kernel(static_cast<std::size_t>(w) * w);
  double ksum = 0;
  for (int y = 0; y < w; ++y)
    for (int x = 0; x < w; ++x) {
      double dx = x - half, dy = y - half;
      kernel[static_cast<std::size_t>(y) * w + x] =
          std::exp(-(dx * dx + dy * dy) / (2.0 * cfg.sigma * cfg.sigma));
      ksum += kernel[static_cast<std::size_t>(y) * w + x];
    }
  for (double& k : kernel) k /= ksum;

  const double c1 = cfg.k1 * cfg.dynamic_range * cfg.k1 * cfg.dynamic_range;
  const double c2 = cfg.k2 * cfg.dynamic_range * cfg.k2 * cfg.dynamic_range;

  double total = 0;
  std::size_t count = 0;
  for (int cy = half; cy < a.height - half; ++cy) {
    for (int cx = half; cx < a.width - half; ++cx) {
      double mu_a = 0, mu_b = 0, aa = 0, bb = 0, ab = 0;
      for (int y = 0; y < w; ++y)
        for (int x = 0; x < w; ++x) {
          const double k = kernel[static_cast<std::size_t>(y) * w + x];
          const double va = a.at(cx + x - half, cy + y - half);
          const double vb = b.at(cx + x - half, cy + y - half);
          mu_a += k * va;
          mu_b += k * vb;
          aa += k * va * va;
          bb += k * vb * vb;
          ab += k * va * vb;
        }
      const double var_a = aa - mu_a * mu_a;
      const double var_b = bb - mu_b * mu_b;
      const double cov = ab - mu_a * mu_b;
      total += ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

// Median wall-clock milliseconds of convert_image over `repetitions`, after
// one untimed warm-up run.
inline double time_conversion(const GrayImage& img, const ModelArtifact& m,
                              int repetitions, const ConvertOptions& opts = {}) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  (void)convert_image(img, m, opts);  // warm-up
  std::vector<double> times(repetitions);
  for (int i = 0; i < repetitions; ++i) {
    auto start = std::chrono::steady_clock::now();
    (void)convert_image(img, m, opts);
    auto stop = std::chrono::steady_clock::now();
    times[i] = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  std::sort(times.begin(), times.end());
  return repetitions % 2 == 1 ? times[repetitions / 2]
                              : 0.5 * (times[repetitions / 2 - 1] + times[repetitions / 2]);
}

struct BenchRow {
  std::string name;
  double train_acc = 0, test_acc = 0, macro_f1 = 0, macro_recall = 0;
  double ssim = 0;
  double conversion_time_ms = 0;
};

struct BenchConfig {
  std::vector<ModelKind> kinds = {ModelKind::kKnn, ModelKind::kSvm,
                                  ModelKind::kRandomForest, ModelKind::kAiss};
  int tile_size = 10;
  int classical_samples = 2500;
  int deep_samples = 50000;
  double test_fraction = 0.2;
  std::uint64_t seed = 7;
  FeatureMode classical_features = FeatureMode::kRaw;
  int timing_repetitions = 3;
  std::vector<std::string> corpus_paths;  // optional fixture images
  int threads = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::uint64_t seed = 0;
  int tile_size = 10;
  int classical_samples = 0;
  int deep_samples = 0;
};

namespace detail {

inline bool is_deep(ModelKind k) {
  return k == ModelKind::kMlp || k == ModelKind::kCnn;
}

// SSIM of the rendered conversion against the geometry-matched input: the
// binarized input is re-rendered as a grayscale image padded to the tile
// grid, so both sides share extent and polarity.
inline double output_ssim(const GrayImage& img, const ModelArtifact& m,
                          const ConvertOptions& opts) {
  AsciiGrid grid = convert_image(img, m, opts);
  GrayImage rendered = grid_to_image(grid, m.tile_size);

  GrayImage scaled = rescale(img, opts.scale, opts.aspect_correct);
  bool invert = opts.invert.value_or(auto_invert(scaled));
  NormGrid norm = binarize_normalize(scaled, opts.threshold, invert);
  GrayImage reference(rendered.width, rendered.height, 255);
  for (int y = 0; y < scaled.height; ++y)
    for (int x = 0; x < scaled.width; ++x)
      reference.at(x, y) =
          norm.at(x, y) > 0.5 ? 0 : 255;
  return ssim(rendered, reference);
}

}  // namespace detail

// Synthesizes datasets, trains every configured backend, and computes all
// metrics. Deterministic given the seed except for the timing column.
template <typename ImageLoader>
BenchReport run_benchmark(const BenchConfig& cfg, ImageLoader&& load_image) {
  BenchReport report;
  report.seed = cfg.seed;
  report.tile_size = cfg.tile_size;
  report.classical_samples = cfg.classical_samples;
  report.deep_samples = cfg.deep_samples;

  const Charset charset = Charset::printable_ascii();
  std::vector<GrayImage> corpus;
  for (const std::string& path : cfg.corpus_paths) corpus.push_back(load_image(path));

  for (ModelKind kind : cfg.kinds) {
    const char* stage = "synthesize";
    try {
      FeatureMode mode = cfg.classical_features;
      if (detail::is_deep(kind)) mode = FeatureMode::kRaw;
      if (kind == ModelKind::kAiss) mode = FeatureMode::kLogPolar;
      const int count = detail::is_deep(kind) ? cfg.deep_samples : cfg.classical_samples;
      Dataset data = synthesize(charset, cfg.tile_size, count, cfg.seed, mode);
      auto [train_set, test_set] = split(data, cfg.test_fraction, cfg.seed);

      stage = "train";
      ModelArtifact artifact = train(kind, train_set, {}, cfg.seed, cfg.threads);

      stage = "evaluate";
      Predictor p(artifact);
      std::vector<int> pred, truth;
      pred.reserve(test_set.samples.size());
      for (const Sample& s : test_set.samples) {
        pred.push_back(p.predict(s.features));
        truth.push_back(s.label);
      }
      ClassificationMetrics cm = classification_metrics(pred, truth, charset.size());

      BenchRow row;
      row.name = to_string(kind);
      row.train_acc = artifact.hyper("train_acc");
      row.test_acc = cm.accuracy;
      row.macro_f1 = cm.macro_f1;
      row.macro_recall = cm.macro_recall;

      stage = "corpus";
      if (!corpus.empty()) {
        ConvertOptions opts;
        opts.aspect_correct = false;
        double ssim_sum = 0, time_sum = 0;
        for (const GrayImage& img : corpus) {
          ssim_sum += detail::output_ssim(img, artifact, opts);
          time_sum += time_conversion(img, artifact, cfg.timing_repetitions, opts);
        }
        row.ssim = ssim_sum / static_cast<double>(corpus.size());
        row.conversion_time_ms = time_sum / static_cast<double>(corpus.size());
      }
      report.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("benchmark stage '") + stage + "' failed for " +
                               to_string(kind) + ": " + e.what());
    }
  }
  return report;
}

inline std::string report_to_table(const BenchReport& r) {
  std::ostringstream out;
  out << "seed=" << r.seed << " tile=" << r.tile_size
      << " classical_samples=" << r.classical_samples
      << " deep_samples=" << r.deep_samples << "\n";
  out << std::left << std::setw(8) << "model" << std::right << std::setw(11)
      << "train_acc" << std::setw(10) << "test_acc" << std::setw(10) << "f1"
      << std::setw(10) << "recall" << std::setw(10) << "ssim" << std::setw(12)
      << "time_ms" << "\n";
  out << std::fixed << std::setprecision(4);
  for (const BenchRow& row : r.rows) {
    out << std::left << std::setw(8) << row.name << std::right << std::setw(11)
        << row.train_acc << std::setw(10) << row.test_acc << std::setw(10)
        << row.macro_f1 << std::setw(10) << row.macro_recall << std::setw(10)
        << row.ssim << std::setw(12) << std::setprecision(2)
        << row.conversion_time_ms << std::setprecision(4) << "\n";
  }
  return out.str();
}

inline std::string report_to_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "model,train_acc,test_acc,macro_f1,macro_recall,ssim,conversion_time_ms\n";
  out << std::setprecision(10);
  for (const BenchRow& row : r.rows)
    out << row.name << ',' << row.train_acc << ',' << row.test_acc << ','
        << row.macro_f1 << ',' << row.macro_recall << ',' << row.ssim << ','
        << row.conversion_time_ms << '\n';
  return out.str();
}

}  // namespace asciigen
