// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// asciigen command line: synth | train | convert | bench.
// Exit codes: 0 success, 1 usage error, 2 data/model error, 3 internal error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "asciigen/classify.hpp"
#include "asciigen/convert.hpp"
#include "asciigen/core.hpp"
#include "asciigen/eval.hpp"
#include "asciigen/glyphset.hpp"
#include "asciigen/io/dataset_io.hpp"
#include "asciigen/io/image_io.hpp"
#include "asciigen/io/model_io.hpp"

namespace {

using asciigen::Charset;
using asciigen::Dataset;
using asciigen::FeatureMode;
using asciigen::ModelArtifact;
using asciigen::ModelKind;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run_synth(int count, int tile_size, const std::string& features,
              std::uint64_t seed, const std::string& out,
              const std::string& csv_out) {
  Dataset d = asciigen::synthesize(Charset::printable_ascii(), tile_size, count,
                                   seed, asciigen::feature_mode_from_string(features));
  asciigen::io::save_dataset(d, out);
  if (!csv_out.empty()) {
    std::ofstream f(csv_out);
    f << asciigen::io::dataset_to_csv(d);
  }
  std::vector<int> per_class(d.charset.size(), 0);
  for (const auto& s : d.samples) ++per_class[s.label];
  std::cerr << "wrote " << d.samples.size() << " samples to " << out << "\n";
  for (int c = 0; c < d.charset.size(); ++c)
    std::cout << d.charset.code_of(c) << ": " << per_class[c] << "\n";
  return 0;
}

int run_train(const std::string& kind_str, const std::string& data_path,
              std::uint64_t seed, const std::string& out,
              const std::map<std::string, double>& overrides, int threads) {
  ModelKind kind = asciigen::model_kind_from_string(kind_str);
  Dataset data = asciigen::io::load_dataset(data_path);
  auto [train_set, test_set] = asciigen::split(data, 0.2, seed);
  ModelArtifact artifact = asciigen::train(kind, train_set, overrides, seed, threads);
  asciigen::io::save_model(artifact, out);

  asciigen::Predictor p(artifact);
  std::size_t correct = 0;
  for (const auto& s : test_set.samples)
    if (p.predict(s.features) == s.label) ++correct;
  std::cout << "train_acc=" << artifact.hyper("train_acc")
            << " test_acc=" << static_cast<double>(correct) / test_set.samples.size()
            << "\n";
  return 0;
}

int run_convert(const std::string& model_path, const std::string& image_path,
                double scale, std::optional<bool> invert, int threshold,
                const std::string& out, const std::string& render_png,
                bool no_aspect) {
  ModelArtifact artifact = asciigen::io::load_model(model_path);
  asciigen::GrayImage img = asciigen::io::load_grayscale(image_path);
  asciigen::ConvertOptions opts;
  opts.scale = scale;
  opts.threshold = threshold;
  opts.invert = invert;
  opts.aspect_correct = !no_aspect;
  asciigen::AsciiGrid grid = asciigen::convert_image(img, artifact, opts);
  std::string text = asciigen::grid_to_text(grid);
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw DataError("cannot write " + out);
    f << text << "\n";
  }
  if (!render_png.empty())
    asciigen::io::save_png_gray(asciigen::grid_to_image(grid, artifact.tile_size),
                                render_png);
  return 0;
}

// flat key=value config, one per line; '#' starts a comment
asciigen::BenchConfig parse_bench_config(const std::string& path) {
  asciigen::BenchConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) throw DataError("cannot open config: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError("malformed config line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "kinds") {
      cfg.kinds.clear();
      std::istringstream ks(value);
      std::string k;
      while (std::getline(ks, k, ','))
        cfg.kinds.push_back(asciigen::model_kind_from_string(k));
    } else if (key == "tile_size") {
      cfg.tile_size = std::stoi(value);
    } else if (key == "classical_samples") {
      cfg.classical_samples = std::stoi(value);
    } else if (key == "deep_samples") {
      cfg.deep_samples = std::stoi(value);
    } else if (key == "test_fraction") {
      cfg.test_fraction = std::stod(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "features") {
      cfg.classical_features = asciigen::feature_mode_from_string(value);
    } else if (key == "timing_repetitions") {
      cfg.timing_repetitions = std::stoi(value);
    } else if (key == "corpus") {
      std::istringstream ps(value);
      std::string p;
      while (std::getline(ps, p, ',')) cfg.corpus_paths.push_back(p);
    } else {
      throw DataError("unknown config key: " + key);
    }
  }
  return cfg;
}

int run_bench(const std::string& config_path, bool json, std::uint64_t seed,
              bool seed_given, int threads) {
  asciigen::BenchConfig cfg = parse_bench_config(config_path);
  if (seed_given) cfg.seed = seed;
  cfg.threads = threads;
  asciigen::BenchReport report = asciigen::run_benchmark(
      cfg, [](const std::string& p) { return asciigen::io::load_grayscale(p); });
  if (json) {
    nlohmann::json j;
    j["seed"] = report.seed;
    j["tile_size"] = report.tile_size;
    j["classical_samples"] = report.classical_samples;
    j["deep_samples"] = report.deep_samples;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
      j["rows"].push_back({{"model", row.name},
                           {"train_acc", row.train_acc},
                           {"test_acc", row.test_acc},
                           {"macro_f1", row.macro_f1},
                           {"macro_recall", row.macro_recall},
                           {"ssim", row.ssim},
                           {"conversion_time_ms", row.conversion_time_ms}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << asciigen::report_to_table(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure-based ASCII art converter"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a labeled glyph dataset");
  int count = 2500, tile_size = 10;
  std::string features = "raw", out, csv_out;
  std::uint64_t seed = 0;
  synth->add_option("--count", count, "total sample count");
  synth->add_option("--tile-size", tile_size, "tile side length");
  synth->add_option("--features", features, "raw|hog|logpolar");
  synth->add_option("--seed", seed, "RNG seed");
  synth->add_option("--out", out, "output .gcds path")->required();
  synth->add_option("--csv", csv_out, "also export CSV here");

  // train
  auto* tr = app.add_subcommand("train", "train a classifier on a dataset");
  std::string kind, data_path, model_out;
  std::uint64_t train_seed = 0;
  int threads = 0;
  double k_opt = -1, trees_opt = -1, epochs_opt = -1, lr_opt = -1, batch_opt = -1;
  tr->add_option("--kind", kind, "knn|svm|rf|mlp|cnn|aiss")->required();
  tr->add_option("--data", data_path, "input .gcds path")->required();
  tr->add_option("--seed", train_seed, "RNG seed");
  tr->add_option("--out", model_out, "output .gcma path")->required();
  tr->add_option("--k", k_opt, "knn neighbors");
  tr->add_option("--trees", trees_opt, "forest size");
  tr->add_option("--epochs", epochs_opt, "training epochs");
  tr->add_option("--lr", lr_opt, "learning rate");
  tr->add_option("--batch", batch_opt, "batch size");
  tr->add_option("--threads", threads, "worker threads (0 = machine parallelism)");

  // convert
  auto* cv = app.add_subcommand("convert", "convert an image to ASCII art");
  std::string model_path, image_path, text_out, render_png;
  double scale = 1.0;
  int threshold = 128;
  bool invert_flag = false, no_aspect = false;
  cv->add_option("--model", model_path, "trained .gcma model")->required();
  cv->add_option("--image", image_path, "PNG or JPEG input")->required();
  cv->add_option("--scale", scale, "rescale factor");
  cv->add_flag("--invert", invert_flag, "treat light-on-dark input as strokes");
  cv->add_option("--threshold", threshold, "binarization threshold");
  cv->add_option("--out", text_out, "output text file (default stdout)");
  cv->add_option("--render-png", render_png, "also render the grid to PNG");
  cv->add_flag("--no-aspect", no_aspect, "disable the 2:1 height correction");

  // bench
  auto* bench = app.add_subcommand("bench", "run the comparison benchmark");
  std::string config_path;
  bool json = false;
  std::uint64_t bench_seed = 7;
  int bench_threads = 0;
  bench->add_option("--config", config_path, "key=value config file");
  bench->add_flag("--json", json, "emit JSON instead of a table");
  auto* seed_opt = bench->add_option("--seed", bench_seed, "override config seed");
  bench->add_option("--threads", bench_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 1;
  }

  try {
    if (synth->parsed())
      return run_synth(count, tile_size, features, seed, out, csv_out);
    if (tr->parsed()) {
      std::map<std::string, double> overrides;
      if (k_opt >= 0) overrides["k"] = k_opt;
      if (trees_opt >= 0) overrides["trees"] = trees_opt;
      if (epochs_opt >= 0) overrides["epochs"] = epochs_opt;
      if (lr_opt >= 0) overrides["lr"] = lr_opt;
      if (batch_opt >= 0) overrides["batch"] = batch_opt;
      return run_train(kind, data_path, train_seed, model_out, overrides, threads);
    }
    if (cv->parsed()) {
      std::optional<bool> invert;
      if (invert_flag) invert = true;
      return run_convert(model_path, image_path, scale, invert, threshold, text_out,
                         render_png, no_aspect);
    }
    if (bench->parsed())
      return run_bench(config_path, json, bench_seed, seed_opt->count() > 0,
                       bench_threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
