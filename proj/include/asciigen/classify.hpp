// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Uniform classifier interface over the six backends. train() produces a
// self-contained ModelArtifact; Predictor parses the payload once and serves
// predict/predict_batch.

#pragma once

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "asciigen/classify/aiss.hpp"
#include "asciigen/classify/forest.hpp"
#include "asciigen/classify/knn.hpp"
#include "asciigen/classify/nn.hpp"
#include "asciigen/classify/svm.hpp"
#include "asciigen/core.hpp"
#include "asciigen/io/binary.hpp"

namespace asciigen {

namespace detail {

inline void flatten(const Dataset& d, std::vector<float>& features,
                    std::vector<int>& labels) {
  const std::size_t dim = d.feature_dim();
  features.reserve(d.samples.size() * dim);
  labels.reserve(d.samples.size());
  for (const Sample& s : d.samples) {
    if (s.features.size() != dim)
      throw std::invalid_argument("inconsistent feature dimensions in dataset");
    features.insert(features.end(), s.features.begin(), s.features.end());
    labels.push_back(s.label);
  }
}

}  // namespace detail

class Predictor {
 public:
  explicit Predictor(const ModelArtifact& artifact) {
    io::ByteReader r(artifact.payload);
    switch (artifact.kind) {
      case ModelKind::kKnn: model_ = classify::KnnModel::load(r); break;
      case ModelKind::kSvm: model_ = classify::SvmModel::load(r); break;
      case ModelKind::kRandomForest: model_ = classify::ForestModel::load(r); break;
      case ModelKind::kMlp: model_ = MlpNet::load_payload(r); break;
      case ModelKind::kCnn: model_ = CnnNet::load_payload(r); break;
      case ModelKind::kAiss: model_ = classify::AissModel::load(r); break;
    }
  }

  int predict(std::span<const float> features) const {
    return std::visit(
        [&](const auto& m) -> int {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, MlpNet> || std::is_same_v<T, CnnNet>) {
            std::vector<double> logits = m.forward(features);
            int best = 0;
            for (int c = 1; c < m.classes(); ++c)
              if (logits[c] > logits[best]) best = c;
            return best;
          } else {
            return m.predict(features);
          }
        },
        model_);
  }

  std::vector<int> predict_batch(const std::vector<std::vector<float>>& batch) const {
    std::vector<int> out;
    out.reserve(batch.size());
    for (const auto& f : batch) out.push_back(predict(f));
    return out;
  }

 private:
  using MlpNet = classify::MlpNet;
  using CnnNet = classify::CnnNet;
  std::variant<classify::KnnModel, classify::SvmModel, classify::ForestModel,
               classify::MlpNet, classify::CnnNet, classify::AissModel>
      model_;
};

inline int predict(const ModelArtifact& m, std::span<const float> features) {
  return Predictor(m).predict(features);
}

inline std::vector<int> predict_batch(const ModelArtifact& m,
                                      const std::vector<std::vector<float>>& batch) {
  return Predictor(m).predict_batch(batch);
}

// Fills kind defaults for any hyperparameter not supplied by the caller.
inline std::map<std::string, double> default_hyperparams(ModelKind kind) {
  switch (kind) {
    case ModelKind::kKnn: return {{"k", 5}};
    case ModelKind::kSvm: return {{"lambda", 1e-4}, {"epochs", 50}};
    case ModelKind::kRandomForest: return {{"trees", 100}};
    case ModelKind::kMlp:
    case ModelKind::kCnn:
      return {{"batch", 256}, {"lr", 1e-3}, {"epochs", 10}};
    case ModelKind::kAiss: return {{"radial_bins", 5}, {"angular_bins", 12}};
  }
  return {};
}

// Trains `kind` on `train_set`. Deterministic given seed; the resulting
// artifact records its training-set accuracy under hyperparams["train_acc"].
inline ModelArtifact train(ModelKind kind, const Dataset& train_set,
                           std::map<std::string, double> hyperparams = {},
                           std::uint64_t seed = 0, int threads = 0) {
  if (train_set.samples.empty()) throw std::invalid_argument("empty training set");
  for (auto& [k, v] : default_hyperparams(kind)) hyperparams.emplace(k, v);

  if (kind == ModelKind::kCnn && train_set.feature_mode != FeatureMode::kRaw)
    throw std::invalid_argument("cnn requires raw feature mode");
  if (kind == ModelKind::kAiss && train_set.feature_mode != FeatureMode::kLogPolar)
    throw std::invalid_argument("aiss requires logpolar feature mode");

  ModelArtifact artifact;
  artifact.kind = kind;
  artifact.tile_size = train_set.tile_size;
  artifact.feature_mode = train_set.feature_mode;
  artifact.charset = train_set.charset;
  artifact.hyperparams = hyperparams;

  std::vector<float> features;
  std::vector<int> labels;
  detail::flatten(train_set, features, labels);
  const std::size_t dim = train_set.feature_dim();
  const int classes = train_set.charset.size();

  io::ByteWriter w;
  switch (kind) {
    case ModelKind::kKnn: {
      classify::KnnModel m;
      m.k = static_cast<int>(artifact.hyper("k"));
      if (m.k < 1) throw std::invalid_argument("k must be >= 1");
      m.classes = classes;
      m.dim = dim;
      m.features = features;
      m.labels = labels;
      m.save(w);
      break;
    }
    case ModelKind::kSvm: {
      classify::SvmModel::TrainConfig cfg;
      cfg.lambda = artifact.hyper("lambda");
      cfg.epochs = static_cast<int>(artifact.hyper("epochs"));
      classify::SvmModel m =
          classify::SvmModel::train(features, labels, dim, classes, cfg, seed);
      m.save(w);
      break;
    }
    case ModelKind::kRandomForest: {
      classify::ForestModel m = classify::ForestModel::train(
          features, labels, dim, classes,
          static_cast<int>(artifact.hyper("trees")), seed, threads);
      m.save(w);
      break;
    }
    case ModelKind::kMlp: {
      classify::MlpNet net(dim, classes);
      net.init(seed);
      classify::nn::AdamConfig adam;
      adam.lr = artifact.hyper("lr");
      classify::train_epochs(net, features, labels, dim,
                             static_cast<int>(artifact.hyper("epochs")),
                             static_cast<int>(artifact.hyper("batch")), adam, seed);
      net.save_payload(w);
      break;
    }
    case ModelKind::kCnn: {
      classify::CnnNet net(train_set.tile_size, classes);
      net.init(seed);
      classify::nn::AdamConfig adam;
      adam.lr = artifact.hyper("lr");
      classify::train_epochs(net, features, labels, dim,
                             static_cast<int>(artifact.hyper("epochs")),
                             static_cast<int>(artifact.hyper("batch")), adam, seed);
      net.save_payload(w);
      break;
    }
    case ModelKind::kAiss: {
      LogPolarConfig cfg;
      cfg.radial_bins = static_cast<int>(artifact.hyper("radial_bins"));
      cfg.angular_bins = static_cast<int>(artifact.hyper("angular_bins"));
      if (dim != static_cast<std::size_t>(cfg.radial_bins) * cfg.angular_bins)
        throw std::invalid_argument("dataset dimension does not match log-polar bins");
      classify::AissModel m =
          classify::AissModel::build(train_set.charset, train_set.tile_size, cfg);
      m.save(w);
      break;
    }
  }
  artifact.payload = w.take();

  Predictor p(artifact);
  std::size_t correct = 0;
  for (const Sample& s : train_set.samples)
    if (p.predict(s.features) == s.label) ++correct;
  artifact.hyperparams["train_acc"] =
      static_cast<double>(correct) / static_cast<double>(train_set.samples.size());
  return artifact;
}

}  // namespace asciigen
