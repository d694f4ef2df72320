// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0

#include "asciigen/classify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "asciigen/features.hpp"
#include "asciigen/glyphset.hpp"
#include "asciigen/io/model_io.hpp"

namespace asciigen {
namespace {

// Small three-class dataset with linearly separable clusters in 2-D.
Dataset cluster_dataset(int per_class, std::uint64_t seed) {
  Dataset d;
  d.tile_size = 10;
  d.feature_mode = FeatureMode::kRaw;
  d.charset = Charset({32, 65, 66});
  const float centers[3][2] = {{0.1f, 0.1f}, {0.9f, 0.1f}, {0.5f, 0.9f}};
  Rng rng(seed);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < per_class; ++i) {
      float dx = static_cast<float>(rng.uniform() * 0.1 - 0.05);
      float dy = static_cast<float>(rng.uniform() * 0.1 - 0.05);
      // Trailing constant feature stands in for a bias term, which the
      // Pegasos objective does not carry.
      d.samples.push_back({{centers[c][0] + dx, centers[c][1] + dy, 1.0f}, c});
    }
  return d;
}

double accuracy(const ModelArtifact& m, const Dataset& d) {
  Predictor p(m);
  std::size_t correct = 0;
  for (const Sample& s : d.samples)
    if (p.predict(s.features) == s.label) ++correct;
  return static_cast<double>(correct) / static_cast<double>(d.samples.size());
}

TEST(Knn, MajorityVoteWithTieBreakToSmallestClass) {
  Dataset d;
  d.tile_size = 10;
  d.charset = Charset({32, 33, 34});
  d.samples = {{{0.0f}, 0}, {{0.1f}, 0}, {{0.2f}, 1}, {{0.3f}, 1}, {{1.0f}, 2}};
  ModelArtifact m = train(ModelKind::kKnn, d, {{"k", 4}});
  // Query at 0.15: neighbours are two of class 0 and two of class 1; the tie
  // breaks toward the smaller class index.
  std::vector<float> q{0.15f};
  EXPECT_EQ(predict(m, q), 0);
  q[0] = 0.95f;
  ModelArtifact m1 = train(ModelKind::kKnn, d, {{"k", 1}});
  EXPECT_EQ(predict(m1, q), 2);
}

TEST(Knn, KOneSelfAccuracyIsPerfect) {
  Dataset d = synthesize(Charset::printable_ascii(), 10, 190, 3, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kKnn, d, {{"k", 1}});
  EXPECT_EQ(m.hyper("train_acc"), 1.0);
}

TEST(Knn, SeparableClustersClassifyHeldOutPoints) {
  Dataset train_set = cluster_dataset(20, 1);
  Dataset test_set = cluster_dataset(10, 2);
  ModelArtifact m = train(ModelKind::kKnn, train_set);
  EXPECT_EQ(accuracy(m, test_set), 1.0);
}

TEST(Svm, SeparableClustersClassifyHeldOutPoints) {
  Dataset train_set = cluster_dataset(20, 1);
  Dataset test_set = cluster_dataset(10, 2);
  ModelArtifact m = train(ModelKind::kSvm, train_set, {}, 7);
  EXPECT_GE(accuracy(m, test_set), 0.95);
}

TEST(Svm, MarginsAreDeterministicAndArgmaxMatchesPredict) {
  Dataset d = synthesize(Charset({32, 35, 64}), 10, 30, 11, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kSvm, d, {}, 5);
  Predictor p(m);
  for (const Sample& s : d.samples) {
    int a = p.predict(s.features);
    int b = predict(m, s.features);
    EXPECT_EQ(a, b);
  }
  ModelArtifact m2 = train(ModelKind::kSvm, d, {}, 5);
  EXPECT_EQ(m.payload, m2.payload);
}

TEST(Forest, SeparableClustersClassifyHeldOutPoints) {
  Dataset train_set = cluster_dataset(20, 1);
  Dataset test_set = cluster_dataset(10, 2);
  ModelArtifact m = train(ModelKind::kRandomForest, train_set, {{"trees", 20}}, 3);
  EXPECT_EQ(accuracy(m, test_set), 1.0);
}

TEST(Forest, GrownToPurityMemorizesTrainingSet) {
  Dataset d = synthesize(Charset::printable_ascii(), 10, 285, 9, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kRandomForest, d, {{"trees", 25}}, 4);
  // Bootstrap sampling keeps some noise, but purity-grown trees should fit
  // the training data almost exactly.
  EXPECT_GE(m.hyper("train_acc"), 0.95);
}

TEST(Forest, ThreadCountDoesNotChangeArtifact) {
  Dataset d = synthesize(Charset({32, 35, 43, 64}), 10, 40, 21, FeatureMode::kRaw);
  ModelArtifact a = train(ModelKind::kRandomForest, d, {{"trees", 8}}, 6, 1);
  ModelArtifact b = train(ModelKind::kRandomForest, d, {{"trees", 8}}, 6, 2);
  EXPECT_EQ(a.payload, b.payload);
}

TEST(Forest, SingleClassDatasetYieldsConstantPredictor) {
  Dataset d;
  d.tile_size = 10;
  d.charset = Charset({32, 70});
  for (int i = 0; i < 10; ++i)
    d.samples.push_back({{static_cast<float>(i) / 10.0f, 0.5f}, 1});
  ModelArtifact m = train(ModelKind::kRandomForest, d, {{"trees", 3}});
  std::vector<float> q{0.0f, 0.0f};
  EXPECT_EQ(predict(m, q), 1);
  EXPECT_EQ(m.hyper("train_acc"), 1.0);
}

TEST(Aiss, CleanGlyphsRecoverExactly) {
  Charset cs = Charset::printable_ascii();
  Dataset d = synthesize(cs, 10, 95, 0, FeatureMode::kLogPolar, {0, 0.0, 0.0});
  ModelArtifact m = train(ModelKind::kAiss, d);
  Predictor p(m);
  for (int c = 0; c < cs.size(); ++c) {
    std::vector<float> f = log_polar_histogram(render_glyph(cs.code_of(c), 10));
    EXPECT_EQ(p.predict(f), c) << "glyph " << cs.code_of(c);
  }
}

TEST(Aiss, RequiresLogPolarFeatures) {
  Dataset d = synthesize(Charset({32, 65}), 10, 2, 0, FeatureMode::kRaw);
  EXPECT_THROW(train(ModelKind::kAiss, d), std::invalid_argument);
}

TEST(Cnn, RequiresRawFeatures) {
  Dataset d = synthesize(Charset({32, 65}), 10, 2, 0, FeatureMode::kHog);
  EXPECT_THROW(train(ModelKind::kCnn, d), std::invalid_argument);
}

TEST(AllKinds, BlankTileClassifiesAsSpace) {
  Charset cs = Charset::printable_ascii();
  Dataset raw = synthesize(cs, 10, 475, 17, FeatureMode::kRaw);
  Dataset lp = synthesize(cs, 10, 475, 17, FeatureMode::kLogPolar);
  Tile blank(10);
  std::vector<float> raw_q = raw_features(blank);
  std::vector<float> lp_q = log_polar_histogram(blank);
  for (ModelKind kind : {ModelKind::kKnn, ModelKind::kRandomForest}) {
    ModelArtifact m = train(kind, raw, {}, 2);
    EXPECT_EQ(predict(m, raw_q), 0) << to_string(kind);
  }
  ModelArtifact aiss = train(ModelKind::kAiss, lp);
  EXPECT_EQ(predict(aiss, lp_q), 0);
}

TEST(AllKinds, ArtifactsAreByteDeterministic) {
  Dataset raw = synthesize(Charset({32, 35, 64}), 10, 30, 13, FeatureMode::kRaw);
  Dataset lp = synthesize(Charset({32, 35, 64}), 10, 30, 13, FeatureMode::kLogPolar);
  for (ModelKind kind : {ModelKind::kKnn, ModelKind::kSvm, ModelKind::kRandomForest,
                         ModelKind::kMlp, ModelKind::kCnn, ModelKind::kAiss}) {
    const Dataset& d = kind == ModelKind::kAiss ? lp : raw;
    std::map<std::string, double> hp;
    if (kind == ModelKind::kMlp || kind == ModelKind::kCnn) hp["epochs"] = 2;
    ModelArtifact a = train(kind, d, hp, 9);
    ModelArtifact b = train(kind, d, hp, 9);
    EXPECT_EQ(io::serialize_model(a), io::serialize_model(b)) << to_string(kind);
  }
}

TEST(AllKinds, PredictorSurvivesSerializationRoundTrip) {
  Dataset d = synthesize(Charset({32, 35, 64, 88}), 10, 40, 29, FeatureMode::kRaw);
  for (ModelKind kind : {ModelKind::kKnn, ModelKind::kSvm, ModelKind::kRandomForest,
                         ModelKind::kMlp, ModelKind::kCnn}) {
    std::map<std::string, double> hp;
    if (kind == ModelKind::kMlp || kind == ModelKind::kCnn) hp["epochs"] = 2;
    ModelArtifact m = train(kind, d, hp, 9);
    ModelArtifact back = io::deserialize_model(io::serialize_model(m));
    std::vector<std::vector<float>> batch;
    for (const Sample& s : d.samples) batch.push_back(s.features);
    EXPECT_EQ(predict_batch(m, batch), predict_batch(back, batch)) << to_string(kind);
  }
}

TEST(PredictBatch, MatchesSinglePredictions) {
  Dataset d = synthesize(Charset({32, 35, 64}), 10, 30, 31, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kKnn, d);
  std::vector<std::vector<float>> batch;
  for (const Sample& s : d.samples) batch.push_back(s.features);
  std::vector<int> got = predict_batch(m, batch);
  ASSERT_EQ(got.size(), batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i)
    EXPECT_EQ(got[i], predict(m, batch[i]));
}

TEST(Predict, WrongDimensionThrows) {
  Dataset d = synthesize(Charset({32, 65}), 10, 2, 0, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kKnn, d);
  std::vector<float> q(5, 0.0f);
  EXPECT_THROW(predict(m, q), std::invalid_argument);
}

TEST(Train, EmptyDatasetThrows) {
  Dataset d;
  d.charset = Charset({32, 65});
  EXPECT_THROW(train(ModelKind::kKnn, d), std::invalid_argument);
}

TEST(Mlp, LearnsSmallGlyphProblem) {
  Charset cs = Charset({32, 35, 43, 45, 64, 88});
  Dataset d = synthesize(cs, 10, 240, 41, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kMlp, d, {{"epochs", 30}, {"batch", 32}}, 1);
  EXPECT_GE(m.hyper("train_acc"), 0.95);
}

TEST(Cnn, LearnsSmallGlyphProblem) {
  Charset cs = Charset({32, 35, 43, 45, 64, 88});
  Dataset d = synthesize(cs, 10, 240, 43, FeatureMode::kRaw);
  ModelArtifact m = train(ModelKind::kCnn, d, {{"epochs", 30}, {"batch", 32}}, 1);
  EXPECT_GE(m.hyper("train_acc"), 0.95);
}

// Finite-difference gradient check: analytic backward() against central
// differences on a sample of parameters spread across every layer.
template <typename Net>
double max_gradient_error(Net& net, std::size_t input_dim, int label,
                          std::size_t probes) {
  Rng rng(123);
  std::vector<float> x(input_dim);
  for (float& v : x) v = static_cast<float>(rng.uniform());
  std::vector<double> grads(net.param_count(), 0.0);
  net.backward(x, label, grads);

  const double h = 1e-5;
  double max_rel = 0.0;
  for (std::size_t i = 0; i < probes; ++i) {
    std::size_t p = rng.below(net.param_count());
    double orig = net.params()[p];
    net.params()[p] = orig + h;
    std::vector<double> dl(net.classes());
    double lp = classify::nn::softmax_ce(net.forward(x), label, dl);
    net.params()[p] = orig - h;
    double lm = classify::nn::softmax_ce(net.forward(x), label, dl);
    net.params()[p] = orig;
    double numeric = (lp - lm) / (2 * h);
    double denom = std::max({std::abs(numeric), std::abs(grads[p]), 1e-8});
    max_rel = std::max(max_rel, std::abs(numeric - grads[p]) / denom);
  }
  return max_rel;
}

TEST(Mlp, GradientMatchesFiniteDifferences) {
  classify::MlpNet net(25, 7);
  net.init(3);
  EXPECT_LT(max_gradient_error(net, 25, 4, 120), 1e-4);
}

TEST(Cnn, GradientMatchesFiniteDifferences) {
  classify::CnnNet net(10, 7);
  net.init(3);
  EXPECT_LT(max_gradient_error(net, 100, 2, 120), 1e-4);
}

}  // namespace
}  // namespace asciigen
