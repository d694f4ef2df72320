// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Small from-scratch neural nets: an MLP (d -> 256 -> 128 -> classes) and a
// CNN (conv3x3x16, 2x2 maxpool, conv3x3x32, dense 128, logits), both trained
// with softmax cross-entropy and Adam in 64-bit precision.
//
// All parameters live in one flat vector so the optimizer and the
// finite-difference gradient checks can treat the network as a function
// R^p -> loss.

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "asciigen/io/binary.hpp"
#include "asciigen/rng.hpp"

namespace asciigen::classify {

namespace nn {

// softmax cross-entropy; fills dlogits with (softmax - onehot)
inline double softmax_ce(std::span<const double> logits, int label,
                         std::span<double> dlogits) {
  double maxv = logits[0];
  for (double v : logits) maxv = std::max(maxv, v);
  double sum = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    dlogits[i] = std::exp(logits[i] - maxv);
    sum += dlogits[i];
  }
  double loss = -(logits[label] - maxv - std::log(sum));
  for (std::size_t i = 0; i < logits.size(); ++i) {
    dlogits[i] /= sum;
    if (static_cast<int>(i) == label) dlogits[i] -= 1.0;
  }
  return loss;
}

inline void he_uniform_init(std::span<double> w, std::size_t fan_in, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in));
  for (double& v : w) v = rng.uniform(-limit, limit);
}

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

class Adam {
 public:
  Adam(std::size_t param_count, const AdamConfig& cfg)
      : cfg_(cfg), m_(param_count, 0.0), v_(param_count, 0.0) {}

  void step(std::span<double> params, std::span<const double> grads) {
    ++t_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, t_);
    const double bc2 = 1.0 - std::pow(cfg_.beta2, t_);
    for (std::size_t i = 0; i < params.size(); ++i) {
      m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * grads[i];
      v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * grads[i] * grads[i];
      params[i] -= cfg_.lr * (m_[i] / bc1) / (std::sqrt(v_[i] / bc2) + cfg_.eps);
    }
  }

 private:
  AdamConfig cfg_;
  std::vector<double> m_, v_;
  int t_ = 0;
};

}  // namespace nn

// Fully connected net: input -> 256 relu -> 128 relu -> classes.
class MlpNet {
 public:
  static constexpr int kHidden1 = 256;
  static constexpr int kHidden2 = 128;

  MlpNet(std::size_t input_dim, int classes)
      : input_(input_dim), classes_(classes) {
    off_w1_ = 0;
    off_b1_ = off_w1_ + kHidden1 * input_;
    off_w2_ = off_b1_ + kHidden1;
    off_b2_ = off_w2_ + static_cast<std::size_t>(kHidden2) * kHidden1;
    off_w3_ = off_b2_ + kHidden2;
    off_b3_ = off_w3_ + static_cast<std::size_t>(classes_) * kHidden2;
    params_.assign(off_b3_ + classes_, 0.0);
  }

  void init(std::uint64_t seed) {
    Rng rng = Rng::derive(seed, 0);
    nn::he_uniform_init(std::span(params_).subspan(off_w1_, kHidden1 * input_), input_, rng);
    nn::he_uniform_init(std::span(params_).subspan(off_w2_, std::size_t{kHidden2} * kHidden1), kHidden1, rng);
    nn::he_uniform_init(std::span(params_).subspan(off_w3_, static_cast<std::size_t>(classes_) * kHidden2), kHidden2, rng);
  }

  std::size_t param_count() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  int classes() const { return classes_; }
  std::size_t input_dim() const { return input_; }

  std::vector<double> forward(std::span<const float> x) const {
    std::vector<double> h1(kHidden1), h2(kHidden2), logits(classes_);
    dense(x, std::span(h1), off_w1_, off_b1_, input_, kHidden1, true);
    dense_d(h1, std::span(h2), off_w2_, off_b2_, kHidden1, kHidden2, true);
    dense_d(h2, std::span(logits), off_w3_, off_b3_, kHidden2, classes_, false);
    return logits;
  }

  // Adds gradient of softmax-CE loss for (x, label) into `grads`;
  // returns the loss.
  double backward(std::span<const float> x, int label, std::span<double> grads) const {
    std::vector<double> h1(kHidden1), h2(kHidden2), logits(classes_);
    dense(x, std::span(h1), off_w1_, off_b1_, input_, kHidden1, true);
    dense_d(h1, std::span(h2), off_w2_, off_b2_, kHidden1, kHidden2, true);
    dense_d(h2, std::span(logits), off_w3_, off_b3_, kHidden2, classes_, false);

    std::vector<double> dlogits(classes_), dh2(kHidden2, 0.0), dh1(kHidden1, 0.0);
    double loss = nn::softmax_ce(logits, label, dlogits);

    // layer 3
    for (int o = 0; o < classes_; ++o) {
      const double g = dlogits[o];
      grads[off_b3_ + o] += g;
      const std::size_t wrow = off_w3_ + static_cast<std::size_t>(o) * kHidden2;
      for (int i = 0; i < kHidden2; ++i) {
        grads[wrow + i] += g * h2[i];
        dh2[i] += g * params_[wrow + i];
      }
    }
    // layer 2 (relu)
    for (int o = 0; o < kHidden2; ++o) {
      if (h2[o] <= 0.0) continue;
      const double g = dh2[o];
      grads[off_b2_ + o] += g;
      const std::size_t wrow = off_w2_ + static_cast<std::size_t>(o) * kHidden1;
      for (int i = 0; i < kHidden1; ++i) {
        grads[wrow + i] += g * h1[i];
        dh1[i] += g * params_[wrow + i];
      }
    }
    // layer 1 (relu)
    for (int o = 0; o < kHidden1; ++o) {
      if (h1[o] <= 0.0) continue;
      const double g = dh1[o];
      grads[off_b1_ + o] += g;
      const std::size_t wrow = off_w1_ + static_cast<std::size_t>(o) * input_;
      for (std::size_t i = 0; i < input_; ++i) grads[wrow + i] += g * x[i];
    }
    return loss;
  }

  void save_payload(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(input_));
    w.u32(static_cast<std::uint32_t>(classes_));
    w.u64(params_.size());
    for (double p : params_) w.f32(static_cast<float>(p));
  }

  static MlpNet load_payload(io::ByteReader& r) {
    std::size_t input = r.u32();
    int classes = static_cast<int>(r.u32());
    MlpNet net(input, classes);
    std::uint64_t count = r.u64();
    if (count != net.params_.size()) throw std::runtime_error("mlp payload size mismatch");
    for (double& p : net.params_) p = r.f32();
    return net;
  }

 private:
  void dense(std::span<const float> in, std::span<double> out, std::size_t w_off,
             std::size_t b_off, std::size_t fan_in, int fan_out, bool relu) const {
    for (int o = 0; o < fan_out; ++o) {
      double acc = params_[b_off + o];
      const std::size_t wrow = w_off + static_cast<std::size_t>(o) * fan_in;
      for (std::size_t i = 0; i < fan_in; ++i) acc += params_[wrow + i] * in[i];
      out[o] = relu && acc < 0.0 ? 0.0 : acc;
    }
  }
  void dense_d(std::span<const double> in, std::span<double> out, std::size_t w_off,
               std::size_t b_off, std::size_t fan_in, int fan_out, bool relu) const {
    for (int o = 0; o < fan_out; ++o) {
      double acc = params_[b_off + o];
      const std::size_t wrow = w_off + static_cast<std::size_t>(o) * fan_in;
      for (std::size_t i = 0; i < fan_in; ++i) acc += params_[wrow + i] * in[i];
      out[o] = relu && acc < 0.0 ? 0.0 : acc;
    }
  }

  std::size_t input_;
  int classes_;
  std::size_t off_w1_, off_b1_, off_w2_, off_b2_, off_w3_, off_b3_;
  std::vector<double> params_;
};

// Convolutional net for n x n raw tiles:
// conv 3x3x16 (valid, relu) -> 2x2 maxpool -> conv 3x3x32 (valid, relu)
// -> flatten -> dense 128 (relu) -> logits.
class CnnNet {
 public:
  static constexpr int kC1 = 16;
  static constexpr int kC2 = 32;
  static constexpr int kDense = 128;

  explicit CnnNet(int n, int classes) : n_(n), classes_(classes) {
    s1_ = n_ - 2;            // after conv1
    sp_ = s1_ / 2;           // after pool
    s2_ = sp_ - 2;           // after conv2
    if (s2_ < 1) throw std::invalid_argument("tile too small for cnn");
    flat_ = static_cast<std::size_t>(kC2) * s2_ * s2_;

    off_k1_ = 0;
    off_kb1_ = off_k1_ + std::size_t{kC1} * 3 * 3;
    off_k2_ = off_kb1_ + kC1;
    off_kb2_ = off_k2_ + std::size_t{kC2} * kC1 * 3 * 3;
    off_w1_ = off_kb2_ + kC2;
    off_b1_ = off_w1_ + std::size_t{kDense} * flat_;
    off_w2_ = off_b1_ + kDense;
    off_b2_ = off_w2_ + static_cast<std::size_t>(classes_) * kDense;
    params_.assign(off_b2_ + classes_, 0.0);
  }

  void init(std::uint64_t seed) {
    Rng rng = Rng::derive(seed, 0);
    nn::he_uniform_init(std::span(params_).subspan(off_k1_, std::size_t{kC1} * 9), 9, rng);
    nn::he_uniform_init(std::span(params_).subspan(off_k2_, std::size_t{kC2} * kC1 * 9), std::size_t{kC1} * 9, rng);
    nn::he_uniform_init(std::span(params_).subspan(off_w1_, std::size_t{kDense} * flat_), flat_, rng);
    nn::he_uniform_init(std::span(params_).subspan(off_w2_, static_cast<std::size_t>(classes_) * kDense), kDense, rng);
  }

  std::size_t param_count() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  int classes() const { return classes_; }
  int tile_size() const { return n_; }
  std::size_t input_dim() const { return static_cast<std::size_t>(n_) * n_; }

  std::vector<double> forward(std::span<const float> x) const {
    Activations a;
    run_forward(x, a);
    return a.logits;
  }

  double backward(std::span<const float> x, int label, std::span<double> grads) const {
    Activations a;
    run_forward(x, a);
    std::vector<double> dlogits(classes_);
    double loss = nn::softmax_ce(a.logits, label, dlogits);

    // dense 2
    std::vector<double> ddense(kDense, 0.0);
    for (int o = 0; o < classes_; ++o) {
      const double g = dlogits[o];
      grads[off_b2_ + o] += g;
      const std::size_t wrow = off_w2_ + static_cast<std::size_t>(o) * kDense;
      for (int i = 0; i < kDense; ++i) {
        grads[wrow + i] += g * a.dense[i];
        ddense[i] += g * params_[wrow + i];
      }
    }
    // dense 1 (relu)
    std::vector<double> dflat(flat_, 0.0);
    for (int o = 0; o < kDense; ++o) {
      if (a.dense[o] <= 0.0) continue;
      const double g = ddense[o];
      grads[off_b1_ + o] += g;
      const std::size_t wrow = off_w1_ + static_cast<std::size_t>(o) * flat_;
      for (std::size_t i = 0; i < flat_; ++i) {
        grads[wrow + i] += g * a.conv2[i];
        dflat[i] += g * params_[wrow + i];
      }
    }
    // conv2 (relu); a.conv2 is the flattened post-relu map [c][y][x]
    std::vector<double> dpool(static_cast<std::size_t>(kC1) * sp_ * sp_, 0.0);
    for (int c = 0; c < kC2; ++c) {
      for (int y = 0; y < s2_; ++y)
        for (int x2 = 0; x2 < s2_; ++x2) {
          const std::size_t oi = (static_cast<std::size_t>(c) * s2_ + y) * s2_ + x2;
          if (a.conv2[oi] <= 0.0) continue;
          const double g = dflat[oi];
          grads[off_kb2_ + c] += g;
          const std::size_t krow = off_k2_ + static_cast<std::size_t>(c) * kC1 * 9;
          for (int ic = 0; ic < kC1; ++ic)
            for (int ky = 0; ky < 3; ++ky)
              for (int kx = 0; kx < 3; ++kx) {
                const std::size_t pi =
                    (static_cast<std::size_t>(ic) * sp_ + y + ky) * sp_ + x2 + kx;
                const std::size_t wi = krow + (static_cast<std::size_t>(ic) * 3 + ky) * 3 + kx;
                grads[wi] += g * a.pool[pi];
                dpool[pi] += g * params_[wi];
              }
        }
    }
    // maxpool: route gradient to the argmax of each window
    std::vector<double> dconv1(static_cast<std::size_t>(kC1) * s1_ * s1_, 0.0);
    for (int c = 0; c < kC1; ++c)
      for (int y = 0; y < sp_; ++y)
        for (int x2 = 0; x2 < sp_; ++x2) {
          const std::size_t pi = (static_cast<std::size_t>(c) * sp_ + y) * sp_ + x2;
          dconv1[a.pool_argmax[pi]] += dpool[pi];
        }
    // conv1 (relu)
    for (int c = 0; c < kC1; ++c) {
      const std::size_t krow = off_k1_ + static_cast<std::size_t>(c) * 9;
      for (int y = 0; y < s1_; ++y)
        for (int x2 = 0; x2 < s1_; ++x2) {
          const std::size_t oi = (static_cast<std::size_t>(c) * s1_ + y) * s1_ + x2;
          if (a.conv1[oi] <= 0.0) continue;
          const double g = dconv1[oi];
          grads[off_kb1_ + c] += g;
          for (int ky = 0; ky < 3; ++ky)
            for (int kx = 0; kx < 3; ++kx)
              grads[krow + ky * 3 + kx] +=
                  g * x[static_cast<std::size_t>(y + ky) * n_ + x2 + kx];
        }
    }
    return loss;
  }

  void save_payload(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(n_));
    w.u32(static_cast<std::uint32_t>(classes_));
    w.u64(params_.size());
    for (double p : params_) w.f32(static_cast<float>(p));
  }

  static CnnNet load_payload(io::ByteReader& r) {
    int n = static_cast<int>(r.u32());
    int classes = static_cast<int>(r.u32());
    CnnNet net(n, classes);
    std::uint64_t count = r.u64();
    if (count != net.params_.size()) throw std::runtime_error("cnn payload size mismatch");
    for (double& p : net.params_) p = r.f32();
    return net;
  }

 private:
  struct Activations {
    std::vector<double> conv1, pool, conv2, dense, logits;
    std::vector<std::size_t> pool_argmax;
  };

  void run_forward(std::span<const float> x, Activations& a) const {
    if (x.size() != input_dim()) throw std::invalid_argument("feature dimension mismatch");
    a.conv1.assign(static_cast<std::size_t>(kC1) * s1_ * s1_, 0.0);
    for (int c = 0; c < kC1; ++c) {
      const std::size_t krow = off_k1_ + static_cast<std::size_t>(c) * 9;
      for (int y = 0; y < s1_; ++y)
        for (int x2 = 0; x2 < s1_; ++x2) {
          double acc = params_[off_kb1_ + c];
          for (int ky = 0; ky < 3; ++ky)
            for (int kx = 0; kx < 3; ++kx)
              acc += params_[krow + ky * 3 + kx] *
                     x[static_cast<std::size_t>(y + ky) * n_ + x2 + kx];
          a.conv1[(static_cast<std::size_t>(c) * s1_ + y) * s1_ + x2] =
              acc < 0.0 ? 0.0 : acc;
        }
    }
    a.pool.assign(static_cast<std::size_t>(kC1) * sp_ * sp_, 0.0);
    a.pool_argmax.assign(a.pool.size(), 0);
    for (int c = 0; c < kC1; ++c)
      for (int y = 0; y < sp_; ++y)
        for (int x2 = 0; x2 < sp_; ++x2) {
          double best = -1.0;
          std::size_t best_i = 0;
          for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
              const std::size_t i =
                  (static_cast<std::size_t>(c) * s1_ + 2 * y + dy) * s1_ + 2 * x2 + dx;
              if (a.conv1[i] > best) {
                best = a.conv1[i];
                best_i = i;
              }
            }
          const std::size_t pi = (static_cast<std::size_t>(c) * sp_ + y) * sp_ + x2;
          a.pool[pi] = best;
          a.pool_argmax[pi] = best_i;
        }
    a.conv2.assign(flat_, 0.0);
    for (int c = 0; c < kC2; ++c) {
      const std::size_t krow = off_k2_ + static_cast<std::size_t>(c) * kC1 * 9;
      for (int y = 0; y < s2_; ++y)
        for (int x2 = 0; x2 < s2_; ++x2) {
          double acc = params_[off_kb2_ + c];
          for (int ic = 0; ic < kC1; ++ic)
            for (int ky = 0; ky < 3; ++ky)
              for (int kx = 0; kx < 3; ++kx)
                acc += params_[krow + (static_cast<std::size_t>(ic) * 3 + ky) * 3 + kx] *
                       a.pool[(static_cast<std::size_t>(ic) * sp_ + y + ky) * sp_ + x2 + kx];
          a.conv2[(static_cast<std::size_t>(c) * s2_ + y) * s2_ + x2] =
              acc < 0.0 ? 0.0 : acc;
        }
    }
    a.dense.assign(kDense, 0.0);
    for (int o = 0; o < kDense; ++o) {
      double acc = params_[off_b1_ + o];
      const std::size_t wrow = off_w1_ + static_cast<std::size_t>(o) * flat_;
      for (std::size_t i = 0; i < flat_; ++i) acc += params_[wrow + i] * a.conv2[i];
      a.dense[o] = acc < 0.0 ? 0.0 : acc;
    }
    a.logits.assign(classes_, 0.0);
    for (int o = 0; o < classes_; ++o) {
      double acc = params_[off_b2_ + o];
      const std::size_t wrow = off_w2_ + static_cast<std::size_t>(o) * kDense;
      for (int i = 0; i < kDense; ++i) acc += params_[wrow + i] * a.dense[i];
      a.logits[o] = acc;
    }
  }

  int n_;
  int classes_;
  int s1_, sp_, s2_;
  std::size_t flat_;
  std::size_t off_k1_, off_kb1_, off_k2_, off_kb2_, off_w1_, off_b1_, off_w2_, off_b2_;
  std::vector<double> params_;
};

// Shared minibatch training loop with Adam; per-epoch shuffle order derives
// from (seed, epoch).
template <typename Net>
void train_epochs(Net& net, const std::vector<float>& features,
                  const std::vector<int>& labels, std::size_t dim, int epochs,
                  int batch_size, const nn::AdamConfig& adam_cfg,
                  std::uint64_t seed) {
  const std::size_t n = labels.size();
  nn::Adam adam(net.param_count(), adam_cfg);
  std::vector<double> grads(net.param_count());
  std::vector<std::size_t> order(n);
  for (int e = 0; e < epochs; ++e) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng = Rng::derive(seed, 1000 + static_cast<std::uint64_t>(e));
    rng.shuffle(order);
    for (std::size_t start = 0; start < n; start += batch_size) {
      const std::size_t end = std::min(n, start + batch_size);
      std::fill(grads.begin(), grads.end(), 0.0);
      for (std::size_t i = start; i < end; ++i) {
        const std::size_t s = order[i];
        net.backward(std::span(features).subspan(s * dim, dim), labels[s],
                     std::span(grads));
      }
      const double inv = 1.0 / static_cast<double>(end - start);
      for (double& g : grads) g *= inv;
      adam.step(std::span(net.params()), std::span<const double>(grads));
    }
  }
}

}  // namespace asciigen::classify
