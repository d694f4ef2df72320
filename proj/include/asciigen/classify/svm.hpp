// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// One-vs-rest linear-kernel SVM trained by seeded subgradient descent on the
// regularized hinge loss (Pegasos schedule, lr = 1/(lambda*t)).
//
// Training tracks, per class and sample, the number of margin violations.
// The final weight vector equals (1/(lambda*T)) * sum of violating y*x terms,
// so the model is stored and evaluated in its kernel-expansion (dual) form:
// margins are computed as kernel products against the retained support
// samples, the standard evaluation path for kernel SVMs.

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "asciigen/io/binary.hpp"
#include "asciigen/rng.hpp"

namespace asciigen::classify {

struct SvmModel {
  int classes = 0;
  std::size_t dim = 0;
  std::vector<float> support;  // nsv x dim, row-major
  std::vector<float> coef;     // classes x nsv dual coefficients

  std::size_t support_count() const { return dim == 0 ? 0 : support.size() / dim; }

  std::vector<double> margins(std::span<const float> x) const {
    if (x.size() != dim) throw std::invalid_argument("feature dimension mismatch");
    const std::size_t nsv = support_count();
    std::vector<double> kernel(nsv);
    for (std::size_t i = 0; i < nsv; ++i) {
      const float* row = support.data() + i * dim;
      double dot = 0;
      for (std::size_t j = 0; j < dim; ++j) dot += static_cast<double>(row[j]) * x[j];
      kernel[i] = dot;
    }
    std::vector<double> out(classes, 0.0);
    for (int c = 0; c < classes; ++c) {
      const float* row = coef.data() + static_cast<std::size_t>(c) * nsv;
      double m = 0;
      for (std::size_t i = 0; i < nsv; ++i) m += static_cast<double>(row[i]) * kernel[i];
      out[c] = m;
    }
    return out;
  }

  int predict(std::span<const float> x) const {
    std::vector<double> m = margins(x);
    int best = 0;
    for (int c = 1; c < classes; ++c)
      if (m[c] > m[best]) best = c;  // tie keeps the smaller index
    return best;
  }

  struct TrainConfig {
    double lambda = 1e-4;
    int epochs = 50;
  };

  static SvmModel train(const std::vector<float>& features,
                        const std::vector<int>& labels, std::size_t dim,
                        int classes, const TrainConfig& cfg, std::uint64_t seed) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("empty training set");

    // per-epoch visit order shared by all one-vs-rest problems
    std::vector<std::vector<std::size_t>> orders(cfg.epochs);
    for (int e = 0; e < cfg.epochs; ++e) {
      orders[e].resize(n);
      for (std::size_t i = 0; i < n; ++i) orders[e][i] = i;
      Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(e));
      rng.shuffle(orders[e]);
    }

    // violation counts per (class, sample)
    std::vector<std::uint32_t> alpha(static_cast<std::size_t>(classes) * n, 0);
    std::vector<double> w(dim);
    for (int c = 0; c < classes; ++c) {
      std::fill(w.begin(), w.end(), 0.0);
      std::uint64_t t = 0;
      for (int e = 0; e < cfg.epochs; ++e) {
        for (std::size_t i : orders[e]) {
          ++t;
          const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
          const float* x = features.data() + i * dim;
          double wx = 0;
          for (std::size_t j = 0; j < dim; ++j) wx += w[j] * x[j];
          const double y = labels[i] == c ? 1.0 : -1.0;
          const double decay = 1.0 - 1.0 / static_cast<double>(t);
          if (y * wx < 1.0) {
            ++alpha[static_cast<std::size_t>(c) * n + i];
            for (std::size_t j = 0; j < dim; ++j)
              w[j] = decay * w[j] + eta * y * x[j];
          } else {
            for (std::size_t j = 0; j < dim; ++j) w[j] *= decay;
          }
        }
      }
    }

    // keep samples that support at least one class
    const double total_steps = static_cast<double>(cfg.epochs) * n;
    std::vector<std::size_t> sv;
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c < classes; ++c) {
        if (alpha[static_cast<std::size_t>(c) * n + i] != 0) {
          sv.push_back(i);
          break;
        }
      }
    }

    SvmModel m;
    m.classes = classes;
    m.dim = dim;
    m.support.reserve(sv.size() * dim);
    for (std::size_t i : sv)
      m.support.insert(m.support.end(), features.begin() + i * dim,
                       features.begin() + (i + 1) * dim);
    m.coef.resize(static_cast<std::size_t>(classes) * sv.size());
    const double scale = 1.0 / (cfg.lambda * total_steps);
    for (int c = 0; c < classes; ++c)
      for (std::size_t s = 0; s < sv.size(); ++s) {
        std::size_t i = sv[s];
        double y = labels[i] == c ? 1.0 : -1.0;
        m.coef[static_cast<std::size_t>(c) * sv.size() + s] = static_cast<float>(
            scale * y * alpha[static_cast<std::size_t>(c) * n + i]);
      }
    return m;
  }

  void save(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(classes));
    w.u32(static_cast<std::uint32_t>(dim));
    w.u64(support_count());
    for (float f : support) w.f32(f);
    for (float f : coef) w.f32(f);
  }

  static SvmModel load(io::ByteReader& r) {
    SvmModel m;
    m.classes = static_cast<int>(r.u32());
    m.dim = r.u32();
    std::uint64_t nsv = r.u64();
    m.support.resize(nsv * m.dim);
    for (float& f : m.support) f = r.f32();
    m.coef.resize(static_cast<std::size_t>(m.classes) * nsv);
    for (float& f : m.coef) f = r.f32();
    return m;
  }
};

}  // namespace asciigen::classify
