// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Random forest: bootstrap-sampled decision trees split on Gini impurity,
// sqrt(d) candidate features per node, grown to purity. Per-tree RNG streams
// derive from (seed, tree index) so parallel training matches serial output.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "asciigen/io/binary.hpp"
#include "asciigen/rng.hpp"

namespace asciigen::classify {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  float threshold = 0.0f;
  int left = -1;
  int right = -1;
  int label = -1;
};

namespace detail {

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<float>& features, const std::vector<int>& labels,
              std::size_t dim, int classes, Rng& rng)
      : features_(features), labels_(labels), dim_(dim), classes_(classes), rng_(rng) {}

  std::vector<TreeNode> build(std::vector<std::size_t> indices) {
    nodes_.clear();
    grow(std::move(indices));
    return std::move(nodes_);
  }

 private:
  int grow(std::vector<std::size_t> idx) {
    std::vector<int> counts(classes_, 0);
    for (std::size_t i : idx) ++counts[labels_[i]];
    int majority = 0;
    for (int c = 1; c < classes_; ++c)
      if (counts[c] > counts[majority]) majority = c;
    bool pure = counts[majority] == static_cast<int>(idx.size());

    if (pure || idx.size() < 2) return make_leaf(majority);

    int best_feature = -1;
    double best_threshold = 0, best_gini = gini_of(counts, idx.size());
    if (!find_split(idx, counts, best_feature, best_threshold, best_gini))
      return make_leaf(majority);

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx) {
      if (features_[i * dim_ + best_feature] <= best_threshold)
        left_idx.push_back(i);
      else
        right_idx.push_back(i);
    }
    idx.clear();
    idx.shrink_to_fit();

    int node = static_cast<int>(nodes_.size());
    nodes_.push_back({best_feature, static_cast<float>(best_threshold), -1, -1, -1});
    int l = grow(std::move(left_idx));
    int r = grow(std::move(right_idx));
    nodes_[node].left = l;
    nodes_[node].right = r;
    return node;
  }

  int make_leaf(int label) {
    nodes_.push_back({-1, 0.0f, -1, -1, label});
    return static_cast<int>(nodes_.size()) - 1;
  }

  static double gini_of(const std::vector<int>& counts, std::size_t total) {
    double sq = 0;
    for (int c : counts) sq += static_cast<double>(c) * c;
    return 1.0 - sq / (static_cast<double>(total) * total);
  }

  // Picks the best threshold over a sqrt(d) feature subsample; returns false
  // when no candidate split separates the node.
  bool find_split(const std::vector<std::size_t>& idx, const std::vector<int>& counts,
                  int& best_feature, double& best_threshold, double& parent_gini) {
    const int mtry = std::max(1, static_cast<int>(std::lround(std::sqrt(
                                     static_cast<double>(dim_)))));
    // sample features without replacement
    std::vector<int> order(dim_);
    for (std::size_t j = 0; j < dim_; ++j) order[j] = static_cast<int>(j);
    for (int j = 0; j < mtry; ++j) {
      std::size_t pick = j + rng_.below(dim_ - j);
      std::swap(order[j], order[pick]);
    }

    const double total = static_cast<double>(idx.size());
    double best_score = parent_gini;  // weighted child gini must beat parent
    bool found = false;
    std::vector<std::pair<float, int>> vals(idx.size());
    std::vector<int> left(classes_);
    for (int j = 0; j < mtry; ++j) {
      const int f = order[j];
      for (std::size_t i = 0; i < idx.size(); ++i)
        vals[i] = {features_[idx[i] * dim_ + f], labels_[idx[i]]};
      std::sort(vals.begin(), vals.end());
      if (vals.front().first == vals.back().first) continue;

      std::fill(left.begin(), left.end(), 0);
      double left_sq = 0;
      double right_sq = 0;
      for (int c : counts) right_sq += static_cast<double>(c) * c;
      std::vector<int> right(counts);
      for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        const int c = vals[i].second;
        left_sq += 2.0 * left[c] + 1.0;
        ++left[c];
        right_sq -= 2.0 * right[c] - 1.0;
        --right[c];
        if (vals[i].first == vals[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1), nr = total - nl;
        const double score =
            (nl * (1.0 - left_sq / (nl * nl)) + nr * (1.0 - right_sq / (nr * nr))) /
            total;
        if (score < best_score - 1e-12) {
          best_score = score;
          best_feature = f;
          best_threshold = 0.5 * (static_cast<double>(vals[i].first) +
                                  static_cast<double>(vals[i + 1].first));
          found = true;
        }
      }
    }
    return found;
  }

  const std::vector<float>& features_;
  const std::vector<int>& labels_;
  std::size_t dim_;
  int classes_;
  Rng& rng_;
  std::vector<TreeNode> nodes_;
};

}  // namespace detail

struct ForestModel {
  int classes = 0;
  std::size_t dim = 0;
  std::vector<std::vector<TreeNode>> trees;

  static std::vector<TreeNode> train_tree(const std::vector<float>& features,
                                          const std::vector<int>& labels,
                                          std::size_t dim, int classes,
                                          std::uint64_t seed, int tree_index) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(tree_index));
    const std::size_t n = labels.size();
    std::vector<std::size_t> bootstrap(n);
    for (std::size_t i = 0; i < n; ++i) bootstrap[i] = rng.below(n);
    detail::TreeBuilder builder(features, labels, dim, classes, rng);
    return builder.build(std::move(bootstrap));
  }

  static ForestModel train(const std::vector<float>& features,
                           const std::vector<int>& labels, std::size_t dim,
                           int classes, int tree_count, std::uint64_t seed,
                           int threads = 0) {
    if (labels.empty()) throw std::invalid_argument("empty training set");
    ForestModel m;
    m.classes = classes;
    m.dim = dim;
    m.trees.resize(tree_count);
    if (threads == 0)
      threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(threads, tree_count); ++w) {
      pool.emplace_back([&] {
        for (int t; (t = next.fetch_add(1)) < tree_count;)
          m.trees[t] = train_tree(features, labels, dim, classes, seed, t);
      });
    }
    for (auto& th : pool) th.join();
    return m;
  }

  int predict(std::span<const float> x) const {
    if (x.size() != dim) throw std::invalid_argument("feature dimension mismatch");
    std::vector<int> votes(classes, 0);
    for (const auto& tree : trees) {
      int node = 0;
      while (tree[node].feature >= 0)
        node = x[tree[node].feature] <= tree[node].threshold ? tree[node].left
                                                             : tree[node].right;
      ++votes[tree[node].label];
    }
    int best = 0;
    for (int c = 1; c < classes; ++c)
      if (votes[c] > votes[best]) best = c;
    return best;
  }

  void save(io::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(classes));
    w.u32(static_cast<std::uint32_t>(dim));
    w.u32(static_cast<std::uint32_t>(trees.size()));
    for (const auto& tree : trees) {
      w.u32(static_cast<std::uint32_t>(tree.size()));
      for (const TreeNode& n : tree) {
        w.u32(static_cast<std::uint32_t>(n.feature));
        w.f32(n.threshold);
        w.u32(static_cast<std::uint32_t>(n.left));
        w.u32(static_cast<std::uint32_t>(n.right));
        w.u32(static_cast<std::uint32_t>(n.label));
      }
    }
  }

  static ForestModel load(io::ByteReader& r) {
    ForestModel m;
    m.classes = static_cast<int>(r.u32());
    m.dim = r.u32();
    m.trees.resize(r.u32());
    for (auto& tree : m.trees) {
      tree.resize(r.u32());
      for (TreeNode& n : tree) {
        n.feature = static_cast<int>(r.u32());
        n.threshold = r.f32();
        n.left = static_cast<int>(r.u32());
        n.right = static_cast<int>(r.u32());
        n.label = static_cast<int>(r.u32());
      }
    }
    return m;
  }
};

}  // namespace asciigen::classify
