#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"

namespace fbsim {

/// Balanced positive (existing) and negative (absent) node pairs.
struct LinkPredictionSet {
  std::vector<Edge> positives;
  std::vector<Edge> negatives;
  std::uint64_t seed = 0;
};

/// Positives: uniform sample without replacement of g.edges(). Negatives:
/// uniform rejection sampling of ordered pairs u != v absent from g (either
/// orientation for undirected graphs) and not already drawn.
inline LinkPredictionSet build_link_prediction_set(const Graph& g, std::size_t n_pos,
                                                   std::size_t n_neg, std::uint64_t seed) {
  auto edges = g.edges();
  if (n_pos > edges.size()) {
    throw InvalidArgument("requested " + std::to_string(n_pos) + " positives but the graph has " +
                          std::to_string(edges.size()) + " edges");
  }
  const std::size_t n = g.node_count();
  if (n < 2 && n_neg > 0) throw InvalidArgument("negatives need at least two nodes");

  LinkPredictionSet set;
  set.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n_pos; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(rng)]);
  }
  set.positives.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(n_pos));

  std::set<Edge> drawn;
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n == 0 ? 0 : n - 1));
  const std::size_t budget = 50 * n_neg + 1000;
  std::size_t attempts = 0;
  while (set.negatives.size() < n_neg) {
    if (++attempts > budget) {
      throw Error("graph too dense: could not sample " + std::to_string(n_neg) +
                  " non-edges within " + std::to_string(budget) + " attempts");
    }
    NodeId a = node(rng), b = node(rng);
    if (a == b || g.has_edge(a, b)) continue;
    if (!g.directed() && a > b) std::swap(a, b);
    if (!drawn.insert({a, b}).second) continue;
    set.negatives.emplace_back(a, b);
  }
  return set;
}

struct RocPoint {
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;  ///< from (0, 0) to (1, 1)
  double auc = 0.0;
};

/// Threshold sweep over distinct scores, highest first; tied scores form one
/// diagonal segment. The trapezoid area is accumulated in integer units of
/// 1 / (2 P N), so it is exact.
inline RocCurve roc_curve(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw InvalidArgument("scores and labels differ in length");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::uint64_t pos = 0, neg = 0;
  for (int y : labels) (y ? pos : neg) += 1;
  if (pos == 0 || neg == 0) throw InvalidArgument("ROC needs both classes");

  RocCurve roc;
  roc.points.push_back({0.0, 0.0});
  std::uint64_t tp = 0, fp = 0, twice_area = 0;
  for (std::size_t i = 0; i < order.size();) {
    const std::uint64_t tp0 = tp, fp0 = fp;
    std::size_t j = i;
    for (; j < order.size() && scores[order[j]] == scores[order[i]]; ++j) {
      (labels[order[j]] ? tp : fp) += 1;
    }
    twice_area += (fp - fp0) * (tp + tp0);
    roc.points.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                          static_cast<double>(tp) / static_cast<double>(pos)});
    i = j;
  }
  roc.auc = static_cast<double>(twice_area) / static_cast<double>(2 * pos * neg);
  return roc;
}

/// L2-regularized logistic regression fit by gradient descent with
/// backtracking line search.
class LogisticModel {
 public:
  explicit LogisticModel(double l2 = 1e-4, double tolerance = 1e-8, std::size_t max_iterations = 5000)
      : l2_(l2), tolerance_(tolerance), max_iterations_(max_iterations) {}

  /// Rows of `x` are examples; labels are 0/1.
  void fit(const std::vector<std::vector<double>>& x, std::span<const int> y) {
    const std::size_t d = x.empty() ? 0 : x.front().size();
    weights_.assign(d + 1, 0.0);  // last entry is the bias
    std::vector<double> grad(d + 1), trial(d + 1);
    double loss = objective(x, y, weights_);
    double step = 1.0;
    for (iterations_ = 0; iterations_ < max_iterations_; ++iterations_) {
      gradient(x, y, weights_, grad);
      double norm2 = 0.0;
      for (double gk : grad) norm2 += gk * gk;
      if (std::sqrt(norm2) < tolerance_) break;
      step = std::min(step * 2.0, 1e6);
      while (true) {
        for (std::size_t k = 0; k <= d; ++k) trial[k] = weights_[k] - step * grad[k];
        const double candidate = objective(x, y, trial);
        if (candidate <= loss - 0.5 * step * norm2 || step < 1e-12) {
          weights_.swap(trial);
          loss = candidate;
          break;
        }
        step *= 0.5;
      }
      if (step < 1e-12) break;
    }
  }

  double predict(std::span<const double> row) const {
    return sigmoid(linear(row, weights_));
  }

  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  static double sigmoid(double z) {
    return z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
  }

  static double linear(std::span<const double> row, const std::vector<double>& w) {
    double z = w.back();
    for (std::size_t k = 0; k < row.size(); ++k) z += w[k] * row[k];
    return z;
  }

  // mean log-loss + l2/2 |w|^2 (bias unpenalized)
  double objective(const std::vector<std::vector<double>>& x, std::span<const int> y,
                   const std::vector<double>& w) const {
    double loss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double z = linear(x[i], w);
      // log(1 + e^z) - y z, stable form
      loss += (z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z))) - y[i] * z;
    }
    loss /= static_cast<double>(x.size());
    for (std::size_t k = 0; k + 1 < w.size(); ++k) loss += 0.5 * l2_ * w[k] * w[k];
    return loss;
  }

  void gradient(const std::vector<std::vector<double>>& x, std::span<const int> y,
                const std::vector<double>& w, std::vector<double>& grad) const {
    std::fill(grad.begin(), grad.end(), 0.0);
    const std::size_t d = w.size() - 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = sigmoid(linear(x[i], w)) - y[i];
      for (std::size_t k = 0; k < d; ++k) grad[k] += r * x[i][k];
      grad[d] += r;
    }
    for (double& gk : grad) gk /= static_cast<double>(x.size());
    for (std::size_t k = 0; k < d; ++k) grad[k] += l2_ * w[k];
  }

  double l2_;
  double tolerance_;
  std::size_t max_iterations_;
  std::size_t iterations_ = 0;
  std::vector<double> weights_;
};

struct CvResult {
  RocCurve roc;  ///< pooled out-of-fold predictions
  std::vector<double> fold_auc;
  double std_error = 0.0;  ///< stdev(fold_auc) / sqrt(folds)
};

/// Stratified k-fold cross-validation of a logistic model; features are
/// standardized with training-fold statistics.
inline CvResult logistic_cv_auc(const std::vector<std::vector<double>>& features,
                                std::span<const int> labels, std::size_t folds, std::uint64_t seed) {
  if (features.size() != labels.size()) throw InvalidArgument("features and labels differ in length");
  if (folds < 2) throw InvalidArgument("need at least two folds");
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw InvalidArgument("labels must be 0 or 1");
    by_class[labels[i]].push_back(i);
  }
  for (const auto& members : by_class) {
    if (members.size() < 2 * folds) {
      throw InvalidArgument("each class needs at least two examples per fold");
    }
  }
  const std::size_t d = features.empty() ? 0 : features.front().size();

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> fold_of(labels.size());
  for (auto& members : by_class) {
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 0; i < members.size(); ++i) fold_of[members[i]] = i % folds;
  }

  CvResult result;
  std::vector<double> pooled(labels.size());
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < labels.size(); ++i) (fold_of[i] == f ? test : train).push_back(i);

    std::vector<double> mean(d, 0.0), scale(d, 0.0);
    for (std::size_t i : train) {
      for (std::size_t k = 0; k < d; ++k) mean[k] += features[i][k];
    }
    for (double& m : mean) m /= static_cast<double>(train.size());
    for (std::size_t i : train) {
      for (std::size_t k = 0; k < d; ++k) scale[k] += std::pow(features[i][k] - mean[k], 2);
    }
    for (double& s : scale) {
      s = std::sqrt(s / static_cast<double>(train.size()));
      if (s == 0.0) s = 1.0;
    }
    auto standardize = [&](std::size_t i) {
      std::vector<double> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = (features[i][k] - mean[k]) / scale[k];
      return row;
    };

    std::vector<std::vector<double>> x;
    std::vector<int> y;
    for (std::size_t i : train) {
      x.push_back(standardize(i));
      y.push_back(labels[i]);
    }
    LogisticModel model;
    model.fit(x, y);

    std::vector<double> fold_scores;
    std::vector<int> fold_labels;
    for (std::size_t i : test) {
      pooled[i] = model.predict(standardize(i));
      fold_scores.push_back(pooled[i]);
      fold_labels.push_back(labels[i]);
    }
    result.fold_auc.push_back(roc_curve(fold_scores, fold_labels).auc);
  }
  result.roc = roc_curve(pooled, labels);

  const double mean_auc =
      std::accumulate(result.fold_auc.begin(), result.fold_auc.end(), 0.0) / static_cast<double>(folds);
  double var = 0.0;
  for (double a : result.fold_auc) var += (a - mean_auc) * (a - mean_auc);
  var /= static_cast<double>(folds - 1);
  result.std_error = std::sqrt(var / static_cast<double>(folds));
  return result;
}

}  // namespace fbsim
