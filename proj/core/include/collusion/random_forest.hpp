#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "collusion/classifier.hpp"

namespace collusion {

/// Binary CART tree grown on Gini impurity. Leaves hold class counts.
class DecisionTree {
 public:
  struct Node {
    int feature = -1;        // -1 for leaves
    double threshold = 0;    // go left when value <= threshold
    int left = -1;
    int right = -1;
    std::vector<double> class_counts;  // leaves only
  };

  /// Grows a tree on rows[sample] of X (duplicates allowed, as in a
  /// bootstrap sample).
  static DecisionTree grow(const Eigen::MatrixXd& X, std::span<const int> y, std::size_t classes,
                           std::span<const std::size_t> sample, const ForestParams& params,
                           std::uint64_t seed);

  /// Majority class of the leaf reached by the row (lowest class on ties).
  int vote(std::span<const double> row) const;
  const Node& leaf_for(std::span<const double> row) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t depth() const;

  void write(std::ostream& out) const;
  static DecisionTree read(std::istream& in, std::size_t classes);

 private:
  std::vector<Node> nodes_;
};

/// Bagged decision trees with per-split feature sampling. Scores are vote
/// fractions.
class RandomForest final : public Classifier {
 public:
  RandomForest() = default;

  void fit(const Eigen::MatrixXd& X, std::span<const int> y, std::size_t classes,
           const ForestParams& params, std::uint64_t seed);

  ModelKind kind() const override { return ModelKind::RandomForest; }
  std::size_t num_classes() const override { return classes_; }
  std::size_t num_features() const override { return features_; }
  std::vector<double> scores(std::span<const double> row) const override;
  void write(std::ostream& out) const override;
  static std::unique_ptr<RandomForest> read(std::istream& in);

  const std::vector<DecisionTree>& trees() const { return trees_; }

 private:
  std::size_t classes_ = 0;
  std::size_t features_ = 0;
  std::vector<DecisionTree> trees_;
};

}  // namespace collusion
