#pragma once

#include <iosfwd>

#include "collusion/classifier.hpp"

namespace collusion {

/// Multinomial (softmax) logistic regression with an L2 penalty on the
/// weights, fitted by L-BFGS on internally standardized features. Binary
/// tasks use the same two-class softmax.
class LogisticRegression final : public Classifier {
 public:
  void fit(const Eigen::MatrixXd& X, std::span<const int> y, std::size_t classes,
           const LogisticParams& params);

  ModelKind kind() const override { return ModelKind::LogisticRegression; }
  std::size_t num_classes() const override { return static_cast<std::size_t>(weights_.rows()); }
  std::size_t num_features() const override { return static_cast<std::size_t>(mean_.size()); }
  /// Class probabilities.
  std::vector<double> scores(std::span<const double> row) const override;
  void write(std::ostream& out) const override;
  static std::unique_ptr<LogisticRegression> read(std::istream& in);

  int iterations() const { return iterations_; }
  double gradient_norm() const { return gradient_norm_; }

 private:
  Eigen::VectorXd mean_, scale_;
  Eigen::MatrixXd weights_;  // classes x features
  Eigen::VectorXd bias_;     // classes
  int iterations_ = 0;
  double gradient_norm_ = 0;
};

}  // namespace collusion
