#pragma once

#include <iosfwd>

#include "collusion/classifier.hpp"

namespace collusion {

/// Binary linear SVM: hinge loss with L2 regularization, trained by
/// stochastic sub-gradient descent (Pegasos step sizes) on standardized
/// features. Class scores are the margin passed through a logistic squash.
class LinearSvm final : public Classifier {
 public:
  void fit(const Eigen::MatrixXd& X, std::span<const int> y, const SvmParams& params,
           std::uint64_t seed);

  ModelKind kind() const override { return ModelKind::LinearSVM; }
  std::size_t num_classes() const override { return 2; }
  std::size_t num_features() const override { return static_cast<std::size_t>(mean_.size()); }
  std::vector<double> scores(std::span<const double> row) const override;
  double margin(std::span<const double> row) const;
  void write(std::ostream& out) const override;
  static std::unique_ptr<LinearSvm> read(std::istream& in);

 private:
  Eigen::VectorXd mean_, scale_;
  Eigen::VectorXd weights_;
  double bias_ = 0;
};

}  // namespace collusion
