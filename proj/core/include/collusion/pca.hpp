#pragma once

#include <Eigen/Dense>
#include <vector>

#include "collusion/dataset.hpp"

namespace collusion {

/// Principal components of standardized columns. Constant columns are
/// dropped before the eigendecomposition of the correlation matrix.
class PcaModel {
 public:
  /// Keeps the fewest leading components whose explained variance reaches
  /// variance_kept (in (0, 1]). Throws InvalidArgument for fewer than two
  /// rows or when every column is constant.
  static PcaModel fit(const Eigen::MatrixXd& X, double variance_kept);

  Eigen::MatrixXd transform(const Eigen::MatrixXd& X) const;
  /// Maps component scores back to the original columns; dropped constant
  /// columns come back as their constant.
  Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& scores) const;

  /// kept_columns x components, orthonormal columns.
  const Eigen::MatrixXd& components() const { return components_; }
  const std::vector<std::size_t>& kept_columns() const { return kept_; }
  /// Per component share of the total variance.
  const Eigen::VectorXd& explained_variance_ratio() const { return explained_; }
  std::size_t component_count() const { return static_cast<std::size_t>(components_.cols()); }

 private:
  Eigen::VectorXd mean_, scale_;
  std::vector<std::size_t> kept_;
  Eigen::MatrixXd components_;
  Eigen::VectorXd explained_;
};

/// Data set of principal component scores named pc1..pcK.
Dataset pca_fit_transform(const Dataset& data, double variance_kept,
                          PcaModel* model_out = nullptr);

}  // namespace collusion
