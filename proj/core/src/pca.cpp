#include "collusion/pca.hpp"

#include <cmath>

#include "collusion/error.hpp"

namespace collusion {

PcaModel PcaModel::fit(const Eigen::MatrixXd& X, double variance_kept) {
  if (!(variance_kept > 0 && variance_kept <= 1)) {
    throw InvalidArgument("variance to keep must lie in (0, 1]");
  }
  if (X.rows() < 2) throw InvalidArgument("PCA needs at least two rows");
  const double n = double(X.rows());
  PcaModel m;
  m.mean_ = X.colwise().mean().transpose();
  m.scale_ = ((X.rowwise() - m.mean_.transpose()).array().square().colwise().sum() / n)
                 .sqrt()
                 .transpose();
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if (m.scale_(j) > 1e-12 * std::max(1.0, std::abs(m.mean_(j)))) m.kept_.push_back(std::size_t(j));
  }
  if (m.kept_.empty()) throw InvalidArgument("every column is constant");

  const auto k = Eigen::Index(m.kept_.size());
  Eigen::MatrixXd Z(X.rows(), k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const auto j = Eigen::Index(m.kept_[std::size_t(c)]);
    Z.col(c) = (X.col(j).array() - m.mean_(j)) / m.scale_(j);
  }
  const Eigen::MatrixXd corr = (Z.transpose() * Z) / n;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(corr);
  if (solver.info() != Eigen::Success) throw InvalidArgument("eigendecomposition failed");

  // Eigen returns ascending eigenvalues.
  Eigen::VectorXd values = solver.eigenvalues().reverse().cwiseMax(0.0);
  Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();
  const double total = values.sum();
  Eigen::Index keep = 0;
  double cumulative = 0;
  while (keep < k) {
    cumulative += values(keep) / total;
    ++keep;
    if (cumulative >= variance_kept - 1e-12) break;
  }
  m.components_ = vectors.leftCols(keep);
  for (Eigen::Index c = 0; c < keep; ++c) {  // fix signs: largest loading positive
    Eigen::Index arg = 0;
    m.components_.col(c).cwiseAbs().maxCoeff(&arg);
    if (m.components_(arg, c) < 0) m.components_.col(c) *= -1;
  }
  m.explained_ = values.head(keep) / total;
  return m;
}

Eigen::MatrixXd PcaModel::transform(const Eigen::MatrixXd& X) const {
  if (X.cols() != mean_.size()) throw InvalidArgument("PCA input width mismatch");
  Eigen::MatrixXd Z(X.rows(), Eigen::Index(kept_.size()));
  for (Eigen::Index c = 0; c < Z.cols(); ++c) {
    const auto j = Eigen::Index(kept_[std::size_t(c)]);
    Z.col(c) = (X.col(j).array() - mean_(j)) / scale_(j);
  }
  return Z * components_;
}

Eigen::MatrixXd PcaModel::inverse_transform(const Eigen::MatrixXd& scores) const {
  if (scores.cols() != components_.cols()) throw InvalidArgument("PCA score width mismatch");
  const Eigen::MatrixXd Z = scores * components_.transpose();
  Eigen::MatrixXd X = mean_.transpose().replicate(scores.rows(), 1);
  for (Eigen::Index c = 0; c < Z.cols(); ++c) {
    const auto j = Eigen::Index(kept_[std::size_t(c)]);
    X.col(j) = Z.col(c).array() * scale_(j) + mean_(j);
  }
  return X;
}

Dataset pca_fit_transform(const Dataset& data, double variance_kept, PcaModel* model_out) {
  PcaModel model = PcaModel::fit(data.rows, variance_kept);
  Dataset out;
  out.rows = model.transform(data.rows);
  for (std::size_t c = 0; c < model.component_count(); ++c) {
    out.column_names.push_back("pc" + std::to_string(c + 1));
  }
  out.traced.assign(model.component_count(), false);
  out.labels = data.labels;
  out.row_ids = data.row_ids;
  out.task = data.task;
  out.traced_removed = data.traced_removed;
  if (model_out) *model_out = std::move(model);
  return out;
}

}  // namespace collusion
