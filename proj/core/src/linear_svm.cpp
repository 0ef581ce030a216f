#include "collusion/linear_svm.hpp"

#include <cmath>
#include <numeric>

#include "binary_io.hpp"
#include "collusion/error.hpp"
#include "collusion/rng.hpp"

namespace collusion {

void LinearSvm::fit(const Eigen::MatrixXd& X, std::span<const int> y, const SvmParams& params,
                    std::uint64_t seed) {
  const Eigen::Index n = X.rows(), d = X.cols();
  if (n == 0) throw InvalidArgument("linear SVM needs training rows");
  if (!(params.lambda > 0) || params.epochs <= 0) {
    throw InvalidArgument("linear SVM needs lambda > 0 and epochs > 0");
  }
  mean_ = X.colwise().mean().transpose();
  scale_ = ((X.rowwise() - mean_.transpose()).array().square().colwise().sum() / double(n))
               .sqrt()
               .transpose();
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!(scale_(j) > 1e-12)) scale_(j) = 1.0;
  }
  // Bias rides along as a constant feature so every step is a Pegasos step.
  Eigen::MatrixXd Xs(n, d + 1);
  Xs.leftCols(d) =
      ((X.rowwise() - mean_.transpose()).array().rowwise() / scale_.transpose().array()).matrix();
  Xs.col(d).setOnes();

  const double lambda = params.lambda;
  const double radius = 1.0 / std::sqrt(lambda);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d + 1);
  Eigen::VectorXd average = Eigen::VectorXd::Zero(d + 1);
  std::size_t averaged = 0;
  const std::size_t total = std::size_t(params.epochs) * std::size_t(n);
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  std::size_t t = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    rng.shuffle(order);
    for (auto i : order) {
      ++t;
      const double eta = 1.0 / (lambda * double(t));
      const double label = y[i] == 1 ? 1.0 : -1.0;
      const double m = label * Xs.row(Eigen::Index(i)).dot(w);
      w *= 1.0 - eta * lambda;
      if (m < 1.0) w += eta * label * Xs.row(Eigen::Index(i)).transpose();
      const double norm = w.norm();
      if (norm > radius) w *= radius / norm;
      if (2 * t > total) {  // average the second half of the iterates
        average += w;
        ++averaged;
      }
    }
  }
  if (averaged > 0) w = average / double(averaged);
  weights_ = w.head(d);
  bias_ = w(d);
}

double LinearSvm::margin(std::span<const double> row) const {
  double m = bias_;
  for (Eigen::Index j = 0; j < weights_.size(); ++j) {
    m += weights_(j) * (row[std::size_t(j)] - mean_(j)) / scale_(j);
  }
  return m;
}

std::vector<double> LinearSvm::scores(std::span<const double> row) const {
  const double p = 1.0 / (1.0 + std::exp(-margin(row)));
  return {1.0 - p, p};
}

void LinearSvm::write(std::ostream& out) const {
  binary::put_vector(out, mean_);
  binary::put_vector(out, scale_);
  binary::put_vector(out, weights_);
  binary::put<double>(out, bias_);
}

std::unique_ptr<LinearSvm> LinearSvm::read(std::istream& in) {
  auto m = std::make_unique<LinearSvm>();
  m->mean_ = binary::get_vector(in);
  m->scale_ = binary::get_vector(in);
  m->weights_ = binary::get_vector(in);
  m->bias_ = binary::get<double>(in);
  if (m->scale_.size() != m->mean_.size() || m->weights_.size() != m->mean_.size()) {
    throw InputError("inconsistent linear SVM in model container");
  }
  return m;
}

}  // namespace collusion
