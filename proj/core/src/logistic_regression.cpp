#include "collusion/logistic_regression.hpp"

#include <cmath>
#include <deque>

#include "binary_io.hpp"
#include "collusion/error.hpp"

namespace collusion {
namespace {

struct Problem {
  const Eigen::MatrixXd& X;  // standardized, n x d
  const Eigen::MatrixXd& Y;  // one-hot, n x K
  double l2;

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index d() const { return X.cols(); }
  Eigen::Index k() const { return Y.cols(); }

  // theta = [vec(W) column-major (K x d), b (K)]
  double evaluate(const Eigen::VectorXd& theta, Eigen::VectorXd& grad) const {
    const Eigen::Map<const Eigen::MatrixXd> W(theta.data(), k(), d());
    const Eigen::Map<const Eigen::VectorXd> b(theta.data() + k() * d(), k());
    Eigen::MatrixXd Z = X * W.transpose();
    Z.rowwise() += b.transpose();
    double loss = 0;
    for (Eigen::Index i = 0; i < n(); ++i) {
      const double m = Z.row(i).maxCoeff();
      Z.row(i).array() -= m;
      const double lse = std::log(Z.row(i).array().exp().sum());
      Eigen::Index yi = 0;
      Y.row(i).maxCoeff(&yi);
      loss -= Z(i, yi) - lse;
      Z.row(i) = (Z.row(i).array() - lse).exp().matrix();  // probabilities
    }
    const double inv_n = 1.0 / double(n());
    loss = loss * inv_n + 0.5 * l2 * inv_n * W.squaredNorm();
    const Eigen::MatrixXd residual = Z - Y;
    grad.resize(theta.size());
    Eigen::Map<Eigen::MatrixXd> gW(grad.data(), k(), d());
    gW = inv_n * (residual.transpose() * X) + l2 * inv_n * W;
    grad.tail(k()) = inv_n * residual.colwise().sum().transpose();
    return loss;
  }
};

}  // namespace

void LogisticRegression::fit(const Eigen::MatrixXd& X, std::span<const int> y,
                             std::size_t classes, const LogisticParams& params) {
  const Eigen::Index n = X.rows(), d = X.cols(), k = Eigen::Index(classes);
  if (n == 0) throw InvalidArgument("logistic regression needs training rows");
  mean_ = X.colwise().mean().transpose();
  scale_ = ((X.rowwise() - mean_.transpose()).array().square().colwise().sum() / double(n))
               .sqrt()
               .transpose();
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!(scale_(j) > 1e-12)) scale_(j) = 1.0;
  }
  const Eigen::MatrixXd Xs =
      ((X.rowwise() - mean_.transpose()).array().rowwise() / scale_.transpose().array()).matrix();
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(n, k);
  for (Eigen::Index i = 0; i < n; ++i) Y(i, y[std::size_t(i)]) = 1.0;

  const Problem problem{Xs, Y, params.l2};
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(k * d + k);
  Eigen::VectorXd grad;
  double f = problem.evaluate(theta, grad);

  // L-BFGS with a backtracking Armijo line search.
  constexpr std::size_t kHistory = 10;
  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;
  iterations_ = 0;
  gradient_norm_ = grad.norm();
  Eigen::VectorXd new_grad;
  while (gradient_norm_ > params.tolerance && iterations_ < params.max_epochs) {
    Eigen::VectorXd q = grad;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha[i] * y_hist[i];
    }
    if (!s_hist.empty()) {
      q *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    } else {
      q /= std::max(1.0, gradient_norm_);
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(q);
      q += s_hist[i] * (alpha[i] - beta);
    }
    Eigen::VectorXd direction = -q;
    double slope = grad.dot(direction);
    if (slope >= 0) {  // not a descent direction: restart from steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      direction = -grad / std::max(1.0, gradient_norm_);
      slope = grad.dot(direction);
    }

    double step = 1.0;
    Eigen::VectorXd candidate;
    double f_new = 0;
    bool accepted = false;
    for (int tries = 0; tries < 50; ++tries) {
      candidate = theta + step * direction;
      f_new = problem.evaluate(candidate, new_grad);
      if (f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    ++iterations_;
    if (!accepted) break;

    Eigen::VectorXd s = candidate - theta;
    Eigen::VectorXd yv = new_grad - grad;
    const double sy = s.dot(yv);
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    theta = std::move(candidate);
    grad = new_grad;
    f = f_new;
    gradient_norm_ = grad.norm();
  }

  weights_ = Eigen::Map<const Eigen::MatrixXd>(theta.data(), k, d);
  bias_ = theta.tail(k);
}

std::vector<double> LogisticRegression::scores(std::span<const double> row) const {
  const Eigen::Index d = mean_.size();
  Eigen::VectorXd x(d);
  for (Eigen::Index j = 0; j < d; ++j) x(j) = (row[std::size_t(j)] - mean_(j)) / scale_(j);
  Eigen::VectorXd z = weights_ * x + bias_;
  z.array() -= z.maxCoeff();
  z = z.array().exp();
  z /= z.sum();
  return {z.data(), z.data() + z.size()};
}

void LogisticRegression::write(std::ostream& out) const {
  binary::put_vector(out, mean_);
  binary::put_vector(out, scale_);
  binary::put_matrix(out, weights_);
  binary::put_vector(out, bias_);
}

std::unique_ptr<LogisticRegression> LogisticRegression::read(std::istream& in) {
  auto m = std::make_unique<LogisticRegression>();
  m->mean_ = binary::get_vector(in);
  m->scale_ = binary::get_vector(in);
  m->weights_ = binary::get_matrix(in);
  m->bias_ = binary::get_vector(in);
  if (m->scale_.size() != m->mean_.size() || m->weights_.cols() != m->mean_.size() ||
      m->bias_.size() != m->weights_.rows()) {
    throw InputError("inconsistent logistic regression in model container");
  }
  return m;
}

}  // namespace collusion
