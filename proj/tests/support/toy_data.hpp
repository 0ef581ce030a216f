#pragma once

#include <string>
#include <vector>

#include "collusion/dataset.hpp"
#include "collusion/rng.hpp"

namespace testing_support {

using namespace collusion;

inline Dataset make_toy(const Eigen::MatrixXd& X, std::vector<int> y,
                        Task task = Task::OrganicVsOrganized) {
  Dataset d;
  d.rows = X;
  d.labels = std::move(y);
  d.task = task;
  for (Eigen::Index j = 0; j < X.cols(); ++j) d.column_names.push_back("c" + std::to_string(j));
  d.traced.assign(std::size_t(X.cols()), false);
  for (Eigen::Index i = 0; i < X.rows(); ++i) d.row_ids.push_back("r" + std::to_string(i));
  return d;
}

/// Two Gaussian-free blobs: class 1 sits at x0 + x1 > 0 with a margin.
inline Dataset separable(std::size_t n, std::uint64_t seed, std::size_t noise_columns = 0) {
  Rng rng(seed);
  Eigen::MatrixXd X(Eigen::Index(n), Eigen::Index(2 + noise_columns));
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = int(i % 2);
    double a = rng.uniform(-3, 3);
    double b = rng.uniform(-3, 3);
    const double shift = (label ? 1.0 : -1.0) * (1.0 + rng.uniform(0, 2)) - (a + b) / 2;
    a += shift;
    b += shift;
    X(Eigen::Index(i), 0) = a;
    X(Eigen::Index(i), 1) = b;
    for (std::size_t j = 0; j < noise_columns; ++j) X(Eigen::Index(i), Eigen::Index(2 + j)) = rng.uniform(-1, 1);
    y[i] = label;
  }
  return make_toy(X, y);
}

/// Column 0 alone separates the classes with a margin of 2.
inline Dataset axis_separable(std::size_t n, std::uint64_t seed) {
  auto d = separable(n, seed);
  Rng rng(seed + 1);
  for (std::size_t i = 0; i < n; ++i) {
    d.rows(Eigen::Index(i), 0) = (d.labels[i] ? 1.0 : -1.0) * rng.uniform(1, 3);
  }
  return d;
}

/// Random features with labels independent of them.
inline Dataset noise(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = rng.uniform(-1, 1);
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = int(i % 2);
  rng.shuffle(y);
  return make_toy(X, y);
}

}  // namespace testing_support
