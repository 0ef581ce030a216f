#include <gtest/gtest.h>

#include "collusion/error.hpp"
#include "collusion/pca.hpp"
#include "toy_data.hpp"

namespace {

using namespace collusion;
using namespace testing_support;

Eigen::MatrixXd random_matrix(Eigen::Index n, Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd X(n, d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < d; ++j) X(i, j) = rng.uniform(-5, 5) * double(j + 1);
  return X;
}

TEST(Pca, LineInThreeDimensions) {
  Rng rng(1);
  Eigen::MatrixXd X(40, 3);
  for (Eigen::Index i = 0; i < 40; ++i) {
    const double t = rng.uniform(-1, 1);
    X.row(i) << t, 2 * t + 1, -3 * t;
  }
  const auto m = PcaModel::fit(X, 0.95);
  EXPECT_EQ(m.component_count(), 1u);
  EXPECT_GE(m.explained_variance_ratio()(0), 0.999);
}

TEST(Pca, IdentityCovarianceKeepsBoth) {
  Eigen::MatrixXd X(4, 2);
  X << 1, 1, 1, -1, -1, 1, -1, -1;
  const auto m = PcaModel::fit(X, 1.0);
  EXPECT_EQ(m.component_count(), 2u);
  EXPECT_NEAR(m.explained_variance_ratio()(0), 0.5, 1e-12);
}

TEST(Pca, ComponentsAreOrthonormal) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto m = PcaModel::fit(random_matrix(50, 10, seed), 1.0);
    const Eigen::MatrixXd C = m.components();
    const Eigen::MatrixXd gram = C.transpose() * C;
    EXPECT_LE((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(Pca, FullRankReconstruction) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto X = random_matrix(50, 10, seed);
    const auto m = PcaModel::fit(X, 1.0);
    ASSERT_EQ(m.component_count(), 10u);
    const Eigen::MatrixXd back = m.inverse_transform(m.transform(X));
    EXPECT_LE((back - X).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Pca, EigenvaluesMatchAFullDecomposition) {
  const auto X = random_matrix(50, 6, 4);
  const auto m = PcaModel::fit(X, 1.0);
  // Oracle: correlation matrix from scratch, eigenvalues by the generic solver.
  const Eigen::Index n = X.rows(), d = X.cols();
  Eigen::MatrixXd Z = X;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mean = Z.col(j).mean();
    Z.col(j).array() -= mean;
    Z.col(j) /= std::sqrt(Z.col(j).squaredNorm() / double(n));
  }
  const Eigen::MatrixXd R = Z.transpose() * Z / double(n);
  Eigen::EigenSolver<Eigen::MatrixXd> es(R);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < d; ++i) ev.push_back(es.eigenvalues()(i).real());
  std::sort(ev.rbegin(), ev.rend());
  for (Eigen::Index i = 0; i < d; ++i) {
    EXPECT_NEAR(m.explained_variance_ratio()(i), ev[std::size_t(i)] / double(d), 1e-10);
  }
}

TEST(Pca, ConstantColumnsAreDropped) {
  Eigen::MatrixXd X = random_matrix(20, 4, 3);
  X.col(2).setConstant(7.0);
  const auto m = PcaModel::fit(X, 1.0);
  EXPECT_EQ(m.kept_columns(), (std::vector<std::size_t>{0, 1, 3}));
  const Eigen::MatrixXd back = m.inverse_transform(m.transform(X));
  EXPECT_LE((back - X).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Pca, Errors) {
  EXPECT_THROW(PcaModel::fit(Eigen::MatrixXd::Ones(5, 3), 0.9), InvalidArgument);
  EXPECT_THROW(PcaModel::fit(random_matrix(1, 3, 1), 0.9), InvalidArgument);
  EXPECT_THROW(PcaModel::fit(random_matrix(5, 3, 1), 0.0), InvalidArgument);
}

TEST(Pca, DatasetTransform) {
  auto d = make_toy(random_matrix(30, 5, 2), std::vector<int>(30, 0));
  for (std::size_t i = 0; i < 30; i += 2) d.labels[i] = 1;
  const auto p = pca_fit_transform(d, 1.0);
  EXPECT_EQ(p.width(), 5u);
  EXPECT_EQ(p.column_names.front(), "pc1");
  EXPECT_EQ(p.labels, d.labels);
  for (bool t : p.traced) EXPECT_FALSE(t);
  // Scores are uncorrelated.
  for (Eigen::Index a = 0; a < 5; ++a)
    for (Eigen::Index b = a + 1; b < 5; ++b) {
      const double dot = p.rows.col(a).normalized().dot(p.rows.col(b).normalized());
      EXPECT_LE(std::abs(dot), 1e-6);
    }
}

}  // namespace
