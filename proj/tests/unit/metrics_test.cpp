#include <gtest/gtest.h>

#include "collusion/metrics.hpp"
#include "collusion/rng.hpp"

namespace {

using namespace collusion;

ConfusionMatrix eight_two_one_nine() {
  ConfusionMatrix cm(2);
  cm.add(1, 1, 8);
  cm.add(1, 0, 2);
  cm.add(0, 1, 1);
  cm.add(0, 0, 9);
  return cm;
}

TEST(Metrics, ClosedFormBinary) {
  const auto m = metrics_from(eight_two_one_nine());
  const double p = 8.0 / 9.0, r = 0.8;
  EXPECT_NEAR(m.precision, p, 1e-12);
  EXPECT_NEAR(m.recall, r, 1e-12);
  EXPECT_NEAR(m.f_measure, 2 * p * r / (p + r), 1e-12);
  EXPECT_NEAR(m.accuracy, 17.0 / 20.0, 1e-12);
}

TEST(Metrics, ZeroCases) {
  EXPECT_EQ(precision(0, 0), 0.0);
  EXPECT_EQ(recall(0, 0), 0.0);
  EXPECT_EQ(f_measure(0, 0), 0.0);
}

TEST(Metrics, MultiClassIsMacroAveraged) {
  ConfusionMatrix cm(3);
  cm.add(0, 0, 5);
  cm.add(0, 1, 1);
  cm.add(1, 1, 4);
  cm.add(2, 2, 2);
  cm.add(2, 0, 2);
  const auto m = metrics_from(cm);
  const double p = (5.0 / 7 + 4.0 / 5 + 1.0) / 3;
  const double r = (5.0 / 6 + 1.0 + 0.5) / 3;
  EXPECT_NEAR(m.precision, p, 1e-12);
  EXPECT_NEAR(m.recall, r, 1e-12);
  EXPECT_NEAR(m.accuracy, 11.0 / 14, 1e-12);
  EXPECT_FALSE(m.roc_auc.has_value());
}

TEST(Metrics, ConfusionSum) {
  auto a = eight_two_one_nine();
  a += eight_two_one_nine();
  EXPECT_EQ(a.total(), 40u);
  EXPECT_EQ(a.trace(), 34u);
  EXPECT_EQ(a.at(1, 0), 4u);
}

TEST(RocAuc, PerfectAndInverted) {
  const std::vector<double> s = {0.1, 0.2, 0.8, 0.9};
  EXPECT_DOUBLE_EQ(*roc_auc(s, std::vector<int>{0, 0, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(*roc_auc(s, std::vector<int>{1, 1, 0, 0}), 0.0);
  EXPECT_FALSE(roc_auc(s, std::vector<int>{1, 1, 1, 1}).has_value());
}

TEST(RocAuc, TiesCountHalf) {
  EXPECT_DOUBLE_EQ(*roc_auc(std::vector<double>{0.5, 0.5}, std::vector<int>{0, 1}), 0.5);
}

// Mann-Whitney U statistic with half credit for ties.
double pairwise_auc(const std::vector<double>& s, const std::vector<int>& y) {
  double wins = 0, pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (y[i] == 1 && y[j] == 0) {
        pairs += 1;
        wins += s[i] > s[j] ? 1.0 : s[i] == s[j] ? 0.5 : 0.0;
      }
  return wins / pairs;
}

TEST(RocAuc, MatchesPairwiseCount) {
  Rng rng(21);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng.below(60);
    std::vector<double> s(n);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = double(rng.below(8)) / 8.0;
      y[i] = int(rng.below(2));
    }
    y[0] = 0;
    y[1] = 1;
    EXPECT_NEAR(*roc_auc(s, y), pairwise_auc(s, y), 1e-12);
  }
}

TEST(RocAuc, RandomScoresNearHalf) {
  Rng rng(8);
  std::vector<double> s(10000);
  std::vector<int> y(10000);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = rng.uniform();
    y[i] = int(i % 2);
  }
  EXPECT_NEAR(*roc_auc(s, y), 0.5, 0.05);
}

}  // namespace
