#include <gtest/gtest.h>

#include <json.hpp>

#include "collusion/evaluation.hpp"
#include "toy_data.hpp"

namespace {

using namespace collusion;
using namespace testing_support;

ModelParams fast() {
  ModelParams p;
  p.forest.trees = 20;
  return p;
}

TEST(EvaluateCv, SeparableDataIsPerfect) {
  const auto d = axis_separable(100, 2);
  for (auto kind : {ModelKind::RandomForest, ModelKind::LogisticRegression}) {
    const auto r = evaluate_cv(kind, d, 10, 1, fast());
    EXPECT_EQ(r.pooled.accuracy, 1.0);
    EXPECT_EQ(*r.pooled.roc_auc, 1.0);
  }
}

TEST(EvaluateCv, EveryRowTestedOnce) {
  const auto d = noise(73, 3, 5);
  const auto r = evaluate_cv(ModelKind::RandomForest, d, 10, 2, fast());
  EXPECT_EQ(r.confusion.total(), 73u);
  std::size_t sum = 0;
  for (const auto& f : r.folds) sum += f.test_size;
  EXPECT_EQ(sum, 73u);
  EXPECT_EQ(r.folds.size(), 10u);
  EXPECT_DOUBLE_EQ(r.pooled.accuracy, double(r.confusion.trace()) / 73.0);
}

TEST(EvaluateCv, MetricsInUnitRange) {
  const auto d = noise(60, 4, 9);
  for (auto kind : {ModelKind::RandomForest, ModelKind::LogisticRegression, ModelKind::LinearSVM}) {
    const auto r = evaluate_cv(kind, d, 5, 3, fast());
    for (const auto* m : {&r.mean, &r.pooled}) {
      for (double v : {m->accuracy, m->precision, m->recall, m->f_measure}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
}

TEST(EvaluateCv, ReproducibleAndIndependentOfThreadCount) {
  const auto d = separable(80, 3, 5);
  const auto a = evaluate_cv(ModelKind::RandomForest, d, 10, 7, fast());
  setenv("COLLUSION_KIT_THREADS", "1", 1);
  const auto b = evaluate_cv(ModelKind::RandomForest, d, 10, 7, fast());
  setenv("COLLUSION_KIT_THREADS", "3", 1);
  const auto c = evaluate_cv(ModelKind::RandomForest, d, 10, 7, fast());
  EXPECT_EQ(report_to_json(a), report_to_json(b));
  EXPECT_EQ(report_to_json(a), report_to_json(c));
}

TEST(EvaluateCv, ThreeWayHasNoAuc) {
  auto d = separable(90, 4);
  d.task = Task::Camp3Way;
  for (std::size_t i = 0; i < d.size(); i += 3) {
    d.labels[i] = 2;
    d.rows(Eigen::Index(i), 0) += 50;
  }
  const auto r = evaluate_cv(ModelKind::RandomForest, d, 5, 1, fast());
  EXPECT_FALSE(r.pooled.roc_auc.has_value());
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_FALSE(j["pooled"].contains("roc_auc"));
  EXPECT_FALSE(j["mean"].contains("roc_auc"));
  EXPECT_EQ(j["classes"].size(), 3u);
}

TEST(ReportTable, BinaryAndMultiClassHeaders) {
  const auto d = separable(40, 1);
  std::vector<ModelReport> reports = {evaluate_cv(ModelKind::RandomForest, d, 5, 1, fast()),
                                      evaluate_cv(ModelKind::LogisticRegression, d, 5, 1, fast())};
  reports[1].variant = "pca";
  const auto table = report_table(reports);
  EXPECT_NE(table.find("rf"), std::string::npos);
  EXPECT_NE(table.find("F"), std::string::npos);
  EXPECT_NE(table.find("pca"), std::string::npos);
}

}  // namespace
