#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "collusion/classifier.hpp"
#include "collusion/metrics.hpp"

namespace collusion {

struct FoldReport {
  std::size_t test_size = 0;
  ClassificationMetrics metrics;
};

struct ModelReport {
  ModelKind kind = ModelKind::RandomForest;
  Task task = Task::OrganicVsOrganized;
  std::string variant = "all";
  std::string schema_hash;
  std::uint64_t seed = 0;
  ModelParams params;
  std::size_t folds_requested = 10;
  bool stratified = true;
  std::vector<FoldReport> folds;
  ClassificationMetrics mean;     // average over folds
  ClassificationMetrics pooled;   // from the summed confusion matrix and pooled scores
  ConfusionMatrix confusion{2};   // summed over folds
  std::vector<std::string> class_names;
};

/// k-fold (stratified) cross-validation. Every row is tested exactly once;
/// folds run in parallel with per-fold seeds derived from `seed`.
ModelReport evaluate_cv(ModelKind kind, const Dataset& data, std::size_t k, std::uint64_t seed,
                        const ModelParams& params = {});

std::string report_to_json(const ModelReport& report);

/// Text table with one row per classifier and one column group per variant:
/// F and A for binary tasks, P and R for multi-class tasks.
std::string report_table(std::span<const ModelReport> reports);

}  // namespace collusion
