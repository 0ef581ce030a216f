#include "collusion/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "collusion/error.hpp"
#include "collusion/kfold.hpp"
#include "collusion/parallel.hpp"
#include "collusion/rng.hpp"

namespace collusion {
namespace {

struct FoldOutcome {
  ConfusionMatrix confusion;
  std::vector<double> positive_scores;  // class-1 score per test row
  std::vector<int> positive;
};

nlohmann::ordered_json metrics_json(const ClassificationMetrics& m) {
  nlohmann::ordered_json j;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f_measure"] = m.f_measure;
  if (m.roc_auc) j["roc_auc"] = *m.roc_auc;
  return j;
}

}  // namespace

ModelReport evaluate_cv(ModelKind kind, const Dataset& data, std::size_t k, std::uint64_t seed,
                        const ModelParams& params) {
  data.validate();
  const std::size_t classes = data.num_classes();
  const bool binary = classes == 2;
  const StratifiedFolds split = stratified_kfold(data.labels, k, seed);

  std::vector<FoldOutcome> outcomes(split.folds.size(), FoldOutcome{ConfusionMatrix(classes), {}, {}});
  parallel_for(split.folds.size(), [&](std::size_t f) {
    const auto& test = split.folds[f];
    std::vector<bool> in_test(data.size(), false);
    for (auto i : test) in_test[i] = true;
    std::vector<std::size_t> train_idx;
    train_idx.reserve(data.size() - test.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (!in_test[i]) train_idx.push_back(i);
    }
    const Dataset train_set = data.select_rows(train_idx);
    const Model model = fit_model(kind, train_set.rows, train_set.labels, classes, params,
                                  derive_seed(seed, 0xf01d, f));
    auto& out = outcomes[f];
    std::vector<double> row(data.width());
    for (auto i : test) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = data.rows(Eigen::Index(i), Eigen::Index(j));
      }
      const Prediction p = model->predict(row);
      out.confusion.add(data.labels[i], p.label);
      if (binary) {
        out.positive_scores.push_back(p.scores[1]);
        out.positive.push_back(data.labels[i] == 1 ? 1 : 0);
      }
    }
  });

  ModelReport report;
  report.kind = kind;
  report.task = data.task;
  report.schema_hash = data.schema_hash();
  report.seed = seed;
  report.params = params;
  report.folds_requested = k;
  report.stratified = split.stratified;
  report.confusion = ConfusionMatrix(classes);
  report.class_names = class_names(data.task);

  std::vector<double> pooled_scores;
  std::vector<int> pooled_positive;
  double auc_sum = 0;
  std::size_t auc_folds = 0;
  for (std::size_t f = 0; f < outcomes.size(); ++f) {
    const auto& o = outcomes[f];
    FoldReport fr;
    fr.test_size = split.folds[f].size();
    fr.metrics = metrics_from(o.confusion);
    if (binary) {
      fr.metrics.roc_auc = roc_auc(o.positive_scores, o.positive);
      if (fr.metrics.roc_auc) {
        auc_sum += *fr.metrics.roc_auc;
        ++auc_folds;
      }
      pooled_scores.insert(pooled_scores.end(), o.positive_scores.begin(), o.positive_scores.end());
      pooled_positive.insert(pooled_positive.end(), o.positive.begin(), o.positive.end());
    }
    report.confusion += o.confusion;
    const double w = 1.0 / double(outcomes.size());
    report.mean.accuracy += w * fr.metrics.accuracy;
    report.mean.precision += w * fr.metrics.precision;
    report.mean.recall += w * fr.metrics.recall;
    report.mean.f_measure += w * fr.metrics.f_measure;
    report.folds.push_back(std::move(fr));
  }
  if (auc_folds > 0) report.mean.roc_auc = auc_sum / double(auc_folds);
  report.pooled = metrics_from(report.confusion);
  if (binary) report.pooled.roc_auc = roc_auc(pooled_scores, pooled_positive);
  return report;
}

std::string report_to_json(const ModelReport& r) {
  nlohmann::ordered_json j;
  j["model"] = std::string(model_name(r.kind));
  j["task"] = std::string(task_name(r.task));
  j["variant"] = r.variant;
  j["schema_hash"] = r.schema_hash;
  j["seed"] = r.seed;
  j["params"] = nlohmann::ordered_json::parse(params_to_json(r.kind, r.params));
  j["folds"] = r.folds_requested;
  j["stratified"] = r.stratified;
  j["classes"] = r.class_names;
  j["mean"] = metrics_json(r.mean);
  j["pooled"] = metrics_json(r.pooled);
  auto& folds = j["per_fold"] = nlohmann::ordered_json::array();
  for (const auto& f : r.folds) {
    auto fj = metrics_json(f.metrics);
    fj["test_size"] = f.test_size;
    folds.push_back(std::move(fj));
  }
  auto& cm = j["confusion"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < r.confusion.classes(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < r.confusion.classes(); ++p) row.push_back(r.confusion.at(int(a), int(p)));
    cm.push_back(std::move(row));
  }
  return j.dump(2);
}

std::string report_table(std::span<const ModelReport> reports) {
  std::vector<std::string> variants;
  std::vector<ModelKind> kinds;
  std::map<std::pair<int, std::string>, const ModelReport*> cell;
  bool multi = false;
  for (const auto& r : reports) {
    if (std::find(variants.begin(), variants.end(), r.variant) == variants.end()) {
      variants.push_back(r.variant);
    }
    if (std::find(kinds.begin(), kinds.end(), r.kind) == kinds.end()) kinds.push_back(r.kind);
    cell[{int(r.kind), r.variant}] = &r;
    multi = multi || r.class_names.size() > 2;
  }
  const char* first = multi ? "P" : "F";
  const char* second = multi ? "R" : "A";
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s", "model");
  out << buf;
  for (const auto& v : variants) {
    std::snprintf(buf, sizeof buf, " | %-15s", v.c_str());
    out << buf;
  }
  out << '\n';
  std::snprintf(buf, sizeof buf, "%-8s", "");
  out << buf;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    std::snprintf(buf, sizeof buf, " | %-7s %-7s", first, second);
    out << buf;
  }
  out << '\n';
  for (auto kind : kinds) {
    std::snprintf(buf, sizeof buf, "%-8s", std::string(model_name(kind)).c_str());
    out << buf;
    for (const auto& v : variants) {
      const auto it = cell.find({int(kind), v});
      if (it == cell.end()) {
        std::snprintf(buf, sizeof buf, " | %-7s %-7s", "-", "-");
      } else {
        const auto& m = it->second->mean;
        std::snprintf(buf, sizeof buf, " | %-7.3f %-7.3f", multi ? m.precision : m.f_measure,
                      multi ? m.recall : m.accuracy);
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace collusion
