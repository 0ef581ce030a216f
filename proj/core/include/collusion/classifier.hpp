#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collusion/dataset.hpp"

namespace collusion {

enum class ModelKind { RandomForest, LogisticRegression, LinearSVM };

std::string_view model_name(ModelKind k);  // rf | logreg | svm
std::optional<ModelKind> parse_model(std::string_view s);

struct ForestParams {
  int trees = 100;
  int max_features = 0;  // per split; 0 means ceil(sqrt(d))
  int min_leaf = 1;
  int max_depth = 0;     // 0 means unlimited
};

struct LogisticParams {
  double l2 = 1.0;
  double tolerance = 1e-6;  // on the gradient norm of the mean objective
  int max_epochs = 500;
};

struct SvmParams {
  double lambda = 1e-4;
  int epochs = 100;
};

struct ModelParams {
  ForestParams forest;
  LogisticParams logistic;
  SvmParams svm;
};

std::string params_to_json(ModelKind kind, const ModelParams& p);

struct Prediction {
  int label = 0;
  std::vector<double> scores;  // one per class
};

class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual ModelKind kind() const = 0;
  virtual std::size_t num_classes() const = 0;
  virtual std::size_t num_features() const = 0;

  /// Per-class scores for one row of num_features() values.
  virtual std::vector<double> scores(std::span<const double> row) const = 0;

  /// argmax of scores (lowest class on ties). Throws InvalidArgument on a
  /// width mismatch.
  Prediction predict(std::span<const double> row) const;

  virtual void write(std::ostream& out) const = 0;
};

using Model = std::unique_ptr<Classifier>;

/// Fits a model on rows X with labels y in [0, classes). Deterministic for a
/// seed. Throws InvalidArgument for a linear SVM on more than two classes
/// and for single-class data.
Model fit_model(ModelKind kind, const Eigen::MatrixXd& X, std::span<const int> y,
                std::size_t classes, const ModelParams& params, std::uint64_t seed);

Model train(ModelKind kind, const Dataset& data, const ModelParams& params, std::uint64_t seed);

/// Versioned binary container: magic, format version, schema hash, model
/// kind and the model payload.
void save_model(const std::filesystem::path& path, const Classifier& model,
                const std::string& schema_hash);

struct LoadedModel {
  Model model;
  std::string schema_hash;
};

LoadedModel load_model(const std::filesystem::path& path);

/// Predictions for every row; throws SchemaMismatch when the data set's
/// layout hash differs from the one the model was trained on.
std::vector<Prediction> score_rows(const LoadedModel& model, const Dataset& data);

}  // namespace collusion
