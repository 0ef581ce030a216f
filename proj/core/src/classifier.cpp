#include "collusion/classifier.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <set>

#include <json.hpp>

#include "binary_io.hpp"
#include "collusion/error.hpp"
#include "collusion/linear_svm.hpp"
#include "collusion/logistic_regression.hpp"
#include "collusion/random_forest.hpp"

namespace collusion {
namespace {

constexpr std::array<char, 8> kMagic{'C', 'K', 'M', 'O', 'D', 'E', 'L', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

}  // namespace

std::string_view model_name(ModelKind k) {
  switch (k) {
    case ModelKind::RandomForest: return "rf";
    case ModelKind::LogisticRegression: return "logreg";
    case ModelKind::LinearSVM: return "svm";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view s) {
  if (s == "rf" || s == "random-forest") return ModelKind::RandomForest;
  if (s == "logreg" || s == "logistic") return ModelKind::LogisticRegression;
  if (s == "svm" || s == "linear-svm") return ModelKind::LinearSVM;
  return std::nullopt;
}

std::string params_to_json(ModelKind kind, const ModelParams& p) {
  nlohmann::ordered_json j;
  switch (kind) {
    case ModelKind::RandomForest:
      j["trees"] = p.forest.trees;
      j["max_features"] = p.forest.max_features;
      j["min_leaf"] = p.forest.min_leaf;
      j["max_depth"] = p.forest.max_depth;
      break;
    case ModelKind::LogisticRegression:
      j["l2"] = p.logistic.l2;
      j["tolerance"] = p.logistic.tolerance;
      j["max_epochs"] = p.logistic.max_epochs;
      break;
    case ModelKind::LinearSVM:
      j["lambda"] = p.svm.lambda;
      j["epochs"] = p.svm.epochs;
      break;
  }
  return j.dump();
}

Prediction Classifier::predict(std::span<const double> row) const {
  if (row.size() != num_features()) {
    throw InvalidArgument("row has " + std::to_string(row.size()) + " values, model expects " +
                          std::to_string(num_features()));
  }
  Prediction p;
  p.scores = scores(row);
  for (std::size_t c = 1; c < p.scores.size(); ++c) {
    if (p.scores[c] > p.scores[std::size_t(p.label)]) p.label = int(c);
  }
  return p;
}

Model fit_model(ModelKind kind, const Eigen::MatrixXd& X, std::span<const int> y,
                std::size_t classes, const ModelParams& params, std::uint64_t seed) {
  if (X.rows() == 0 || std::size_t(X.rows()) != y.size()) {
    throw InvalidArgument("training needs one label per row and at least one row");
  }
  std::set<int> seen;
  for (int label : y) {
    if (label < 0 || std::size_t(label) >= classes) {
      throw InvalidArgument("label " + std::to_string(label) + " outside [0, " +
                            std::to_string(classes) + ")");
    }
    seen.insert(label);
  }
  if (seen.size() < 2) throw InvalidArgument("training data holds a single class");
  switch (kind) {
    case ModelKind::RandomForest: {
      auto m = std::make_unique<RandomForest>();
      m->fit(X, y, classes, params.forest, seed);
      return m;
    }
    case ModelKind::LogisticRegression: {
      auto m = std::make_unique<LogisticRegression>();
      m->fit(X, y, classes, params.logistic);
      return m;
    }
    case ModelKind::LinearSVM: {
      if (classes != 2) throw InvalidArgument("the linear SVM only handles binary tasks");
      auto m = std::make_unique<LinearSvm>();
      m->fit(X, y, params.svm, seed);
      return m;
    }
  }
  throw InvalidArgument("unknown model kind");
}

Model train(ModelKind kind, const Dataset& data, const ModelParams& params, std::uint64_t seed) {
  data.validate();
  return fit_model(kind, data.rows, data.labels, data.num_classes(), params, seed);
}

void save_model(const std::filesystem::path& path, const Classifier& model,
                const std::string& schema_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(kMagic.data(), kMagic.size());
  binary::put<std::uint32_t>(out, kFormatVersion);
  binary::put_string(out, schema_hash);
  binary::put<std::uint8_t>(out, std::uint8_t(model.kind()));
  model.write(out);
  if (!out) throw InputError("failed writing " + path.string());
}

LoadedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw InputError(path.string() + " is not a model container");
  }
  const auto version = binary::get<std::uint32_t>(in);
  if (version != kFormatVersion) {
    throw InputError("unsupported model container version " + std::to_string(version));
  }
  LoadedModel loaded;
  loaded.schema_hash = binary::get_string(in);
  switch (binary::get<std::uint8_t>(in)) {
    case std::uint8_t(ModelKind::RandomForest): loaded.model = RandomForest::read(in); break;
    case std::uint8_t(ModelKind::LogisticRegression):
      loaded.model = LogisticRegression::read(in);
      break;
    case std::uint8_t(ModelKind::LinearSVM): loaded.model = LinearSvm::read(in); break;
    default: throw InputError("unknown model kind in " + path.string());
  }
  return loaded;
}

std::vector<Prediction> score_rows(const LoadedModel& model, const Dataset& data) {
  const std::string hash = data.schema_hash();
  if (hash != model.schema_hash) {
    throw SchemaMismatch("model was trained on layout " + model.schema_hash +
                         ", data set has " + hash);
  }
  std::vector<Prediction> out;
  out.reserve(data.size());
  std::vector<double> row(data.width());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = data.rows(Eigen::Index(i), Eigen::Index(j));
    out.push_back(model.model->predict(row));
  }
  return out;
}

}  // namespace collusion
