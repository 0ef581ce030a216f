#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collusion/collection.hpp"
#include "collusion/schema.hpp"

namespace collusion {

enum class Task { OrganicVsOrganized, PoliticalVsNon, Camp3Way };

/// Data set variants: all columns, their principal components, all columns
/// minus the traced-hashtag user features, and the principal components of
/// that reduced set.
enum class Variant { All, Pca, NoTraced, PcaNoTraced };

std::string_view task_name(Task t);  // organized | political | camp
std::optional<Task> parse_task(std::string_view s);
std::string_view variant_name(Variant v);  // all | pca | no-traced | pca-no-traced
std::optional<Variant> parse_variant(std::string_view s);

/// Class names, indexed by class id. For binary tasks class 1 is the
/// positive class (organized, political).
std::vector<std::string> class_names(Task t);
std::size_t class_count(Task t);

/// Class id of a labelled row for the task; nullopt when that label is unset.
std::optional<int> class_of(const LabelTriple& labels, Task t);

struct Dataset {
  Eigen::MatrixXd rows;  // n x d
  std::vector<std::string> column_names;
  std::vector<bool> traced;  // per column, derived from the traced hashtag
  std::vector<int> labels;   // per row, in [0, class_count(task))
  std::vector<std::string> row_ids;
  Task task = Task::OrganicVsOrganized;
  /// Set once ablate_traced_features has run.
  bool traced_removed = false;

  std::size_t size() const { return static_cast<std::size_t>(rows.rows()); }
  std::size_t width() const { return static_cast<std::size_t>(rows.cols()); }
  std::size_t num_classes() const { return class_count(task); }

  /// Throws InvalidArgument on shape mismatches, non-finite values or labels
  /// outside the task's classes.
  void validate() const;

  /// Hash of the column layout (names and traced flags).
  std::string schema_hash() const;

  Dataset select_rows(std::span<const std::size_t> idx) const;
  Dataset select_columns(std::span<const std::size_t> idx) const;
};

/// Rows of a feature table carrying a label for the task. Column names must
/// equal the schema's columns (SchemaMismatch otherwise).
Dataset make_dataset(std::span<const FeatureRow> rows, std::span<const std::string> columns,
                     const FeatureSchema& schema, Task task);

struct AblationResult {
  Dataset data;
  std::size_t removed = 0;
};

/// Drops every traced-hashtag column. An already ablated set is returned
/// unchanged; otherwise a set without tagged columns throws SchemaMismatch.
AblationResult ablate_traced_features(const Dataset& data);

/// Trainset CSV ("label,id,<columns>") plus a JSON sidecar at
/// <path>.schema.json with task, variant, classes, columns and hash.
void save_trainset(const std::filesystem::path& path, const Dataset& data, Variant variant);

struct Trainset {
  Dataset data;
  Variant variant = Variant::All;
  std::string schema_hash;
};

/// Reads a trainset and its sidecar; throws SchemaMismatch when the CSV
/// header or the recomputed hash disagree with the sidecar.
Trainset load_trainset(const std::filesystem::path& path);

}  // namespace collusion
