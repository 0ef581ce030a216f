#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "collusion/schema.hpp"

namespace collusion {

/// Leading CSV columns of a feature file.
inline constexpr std::array<std::string_view, 4> kFeatureCsvLeadColumns = {
    "organization", "politicality", "camp", "collection"};

/// Header row, then one row per collection: the three labels (empty when
/// unset), the collection id and the schema columns. Values are printed with
/// round-trip precision.
void write_feature_csv(std::ostream& out, const FeatureSchema& schema,
                       std::span<const FeatureRow> rows);

struct FeatureTable {
  std::vector<std::string> columns;  // feature columns only
  std::vector<FeatureRow> rows;
};

/// Parses a file written by write_feature_csv. Throws InputError.
FeatureTable read_feature_csv(const std::filesystem::path& path);

/// Reads "hashtag,organization,politicality,camp" rows (header required;
/// empty cells leave a label unset). Hashtags are lowercased without '#'.
std::map<std::string, LabelTriple> read_labels_csv(const std::filesystem::path& path);

/// Number formatting shared by all CSV writers (shortest round-trip form).
std::string format_number(double v);

}  // namespace collusion
