#include "collusion/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "collusion/error.hpp"

namespace collusion {

using nlohmann::json;

std::string_view task_name(Task t) {
  switch (t) {
    case Task::OrganicVsOrganized: return "organized";
    case Task::PoliticalVsNon: return "political";
    case Task::Camp3Way: return "camp";
  }
  return "organized";
}

std::optional<Task> parse_task(std::string_view s) {
  if (s == "organized") return Task::OrganicVsOrganized;
  if (s == "political") return Task::PoliticalVsNon;
  if (s == "camp") return Task::Camp3Way;
  return std::nullopt;
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::All: return "all";
    case Variant::Pca: return "pca";
    case Variant::NoTraced: return "no-traced";
    case Variant::PcaNoTraced: return "pca-no-traced";
  }
  return "all";
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (auto v : {Variant::All, Variant::Pca, Variant::NoTraced, Variant::PcaNoTraced}) {
    if (variant_name(v) == s) return v;
  }
  return std::nullopt;
}

std::vector<std::string> class_names(Task t) {
  switch (t) {
    case Task::OrganicVsOrganized: return {"organic", "organized"};
    case Task::PoliticalVsNon: return {"non_political", "political"};
    case Task::Camp3Way: return {"pro_trump", "pro_hillary", "none"};
  }
  return {};
}

std::size_t class_count(Task t) { return t == Task::Camp3Way ? 3 : 2; }

std::optional<int> class_of(const LabelTriple& labels, Task t) {
  switch (t) {
    case Task::OrganicVsOrganized:
      if (!labels.organization) return std::nullopt;
      return *labels.organization == Organization::Organized ? 1 : 0;
    case Task::PoliticalVsNon:
      if (!labels.politicality) return std::nullopt;
      return *labels.politicality == Politicality::Political ? 1 : 0;
    case Task::Camp3Way:
      if (!labels.camp) return std::nullopt;
      switch (*labels.camp) {
        case Camp::ProTrump: return 0;
        case Camp::ProHillary: return 1;
        case Camp::None: return 2;
      }
  }
  return std::nullopt;
}

void Dataset::validate() const {
  if (column_names.size() != width() || traced.size() != width()) {
    throw InvalidArgument("column metadata does not match the data width");
  }
  if (labels.size() != size()) throw InvalidArgument("label count does not match the row count");
  if (!row_ids.empty() && row_ids.size() != size()) {
    throw InvalidArgument("row id count does not match the row count");
  }
  if (!rows.allFinite()) throw InvalidArgument("data set contains NaN or infinite values");
  for (int label : labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= num_classes()) {
      throw InvalidArgument("label " + std::to_string(label) + " outside the task's classes");
    }
  }
}

std::string Dataset::schema_hash() const {
  std::string doc;
  for (std::size_t i = 0; i < column_names.size(); ++i) {
    doc += column_names[i];
    doc += traced[i] ? "\x01" : "\x02";
  }
  return hex64(fnv1a64(doc));
}

Dataset Dataset::select_rows(std::span<const std::size_t> idx) const {
  Dataset out;
  out.column_names = column_names;
  out.traced = traced;
  out.task = task;
  out.traced_removed = traced_removed;
  out.rows.resize(static_cast<Eigen::Index>(idx.size()), rows.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.rows.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(idx[i]));
    out.labels.push_back(labels[idx[i]]);
    if (!row_ids.empty()) out.row_ids.push_back(row_ids[idx[i]]);
  }
  return out;
}

Dataset Dataset::select_columns(std::span<const std::size_t> idx) const {
  Dataset out;
  out.labels = labels;
  out.row_ids = row_ids;
  out.task = task;
  out.traced_removed = traced_removed;
  out.rows.resize(rows.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    out.rows.col(static_cast<Eigen::Index>(j)) = rows.col(static_cast<Eigen::Index>(idx[j]));
    out.column_names.push_back(column_names[idx[j]]);
    out.traced.push_back(traced[idx[j]]);
  }
  return out;
}

Dataset make_dataset(std::span<const FeatureRow> rows, std::span<const std::string> columns,
                     const FeatureSchema& schema, Task task) {
  const auto schema_columns = schema.columns();
  if (columns.size() != schema_columns.size()) {
    throw SchemaMismatch("feature table has " + std::to_string(columns.size()) +
                         " columns, schema has " + std::to_string(schema_columns.size()));
  }
  Dataset data;
  data.task = task;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] != schema_columns[j].name) {
      throw SchemaMismatch("column " + std::to_string(j) + " is '" + columns[j] +
                           "', schema expects '" + schema_columns[j].name + "'");
    }
    data.column_names.push_back(columns[j]);
    data.traced.push_back(schema_columns[j].traced);
  }
  std::vector<const FeatureRow*> kept;
  for (const auto& r : rows) {
    if (const auto cls = class_of(r.labels, task)) {
      kept.push_back(&r);
      data.labels.push_back(*cls);
      data.row_ids.push_back(r.collection_id);
    }
  }
  data.rows.resize(static_cast<Eigen::Index>(kept.size()),
                   static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i]->values.size() != columns.size()) {
      throw SchemaMismatch("row '" + kept[i]->collection_id + "' has the wrong width");
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
      data.rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kept[i]->values[j];
    }
  }
  data.validate();
  return data;
}

AblationResult ablate_traced_features(const Dataset& data) {
  if (data.traced_removed) return {data, 0};
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < data.width(); ++j) {
    if (!data.traced[j]) keep.push_back(j);
  }
  if (keep.size() == data.width()) {
    throw SchemaMismatch("no traced-hashtag columns are tagged in this data set");
  }
  AblationResult out{data.select_columns(keep), data.width() - keep.size()};
  out.data.traced_removed = true;
  return out;
}

namespace {

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".schema.json");
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void save_trainset(const std::filesystem::path& path, const Dataset& data, Variant variant) {
  data.validate();
  const auto names = class_names(data.task);
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << "label,id";
  for (const auto& c : data.column_names) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << names[static_cast<std::size_t>(data.labels[i])] << ','
        << (data.row_ids.empty() ? std::to_string(i) : data.row_ids[i]);
    for (std::size_t j = 0; j < data.width(); ++j) {
      out << ',' << number(data.rows(Eigen::Index(i), Eigen::Index(j)));
    }
    out << '\n';
  }

  json doc;
  doc["task"] = std::string(task_name(data.task));
  doc["variant"] = std::string(variant_name(variant));
  doc["classes"] = names;
  doc["traced_removed"] = data.traced_removed;
  json cols = json::array();
  for (std::size_t j = 0; j < data.width(); ++j) {
    cols.push_back({{"name", data.column_names[j]}, {"traced", bool(data.traced[j])}});
  }
  doc["columns"] = std::move(cols);
  doc["hash"] = data.schema_hash();
  std::ofstream side(sidecar_path(path));
  if (!side) throw InputError("cannot write " + sidecar_path(path).string());
  side << doc.dump(2) << '\n';
}

Trainset load_trainset(const std::filesystem::path& path) {
  std::ifstream side(sidecar_path(path));
  if (!side) throw InputError("missing trainset sidecar " + sidecar_path(path).string());
  json doc = json::parse(side, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed " + sidecar_path(path).string());

  Trainset ts;
  try {
    const auto task = parse_task(doc.at("task").get<std::string>());
    const auto variant = parse_variant(doc.at("variant").get<std::string>());
    if (!task || !variant) throw InputError("unknown task or variant in trainset sidecar");
    ts.data.task = *task;
    ts.variant = *variant;
    ts.data.traced_removed = doc.value("traced_removed", false);
    ts.schema_hash = doc.at("hash").get<std::string>();
    for (const auto& c : doc.at("columns")) {
      ts.data.column_names.push_back(c.at("name").get<std::string>());
      ts.data.traced.push_back(c.value("traced", false));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed trainset sidecar: ") + e.what());
  }
  if (ts.data.schema_hash() != ts.schema_hash) {
    throw SchemaMismatch("trainset sidecar hash " + ts.schema_hash +
                         " does not match its columns (" + ts.data.schema_hash() + ")");
  }

  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  std::getline(in, line);
  const auto header = split(line);
  if (header.size() != ts.data.column_names.size() + 2 || header[0] != "label" ||
      header[1] != "id" ||
      !std::equal(ts.data.column_names.begin(), ts.data.column_names.end(), header.begin() + 2)) {
    throw SchemaMismatch("trainset header does not match its sidecar schema");
  }
  const auto names = class_names(ts.data.task);
  std::vector<std::vector<double>> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) throw InputError("trainset row has the wrong width");
    const auto cls = std::find(names.begin(), names.end(), fields[0]);
    if (cls == names.end()) throw InputError("unknown class '" + fields[0] + "'");
    ts.data.labels.push_back(static_cast<int>(cls - names.begin()));
    ts.data.row_ids.push_back(fields[1]);
    std::vector<double> row;
    for (std::size_t j = 2; j < fields.size(); ++j) {
      double v = 0;
      const auto& f = fields[j];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw InputError("bad number '" + f + "' in trainset");
      }
      row.push_back(v);
    }
    values.push_back(std::move(row));
  }
  ts.data.rows.resize(static_cast<Eigen::Index>(values.size()),
                      static_cast<Eigen::Index>(ts.data.column_names.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values[i].size(); ++j) {
      ts.data.rows(Eigen::Index(i), Eigen::Index(j)) = values[i][j];
    }
  }
  ts.data.validate();
  return ts;
}

}  // namespace collusion
