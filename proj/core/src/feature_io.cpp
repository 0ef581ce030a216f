#include "collusion/feature_io.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>

#include "collusion/error.hpp"

namespace collusion {
namespace {

std::string quote(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_number(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InputError("not a finite number: '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_feature_csv(std::ostream& out, const FeatureSchema& schema,
                       std::span<const FeatureRow> rows) {
  bool first = true;
  for (auto lead : kFeatureCsvLeadColumns) {
    out << (first ? "" : ",") << lead;
    first = false;
  }
  for (const auto& c : schema.columns()) out << ',' << quote(c.name);
  out << '\n';
  for (const auto& row : rows) {
    if (row.values.size() != schema.width()) {
      throw SchemaMismatch("row '" + row.collection_id + "' does not match the schema width");
    }
    const auto& l = row.labels;
    out << (l.organization ? to_string(*l.organization) : "") << ','
        << (l.politicality ? to_string(*l.politicality) : "") << ','
        << (l.camp ? to_string(*l.camp) : "") << ',' << quote(row.collection_id);
    for (double v : row.values) out << ',' << format_number(v);
    out << '\n';
  }
}

FeatureTable read_feature_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError(path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_csv_line(line);
  if (header.size() < kFeatureCsvLeadColumns.size()) {
    throw InputError(path.string() + ": header is too short");
  }
  for (std::size_t i = 0; i < kFeatureCsvLeadColumns.size(); ++i) {
    if (header[i] != kFeatureCsvLeadColumns[i]) {
      throw InputError(path.string() + ": expected column '" +
                       std::string(kFeatureCsvLeadColumns[i]) + "'");
    }
  }
  FeatureTable table;
  table.columns.assign(header.begin() + kFeatureCsvLeadColumns.size(), header.end());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields");
    }
    FeatureRow row;
    auto label = [&](const std::string& s, auto parse, auto& slot, const char* what) {
      if (s.empty()) return;
      slot = parse(s);
      if (!slot) {
        throw InputError(path.string() + ":" + std::to_string(line_no) + ": bad " + what +
                         " label '" + s + "'");
      }
    };
    label(fields[0], parse_organization, row.labels.organization, "organization");
    label(fields[1], parse_politicality, row.labels.politicality, "politicality");
    label(fields[2], parse_camp, row.labels.camp, "camp");
    row.collection_id = fields[3];
    row.values.reserve(table.columns.size());
    for (std::size_t i = kFeatureCsvLeadColumns.size(); i < fields.size(); ++i) {
      row.values.push_back(parse_number(fields[i]));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::map<std::string, LabelTriple> read_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError(path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> expected = {"hashtag", "organization", "politicality", "camp"};
  if (split_csv_line(line) != expected) {
    throw InputError(path.string() + ": header must be hashtag,organization,politicality,camp");
  }
  std::map<std::string, LabelTriple> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (fields.size() != 4) throw InputError(where + ": expected 4 fields");
    std::string tag = fields[0];
    if (!tag.empty() && tag.front() == '#') tag.erase(0, 1);
    for (char& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (tag.empty()) throw InputError(where + ": empty hashtag");
    LabelTriple l;
    if (!fields[1].empty() && !(l.organization = parse_organization(fields[1]))) {
      throw InputError(where + ": bad organization label '" + fields[1] + "'");
    }
    if (!fields[2].empty() && !(l.politicality = parse_politicality(fields[2]))) {
      throw InputError(where + ": bad politicality label '" + fields[2] + "'");
    }
    if (!fields[3].empty() && !(l.camp = parse_camp(fields[3]))) {
      throw InputError(where + ": bad camp label '" + fields[3] + "'");
    }
    if (!labels.emplace(tag, l).second) throw InputError(where + ": duplicate hashtag " + tag);
  }
  return labels;
}

}  // namespace collusion
