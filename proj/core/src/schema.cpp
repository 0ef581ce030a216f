#include "collusion/schema.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "collusion/error.hpp"

namespace collusion {
namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Bucket point(double v, std::string label) { return {v, v, true, true, std::move(label)}; }

Bucket left_open(double lo, double hi, std::string label) {
  return {lo, hi, false, true, std::move(label)};
}

Bucket open(double lo, double hi, std::string label) {
  return {lo, hi, false, false, std::move(label)};
}

BucketScheme default_scheme_for(std::string_view feature) {
  const std::string name(feature);
  if (feature == "tweet_count" || feature == "favorite_count") return counter_buckets(name);
  if (feature == "follower_degree") return follower_degree_buckets(name);
  if (feature == "traced_hashtag_use") return count_buckets(name);
  return ratio_buckets(name);
}

json bound_to_json(double v) { return std::isinf(v) ? json(nullptr) : json(v); }

double bound_from_json(const json& j) {
  if (j.is_null()) return kInfinity;
  if (!j.is_number()) throw InputError("bucket bound must be a number or null");
  return j.get<double>();
}

}  // namespace

std::size_t BucketScheme::locate(double v) const {
  if (!std::isfinite(v) || v < 0) {
    throw InvalidArgument("value " + num(v) + " is outside the buckets of " + feature);
  }
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (buckets[i].contains(v)) return i;
  }
  throw InvalidArgument("value " + num(v) + " is outside the buckets of " + feature);
}

void BucketScheme::validate() const {
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("bucket scheme '" + feature + "': " + why);
  };
  if (buckets.empty()) fail("no buckets");
  if (buckets.front().lower != 0 || !buckets.front().lower_closed) fail("must start at [0");
  if (!std::isinf(buckets.back().upper)) fail("must be unbounded above");
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const Bucket& b = buckets[i];
    if (b.label.empty()) fail("empty bucket label");
    if (b.lower > b.upper) fail("bucket '" + b.label + "' has lower > upper");
    if (b.lower == b.upper && !(b.lower_closed && b.upper_closed)) {
      fail("bucket '" + b.label + "' is empty");
    }
    if (i > 0) {
      const Bucket& prev = buckets[i - 1];
      if (prev.upper != b.lower || prev.upper_closed == b.lower_closed) {
        fail("gap or overlap between '" + prev.label + "' and '" + b.label + "'");
      }
      if (prev.label == b.label) fail("duplicate label '" + b.label + "'");
    }
  }
}

BucketScheme count_buckets(std::string feature) {
  BucketScheme s{std::move(feature), {}};
  s.buckets.push_back({0, 1, true, true, "1"});
  for (int k = 2; k <= 10; ++k) s.buckets.push_back(left_open(k - 1, k, std::to_string(k)));
  s.buckets.push_back(left_open(10, 20, "11-20"));
  s.buckets.push_back(left_open(20, 50, "21-50"));
  s.buckets.push_back(left_open(50, 100, "51-100"));
  s.buckets.push_back(open(100, kInfinity, "gt100"));
  return s;
}

BucketScheme ratio_buckets(std::string feature) {
  BucketScheme s{std::move(feature), {}};
  s.buckets.push_back(point(0, "eq0"));
  s.buckets.push_back(left_open(0, 0.5, "0-0.5"));
  s.buckets.push_back(left_open(0.5, 0.9, "0.5-0.9"));
  s.buckets.push_back(open(0.9, 1, "0.9-1"));
  s.buckets.push_back(point(1, "eq1"));
  for (int k = 2; k <= 10; ++k) {
    s.buckets.push_back(left_open(k - 1, k, std::to_string(k - 1) + "-" + std::to_string(k)));
  }
  s.buckets.push_back(open(10, kInfinity, "gt10"));
  return s;
}

BucketScheme counter_buckets(std::string feature) {
  BucketScheme s{std::move(feature), {}};
  s.buckets.push_back(point(0, "0"));
  s.buckets.push_back(left_open(0, 100, "1-100"));
  s.buckets.push_back(left_open(100, 1000, "101-1000"));
  s.buckets.push_back(left_open(1000, 10000, "1001-10000"));
  s.buckets.push_back(left_open(10000, 20000, "10001-20000"));
  s.buckets.push_back(left_open(20000, 50000, "20001-50000"));
  s.buckets.push_back(open(50000, kInfinity, "gt50000"));
  return s;
}

BucketScheme follower_degree_buckets(std::string feature) {
  BucketScheme s{std::move(feature), {}};
  s.buckets.push_back(point(0, "eq0"));
  s.buckets.push_back(left_open(0, 0.25, "0-0.25"));
  s.buckets.push_back(left_open(0.25, 0.5, "0.25-0.5"));
  s.buckets.push_back(left_open(0.5, 0.75, "0.5-0.75"));
  s.buckets.push_back(open(0.75, 1, "0.75-1"));
  s.buckets.push_back(point(1, "eq1"));
  // Unreachable for a ratio of counts; keeps the scheme exhaustive.
  s.buckets.push_back(open(1, kInfinity, "gt1"));
  return s;
}

std::string bucket_column(std::string_view feature, std::string_view label) {
  return std::string(feature) + "_pct_" + std::string(label);
}
std::string stat_column(std::string_view feature, std::string_view stat) {
  return std::string(feature) + "_" + std::string(stat);
}
std::string slice_stat_column(std::string_view feature, std::string_view stat) {
  return "slice_" + std::string(feature) + "_" + std::string(stat);
}
std::string registration_year_column(int year) { return "reg_year_pct_" + std::to_string(year); }
std::string registration_before_column(int first_year) {
  return "reg_year_pct_before_" + std::to_string(first_year);
}
std::string registration_after_column(int last_year) {
  return "reg_year_pct_after_" + std::to_string(last_year);
}

FeatureSchema FeatureSchema::default_schema() {
  std::vector<BucketScheme> schemes;
  for (auto f : kUserFeatureNames) schemes.push_back(default_scheme_for(f));
  return FeatureSchema(std::move(schemes), RegistrationBins{});
}

FeatureSchema::FeatureSchema(std::vector<BucketScheme> user_schemes,
                             RegistrationBins registration)
    : registration_(registration) {
  if (registration_.first_year > registration_.last_year) {
    throw InvalidArgument("registration first_year > last_year");
  }
  // Reorder to the canonical feature order; every user feature must be present.
  for (auto f : kUserFeatureNames) {
    auto it = std::find_if(user_schemes.begin(), user_schemes.end(),
                           [&](const BucketScheme& s) { return s.feature == f; });
    if (it == user_schemes.end()) {
      throw InvalidArgument("no bucket scheme for user feature '" + std::string(f) + "'");
    }
    it->validate();
    user_schemes_.push_back(*it);
  }
  if (user_schemes.size() != kUserFeatureNames.size()) {
    throw InvalidArgument("bucket schemes given for unknown or duplicate features");
  }

  auto is_traced = [](std::string_view f) {
    return std::find(kTracedUserFeatureNames.begin(), kTracedUserFeatureNames.end(), f) !=
           kTracedUserFeatureNames.end();
  };
  for (const auto& scheme : user_schemes_) {
    const bool traced = is_traced(scheme.feature);
    for (const auto& b : scheme.buckets) {
      columns_.push_back({bucket_column(scheme.feature, b.label), traced});
    }
    for (auto stat : kStatNames) columns_.push_back({stat_column(scheme.feature, stat), traced});
  }
  for (auto f : kSliceFeatureNames) {
    for (auto stat : kStatNames) columns_.push_back({slice_stat_column(f, stat), false});
  }
  columns_.push_back({registration_before_column(registration_.first_year), false});
  for (int y = registration_.first_year; y <= registration_.last_year; ++y) {
    columns_.push_back({registration_year_column(y), false});
  }
  columns_.push_back({registration_after_column(registration_.last_year), false});
  columns_.push_back({std::string(kAfterCutoffColumn), false});
  columns_.push_back({std::string(kIncompleteUserColumn), false});

  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!index_.emplace(columns_[i].name, i).second) {
      throw InvalidArgument("duplicate column '" + columns_[i].name + "'");
    }
  }

  // Hash everything that determines row content except the hash itself.
  json doc = json::parse(to_json());
  doc.erase("hash");
  hash_ = hex64(fnv1a64(doc.dump()));
}

const BucketScheme& FeatureSchema::user_scheme(std::string_view feature) const {
  for (const auto& s : user_schemes_) {
    if (s.feature == feature) return s;
  }
  throw InvalidArgument("unknown user feature '" + std::string(feature) + "'");
}

std::size_t FeatureSchema::index_of(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw InvalidArgument("unknown column '" + std::string(name) + "'");
  return it->second;
}

std::string FeatureSchema::to_json() const {
  json doc;
  doc["version"] = kVersion;
  doc["hash"] = hash_;
  json user = json::array();
  for (const auto& s : user_schemes_) {
    json buckets = json::array();
    for (const auto& b : s.buckets) {
      buckets.push_back({{"label", b.label},
                         {"lower", bound_to_json(b.lower)},
                         {"upper", bound_to_json(b.upper)},
                         {"lower_closed", b.lower_closed},
                         {"upper_closed", b.upper_closed}});
    }
    user.push_back({{"feature", s.feature}, {"buckets", std::move(buckets)}});
  }
  doc["user_features"] = std::move(user);
  doc["slice_features"] = std::vector<std::string>(kSliceFeatureNames.begin(),
                                                   kSliceFeatureNames.end());
  doc["stats"] = std::vector<std::string>(kStatNames.begin(), kStatNames.end());
  doc["registration"] = {{"first_year", registration_.first_year},
                         {"last_year", registration_.last_year}};
  json cols = json::array();
  for (const auto& c : columns_) cols.push_back({{"name", c.name}, {"traced", c.traced}});
  doc["columns"] = std::move(cols);
  return doc.dump(2);
}

void FeatureSchema::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << to_json() << '\n';
}

FeatureSchema FeatureSchema::from_json(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw InputError("schema is not a JSON object");
  if (doc.contains("version") && doc["version"] != kVersion) {
    throw InputError("unsupported schema version " + doc["version"].dump());
  }
  std::map<std::string, BucketScheme, std::less<>> given;
  if (doc.contains("user_features")) {
    for (const auto& f : doc["user_features"]) {
      BucketScheme s;
      s.feature = f.at("feature").get<std::string>();
      for (const auto& b : f.at("buckets")) {
        s.buckets.push_back({bound_from_json(b.at("lower")), bound_from_json(b.at("upper")),
                             b.value("lower_closed", true), b.value("upper_closed", false),
                             b.at("label").get<std::string>()});
      }
      given.insert_or_assign(s.feature, std::move(s));
    }
  }
  std::vector<BucketScheme> schemes;
  for (auto f : kUserFeatureNames) {
    auto it = given.find(f);
    if (it != given.end()) {
      schemes.push_back(std::move(it->second));
      given.erase(it);
    } else {
      schemes.push_back(default_scheme_for(f));
    }
  }
  if (!given.empty()) throw InputError("schema names unknown feature '" + given.begin()->first + "'");
  RegistrationBins reg;
  if (doc.contains("registration")) {
    reg.first_year = doc["registration"].value("first_year", reg.first_year);
    reg.last_year = doc["registration"].value("last_year", reg.last_year);
  }
  FeatureSchema schema(std::move(schemes), reg);
  if (doc.contains("hash") && doc["hash"].is_string() && !doc["hash"].get<std::string>().empty() &&
      doc["hash"].get<std::string>() != schema.hash()) {
    throw SchemaMismatch("schema hash " + doc["hash"].get<std::string>() +
                         " does not match its contents (" + schema.hash() + ")");
  }
  return schema;
}

FeatureSchema FeatureSchema::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed schema " + path.string() + ": " + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace collusion
