#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collusion/collection.hpp"

namespace collusion {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Interval with independently open or closed ends. lower == upper with both
/// ends closed is a singleton point.
struct Bucket {
  double lower = 0;
  double upper = kInfinity;
  bool lower_closed = true;
  bool upper_closed = false;
  std::string label;

  bool contains(double v) const {
    const bool above = lower_closed ? v >= lower : v > lower;
    const bool below = upper_closed ? v <= upper : v < upper;
    return above && below;
  }
};

/// Ordered buckets for one feature. A valid scheme tiles [0, inf): the first
/// bucket starts closed at 0, each bucket starts where the previous one ends
/// with complementary closedness, and the last is unbounded.
struct BucketScheme {
  std::string feature;
  std::vector<Bucket> buckets;

  /// Index of the bucket holding v. Throws InvalidArgument when v is
  /// negative or not finite (no bucket can hold it).
  std::size_t locate(double v) const;

  /// Throws InvalidArgument unless the buckets tile [0, inf).
  void validate() const;
};

/// {<=1, 2, ..., 10, 11-20, 21-50, 51-100, >100} as right-closed intervals,
/// so integers land on their own bucket.
BucketScheme count_buckets(std::string feature);
/// {=0, (0,0.5], (0.5,0.9], (0.9,1), =1, (1,2], ..., (9,10], >10}
BucketScheme ratio_buckets(std::string feature);
/// {0, 1-100, 101-1000, 1001-10000, 10001-20000, 20001-50000, >50000}
BucketScheme counter_buckets(std::string feature);
/// {=0, (0,0.25], (0.25,0.5], (0.5,0.75], (0.75,1), =1}
BucketScheme follower_degree_buckets(std::string feature);

/// Calendar-year bins [first_year, last_year] plus one bin on each side.
struct RegistrationBins {
  int first_year = 2006;
  int last_year = 2024;
};

/// Per-user features in row order.
inline constexpr std::array<std::string_view, 11> kUserFeatureNames = {
    "tweet_count",  "favorite_count", "avg_tweets_per_day", "follower_degree",
    "hashtag_use",  "url_use",        "mention_use",        "media_use",
    "traced_hashtag_use", "daily_traced_avg", "daily_comparison"};

/// User features derived from the traced hashtag; removed by ablation.
inline constexpr std::array<std::string_view, 3> kTracedUserFeatureNames = {
    "traced_hashtag_use", "daily_traced_avg", "daily_comparison"};

/// Per-slice features in row order.
inline constexpr std::array<std::string_view, 23> kSliceFeatureNames = {
    "hashtag_use",
    "url_use",
    "mention_use",
    "media_use",
    "tpu",
    "retweet_count",
    "retweet_pct",
    "original_retweeted_pct",
    "retweeting_users_count",
    "retweeting_users_pct",
    "unretweeted_pct",
    "unretweeted_users_pct",
    "unretweeted_count",
    "unretweeted_users_count",
    "unretweeted_tweet_user_ratio",
    "mention_ratio",
    "mention_rt_ratio",
    "mention_nonrt_ratio",
    "sentiment_very_negative_pct",
    "sentiment_negative_pct",
    "sentiment_neutral_pct",
    "sentiment_positive_pct",
    "sentiment_very_positive_pct"};

inline constexpr std::array<std::string_view, 5> kStatNames = {"mean", "var", "std", "min",
                                                               "max"};

struct Column {
  std::string name;
  bool traced = false;

  bool operator==(const Column&) const = default;
};

/// Column layout of a feature row. Rows are, in order:
///   per user feature: bucket percentages, then mean/var/std/min/max;
///   per slice feature: mean/var/std/min/max;
///   registration-year percentages, registered_after_cutoff_pct;
///   incomplete_user_pct.
class FeatureSchema {
 public:
  static constexpr int kVersion = 1;

  /// Built-in bucket schemes.
  static FeatureSchema default_schema();
  /// Reads an override file. Missing user features fall back to defaults.
  static FeatureSchema load(const std::filesystem::path& path);
  static FeatureSchema from_json(std::string_view text);

  FeatureSchema(std::vector<BucketScheme> user_schemes, RegistrationBins registration);

  std::span<const BucketScheme> user_schemes() const { return user_schemes_; }
  const BucketScheme& user_scheme(std::string_view feature) const;
  const RegistrationBins& registration() const { return registration_; }

  std::span<const Column> columns() const { return columns_; }
  std::size_t width() const { return columns_.size(); }
  /// Position of a column; throws InvalidArgument for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// 16 hex digits identifying the layout and bucket boundaries.
  const std::string& hash() const { return hash_; }

  /// Sidecar document: version, hash, bucket boundaries, column order.
  std::string to_json() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<BucketScheme> user_schemes_;
  RegistrationBins registration_;
  std::vector<Column> columns_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::string hash_;
};

/// Column names for one user feature's bucket percentages, in bucket order.
std::string bucket_column(std::string_view feature, std::string_view label);
std::string stat_column(std::string_view feature, std::string_view stat);
std::string slice_stat_column(std::string_view feature, std::string_view stat);
std::string registration_year_column(int year);
std::string registration_before_column(int first_year);
std::string registration_after_column(int last_year);
inline constexpr std::string_view kAfterCutoffColumn = "registered_after_cutoff_pct";
inline constexpr std::string_view kIncompleteUserColumn = "incomplete_user_pct";

/// One collection's summary, values aligned with FeatureSchema::columns().
struct FeatureRow {
  std::string collection_id;
  LabelTriple labels;
  std::vector<double> values;
  /// Diagnostics, e.g. how many slices had a zero denominator per metric.
  std::map<std::string, int> flags;
};

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace collusion
