#include "collusion/summarization.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "collusion/error.hpp"

namespace collusion {

BucketShares bucketize(std::span<const double> values, const BucketScheme& scheme) {
  BucketShares out;
  out.percentages.assign(scheme.buckets.size(), 0.0);
  if (values.empty()) {
    out.empty = true;
    return out;
  }
  std::vector<std::size_t> counts(scheme.buckets.size(), 0);
  for (double v : values) ++counts[scheme.locate(v)];
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.percentages[i] = 100.0 * static_cast<double>(counts[i]) / n;
  }
  return out;
}

FeatureStats feature_stats(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("feature_stats needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sum = 0;
  for (double v : sorted) sum += v;
  FeatureStats s;
  s.mean = sum / n;
  double ss = 0;
  for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
  s.var = ss / n;
  s.std = std::sqrt(s.var);
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

double user_feature_value(const UserFeatureVector& v, std::string_view feature) {
  if (feature == "tweet_count") return static_cast<double>(v.tweet_count);
  if (feature == "favorite_count") return static_cast<double>(v.favorite_count);
  if (feature == "avg_tweets_per_day") return v.avg_tweets_per_day;
  if (feature == "follower_degree") return v.follower_degree;
  if (feature == "hashtag_use") return v.entity_use.hashtag;
  if (feature == "url_use") return v.entity_use.url;
  if (feature == "mention_use") return v.entity_use.mention;
  if (feature == "media_use") return v.entity_use.media;
  if (feature == "traced_hashtag_use") return static_cast<double>(v.traced_hashtag_use);
  if (feature == "daily_traced_avg") return v.daily_traced_avg;
  if (feature == "daily_comparison") return v.daily_comparison;
  throw InvalidArgument("unknown user feature '" + std::string(feature) + "'");
}

double slice_feature_value(const SliceFeatureVector& v, std::string_view feature) {
  if (feature == "hashtag_use") return v.entity_use.hashtag;
  if (feature == "url_use") return v.entity_use.url;
  if (feature == "mention_use") return v.entity_use.mention;
  if (feature == "media_use") return v.entity_use.media;
  if (feature == "tpu") return v.tpu;
  if (feature == "retweet_count") return static_cast<double>(v.retweets.retweet_count);
  if (feature == "retweet_pct") return v.retweets.retweet_pct;
  if (feature == "original_retweeted_pct") return v.retweets.original_retweeted_pct;
  if (feature == "retweeting_users_count") {
    return static_cast<double>(v.retweets.retweeting_users_count);
  }
  if (feature == "retweeting_users_pct") return v.retweets.retweeting_users_pct;
  if (feature == "unretweeted_pct") return v.unretweeted.unretweeted_pct;
  if (feature == "unretweeted_users_pct") return v.unretweeted.unretweeted_users_pct;
  if (feature == "unretweeted_count") return static_cast<double>(v.unretweeted.unretweeted_count);
  if (feature == "unretweeted_users_count") {
    return static_cast<double>(v.unretweeted.unretweeted_users_count);
  }
  if (feature == "unretweeted_tweet_user_ratio") return v.unretweeted.unretweeted_tweet_user_ratio;
  if (feature == "mention_ratio") return v.mentions.mention_ratio;
  if (feature == "mention_rt_ratio") return v.mentions.mention_rt_ratio;
  if (feature == "mention_nonrt_ratio") return v.mentions.mention_nonrt_ratio;
  for (auto s : kAllSentiments) {
    if (feature == "sentiment_" + std::string(sentiment_name(s)) + "_pct") {
      return v.sentiment[static_cast<std::size_t>(s)];
    }
  }
  throw InvalidArgument("unknown slice feature '" + std::string(feature) + "'");
}

FeatureRow summarize_collection(std::span<const UserFeatureVector> users,
                                std::span<const SliceFeatureVector> slices,
                                const FeatureSchema& schema) {
  std::vector<const UserFeatureVector*> complete;
  for (const auto& u : users) {
    if (u.complete) complete.push_back(&u);
  }
  if (complete.empty()) throw InvalidArgument("no user with a complete profile to summarize");
  if (slices.empty()) throw InvalidArgument("no temporal slice to summarize");

  FeatureRow row;
  row.values.reserve(schema.width());
  auto push_stats = [&](const FeatureStats& s) {
    row.values.insert(row.values.end(), {s.mean, s.var, s.std, s.min, s.max});
  };

  std::vector<double> values;
  for (const auto& scheme : schema.user_schemes()) {
    values.clear();
    for (const auto* u : complete) values.push_back(user_feature_value(*u, scheme.feature));
    const auto shares = bucketize(values, scheme);
    row.values.insert(row.values.end(), shares.percentages.begin(), shares.percentages.end());
    push_stats(feature_stats(values));
  }
  for (auto feature : kSliceFeatureNames) {
    values.clear();
    for (const auto& s : slices) values.push_back(slice_feature_value(s, feature));
    push_stats(feature_stats(values));
  }

  const auto& reg = schema.registration();
  std::vector<std::size_t> year_counts(static_cast<std::size_t>(reg.last_year - reg.first_year + 3));
  std::size_t after_cutoff = 0;
  for (const auto* u : complete) {
    const int year = year_of(u->registered_at);
    std::size_t bin = 0;
    if (year > reg.last_year) {
      bin = year_counts.size() - 1;
    } else if (year >= reg.first_year) {
      bin = static_cast<std::size_t>(year - reg.first_year + 1);
    }
    ++year_counts[bin];
    if (u->registered_after_cutoff) ++after_cutoff;
  }
  const double n_complete = static_cast<double>(complete.size());
  for (auto c : year_counts) row.values.push_back(100.0 * static_cast<double>(c) / n_complete);
  row.values.push_back(100.0 * static_cast<double>(after_cutoff) / n_complete);
  const std::size_t incomplete = users.size() - complete.size();
  row.values.push_back(100.0 * static_cast<double>(incomplete) / static_cast<double>(users.size()));

  if (row.values.size() != schema.width()) {
    throw SchemaMismatch("row width " + std::to_string(row.values.size()) +
                         " differs from schema width " + std::to_string(schema.width()));
  }
  row.flags["incomplete_users"] = static_cast<int>(incomplete);
  for (const auto& s : slices) {
    for (const auto& name : zero_denominator_names(s.zero_denominators)) {
      ++row.flags["zero_denominator." + name];
    }
  }
  return row;
}

}  // namespace collusion
