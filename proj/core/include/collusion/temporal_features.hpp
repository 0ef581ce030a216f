#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "collusion/collection.hpp"
#include "collusion/text.hpp"
#include "collusion/user_features.hpp"

namespace collusion {

struct RetweetMetrics {
  std::int64_t retweet_count = 0;
  double retweet_pct = 0;
  /// Distinct retweeted originals / retweets; 0 without retweets.
  double original_retweeted_pct = 0;
  /// Users with at least one retweet in the slice.
  std::int64_t retweeting_users_count = 0;
  double retweeting_users_pct = 0;
};

struct UnretweetedMetrics {
  double unretweeted_pct = 0;
  double unretweeted_users_pct = 0;
  std::int64_t unretweeted_count = 0;
  std::int64_t unretweeted_users_count = 0;
  /// unretweeted_count / unretweeted_users_count; 0 when no user is left.
  double unretweeted_tweet_user_ratio = 0;
};

struct MentionMetrics {
  double mention_ratio = 0;
  double mention_rt_ratio = 0;
  double mention_nonrt_ratio = 0;
};

/// Share of the slice made of reply tweets with each sentiment, indexed by
/// Sentiment. The denominator is the whole slice, so the sum may be < 1.
using SentimentShares = std::array<double, kSentimentClasses>;

enum ZeroDenominator : std::uint32_t {
  kNoRetweets = 1u << 0,         // original_retweeted_pct
  kNoUnretweetedUsers = 1u << 1, // unretweeted_tweet_user_ratio
  kNoMentions = 1u << 2,         // mention_ratio
  kNoRetweetMentions = 1u << 3,  // mention_rt_ratio
  kNoOriginalMentions = 1u << 4, // mention_nonrt_ratio
};

struct SliceFeatureVector {
  Timestamp slice_start{};
  std::int64_t tweet_count = 0;
  EntityUse entity_use;
  double tpu = 0;
  RetweetMetrics retweets;
  UnretweetedMetrics unretweeted;
  MentionMetrics mentions;
  SentimentShares sentiment{};
  /// Bitwise-or of ZeroDenominator values hit while computing this slice.
  std::uint32_t zero_denominators = 0;
};

/// The following take a non-empty slice and throw InvalidArgument otherwise.
EntityUse entity_use_temporal(const TemporalSlice& slice);
double tweets_per_user(const TemporalSlice& slice);
RetweetMetrics retweet_metrics(const TemporalSlice& slice);
UnretweetedMetrics unretweeted_metrics(const TemporalSlice& slice);
MentionMetrics mention_metrics(const TemporalSlice& slice);
SentimentShares sentiment_metrics(const TemporalSlice& slice, const SentimentScorer& scorer);

SliceFeatureVector extract_slice_features(const TemporalSlice& slice,
                                          const SentimentScorer& scorer);

/// extract_slice_features over all slices, in parallel; output order matches.
std::vector<SliceFeatureVector> extract_temporal_features(std::span<const TemporalSlice> slices,
                                                          const SentimentScorer& scorer);

/// Names of the ZeroDenominator bits set in flags.
std::vector<std::string> zero_denominator_names(std::uint32_t flags);

}  // namespace collusion
