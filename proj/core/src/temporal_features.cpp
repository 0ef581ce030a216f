#include "collusion/temporal_features.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "collusion/error.hpp"
#include "collusion/parallel.hpp"

namespace collusion {
namespace {

void require_tweets(const TemporalSlice& slice) {
  if (slice.tweets.empty()) throw InvalidArgument("temporal slice has no tweets");
}

double ratio_or_zero(double num, double den) { return den > 0 ? num / den : 0.0; }

struct RetweetTally {
  std::int64_t tweets = 0;
  std::int64_t retweets = 0;
  std::int64_t users = 0;
  std::int64_t retweeting_users = 0;
  std::int64_t distinct_originals = 0;
};

RetweetTally tally_retweets(const TemporalSlice& slice) {
  RetweetTally r;
  std::unordered_map<std::string_view, bool> user_retweeted;
  std::unordered_set<std::string_view> originals;
  for (const auto& t : slice.tweets) {
    ++r.tweets;
    bool& flag = user_retweeted[t.author_id];
    if (t.is_retweet()) {
      ++r.retweets;
      flag = true;
      originals.insert(*t.retweeted_status_id);
    }
  }
  r.users = static_cast<std::int64_t>(user_retweeted.size());
  for (const auto& [user, any] : user_retweeted) r.retweeting_users += any ? 1 : 0;
  r.distinct_originals = static_cast<std::int64_t>(originals.size());
  return r;
}

RetweetMetrics retweet_from(const RetweetTally& r) {
  RetweetMetrics m;
  m.retweet_count = r.retweets;
  m.retweet_pct = static_cast<double>(r.retweets) / static_cast<double>(r.tweets);
  m.original_retweeted_pct =
      ratio_or_zero(static_cast<double>(r.distinct_originals), static_cast<double>(r.retweets));
  m.retweeting_users_count = r.retweeting_users;
  m.retweeting_users_pct =
      static_cast<double>(r.retweeting_users) / static_cast<double>(r.users);
  return m;
}

UnretweetedMetrics unretweeted_from(const RetweetTally& r, const RetweetMetrics& rt) {
  UnretweetedMetrics m;
  m.unretweeted_pct = 1.0 - rt.retweet_pct;
  m.unretweeted_users_pct = 1.0 - rt.retweeting_users_pct;
  m.unretweeted_count = r.tweets - r.retweets;
  m.unretweeted_users_count = r.users - r.retweeting_users;
  m.unretweeted_tweet_user_ratio = ratio_or_zero(static_cast<double>(m.unretweeted_count),
                                                 static_cast<double>(m.unretweeted_users_count));
  return m;
}

}  // namespace

EntityUse entity_use_temporal(const TemporalSlice& slice) {
  require_tweets(slice);
  std::int64_t hashtags = 0, urls = 0, mentions = 0, media = 0;
  for (const auto& t : slice.tweets) {
    hashtags += t.hashtag_count();
    urls += t.url_count;
    mentions += t.mention_count();
    media += t.media_count;
  }
  const double n = static_cast<double>(slice.tweets.size());
  return {static_cast<double>(hashtags) / n, static_cast<double>(urls) / n,
          static_cast<double>(mentions) / n, static_cast<double>(media) / n};
}

double tweets_per_user(const TemporalSlice& slice) {
  require_tweets(slice);
  std::unordered_set<std::string_view> users;
  for (const auto& t : slice.tweets) users.insert(t.author_id);
  return static_cast<double>(slice.tweets.size()) / static_cast<double>(users.size());
}

RetweetMetrics retweet_metrics(const TemporalSlice& slice) {
  require_tweets(slice);
  return retweet_from(tally_retweets(slice));
}

UnretweetedMetrics unretweeted_metrics(const TemporalSlice& slice) {
  require_tweets(slice);
  const auto tally = tally_retweets(slice);
  return unretweeted_from(tally, retweet_from(tally));
}

MentionMetrics mention_metrics(const TemporalSlice& slice) {
  require_tweets(slice);
  std::set<std::string_view> all, in_retweets, in_originals;
  std::int64_t total = 0, retweet_total = 0;
  for (const auto& t : slice.tweets) {
    total += t.mention_count();
    auto& bucket = t.is_retweet() ? in_retweets : in_originals;
    if (t.is_retweet()) retweet_total += t.mention_count();
    for (const auto& m : t.mentions) {
      all.insert(m);
      bucket.insert(m);
    }
  }
  MentionMetrics m;
  m.mention_ratio = ratio_or_zero(double(all.size()), double(total));
  m.mention_rt_ratio = ratio_or_zero(double(in_retweets.size()), double(retweet_total));
  m.mention_nonrt_ratio = ratio_or_zero(double(in_originals.size()), double(total - retweet_total));
  return m;
}

SentimentShares sentiment_metrics(const TemporalSlice& slice, const SentimentScorer& scorer) {
  require_tweets(slice);
  std::array<std::int64_t, kSentimentClasses> counts{};
  for (const auto& t : slice.tweets) {
    if (t.is_reply()) ++counts[static_cast<std::size_t>(scorer.score(t.text))];
  }
  SentimentShares shares{};
  const double n = static_cast<double>(slice.tweets.size());
  for (std::size_t s = 0; s < kSentimentClasses; ++s) shares[s] = double(counts[s]) / n;
  return shares;
}

SliceFeatureVector extract_slice_features(const TemporalSlice& slice,
                                          const SentimentScorer& scorer) {
  require_tweets(slice);
  SliceFeatureVector v;
  v.slice_start = slice.interval_start;
  v.tweet_count = static_cast<std::int64_t>(slice.tweets.size());
  v.entity_use = entity_use_temporal(slice);
  v.tpu = tweets_per_user(slice);
  const auto tally = tally_retweets(slice);
  v.retweets = retweet_from(tally);
  v.unretweeted = unretweeted_from(tally, v.retweets);
  v.mentions = mention_metrics(slice);
  v.sentiment = sentiment_metrics(slice, scorer);

  if (tally.retweets == 0) v.zero_denominators |= kNoRetweets;
  if (v.unretweeted.unretweeted_users_count == 0) v.zero_denominators |= kNoUnretweetedUsers;
  std::int64_t total = 0, retweet_total = 0;
  for (const auto& t : slice.tweets) {
    total += t.mention_count();
    if (t.is_retweet()) retweet_total += t.mention_count();
  }
  if (total == 0) v.zero_denominators |= kNoMentions;
  if (retweet_total == 0) v.zero_denominators |= kNoRetweetMentions;
  if (total - retweet_total == 0) v.zero_denominators |= kNoOriginalMentions;
  return v;
}

std::vector<SliceFeatureVector> extract_temporal_features(std::span<const TemporalSlice> slices,
                                                          const SentimentScorer& scorer) {
  std::vector<SliceFeatureVector> out(slices.size());
  parallel_for(slices.size(),
               [&](std::size_t i) { out[i] = extract_slice_features(slices[i], scorer); });
  return out;
}

std::vector<std::string> zero_denominator_names(std::uint32_t flags) {
  static const std::array<std::pair<ZeroDenominator, const char*>, 5> names = {{
      {kNoRetweets, "original_retweeted_pct"},
      {kNoUnretweetedUsers, "unretweeted_tweet_user_ratio"},
      {kNoMentions, "mention_ratio"},
      {kNoRetweetMentions, "mention_rt_ratio"},
      {kNoOriginalMentions, "mention_nonrt_ratio"},
  }};
  std::vector<std::string> out;
  for (const auto& [bit, name] : names) {
    if (flags & bit) out.emplace_back(name);
  }
  return out;
}

}  // namespace collusion
