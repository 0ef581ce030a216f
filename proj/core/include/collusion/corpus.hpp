#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "collusion/collection.hpp"
#include "collusion/tweet.hpp"

namespace collusion {

struct LoadReport {
  std::size_t tweets_loaded = 0;
  std::size_t tweets_skipped = 0;      // malformed lines
  std::size_t duplicate_tweets = 0;    // collapsed by id, first kept
  std::size_t profiles_loaded = 0;
  std::size_t profiles_skipped = 0;
  std::vector<std::string> files;
};

/// Immutable, indexed tweet and profile store. Lookups return pointers into
/// the store; they stay valid for the store's lifetime.
class TweetStore {
 public:
  TweetStore() = default;
  TweetStore(std::vector<Tweet> tweets, std::vector<UserProfile> profiles);

  std::span<const Tweet> tweets() const { return tweets_; }
  std::size_t size() const { return tweets_.size(); }

  /// Tweets carrying the (lowercase) hashtag, in tweet_before order.
  std::vector<const Tweet*> by_hashtag(std::string_view hashtag) const;
  /// Tweets by the author, in tweet_before order.
  std::vector<const Tweet*> by_author(std::string_view author_id) const;
  /// Tweets by the author with from <= created_at <= to.
  std::vector<const Tweet*> by_author_between(std::string_view author_id, Timestamp from,
                                              Timestamp to) const;

  const UserProfile* profile(std::string_view user_id) const;
  std::size_t profile_count() const { return profiles_.size(); }

  /// Latest created_at in the store (epoch when empty).
  Timestamp max_timestamp() const { return max_timestamp_; }

  const LoadReport& report() const { return report_; }
  void set_report(LoadReport report) { report_ = std::move(report); }

 private:
  std::vector<Tweet> tweets_;
  std::map<std::string, UserProfile, std::less<>> profiles_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_hashtag_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_author_;
  Timestamp max_timestamp_{};
  LoadReport report_;
};

/// Loads a tweet JSONL file or a directory of JSONL files. In a directory,
/// files whose name starts with "users" or "profiles" hold profiles; the
/// rest hold tweets. For a single file, a sibling "users.jsonl" is picked up
/// when present. Malformed lines are counted in report(), not fatal.
/// Throws InputError for an unreadable path or when no tweet is valid.
TweetStore load_corpus(const std::filesystem::path& path);

/// As above with an explicit profile file.
TweetStore load_corpus(const std::filesystem::path& path,
                       const std::filesystem::path& profiles_path);

/// Seed set = every tweet carrying traced_hashtag; expanded set adds the seed
/// authors' tweets within +/- window_days of any of their own seed tweets.
/// Throws InvalidArgument for an empty hashtag or non-positive window and
/// InputError when the hashtag matches nothing.
Collection build_collection(const TweetStore& store, std::string_view traced_hashtag,
                            int window_days = 7);

/// Groups traced-hashtag tweets of the expanded set into fixed-length slices.
/// The grid starts at the earliest seed tweet truncated to the hour; empty
/// slices are omitted and the result is sorted by start.
std::vector<TemporalSlice> partition_intervals(const Collection& c,
                                               Seconds interval = Seconds{3600});

struct InspectionStats {
  std::size_t tweet_count = 0;
  double distinct_word_pct = 0;
  double tweets_per_user_mean = 0;
  double retweet_pct = 0;
  double hashtags_per_tweet_var = 0;
  double hashtags_per_tweet_std = 0;
};

/// Manual-inspection statistics over a tweet list (population variance).
/// Throws InvalidArgument when empty.
InspectionStats inspection_stats(std::span<const Tweet> tweets);

struct OverlapReport {
  std::size_t count = 0;
  double pct_of_a = 0;
  /// Registration year of each shared user that has a profile in `a`.
  std::map<int, std::size_t> registration_years;
  std::size_t without_profile = 0;
  std::size_t registered_after_cutoff = 0;
};

OverlapReport user_overlap(const Collection& a, const Collection& b,
                           Date cutoff = Date{std::chrono::year{2015} / 7 / 1});

}  // namespace collusion
