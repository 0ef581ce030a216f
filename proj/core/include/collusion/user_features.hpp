#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "collusion/collection.hpp"

namespace collusion {

/// Mean entity counts per tweet.
struct EntityUse {
  double hashtag = 0;
  double url = 0;
  double mention = 0;
  double media = 0;
};

struct UserFeatureVector {
  std::string user_id;
  /// False when the author has no profile; such vectors are left out of the
  /// bucket histograms and statistics.
  bool complete = true;
  std::int64_t tweet_count = 0;
  std::int64_t favorite_count = 0;
  double avg_tweets_per_day = 0;
  double follower_degree = 0;
  EntityUse entity_use;
  std::int64_t traced_hashtag_use = 0;
  double daily_traced_avg = 0;
  double daily_comparison = 0;
  Date registered_at{};
  bool registered_after_cutoff = false;
};

inline constexpr Date kDefaultRegistrationCutoff{std::chrono::year{2015} / 7 / 1};

/// status_count / days since registration, the day count clamped to >= 1.
double avg_tweets_per_day(const UserProfile& u, Date today);

/// followers / (followers + following); 0 when both are 0.
double follower_degree(const UserProfile& u);

/// Per-tweet entity averages over the user's expanded-set tweets (all zero
/// when the user has none).
EntityUse entity_use_user(std::string_view user_id, const Collection& c);

/// Number of the user's expanded-set tweets carrying the traced hashtag.
std::int64_t traced_hashtag_use(std::string_view user_id, const Collection& c);

/// traced_hashtag_use / number of UTC days on which the traced hashtag occurs
/// anywhere in the expanded set.
double daily_traced_avg(std::string_view user_id, const Collection& c);

/// daily_traced_avg / avg_tweets_per_day; 0 when the user is dormant or has
/// no profile.
double daily_comparison(std::string_view user_id, const Collection& c, Date today);

struct UserFeatureOptions {
  Date cutoff = kDefaultRegistrationCutoff;
};

/// One vector per collection user, ordered by user id.
std::vector<UserFeatureVector> extract_user_features(const Collection& c, Date today,
                                                     const UserFeatureOptions& options = {});

}  // namespace collusion
