#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collusion/time.hpp"

namespace collusion {

/// One post. Retweet and reply status are derived from the linkage ids so
/// the flag and the id can never disagree.
struct Tweet {
  std::string id;
  std::string author_id;
  Timestamp created_at{};
  std::string text;
  std::vector<std::string> hashtags;  // lowercase, no '#', multiplicity kept
  std::vector<std::string> mentions;  // user ids
  int url_count = 0;
  int media_count = 0;
  std::optional<std::string> retweeted_status_id;
  std::optional<std::string> replied_user_id;

  bool is_retweet() const { return retweeted_status_id.has_value(); }
  bool is_reply() const { return replied_user_id.has_value(); }

  bool has_hashtag(std::string_view tag) const {
    return std::find(hashtags.begin(), hashtags.end(), tag) != hashtags.end();
  }

  int hashtag_count() const { return static_cast<int>(hashtags.size()); }
  int mention_count() const { return static_cast<int>(mentions.size()); }
};

struct UserProfile {
  std::string id;
  Date registered_at{};
  std::int64_t follower_count = 0;
  std::int64_t following_count = 0;
  std::int64_t status_count = 0;
  std::int64_t favorite_count = 0;
};

/// Orders tweets by creation time, then id.
inline bool tweet_before(const Tweet& a, const Tweet& b) {
  if (a.created_at != b.created_at) return a.created_at < b.created_at;
  return a.id < b.id;
}

}  // namespace collusion
