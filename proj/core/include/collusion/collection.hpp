#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "collusion/tweet.hpp"

namespace collusion {

enum class Organization { Organized, Organic };
enum class Politicality { Political, NonPolitical };
enum class Camp { ProTrump, ProHillary, None };

struct LabelTriple {
  std::optional<Organization> organization;
  std::optional<Politicality> politicality;
  std::optional<Camp> camp;

  bool operator==(const LabelTriple&) const = default;
};

std::string to_string(Organization v);
std::string to_string(Politicality v);
std::string to_string(Camp v);
std::optional<Organization> parse_organization(std::string_view s);
std::optional<Politicality> parse_politicality(std::string_view s);
std::optional<Camp> parse_camp(std::string_view s);

/// A traced hashtag with its seed set (ST), expanded set (ET) and user roster.
///
/// Invariants established by build_collection():
///  - seed_tweets is a subset of expanded_tweets, both ordered by tweet_before;
///  - every seed tweet carries traced_hashtag;
///  - users holds exactly the seed authors; a missing profile is nullopt;
///  - every other ET tweet is by a seed author and lies within
///    expansion_window_days of one of that author's seed tweets.
struct Collection {
  std::string traced_hashtag;
  std::vector<Tweet> seed_tweets;
  std::vector<Tweet> expanded_tweets;
  std::map<std::string, std::optional<UserProfile>> users;
  int expansion_window_days = 7;
  LabelTriple label;
};

/// Tweets of the expanded set that carry the traced hashtag and fall into
/// [interval_start, interval_start + interval_length).
struct TemporalSlice {
  Timestamp interval_start{};
  Seconds interval_length{3600};
  std::vector<Tweet> tweets;
};

}  // namespace collusion
