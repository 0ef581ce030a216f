#include "collusion/user_features.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace collusion {
namespace {

struct AuthorTally {
  std::int64_t tweets = 0;
  std::int64_t hashtags = 0;
  std::int64_t urls = 0;
  std::int64_t mentions = 0;
  std::int64_t media = 0;
  std::int64_t traced = 0;

  void add(const Tweet& t, std::string_view traced_hashtag) {
    ++tweets;
    hashtags += t.hashtag_count();
    urls += t.url_count;
    mentions += t.mention_count();
    media += t.media_count;
    if (t.has_hashtag(traced_hashtag)) ++traced;
  }

  EntityUse entity_use() const {
    if (tweets == 0) return {};
    const double n = static_cast<double>(tweets);
    return {static_cast<double>(hashtags) / n, static_cast<double>(urls) / n,
            static_cast<double>(mentions) / n, static_cast<double>(media) / n};
  }
};

AuthorTally tally_for(std::string_view user_id, const Collection& c) {
  AuthorTally tally;
  for (const auto& t : c.expanded_tweets) {
    if (t.author_id == user_id) tally.add(t, c.traced_hashtag);
  }
  return tally;
}

std::size_t traced_day_count(const Collection& c) {
  std::set<Date> days;
  for (const auto& t : c.expanded_tweets) {
    if (t.has_hashtag(c.traced_hashtag)) days.insert(day_of(t.created_at));
  }
  return days.size();
}

const UserProfile* profile_of(std::string_view user_id, const Collection& c) {
  const auto it = c.users.find(std::string(user_id));
  if (it == c.users.end() || !it->second) return nullptr;
  return &*it->second;
}

double ratio_or_zero(double num, double den) { return den > 0 ? num / den : 0.0; }

}  // namespace

double avg_tweets_per_day(const UserProfile& u, Date today) {
  const auto days = (today - u.registered_at).count();
  return static_cast<double>(u.status_count) / static_cast<double>(std::max<long>(1, days));
}

double follower_degree(const UserProfile& u) {
  const auto total = u.follower_count + u.following_count;
  if (total == 0) return 0.0;
  return static_cast<double>(u.follower_count) / static_cast<double>(total);
}

EntityUse entity_use_user(std::string_view user_id, const Collection& c) {
  return tally_for(user_id, c).entity_use();
}

std::int64_t traced_hashtag_use(std::string_view user_id, const Collection& c) {
  return tally_for(user_id, c).traced;
}

double daily_traced_avg(std::string_view user_id, const Collection& c) {
  return ratio_or_zero(static_cast<double>(traced_hashtag_use(user_id, c)),
                       static_cast<double>(traced_day_count(c)));
}

double daily_comparison(std::string_view user_id, const Collection& c, Date today) {
  const UserProfile* p = profile_of(user_id, c);
  if (!p) return 0.0;
  return ratio_or_zero(daily_traced_avg(user_id, c), avg_tweets_per_day(*p, today));
}

std::vector<UserFeatureVector> extract_user_features(const Collection& c, Date today,
                                                     const UserFeatureOptions& options) {
  std::unordered_map<std::string_view, AuthorTally> tallies;
  for (const auto& t : c.expanded_tweets) tallies[t.author_id].add(t, c.traced_hashtag);
  const double traced_days = static_cast<double>(traced_day_count(c));

  std::vector<UserFeatureVector> out;
  out.reserve(c.users.size());
  for (const auto& [id, profile] : c.users) {
    const auto it = tallies.find(id);
    const AuthorTally tally = it == tallies.end() ? AuthorTally{} : it->second;
    UserFeatureVector v;
    v.user_id = id;
    v.entity_use = tally.entity_use();
    v.traced_hashtag_use = tally.traced;
    v.daily_traced_avg = ratio_or_zero(static_cast<double>(tally.traced), traced_days);
    if (profile) {
      v.tweet_count = profile->status_count;
      v.favorite_count = profile->favorite_count;
      v.avg_tweets_per_day = avg_tweets_per_day(*profile, today);
      v.follower_degree = follower_degree(*profile);
      v.daily_comparison = ratio_or_zero(v.daily_traced_avg, v.avg_tweets_per_day);
      v.registered_at = profile->registered_at;
      v.registered_after_cutoff = profile->registered_at > options.cutoff;
    } else {
      v.complete = false;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace collusion
