#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "collusion/corpus.hpp"
#include "collusion/rng.hpp"
#include "collusion/time.hpp"
#include "collusion/tweet.hpp"

namespace testing_support {

using namespace collusion;

inline Timestamp at(const char* iso) { return parse_timestamp(iso); }
inline Date day(const char* iso) { return parse_date(iso); }

/// Fluent tweet builder.
class T {
 public:
  T(std::string id, std::string author, const char* iso) {
    t_.id = std::move(id);
    t_.author_id = std::move(author);
    t_.created_at = parse_timestamp(iso);
  }
  T(std::string id, std::string author, Timestamp ts) {
    t_.id = std::move(id);
    t_.author_id = std::move(author);
    t_.created_at = ts;
  }
  T& tags(std::vector<std::string> h) { t_.hashtags = std::move(h); return *this; }
  T& mentions(std::vector<std::string> m) { t_.mentions = std::move(m); return *this; }
  T& urls(int n) { t_.url_count = n; return *this; }
  T& media(int n) { t_.media_count = n; return *this; }
  T& text(std::string s) { t_.text = std::move(s); return *this; }
  T& retweet_of(std::string id) { t_.retweeted_status_id = std::move(id); return *this; }
  T& reply_to(std::string user) { t_.replied_user_id = std::move(user); return *this; }
  operator Tweet() const { return t_; }  // NOLINT
  Tweet get() const { return t_; }

 private:
  Tweet t_;
};

inline UserProfile profile(std::string id, const char* registered, std::int64_t followers = 10,
                           std::int64_t following = 10, std::int64_t statuses = 100,
                           std::int64_t favorites = 5) {
  return {std::move(id), parse_date(registered), followers, following, statuses, favorites};
}

inline TemporalSlice slice_of(std::vector<Tweet> tweets) {
  TemporalSlice s;
  if (!tweets.empty()) s.interval_start = std::chrono::floor<std::chrono::hours>(tweets[0].created_at);
  s.tweets = std::move(tweets);
  return s;
}

/// Random collection-shaped corpus used by property tests: `users` authors,
/// a traced tag plus noise tags, retweets, replies, mentions and some
/// untagged tweets spread over a few weeks. Profiles are missing with
/// probability missing_rate.
struct RandomCorpus {
  std::vector<Tweet> tweets;
  std::vector<UserProfile> profiles;
  std::string tag = "traced";
};

inline RandomCorpus random_corpus(Rng& rng, int users, int tweets, double missing_rate = 0.1) {
  RandomCorpus c;
  const Timestamp base = parse_timestamp("2016-10-01T00:00:00Z");
  const char* words[] = {"good", "bad", "zqa", "zqb", "zqc", "love", "hate", "liar", "win", "no"};
  for (int i = 0; i < tweets; ++i) {
    Tweet t;
    t.id = "t" + std::to_string(i);
    t.author_id = "u" + std::to_string(rng.below(std::uint64_t(users)));
    t.created_at = base + Seconds{std::int64_t(rng.below(21 * 86400))};
    if (rng.bernoulli(0.6)) t.hashtags.push_back(c.tag);
    const int extra = int(rng.below(4));
    for (int k = 0; k < extra; ++k) t.hashtags.push_back("h" + std::to_string(rng.below(5)));
    const int m = int(rng.below(4));
    for (int k = 0; k < m; ++k) t.mentions.push_back("u" + std::to_string(rng.below(std::uint64_t(users + 3))));
    t.url_count = int(rng.below(3));
    t.media_count = int(rng.below(2));
    if (rng.bernoulli(0.4)) t.retweeted_status_id = "o" + std::to_string(rng.below(6));
    if (rng.bernoulli(0.2)) t.replied_user_id = "u" + std::to_string(rng.below(std::uint64_t(users)));
    const int n_words = 1 + int(rng.below(6));
    for (int k = 0; k < n_words; ++k) {
      if (k) t.text += ' ';
      t.text += words[rng.below(10)];
    }
    c.tweets.push_back(std::move(t));
  }
  for (int u = 0; u < users; ++u) {
    if (rng.bernoulli(missing_rate)) continue;
    UserProfile p;
    p.id = "u" + std::to_string(u);
    p.registered_at = parse_date("2008-01-01") + std::chrono::days{rng.below(3000)};
    p.follower_count = std::int64_t(rng.below(4)) == 0 ? 0 : std::int64_t(rng.below(5000));
    p.following_count = std::int64_t(rng.below(4)) == 0 ? 0 : std::int64_t(rng.below(5000));
    p.status_count = std::int64_t(rng.below(60000));
    p.favorite_count = std::int64_t(rng.below(60000));
    c.profiles.push_back(std::move(p));
  }
  // Make sure the traced tag is used at least once.
  if (std::none_of(c.tweets.begin(), c.tweets.end(),
                   [&](const Tweet& t) { return t.has_hashtag(c.tag); })) {
    c.tweets.front().hashtags.push_back(c.tag);
  }
  return c;
}

}  // namespace testing_support
