#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "builders.hpp"
#include "collusion/corpus.hpp"
#include "collusion/user_features.hpp"

namespace {

using namespace collusion;
using namespace testing_support;

TEST(AvgTweetsPerDay, DividesByAccountAge) {
  EXPECT_DOUBLE_EQ(avg_tweets_per_day(profile("a", "2016-08-12", 0, 0, 100), day("2016-10-01")), 2.0);
}

TEST(AvgTweetsPerDay, SameDayRegistrationClampsToOneDay) {
  EXPECT_DOUBLE_EQ(avg_tweets_per_day(profile("a", "2016-10-01", 0, 0, 5), day("2016-10-01")), 5.0);
}

TEST(AvgTweetsPerDay, MatchesDirectFormula) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto reg = day("2006-01-01") + std::chrono::days{rng.below(4000)};
    const auto today = reg + std::chrono::days{rng.below(3000)};
    const auto statuses = std::int64_t(rng.below(100000));
    const UserProfile p{"u", reg, 0, 0, statuses, 0};
    const double days = std::max<double>(1.0, double((today - reg).count()));
    EXPECT_DOUBLE_EQ(avg_tweets_per_day(p, today), double(statuses) / days);
  }
}

TEST(FollowerDegree, DocumentedCases) {
  EXPECT_DOUBLE_EQ(follower_degree(profile("a", "2016-01-01", 0, 50)), 0.0);
  EXPECT_DOUBLE_EQ(follower_degree(profile("a", "2016-01-01", 50, 0)), 1.0);
  EXPECT_DOUBLE_EQ(follower_degree(profile("a", "2016-01-01", 0, 0)), 0.0);
  EXPECT_DOUBLE_EQ(follower_degree(profile("a", "2016-01-01", 30, 10)), 0.75);
}

Collection collection_of(std::vector<Tweet> tweets, std::vector<UserProfile> profiles,
                         const std::string& tag = "x") {
  return build_collection(TweetStore(std::move(tweets), std::move(profiles)), tag);
}

TEST(EntityUseUser, AveragesEntityCounts) {
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"}).urls(2),
                                T("2", "a", "2016-10-01T01:00:00Z").tags({"x", "y", "z"}).mentions({"b"})},
                               {});
  const auto e = entity_use_user("a", c);
  EXPECT_DOUBLE_EQ(e.hashtag, 2.0);
  EXPECT_DOUBLE_EQ(e.url, 1.0);
  EXPECT_DOUBLE_EQ(e.mention, 0.5);
  EXPECT_DOUBLE_EQ(e.media, 0.0);
}

TEST(EntityUseUser, OnlyTheTracedTagMeansOtherEntitiesAreZero) {
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})}, {});
  const auto e = entity_use_user("a", c);
  EXPECT_DOUBLE_EQ(e.url, 0.0);
  EXPECT_DOUBLE_EQ(e.mention, 0.0);
  EXPECT_DOUBLE_EQ(e.media, 0.0);
}

TEST(TracedHashtagUse, CountsTaggedTweets) {
  const auto single = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})}, {});
  EXPECT_EQ(traced_hashtag_use("a", single), 1);

  std::vector<Tweet> tweets;
  for (int i = 0; i < 20; ++i) {
    T t(std::to_string(i), "a", at("2016-10-01T00:00:00Z") + Seconds{i * 60});
    if (i < 12) t.tags({"x"});
    tweets.push_back(t);
  }
  EXPECT_EQ(traced_hashtag_use("a", collection_of(tweets, {})), 12);
}

TEST(DailyTracedAvg, DividesByActiveTagDays) {
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"}),
                                T("2", "a", "2016-10-01T05:00:00Z").tags({"x"}),
                                T("3", "a", "2016-10-02T00:00:00Z").tags({"x"}),
                                T("4", "a", "2016-10-02T23:59:59Z").tags({"x"}),
                                T("5", "b", "2016-10-02T10:00:00Z").tags({"x"})},
                               {});
  EXPECT_DOUBLE_EQ(daily_traced_avg("a", c), 2.0);
  EXPECT_DOUBLE_EQ(daily_traced_avg("b", c), 0.5);
  const auto once = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})}, {});
  EXPECT_DOUBLE_EQ(daily_traced_avg("a", once), 1.0);
}

TEST(DailyComparison, RatioOfTheTwoRates) {
  // 4 tagged posts on 2 days; 100 statuses over 50 days.
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"}),
                                T("2", "a", "2016-10-01T01:00:00Z").tags({"x"}),
                                T("3", "a", "2016-10-02T00:00:00Z").tags({"x"}),
                                T("4", "a", "2016-10-02T01:00:00Z").tags({"x"})},
                               {profile("a", "2016-08-12", 1, 1, 100)});
  EXPECT_DOUBLE_EQ(daily_comparison("a", c, day("2016-10-01")), 1.0);
  const auto dormant = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})},
                                     {profile("a", "2016-01-01", 1, 1, 0)});
  EXPECT_DOUBLE_EQ(daily_comparison("a", dormant, day("2016-10-01")), 0.0);
}

TEST(ExtractUserFeatures, OneVectorPerUser) {
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"}),
                                T("2", "b", "2016-10-01T00:00:00Z").tags({"x"}),
                                T("3", "c", "2016-10-01T00:00:00Z").tags({"x"})},
                               {profile("a", "2016-01-01"), profile("b", "2014-01-01"),
                                profile("c", "2015-07-01")});
  const auto v = extract_user_features(c, day("2016-10-02"));
  ASSERT_EQ(v.size(), 3u);
  EXPECT_TRUE(v[0].registered_after_cutoff);
  EXPECT_FALSE(v[1].registered_after_cutoff);
  EXPECT_FALSE(v[2].registered_after_cutoff);  // cutoff day itself is not after
  for (const auto& u : v) EXPECT_TRUE(u.complete);
}

TEST(ExtractUserFeatures, MissingProfilesAreFlaggedIncomplete) {
  const auto c = collection_of({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"}),
                                T("2", "b", "2016-10-01T00:00:00Z").tags({"x"})},
                               {});
  const auto v = extract_user_features(c, day("2016-10-02"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const auto& u) { return u.complete; }), 0);
  EXPECT_EQ(v[0].traced_hashtag_use, 1);
}

TEST(ExtractUserFeatures, MatchesPerOperationResults) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const auto corpus = random_corpus(rng, 30, 400);
    const TweetStore store(corpus.tweets, corpus.profiles);
    const Collection c = build_collection(store, corpus.tag);
    const Date today = day_of(store.max_timestamp());
    for (const auto& v : extract_user_features(c, today)) {
      const auto e = entity_use_user(v.user_id, c);
      EXPECT_DOUBLE_EQ(v.entity_use.hashtag, e.hashtag);
      EXPECT_DOUBLE_EQ(v.entity_use.url, e.url);
      EXPECT_DOUBLE_EQ(v.entity_use.mention, e.mention);
      EXPECT_DOUBLE_EQ(v.entity_use.media, e.media);
      EXPECT_EQ(v.traced_hashtag_use, traced_hashtag_use(v.user_id, c));
      EXPECT_GE(v.traced_hashtag_use, 1);
      EXPECT_DOUBLE_EQ(v.daily_traced_avg, daily_traced_avg(v.user_id, c));
      EXPECT_DOUBLE_EQ(v.daily_comparison, daily_comparison(v.user_id, c, today));
      if (v.complete) {
        const UserProfile* p = store.profile(v.user_id);
        ASSERT_NE(p, nullptr);
        EXPECT_EQ(v.tweet_count, p->status_count);
        EXPECT_DOUBLE_EQ(v.avg_tweets_per_day, avg_tweets_per_day(*p, today));
        EXPECT_DOUBLE_EQ(v.follower_degree, follower_degree(*p));
        EXPECT_GE(v.follower_degree, 0.0);
        EXPECT_LE(v.follower_degree, 1.0);
        if (v.avg_tweets_per_day > 0) {
          EXPECT_EQ(v.daily_comparison, v.daily_traced_avg / v.avg_tweets_per_day);
        }
      }
    }
  }
}

}  // namespace
