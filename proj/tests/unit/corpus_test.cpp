#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <cmath>
#include <fstream>
#include <set>

#include "builders.hpp"
#include "collusion/corpus.hpp"
#include "collusion/corpus_io.hpp"
#include "collusion/error.hpp"
#include "scratch.hpp"

namespace {

using namespace collusion;
using namespace testing_support;
namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = testing_support::scratch("ck_corpus_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  for (const auto& l : lines) out << l << '\n';
}

TEST(LoadCorpus, KeepsEveryValidLine) {
  const auto dir = scratch("three");
  write_lines(dir / "tweets.jsonl",
              {tweet_to_json_line(T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})),
               tweet_to_json_line(T("2", "a", "2016-10-01T01:00:00Z")),
               tweet_to_json_line(T("3", "b", "2016-10-02T00:00:00Z"))});
  const TweetStore store = load_corpus(dir / "tweets.jsonl");
  EXPECT_EQ(store.size(), 3u);
  EXPECT_EQ(store.report().tweets_skipped, 0u);
}

TEST(LoadCorpus, SkipsMalformedLines) {
  const auto dir = scratch("malformed");
  write_lines(dir / "tweets.jsonl",
              {tweet_to_json_line(T("1", "a", "2016-10-01T00:00:00Z")), "{not json",
               tweet_to_json_line(T("2", "a", "2016-10-01T01:00:00Z")),
               tweet_to_json_line(T("3", "b", "2016-10-02T00:00:00Z"))});
  const TweetStore store = load_corpus(dir / "tweets.jsonl");
  EXPECT_EQ(store.size(), 3u);
  EXPECT_EQ(store.report().tweets_skipped, 1u);
}

TEST(LoadCorpus, RejectsRecordsMissingFieldsOrWithNegativeCounters) {
  EXPECT_THROW(tweet_from_json_line(R"({"id":"1","author_id":"a"})"), InputError);
  EXPECT_THROW(tweet_from_json_line(
                   R"({"id":"1","author_id":"a","created_at":"2016-10-01T00:00:00Z","url_count":-1})"),
               InputError);
}

TEST(LoadCorpus, NormalizesHashtagsAndAcceptsNumericIds) {
  const Tweet t = tweet_from_json_line(
      R"({"id":17,"author_id":42,"created_at":"2016-10-01T00:00:00Z","text":"x","hashtags":["#MAGA","Podesta"],"mentions":[],"url_count":0,"media_count":0,"retweeted_status_id":null,"replied_user_id":null})");
  EXPECT_EQ(t.id, "17");
  EXPECT_EQ(t.author_id, "42");
  EXPECT_EQ(t.hashtags, (std::vector<std::string>{"maga", "podesta"}));
  EXPECT_FALSE(t.is_retweet());
  EXPECT_FALSE(t.is_reply());
}

TEST(LoadCorpus, ErrorsOnMissingPathAndEmptyCorpus) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus.jsonl"), InputError);
  const auto dir = scratch("empty");
  write_lines(dir / "tweets.jsonl", {"garbage", ""});
  EXPECT_THROW(load_corpus(dir / "tweets.jsonl"), InputError);
}

TEST(LoadCorpus, ReadsDirectoriesWithProfilesAndCollapsesDuplicates) {
  const auto dir = scratch("dir");
  write_lines(dir / "part1.jsonl", {tweet_to_json_line(T("1", "a", "2016-10-01T00:00:00Z").text("first"))});
  write_lines(dir / "part2.jsonl", {tweet_to_json_line(T("1", "a", "2016-10-01T00:00:00Z").text("second")),
                                    tweet_to_json_line(T("2", "b", "2016-10-01T00:00:00Z"))});
  write_lines(dir / "users.jsonl", {profile_to_json_line(profile("a", "2015-01-01"))});
  const TweetStore store = load_corpus(dir);
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.report().duplicate_tweets, 1u);
  EXPECT_EQ(store.by_author("a").at(0)->text, "first");
  ASSERT_NE(store.profile("a"), nullptr);
  EXPECT_EQ(store.profile("b"), nullptr);
}

TEST(TweetStore, IndexesMatchLinearScans) {
  Rng rng(11);
  const auto corpus = random_corpus(rng, 300, 10000);
  const TweetStore store(corpus.tweets, corpus.profiles);
  for (const std::string tag : {"traced", "h0", "h3", "absent"}) {
    std::set<std::string> expected, got;
    for (const auto& t : corpus.tweets) {
      if (t.has_hashtag(tag)) expected.insert(t.id);
    }
    for (const Tweet* t : store.by_hashtag(tag)) got.insert(t->id);
    EXPECT_EQ(got, expected) << tag;
  }
  for (const std::string author : {"u0", "u17", "u299"}) {
    std::set<std::string> expected, got;
    for (const auto& t : corpus.tweets) {
      if (t.author_id == author) expected.insert(t.id);
    }
    for (const Tweet* t : store.by_author(author)) got.insert(t->id);
    EXPECT_EQ(got, expected) << author;
  }
}

TEST(BuildCollection, ErrorsWhenTheHashtagMatchesNothing) {
  const TweetStore store({T("1", "a", "2016-10-01T00:00:00Z").tags({"x"})}, {});
  EXPECT_THROW(build_collection(store, "y"), InputError);
  EXPECT_THROW(build_collection(store, ""), InvalidArgument);
  EXPECT_THROW(build_collection(store, "x", 0), InvalidArgument);
}

TEST(BuildCollection, ExpansionWindowBoundary) {
  const TweetStore store({T("s", "a", "2016-10-01T12:00:00Z").tags({"x"}),
                          T("near", "a", "2016-10-02T12:00:00Z"),
                          T("far", "a", "2016-10-31T12:00:00Z"),
                          T("other", "b", "2016-10-01T12:00:00Z")},
                         {});
  const Collection c = build_collection(store, "x", 7);
  EXPECT_EQ(c.seed_tweets.size(), 1u);
  EXPECT_EQ(c.expanded_tweets.size(), 2u);
  EXPECT_EQ(c.users.size(), 1u);
  EXPECT_FALSE(c.users.at("a").has_value());
}

TEST(BuildCollection, WindowIsInclusiveOnBothSides) {
  const TweetStore store({T("s", "a", "2016-10-10T00:00:00Z").tags({"x"}),
                          T("before", "a", "2016-10-03T00:00:00Z"),
                          T("after", "a", "2016-10-17T00:00:00Z"),
                          T("too_late", "a", "2016-10-17T00:00:01Z")},
                         {});
  const Collection c = build_collection(store, "X", 7);
  std::set<std::string> ids;
  for (const auto& t : c.expanded_tweets) ids.insert(t.id);
  EXPECT_EQ(ids, (std::set<std::string>{"s", "before", "after"}));
  EXPECT_EQ(c.traced_hashtag, "x");
}

TEST(BuildCollection, ExpandedSetMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const auto corpus = random_corpus(rng, 40, 800);
    const TweetStore store(corpus.tweets, corpus.profiles);
    const Collection c = build_collection(store, corpus.tag, 3);

    std::set<std::string> seeds, expected, authors;
    for (const auto& s : corpus.tweets) {
      if (!s.has_hashtag(corpus.tag)) continue;
      seeds.insert(s.id);
      authors.insert(s.author_id);
      for (const auto& t : corpus.tweets) {
        if (t.author_id != s.author_id) continue;
        const auto gap = t.created_at > s.created_at ? t.created_at - s.created_at
                                                     : s.created_at - t.created_at;
        if (gap <= Seconds{3 * 86400}) expected.insert(t.id);
      }
    }
    std::set<std::string> got_seeds, got;
    for (const auto& t : c.seed_tweets) got_seeds.insert(t.id);
    for (const auto& t : c.expanded_tweets) got.insert(t.id);
    EXPECT_EQ(got_seeds, seeds);
    EXPECT_EQ(got, expected);
    std::set<std::string> users;
    for (const auto& [id, p] : c.users) users.insert(id);
    EXPECT_EQ(users, authors);
    for (const auto& t : c.expanded_tweets) EXPECT_TRUE(authors.count(t.author_id));
    EXPECT_TRUE(std::is_sorted(c.expanded_tweets.begin(), c.expanded_tweets.end(), tweet_before));
  }
}

TEST(PartitionIntervals, OneHourOfTweetsIsOneSlice) {
  const TweetStore store({T("1", "a", "2016-10-01T10:05:00Z").tags({"x"}),
                          T("2", "b", "2016-10-01T10:59:59Z").tags({"x"})},
                         {});
  const auto slices = partition_intervals(build_collection(store, "x"));
  ASSERT_EQ(slices.size(), 1u);
  EXPECT_EQ(slices[0].tweets.size(), 2u);
  EXPECT_EQ(slices[0].interval_start, at("2016-10-01T10:00:00Z"));
}

TEST(PartitionIntervals, SplitsAtTheHourBoundary) {
  const TweetStore store({T("1", "a", "2016-10-01T00:30:00Z").tags({"x"}),
                          T("2", "b", "2016-10-01T01:30:00Z").tags({"x"}),
                          T("3", "b", "2016-10-01T01:40:00Z")},
                         {});
  const auto slices = partition_intervals(build_collection(store, "x"));
  ASSERT_EQ(slices.size(), 2u);
  EXPECT_EQ(slices[0].tweets.size(), 1u);
  EXPECT_EQ(slices[1].tweets.size(), 1u);
  EXPECT_EQ(slices[1].interval_start, at("2016-10-01T01:00:00Z"));
  EXPECT_THROW(partition_intervals(build_collection(store, "x"), Seconds{0}), InvalidArgument);
}

TEST(PartitionIntervals, OmitsEmptySlicesAndCoversEveryTracedTweet) {
  Rng rng(5);
  const auto corpus = random_corpus(rng, 30, 600);
  const TweetStore store(corpus.tweets, corpus.profiles);
  const Collection c = build_collection(store, corpus.tag);
  for (const Seconds interval : {Seconds{60}, Seconds{3600}, Seconds{5400}, Seconds{86400}}) {
    const auto slices = partition_intervals(c, interval);
    std::multiset<std::string> flat, expected;
    for (std::size_t i = 0; i < slices.size(); ++i) {
      EXPECT_FALSE(slices[i].tweets.empty());
      if (i) EXPECT_LT(slices[i - 1].interval_start, slices[i].interval_start);
      for (const auto& t : slices[i].tweets) {
        flat.insert(t.id);
        EXPECT_GE(t.created_at, slices[i].interval_start);
        EXPECT_LT(t.created_at, slices[i].interval_start + interval);
      }
    }
    for (const auto& t : c.expanded_tweets) {
      if (t.has_hashtag(corpus.tag)) expected.insert(t.id);
    }
    EXPECT_EQ(flat, expected);
  }
}

TEST(InspectionStats, TwoIdenticalSingleWordTweets) {
  const std::vector<Tweet> tweets = {T("1", "a", "2016-10-01T00:00:00Z").text("hello"),
                                     T("2", "b", "2016-10-01T00:00:00Z").text("hello")};
  const auto s = inspection_stats(tweets);
  EXPECT_DOUBLE_EQ(s.distinct_word_pct, 50.0);
  EXPECT_DOUBLE_EQ(s.tweets_per_user_mean, 1.0);
  EXPECT_DOUBLE_EQ(s.retweet_pct, 0.0);
  EXPECT_DOUBLE_EQ(s.hashtags_per_tweet_var, 0.0);
  EXPECT_THROW(inspection_stats(std::span<const Tweet>{}), InvalidArgument);
}

TEST(InspectionStats, ReportedDispersionIsConsistentUnderTruncation) {
  // #podestaemails15 lists var 2.40 and std 1.54. Rounding cannot produce
  // that pair (sqrt(2.395) > 1.545); truncation can, for var in [2.40, 2.4025).
  for (double var = 2.40; var < 2.4024; var += 1e-4) {
    EXPECT_DOUBLE_EQ(std::floor(std::sqrt(var) * 100.0) / 100.0, 1.54) << var;
  }
  EXPECT_GT(std::sqrt(2.395), 1.545);
}

TEST(InspectionStats, MatchesNaiveRecomputation) {
  Rng rng(3);
  const auto corpus = random_corpus(rng, 80, 500);
  const auto s = inspection_stats(corpus.tweets);
  std::set<std::string> words, authors;
  double tokens = 0, rts = 0, sum = 0;
  for (const auto& t : corpus.tweets) {
    std::string w;
    for (char ch : t.text + " ") {
      if (ch == ' ') {
        if (!w.empty()) {
          words.insert(w);
          tokens += 1;
        }
        w.clear();
      } else {
        w += ch;
      }
    }
    authors.insert(t.author_id);
    rts += t.is_retweet() ? 1 : 0;
    sum += double(t.hashtags.size());
  }
  const double n = double(corpus.tweets.size()), mean = sum / n;
  double ss = 0;
  for (const auto& t : corpus.tweets) ss += (double(t.hashtags.size()) - mean) * (double(t.hashtags.size()) - mean);
  EXPECT_NEAR(s.distinct_word_pct, 100.0 * double(words.size()) / tokens, 1e-9);
  EXPECT_NEAR(s.tweets_per_user_mean, n / double(authors.size()), 1e-12);
  EXPECT_NEAR(s.retweet_pct, 100.0 * rts / n, 1e-12);
  EXPECT_NEAR(s.hashtags_per_tweet_var, ss / n, 1e-12);
  EXPECT_NEAR(s.hashtags_per_tweet_std * s.hashtags_per_tweet_std, s.hashtags_per_tweet_var,
              1e-9 * s.hashtags_per_tweet_var);
}

Collection with_users(std::vector<std::string> ids) {
  Collection c;
  for (auto& id : ids) c.users[id] = std::nullopt;
  return c;
}

TEST(UserOverlap, IdenticalAndDisjointCollections) {
  const Collection a = with_users({"a", "b", "c"});
  EXPECT_DOUBLE_EQ(user_overlap(a, a).pct_of_a, 100.0);
  EXPECT_EQ(user_overlap(a, with_users({"x", "y"})).count, 0u);
}

TEST(UserOverlap, CountIsSymmetricAndYearsAreReported) {
  Collection a = with_users({"a", "b", "c", "d"});
  Collection b = with_users({"c", "d", "e"});
  a.users["c"] = profile("c", "2016-02-01");
  a.users["d"] = profile("d", "2012-05-05");
  const auto ab = user_overlap(a, b);
  const auto ba = user_overlap(b, a);
  EXPECT_EQ(ab.count, 2u);
  EXPECT_EQ(ba.count, 2u);
  EXPECT_DOUBLE_EQ(ab.pct_of_a, 50.0);
  EXPECT_NEAR(ba.pct_of_a, 200.0 / 3.0, 1e-12);
  EXPECT_EQ(ab.registered_after_cutoff, 1u);
  EXPECT_EQ(ab.registration_years.at(2016), 1u);
  EXPECT_EQ(ab.registration_years.at(2012), 1u);
}

TEST(UserOverlap, ReportedSharedUserShape) {
  // #benghazi and #podestaemails share 3,232 users, 41.15% of the first set.
  std::vector<std::string> a_ids, b_ids;
  for (int i = 0; i < 7854; ++i) a_ids.push_back("u" + std::to_string(i));
  for (int i = 0; i < 3232; ++i) b_ids.push_back("u" + std::to_string(i));
  b_ids.push_back("only_b");
  const auto r = user_overlap(with_users(a_ids), with_users(b_ids));
  EXPECT_EQ(r.count, 3232u);
  EXPECT_NEAR(r.pct_of_a, 41.15, 0.005);
}

}  // namespace
