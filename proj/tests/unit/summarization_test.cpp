#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "builders.hpp"
#include "collusion/error.hpp"
#include "collusion/oracle.hpp"
#include "collusion/pipeline.hpp"
#include "collusion/summarization.hpp"

namespace {

using namespace collusion;
using namespace testing_support;

TEST(Bucketize, Percentages) {
  const auto scheme = count_buckets("x");
  const std::vector<double> v = {1, 1, 2};
  const auto b = bucketize(v, scheme);
  EXPECT_FALSE(b.empty);
  ASSERT_EQ(b.percentages.size(), scheme.buckets.size());
  EXPECT_NEAR(b.percentages[0], 200.0 / 3.0, 1e-12);
  EXPECT_NEAR(b.percentages[1], 100.0 / 3.0, 1e-12);
  EXPECT_NEAR(std::accumulate(b.percentages.begin(), b.percentages.end(), 0.0), 100.0, 1e-9);
}

TEST(Bucketize, EmptyIsFlagged) {
  const auto b = bucketize(std::vector<double>{}, ratio_buckets("x"));
  EXPECT_TRUE(b.empty);
  for (double p : b.percentages) EXPECT_EQ(p, 0.0);
}

TEST(Bucketize, RejectsValuesOutsideTheScheme) {
  EXPECT_THROW(bucketize(std::vector<double>{-1.0}, ratio_buckets("x")), InvalidArgument);
  EXPECT_THROW(bucketize(std::vector<double>{NAN}, ratio_buckets("x")), InvalidArgument);
}

TEST(FeatureStats, ConstantValues) {
  const auto s = feature_stats(std::vector<double>{2, 2, 2});
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.var, 0.0);
  EXPECT_EQ(s.std, 0.0);
  EXPECT_EQ(s.min, 2.0);
  EXPECT_EQ(s.max, 2.0);
}

TEST(FeatureStats, PopulationVariance) {
  const auto s = feature_stats(std::vector<double>{0, 4});
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.var, 4.0);
  EXPECT_EQ(s.std, 2.0);
  EXPECT_THROW(feature_stats(std::vector<double>{}), InvalidArgument);
}

TEST(FeatureStats, OrderIndependentBitForBit) {
  Rng rng(3);
  std::vector<double> v(257);
  for (auto& x : v) x = rng.uniform(0, 1e6) * (rng.bernoulli(0.1) ? 1e-6 : 1.0);
  const auto a = feature_stats(v);
  for (int i = 0; i < 20; ++i) {
    rng.shuffle(v);
    const auto b = feature_stats(v);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.var, b.var);
    EXPECT_EQ(a.min, b.min);
    EXPECT_EQ(a.max, b.max);
  }
}

Collection tiny_collection() {
  return build_collection(TweetStore({T("1", "a", "2016-10-01T00:10:00Z").tags({"x"})},
                                     {profile("a", "2016-01-01")}),
                          "x");
}

TEST(SummarizeCollection, SingleUserSingleSlice) {
  const auto schema = FeatureSchema::default_schema();
  const auto f = extract_collection_features(tiny_collection(), day("2016-10-02"), {}, schema,
                                             LexiconSentimentScorer{});
  ASSERT_EQ(f.row.values.size(), schema.width());
  EXPECT_EQ(f.row.values[schema.index_of("tweet_count_var")], 0.0);
  EXPECT_EQ(f.row.values[schema.index_of("slice_tpu_var")], 0.0);
  EXPECT_EQ(f.row.values[schema.index_of("slice_tpu_mean")], 1.0);
  EXPECT_EQ(f.row.values[schema.index_of("reg_year_pct_2016")], 100.0);
  EXPECT_EQ(f.row.values[schema.index_of("registered_after_cutoff_pct")], 100.0);
  EXPECT_EQ(f.row.values[schema.index_of("incomplete_user_pct")], 0.0);
}

TEST(SummarizeCollection, NeedsACompleteUserAndASlice) {
  const auto schema = FeatureSchema::default_schema();
  UserFeatureVector incomplete;
  incomplete.complete = false;
  SliceFeatureVector slice;
  EXPECT_THROW(summarize_collection(std::vector{incomplete}, std::vector{slice}, schema),
               InvalidArgument);
  UserFeatureVector complete;
  EXPECT_THROW(summarize_collection(std::vector{complete}, std::vector<SliceFeatureVector>{}, schema),
               InvalidArgument);
}

TEST(SummarizeCollection, DeterministicAndPermutationInvariant) {
  Rng rng(17);
  const auto corpus = random_corpus(rng, 25, 300);
  const auto schema = FeatureSchema::default_schema();
  const LexiconSentimentScorer scorer;
  const TweetStore store(corpus.tweets, corpus.profiles);
  const auto f = extract_features(store, corpus.tag, {}, schema, scorer);
  auto users = f.users;
  auto slices = f.slice_features;
  for (int i = 0; i < 10; ++i) {
    rng.shuffle(users);
    rng.shuffle(slices);
    EXPECT_EQ(summarize_collection(users, slices, schema).values, f.row.values);
  }
  EXPECT_EQ(extract_features(store, corpus.tag, {}, schema, scorer).row.values, f.row.values);
}

void expect_close_rows(const FeatureRow& got, const FeatureRow& want, const FeatureSchema& schema) {
  ASSERT_EQ(got.values.size(), want.values.size());
  for (std::size_t i = 0; i < got.values.size(); ++i) {
    const double tol = 1e-9 * std::max(std::abs(want.values[i]), 1e-3);
    EXPECT_NEAR(got.values[i], want.values[i], tol) << schema.columns()[i].name;
  }
}

TEST(SummarizeCollection, AgreesWithTheOracle) {
  const auto schema = FeatureSchema::default_schema();
  const LexiconSentimentScorer scorer;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    const auto corpus = random_corpus(rng, 5 + int(rng.below(40)), 50 + int(rng.below(500)), 0.2);
    const TweetStore store(corpus.tweets, corpus.profiles);
    const Date today = day_of(store.max_timestamp());
    auto f = extract_features(store, corpus.tag, {.today = today}, schema, scorer);
    if (f.incomplete_users == f.collection.users.size()) continue;
    expect_close_rows(f.row, oracle_extract(f.collection, today, schema, scorer), schema);
  }
}

TEST(SummarizeCollection, OracleAgreementWithOtherIntervals) {
  const auto schema = FeatureSchema::default_schema();
  const LexiconSentimentScorer scorer;
  Rng rng(99);
  const auto corpus = random_corpus(rng, 20, 300, 0.0);
  const TweetStore store(corpus.tweets, corpus.profiles);
  const Date today = day("2016-11-01");
  for (int minutes : {15, 360, 1440}) {
    const PipelineOptions options{.interval = Seconds{minutes * 60}, .today = today};
    const auto f = extract_features(store, corpus.tag, options, schema, scorer);
    expect_close_rows(f.row, oracle_extract(f.collection, today, schema, scorer, options.interval),
                      schema);
  }
}

}  // namespace
