#include <gtest/gtest.h>

#include "collusion/error.hpp"
#include "collusion/text.hpp"
#include "collusion/time.hpp"

namespace {

using namespace collusion;

TEST(Time, ParsesIsoVariantsToUtc) {
  const Timestamp z = parse_timestamp("2016-10-07T20:30:00Z");
  EXPECT_EQ(parse_timestamp("2016-10-07 20:30:00Z"), z);
  EXPECT_EQ(parse_timestamp("2016-10-07T22:30:00+02:00"), z);
  EXPECT_EQ(parse_timestamp("2016-10-07T15:30:00.999-05:00"), z);
  EXPECT_EQ(format_timestamp(z), "2016-10-07T20:30:00Z");
  EXPECT_EQ(format_date(parse_date("2016-02-29")), "2016-02-29");
  EXPECT_EQ(parse_date("2016-10-07T23:59:59Z"), parse_date("2016-10-07"));
  EXPECT_EQ(year_of(parse_date("2015-07-01")), 2015);
}

TEST(Time, RejectsMalformedInput) {
  for (const char* bad : {"", "2016", "2016-13-01", "2016-02-30", "2016-10-07T25:00:00Z",
                          "2016-10-07T20:30:00+2", "yesterday"}) {
    EXPECT_THROW(parse_timestamp(bad), InputError) << bad;
  }
}

TEST(Tokenize, SplitsOnWhitespaceStripsPunctuationAndLowercases) {
  EXPECT_EQ(tokenize("  Hello,   WORLD!\t#Maga\n(ok) ..."),
            (std::vector<std::string>{"hello", "world", "maga", "ok"}));
  EXPECT_EQ(tokenize("don't"), (std::vector<std::string>{"don't"}));
  // U+00A0 and U+3000 are whitespace too.
  EXPECT_EQ(tokenize("a\xC2\xA0" "b\xE3\x80\x80" "c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(tokenize("").empty());
}

TEST(LexiconScorer, MapsScoresToFiveClasses) {
  const LexiconSentimentScorer s;
  EXPECT_EQ(s.score("corrupt liar"), Sentiment::VeryNegative);
  EXPECT_EQ(s.score("awful"), Sentiment::VeryNegative);
  EXPECT_EQ(s.score("so sad"), Sentiment::Negative);
  EXPECT_EQ(s.score("the weather"), Sentiment::Neutral);
  EXPECT_EQ(s.score("good bad"), Sentiment::Neutral);
  EXPECT_EQ(s.score("Good!"), Sentiment::Positive);
  EXPECT_EQ(s.score("love it, great"), Sentiment::VeryPositive);
  EXPECT_EQ(sentiment_name(Sentiment::VeryNegative), "very_negative");
}

TEST(LexiconScorer, CustomLexicon) {
  const LexiconSentimentScorer s({{"meh", -1}});
  EXPECT_EQ(s.raw_score("meh meh good"), -2);
  EXPECT_EQ(s.score("meh"), Sentiment::Negative);
}

}  // namespace
