#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace collusion {

/// Splits on Unicode whitespace, strips leading and trailing ASCII
/// punctuation and lowercases ASCII letters. Tokens that become empty are
/// dropped.
std::vector<std::string> tokenize(std::string_view text);

enum class Sentiment { VeryNegative = 0, Negative, Neutral, Positive, VeryPositive };

inline constexpr std::size_t kSentimentClasses = 5;
inline constexpr std::array<Sentiment, kSentimentClasses> kAllSentiments = {
    Sentiment::VeryNegative, Sentiment::Negative, Sentiment::Neutral,
    Sentiment::Positive, Sentiment::VeryPositive};

/// snake_case name, e.g. "very_negative".
std::string_view sentiment_name(Sentiment s);

/// Maps text to one of the five classes. Implementations must be
/// deterministic and safe to call concurrently.
class SentimentScorer {
 public:
  virtual ~SentimentScorer() = default;
  virtual Sentiment score(std::string_view text) const = 0;
};

/// Sums signed word weights over tokenize(text) and maps the total to a class
/// with thresholds {<=-2, -1, 0, +1, >=+2}.
class LexiconSentimentScorer final : public SentimentScorer {
 public:
  LexiconSentimentScorer();
  explicit LexiconSentimentScorer(std::map<std::string, int, std::less<>> lexicon);

  Sentiment score(std::string_view text) const override;
  int raw_score(std::string_view text) const;

  const std::map<std::string, int, std::less<>>& lexicon() const { return lexicon_; }

  static const std::map<std::string, int, std::less<>>& default_lexicon();

 private:
  std::map<std::string, int, std::less<>> lexicon_;
};

}  // namespace collusion
