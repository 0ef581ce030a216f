#include "collusion/text.hpp"

#include <cctype>

namespace collusion {
namespace {

// Returns the byte length of a whitespace code point starting at s[i], or 0.
std::size_t whitespace_length(std::string_view s, std::size_t i) {
  const auto b = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char c = b(i);
  if (c == ' ' || (c >= 0x09 && c <= 0x0d)) return 1;
  if (c == 0xc2 && i + 1 < s.size() && (b(i + 1) == 0x85 || b(i + 1) == 0xa0)) return 2;
  if (i + 2 >= s.size()) return 0;
  const unsigned char c1 = b(i + 1), c2 = b(i + 2);
  if (c == 0xe1 && c1 == 0x9a && c2 == 0x80) return 3;  // U+1680
  if (c == 0xe2 && c1 == 0x80 && (c2 <= 0x8a || c2 == 0xa8 || c2 == 0xa9 || c2 == 0xaf))
    return 3;  // U+2000..U+200A, U+2028, U+2029, U+202F
  if (c == 0xe2 && c1 == 0x81 && c2 == 0x9f) return 3;  // U+205F
  if (c == 0xe3 && c1 == 0x80 && c2 == 0x80) return 3;  // U+3000
  return 0;
}

bool is_ascii_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

void push_token(std::string_view raw, std::vector<std::string>& out) {
  std::size_t b = 0, e = raw.size();
  while (b < e && is_ascii_punct(raw[b])) ++b;
  while (e > b && is_ascii_punct(raw[e - 1])) --e;
  if (b == e) return;
  std::string token(raw.substr(b, e - b));
  for (char& c : token) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  out.push_back(std::move(token));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0, i = 0;
  while (i < text.size()) {
    const std::size_t ws = whitespace_length(text, i);
    if (ws == 0) {
      ++i;
      continue;
    }
    if (i > start) push_token(text.substr(start, i - start), out);
    i += ws;
    start = i;
  }
  if (start < text.size()) push_token(text.substr(start), out);
  return out;
}

std::string_view sentiment_name(Sentiment s) {
  switch (s) {
    case Sentiment::VeryNegative: return "very_negative";
    case Sentiment::Negative: return "negative";
    case Sentiment::Neutral: return "neutral";
    case Sentiment::Positive: return "positive";
    case Sentiment::VeryPositive: return "very_positive";
  }
  return "neutral";
}

const std::map<std::string, int, std::less<>>& LexiconSentimentScorer::default_lexicon() {
  static const std::map<std::string, int, std::less<>> lexicon = {
      {"abuse", -2},    {"angry", -1},   {"awful", -2},     {"bad", -1},
      {"best", 2},      {"corrupt", -2}, {"crooked", -2},   {"disaster", -2},
      {"disgrace", -2}, {"evil", -2},    {"excellent", 2},  {"fail", -1},
      {"fake", -1},     {"fantastic", 2}, {"good", 1},      {"great", 1},
      {"happy", 1},     {"hate", -2},    {"hope", 1},       {"liar", -2},
      {"love", 2},      {"nice", 1},     {"pathetic", -2},  {"proud", 1},
      {"sad", -1},      {"shame", -1},   {"stupid", -2},    {"terrible", -2},
      {"thanks", 1},    {"win", 1},      {"wonderful", 2},  {"worst", -2},
      {"wrong", -1},    {"yes", 1},      {"no", -1},        {"weak", -1},
  };
  return lexicon;
}

LexiconSentimentScorer::LexiconSentimentScorer() : lexicon_(default_lexicon()) {}

LexiconSentimentScorer::LexiconSentimentScorer(std::map<std::string, int, std::less<>> lexicon)
    : lexicon_(std::move(lexicon)) {}

int LexiconSentimentScorer::raw_score(std::string_view text) const {
  int total = 0;
  for (const auto& token : tokenize(text)) {
    if (auto it = lexicon_.find(token); it != lexicon_.end()) total += it->second;
  }
  return total;
}

Sentiment LexiconSentimentScorer::score(std::string_view text) const {
  const int s = raw_score(text);
  if (s <= -2) return Sentiment::VeryNegative;
  if (s == -1) return Sentiment::Negative;
  if (s == 0) return Sentiment::Neutral;
  if (s == 1) return Sentiment::Positive;
  return Sentiment::VeryPositive;
}

}  // namespace collusion
