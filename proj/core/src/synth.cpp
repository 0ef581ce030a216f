#include "collusion/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "collusion/corpus_io.hpp"
#include "collusion/error.hpp"
#include "collusion/rng.hpp"

namespace collusion {
namespace {

using std::chrono::days;
using std::chrono::hours;

constexpr std::array<std::string_view, 10> kPositiveWords = {
    "good", "great", "love", "best", "win", "hope", "proud", "thanks", "wonderful", "happy"};
constexpr std::array<std::string_view, 10> kNegativeWords = {
    "bad", "corrupt", "liar", "fake", "sad", "disaster", "shame", "worst", "crooked", "weak"};

Date ymd(int y, unsigned m, unsigned d) {
  return Date{std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d}};
}

// Filler words start with "zq" so they never hit the sentiment lexicon.
std::string vocab_word(std::uint64_t index) {
  std::string w = "zq";
  do {
    w.push_back(char('a' + index % 26));
    index /= 26;
  } while (index > 0);
  return w;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  return lo + std::int64_t(rng.below(std::uint64_t(hi - lo + 1)));
}

struct Generator {
  const BehaviorProfile& p;
  const std::string& tag;
  Rng rng;
  Timestamp start;
  std::size_t next_id = 0;

  std::string tweet_id() { return tag + "-t" + std::to_string(next_id++); }
  std::string user_id(int u) const { return tag + "-u" + std::to_string(u); }

  std::string sentence(int words) {
    std::string s;
    for (int i = 0; i < words; ++i) {
      if (!s.empty()) s.push_back(' ');
      s += vocab_word(rng.below(std::uint64_t(p.vocab_size)));
    }
    return s;
  }

  std::string sentiment_words() {
    std::string s;
    if (rng.bernoulli(0.3)) return s;
    const int n = 1 + int(rng.below(2));
    const double positive = (1.0 + p.sentiment_bias) / 2.0;
    for (int i = 0; i < n; ++i) {
      const auto& pool = rng.bernoulli(positive) ? kPositiveWords : kNegativeWords;
      s += ' ';
      s += pool[rng.below(pool.size())];
    }
    return s;
  }

  void decorate(Tweet& t, const std::vector<std::string>& roster) {
    const int extra = rng.poisson(p.entity_rates.extra_hashtags);
    for (int i = 0; i < extra; ++i) t.hashtags.push_back("topic" + std::to_string(rng.below(12)));
    const int mentions = rng.poisson(p.entity_rates.mentions);
    for (int i = 0; i < mentions; ++i) t.mentions.push_back(roster[rng.below(roster.size())]);
    t.url_count = rng.bernoulli(p.entity_rates.url) ? 1 : 0;
    t.media_count = rng.bernoulli(p.entity_rates.media) ? 1 : 0;
  }

  std::string hashtag_text(const Tweet& t) const {
    std::string s;
    for (const auto& h : t.hashtags) s += " #" + h;
    return s;
  }

  Timestamp traced_time() {
    if (p.burst_windows.empty()) {
      return start + Seconds{std::int64_t(rng.below(std::uint64_t(p.span.count())))};
    }
    const auto& b = p.burst_windows[rng.below(p.burst_windows.size())];
    return start + b.start + Seconds{std::int64_t(rng.below(std::uint64_t(b.length.count())))};
  }
};

}  // namespace

BehaviorProfile BehaviorProfile::organized() {
  BehaviorProfile p;
  p.kind = Kind::Organized;
  p.users = 40;
  p.tweets_per_user = 4.0;
  p.retweet_rate = 0.8;
  p.retweet_pool = 8;
  p.vocab_size = 60;
  p.burst_windows = {{Seconds{0}, Seconds{2 * 3600}},
                     {Seconds{26 * 3600}, Seconds{2 * 3600}},
                     {Seconds{50 * 3600}, Seconds{2 * 3600}}};
  p.registration_from = ymd(2016, 1, 1);
  p.registration_to = ymd(2016, 8, 31);
  p.traced_tag_focus = 0.8;
  p.entity_rates = {.extra_hashtags = 1.5, .mentions = 0.3, .url = 0.3, .media = 0.1};
  p.reply_rate = 0.05;
  p.followers_min = 0;
  p.followers_max = 100;
  p.following_min = 500;
  p.following_max = 3000;
  p.statuses_min = 500;
  p.statuses_max = 20000;
  p.favorites_min = 0;
  p.favorites_max = 2000;
  p.politicality = Politicality::Political;
  return p;
}

BehaviorProfile BehaviorProfile::organic() {
  BehaviorProfile p;
  p.kind = Kind::Organic;
  p.users = 150;
  p.tweets_per_user = 1.1;
  p.retweet_rate = 0.2;
  p.retweet_pool = 0;
  p.vocab_size = 20000;
  p.span = Seconds{7 * 86400};
  p.registration_from = ymd(2007, 1, 1);
  p.registration_to = ymd(2015, 6, 30);
  p.traced_tag_focus = 0.3;
  p.entity_rates = {.extra_hashtags = 0.4, .mentions = 0.3, .url = 0.4, .media = 0.2};
  p.reply_rate = 0.2;
  p.followers_min = 50;
  p.followers_max = 5000;
  p.following_min = 50;
  p.following_max = 1000;
  p.statuses_min = 100;
  p.statuses_max = 20000;
  p.favorites_min = 0;
  p.favorites_max = 20000;
  p.politicality = Politicality::NonPolitical;
  return p;
}

LabelTriple BehaviorProfile::label() const {
  return {kind == Kind::Organized ? Organization::Organized : Organization::Organic,
          politicality, camp};
}

void BehaviorProfile::validate() const {
  auto probability = [](double v, const char* name) {
    if (!(v >= 0 && v <= 1)) throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
  };
  probability(retweet_rate, "retweet_rate");
  probability(traced_tag_focus, "traced_tag_focus");
  probability(entity_rates.url, "url rate");
  probability(entity_rates.media, "media rate");
  probability(reply_rate, "reply_rate");
  probability(missing_profile_rate, "missing_profile_rate");
  if (traced_tag_focus == 0) throw InvalidArgument("traced_tag_focus must be positive");
  if (users <= 0 || tweets_per_user < 1 || vocab_size <= 0 || retweet_pool < 0) {
    throw InvalidArgument("users, vocab_size must be positive and tweets_per_user >= 1");
  }
  if (!(sentiment_bias >= -1 && sentiment_bias <= 1)) {
    throw InvalidArgument("sentiment_bias must lie in [-1, 1]");
  }
  if (span <= Seconds::zero()) throw InvalidArgument("span must be positive");
  for (const auto& b : burst_windows) {
    if (b.start < Seconds::zero() || b.length <= Seconds::zero()) {
      throw InvalidArgument("burst windows need a non-negative start and positive length");
    }
  }
  if (registration_to < registration_from) throw InvalidArgument("empty registration window");
  if (followers_max < followers_min || following_max < following_min ||
      statuses_max < statuses_min || favorites_max < favorites_min || followers_min < 0 ||
      following_min < 0 || statuses_min < 0 || favorites_min < 0) {
    throw InvalidArgument("bad profile counter ranges");
  }
}

SyntheticCollection generate_collection(const BehaviorProfile& profile,
                                        const std::string& traced_hashtag, std::uint64_t seed) {
  profile.validate();
  if (traced_hashtag.empty()) throw InvalidArgument("traced hashtag must not be empty");
  Generator g{profile, traced_hashtag, Rng(seed), {}};
  g.start = Timestamp{ymd(2016, 9, 1)} + days{g.rng.below(60)} + hours{g.rng.below(24)};

  SyntheticCollection out;
  out.traced_hashtag = traced_hashtag;
  out.label = profile.label();

  std::vector<std::string> roster;
  for (int u = 0; u < profile.users; ++u) roster.push_back(g.user_id(u));

  // Traced posts: pick authors and times first, then decide retweet/original
  // in time order so retweets can point at earlier originals.
  struct Slot {
    Timestamp at;
    int author;
  };
  std::vector<Slot> slots;
  for (int u = 0; u < profile.users; ++u) {
    const int n = 1 + g.rng.poisson(profile.tweets_per_user - 1.0);
    for (int i = 0; i < n; ++i) slots.push_back({g.traced_time(), u});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return a.at != b.at ? a.at < b.at : a.author < b.author;
  });

  std::vector<std::size_t> originals;  // indices into out.tweets
  std::vector<std::vector<Timestamp>> traced_times(std::size_t(profile.users));
  std::size_t external = 0;
  for (const auto& slot : slots) {
    Tweet t;
    t.id = g.tweet_id();
    t.author_id = roster[std::size_t(slot.author)];
    t.created_at = slot.at;
    t.hashtags.push_back(traced_hashtag);
    traced_times[std::size_t(slot.author)].push_back(slot.at);
    const bool pooled = profile.retweet_pool > 0;
    if (g.rng.bernoulli(profile.retweet_rate) && (!pooled || !originals.empty())) {
      if (pooled) {
        const std::size_t limit = std::min<std::size_t>(originals.size(), std::size_t(profile.retweet_pool));
        const Tweet& source = out.tweets[originals[g.rng.below(limit)]];
        t.retweeted_status_id = source.id;
        t.text = "RT @" + source.author_id + ": " + source.text;
        t.hashtags = source.hashtags;
        t.mentions = source.mentions;
        t.mentions.insert(t.mentions.begin(), source.author_id);
        t.url_count = source.url_count;
        t.media_count = source.media_count;
      } else {
        t.retweeted_status_id = traced_hashtag + "-ext" + std::to_string(external++);
        const std::string other = roster[g.rng.below(roster.size())];
        g.decorate(t, roster);
        t.mentions.insert(t.mentions.begin(), other);
        t.text = "RT @" + other + ": " + g.sentence(6 + int(g.rng.below(7))) + g.hashtag_text(t);
      }
    } else {
      g.decorate(t, roster);
      t.text = g.sentence(6 + int(g.rng.below(7)));
      if (g.rng.bernoulli(profile.reply_rate)) {
        const std::string& target = roster[g.rng.below(roster.size())];
        t.replied_user_id = target;
        t.mentions.insert(t.mentions.begin(), target);
        t.text = "@" + target + " " + t.text + g.sentiment_words();
      }
      t.text += g.hashtag_text(t);
      originals.push_back(out.tweets.size());
    }
    out.tweets.push_back(std::move(t));
  }

  // Untagged activity around each user's traced posts; the +/- 10 day spread
  // puts some of it outside the default expansion window.
  const double background_ratio = (1.0 - profile.traced_tag_focus) / profile.traced_tag_focus;
  for (int u = 0; u < profile.users; ++u) {
    const auto& times = traced_times[std::size_t(u)];
    const int n = g.rng.poisson(background_ratio * double(times.size()));
    for (int i = 0; i < n; ++i) {
      Tweet t;
      t.id = g.tweet_id();
      t.author_id = roster[std::size_t(u)];
      const Timestamp anchor = times[g.rng.below(times.size())];
      t.created_at = anchor + Seconds{uniform_int(g.rng, -10 * 86400, 10 * 86400)};
      if (g.rng.bernoulli(0.5)) t.hashtags.push_back("chat" + std::to_string(g.rng.below(20)));
      g.decorate(t, roster);
      t.text = g.sentence(5 + int(g.rng.below(8))) + g.hashtag_text(t);
      out.tweets.push_back(std::move(t));
    }
  }

  const auto reg_days = (profile.registration_to - profile.registration_from).count();
  for (int u = 0; u < profile.users; ++u) {
    UserProfile up;
    up.id = roster[std::size_t(u)];
    up.registered_at = profile.registration_from + days{uniform_int(g.rng, 0, reg_days)};
    up.follower_count = uniform_int(g.rng, profile.followers_min, profile.followers_max);
    up.following_count = uniform_int(g.rng, profile.following_min, profile.following_max);
    up.status_count = uniform_int(g.rng, profile.statuses_min, profile.statuses_max);
    up.favorite_count = uniform_int(g.rng, profile.favorites_min, profile.favorites_max);
    // Draw before deciding so the other users' profiles don't depend on the rate.
    if (g.rng.bernoulli(profile.missing_profile_rate)) continue;
    out.profiles.push_back(std::move(up));
  }
  return out;
}

std::vector<SyntheticCollection> generate_dataset(std::size_t organized, std::size_t organic,
                                                  std::uint64_t seed) {
  std::vector<SyntheticCollection> out;
  const std::size_t total = organized + organic;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    Rng rng(derive_seed(seed, 0x5e7, i));
    const bool is_organized = i < organized;
    BehaviorProfile p = is_organized ? BehaviorProfile::organized() : BehaviorProfile::organic();
    auto jitter = [&](double v, double rel) { return v * rng.uniform(1.0 - rel, 1.0 + rel); };
    p.users = std::max(5, int(jitter(p.users, 0.4)));
    p.tweets_per_user = std::max(1.0, jitter(p.tweets_per_user, 0.25));
    p.retweet_rate = std::clamp(jitter(p.retweet_rate, 0.2), 0.0, 1.0);
    p.reply_rate = std::clamp(jitter(p.reply_rate, 0.5), 0.0, 1.0);
    p.traced_tag_focus = std::clamp(jitter(p.traced_tag_focus, 0.2), 0.1, 1.0);
    p.entity_rates.extra_hashtags = jitter(p.entity_rates.extra_hashtags, 0.4);
    p.entity_rates.url = std::clamp(jitter(p.entity_rates.url, 0.4), 0.0, 1.0);

    const bool political = rng.bernoulli(is_organized ? 0.85 : 0.3);
    p.politicality = political ? Politicality::Political : Politicality::NonPolitical;
    if (political) {
      const bool trump = rng.bernoulli(0.5);
      p.camp = trump ? Camp::ProTrump : Camp::ProHillary;
      p.sentiment_bias = trump ? -0.8 : 0.8;
      p.reply_rate = std::max(p.reply_rate, 0.15);
    } else {
      p.camp = Camp::None;
      p.sentiment_bias = 0.0;
    }
    char tag[32];
    std::snprintf(tag, sizeof tag, "synth%04zu", i);
    out.push_back(generate_collection(p, tag, rng.next()));
  }
  return out;
}

void write_corpus(const std::filesystem::path& dir,
                  std::span<const SyntheticCollection> collections) {
  std::filesystem::create_directories(dir);
  std::ofstream tweets(dir / "tweets.jsonl", std::ios::binary);
  std::ofstream users(dir / "users.jsonl", std::ios::binary);
  std::ofstream labels(dir / "labels.csv", std::ios::binary);
  if (!tweets || !users || !labels) throw InputError("cannot write corpus to " + dir.string());
  labels << "hashtag,organization,politicality,camp\n";
  for (const auto& c : collections) {
    for (const auto& t : c.tweets) tweets << tweet_to_json_line(t) << '\n';
    for (const auto& u : c.profiles) users << profile_to_json_line(u) << '\n';
    labels << c.traced_hashtag << ','
           << (c.label.organization ? to_string(*c.label.organization) : "") << ','
           << (c.label.politicality ? to_string(*c.label.politicality) : "") << ','
           << (c.label.camp ? to_string(*c.label.camp) : "") << '\n';
  }
  if (!tweets || !users || !labels) throw InputError("failed writing corpus to " + dir.string());
}

}  // namespace collusion
