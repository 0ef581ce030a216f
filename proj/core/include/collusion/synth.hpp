#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collusion/collection.hpp"
#include "collusion/tweet.hpp"

namespace collusion {

/// Knobs of the synthetic generator. organized() and organic() give the two
/// contrasting behaviours; every probability lies in [0, 1].
struct BehaviorProfile {
  enum class Kind { Organized, Organic };

  struct Burst {
    Seconds start{0};  // offset from the collection start
    Seconds length{3600};
  };

  struct EntityRates {
    double extra_hashtags = 0.5;  // Poisson mean beyond the traced tag
    double mentions = 0.3;        // Poisson mean on original posts
    double url = 0.3;             // per-post probability
    double media = 0.1;
  };

  Kind kind = Kind::Organized;
  int users = 40;
  /// Mean traced posts per user; each user posts 1 + Poisson(mean - 1).
  double tweets_per_user = 4.0;
  double retweet_rate = 0.8;
  /// Distinct originals that retweets point at; 0 draws a fresh one each time.
  int retweet_pool = 8;
  int vocab_size = 60;
  /// Traced posts fall into these windows; empty spreads them over span.
  std::vector<Burst> burst_windows;
  Seconds span{Seconds{7 * 86400}};
  Date registration_from{};
  Date registration_to{};
  /// Share of a user's posts around the traced activity that carry the tag.
  double traced_tag_focus = 0.8;
  EntityRates entity_rates;
  double reply_rate = 0.05;
  /// -1 pushes reply sentiment negative, +1 positive.
  double sentiment_bias = 0.0;
  double missing_profile_rate = 0.02;
  std::int64_t followers_min = 0, followers_max = 100;
  std::int64_t following_min = 500, following_max = 3000;
  std::int64_t statuses_min = 500, statuses_max = 20000;
  std::int64_t favorites_min = 0, favorites_max = 5000;
  /// Labels reported alongside the generated corpus; organization follows kind.
  std::optional<Politicality> politicality;
  std::optional<Camp> camp;

  static BehaviorProfile organized();
  static BehaviorProfile organic();

  LabelTriple label() const;
  /// Throws InvalidArgument for out-of-range parameters.
  void validate() const;
};

struct SyntheticCollection {
  std::string traced_hashtag;
  LabelTriple label;
  std::vector<Tweet> tweets;
  std::vector<UserProfile> profiles;
};

/// Deterministic for (profile, traced_hashtag, seed). Ids are prefixed with
/// the hashtag so collections generated separately never share users.
SyntheticCollection generate_collection(const BehaviorProfile& profile,
                                        const std::string& traced_hashtag, std::uint64_t seed);

/// A labelled mix of organized and organic collections with per-collection
/// jitter on the profile parameters. Hashtags are synth0000, synth0001, ...
std::vector<SyntheticCollection> generate_dataset(std::size_t organized, std::size_t organic,
                                                  std::uint64_t seed);

/// Writes tweets.jsonl, users.jsonl and labels.csv into dir (created when
/// missing). Output bytes depend only on the collections.
void write_corpus(const std::filesystem::path& dir,
                  std::span<const SyntheticCollection> collections);

}  // namespace collusion
