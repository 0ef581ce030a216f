#include "collusion/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include "collusion/corpus_io.hpp"
#include "collusion/error.hpp"
#include "collusion/text.hpp"

namespace collusion {

namespace fs = std::filesystem;

std::string to_string(Organization v) {
  return v == Organization::Organized ? "organized" : "organic";
}
std::string to_string(Politicality v) {
  return v == Politicality::Political ? "political" : "non_political";
}
std::string to_string(Camp v) {
  switch (v) {
    case Camp::ProTrump: return "pro_trump";
    case Camp::ProHillary: return "pro_hillary";
    case Camp::None: return "none";
  }
  return "none";
}
std::optional<Organization> parse_organization(std::string_view s) {
  if (s == "organized") return Organization::Organized;
  if (s == "organic") return Organization::Organic;
  return std::nullopt;
}
std::optional<Politicality> parse_politicality(std::string_view s) {
  if (s == "political") return Politicality::Political;
  if (s == "non_political") return Politicality::NonPolitical;
  return std::nullopt;
}
std::optional<Camp> parse_camp(std::string_view s) {
  if (s == "pro_trump") return Camp::ProTrump;
  if (s == "pro_hillary") return Camp::ProHillary;
  if (s == "none") return Camp::None;
  return std::nullopt;
}

TweetStore::TweetStore(std::vector<Tweet> tweets, std::vector<UserProfile> profiles) {
  std::sort(tweets.begin(), tweets.end(), tweet_before);
  std::unordered_set<std::string> seen;
  tweets_.reserve(tweets.size());
  for (auto& t : tweets) {
    if (!seen.insert(t.id).second) {
      ++report_.duplicate_tweets;
      continue;
    }
    tweets_.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < tweets_.size(); ++i) {
    const Tweet& t = tweets_[i];
    by_author_[t.author_id].push_back(i);
    std::vector<std::string_view> tags(t.hashtags.begin(), t.hashtags.end());
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    for (auto tag : tags) by_hashtag_[std::string(tag)].push_back(i);
    max_timestamp_ = std::max(max_timestamp_, t.created_at);
  }
  for (auto& p : profiles) {
    auto id = p.id;
    profiles_.insert_or_assign(std::move(id), std::move(p));
  }
  report_.tweets_loaded = tweets_.size();
  report_.profiles_loaded = profiles_.size();
}

namespace {

std::vector<const Tweet*> resolve(const std::vector<Tweet>& tweets,
                                  const std::vector<std::size_t>& idx) {
  std::vector<const Tweet*> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(&tweets[i]);
  return out;
}

}  // namespace

std::vector<const Tweet*> TweetStore::by_hashtag(std::string_view hashtag) const {
  const auto it = by_hashtag_.find(std::string(hashtag));
  if (it == by_hashtag_.end()) return {};
  return resolve(tweets_, it->second);
}

std::vector<const Tweet*> TweetStore::by_author(std::string_view author_id) const {
  const auto it = by_author_.find(std::string(author_id));
  if (it == by_author_.end()) return {};
  return resolve(tweets_, it->second);
}

std::vector<const Tweet*> TweetStore::by_author_between(std::string_view author_id,
                                                        Timestamp from, Timestamp to) const {
  const auto it = by_author_.find(std::string(author_id));
  if (it == by_author_.end() || from > to) return {};
  const auto& idx = it->second;
  auto lo = std::lower_bound(idx.begin(), idx.end(), from,
                             [&](std::size_t i, Timestamp ts) { return tweets_[i].created_at < ts; });
  auto hi = std::upper_bound(lo, idx.end(), to,
                             [&](Timestamp ts, std::size_t i) { return ts < tweets_[i].created_at; });
  std::vector<const Tweet*> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (auto p = lo; p != hi; ++p) out.push_back(&tweets_[*p]);
  return out;
}

const UserProfile* TweetStore::profile(std::string_view user_id) const {
  const auto it = profiles_.find(user_id);
  return it == profiles_.end() ? nullptr : &it->second;
}

namespace {

bool is_profile_file(const fs::path& p) {
  const auto name = p.filename().string();
  return name.rfind("users", 0) == 0 || name.rfind("profiles", 0) == 0;
}

template <typename Record, typename Parse>
void read_jsonl(const fs::path& path, Parse parse, std::vector<Record>& out,
                std::size_t& skipped) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const std::exception&) {
      ++skipped;
    }
  }
}

TweetStore load_impl(const std::vector<fs::path>& tweet_files,
                     const std::vector<fs::path>& profile_files) {
  LoadReport report;
  std::vector<Tweet> tweets;
  std::vector<UserProfile> profiles;
  for (const auto& f : tweet_files) {
    read_jsonl(f, tweet_from_json_line, tweets, report.tweets_skipped);
    report.files.push_back(f.string());
  }
  for (const auto& f : profile_files) {
    read_jsonl(f, profile_from_json_line, profiles, report.profiles_skipped);
    report.files.push_back(f.string());
  }
  if (tweets.empty()) throw InputError("corpus contains no valid tweet records");
  TweetStore store(std::move(tweets), std::move(profiles));
  LoadReport merged = store.report();
  merged.tweets_skipped = report.tweets_skipped;
  merged.profiles_skipped = report.profiles_skipped;
  merged.files = std::move(report.files);
  store.set_report(std::move(merged));
  return store;
}

}  // namespace

TweetStore load_corpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> tweet_files, profile_files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") continue;
      (is_profile_file(entry.path()) ? profile_files : tweet_files).push_back(entry.path());
    }
    std::sort(tweet_files.begin(), tweet_files.end());
    std::sort(profile_files.begin(), profile_files.end());
    if (tweet_files.empty()) throw InputError("no tweet JSONL files in " + path.string());
    return load_impl(tweet_files, profile_files);
  }
  if (!fs::is_regular_file(path, ec)) throw InputError("cannot read " + path.string());
  std::vector<fs::path> profile_files;
  const auto sibling = path.parent_path() / "users.jsonl";
  if (fs::is_regular_file(sibling, ec) && fs::absolute(sibling) != fs::absolute(path)) {
    profile_files.push_back(sibling);
  }
  return load_impl({path}, profile_files);
}

TweetStore load_corpus(const fs::path& path, const fs::path& profiles_path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw InputError("cannot read " + path.string());
  if (!fs::is_regular_file(profiles_path, ec)) {
    throw InputError("cannot read " + profiles_path.string());
  }
  return load_impl({path}, {profiles_path});
}

Collection build_collection(const TweetStore& store, std::string_view traced_hashtag,
                            int window_days) {
  if (traced_hashtag.empty()) throw InvalidArgument("traced hashtag must be non-empty");
  if (window_days <= 0) throw InvalidArgument("expansion window must be positive");
  std::string tag(traced_hashtag);
  if (tag.front() == '#') tag.erase(0, 1);
  for (char& ch : tag) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }

  const auto seeds = store.by_hashtag(tag);
  if (seeds.empty()) throw InputError("hashtag '" + tag + "' matches no tweets");

  Collection c;
  c.traced_hashtag = tag;
  c.expansion_window_days = window_days;

  std::map<std::string, std::vector<Timestamp>> seed_times;
  for (const Tweet* t : seeds) {
    c.seed_tweets.push_back(*t);
    seed_times[t->author_id].push_back(t->created_at);
  }

  const Seconds window = std::chrono::days{window_days};
  std::vector<const Tweet*> expanded;
  for (auto& [author, times] : seed_times) {
    std::sort(times.begin(), times.end());
    for (const Tweet* t : store.by_author_between(author, times.front() - window,
                                                  times.back() + window)) {
      // Nearest seed time decides membership.
      auto it = std::lower_bound(times.begin(), times.end(), t->created_at);
      bool inside = it != times.end() && *it - t->created_at <= window;
      if (!inside && it != times.begin()) inside = t->created_at - *std::prev(it) <= window;
      if (inside) expanded.push_back(t);
    }
    const UserProfile* p = store.profile(author);
    c.users.emplace(author, p ? std::optional<UserProfile>(*p) : std::nullopt);
  }
  std::sort(expanded.begin(), expanded.end(),
            [](const Tweet* a, const Tweet* b) { return tweet_before(*a, *b); });
  c.expanded_tweets.reserve(expanded.size());
  for (const Tweet* t : expanded) c.expanded_tweets.push_back(*t);
  return c;
}

std::vector<TemporalSlice> partition_intervals(const Collection& c, Seconds interval) {
  if (interval <= Seconds::zero()) throw InvalidArgument("interval must be positive");
  std::vector<TemporalSlice> slices;
  if (c.seed_tweets.empty()) return slices;
  Timestamp first = c.seed_tweets.front().created_at;
  for (const auto& t : c.seed_tweets) first = std::min(first, t.created_at);
  const Timestamp anchor = std::chrono::floor<std::chrono::hours>(first);

  std::map<long long, std::vector<Tweet>> grouped;
  for (const auto& t : c.expanded_tweets) {
    if (!t.has_hashtag(c.traced_hashtag)) continue;
    const auto offset = (t.created_at - anchor).count();
    long long index = offset / interval.count();
    if (offset < 0 && offset % interval.count() != 0) --index;
    grouped[index].push_back(t);
  }
  slices.reserve(grouped.size());
  for (auto& [index, tweets] : grouped) {
    TemporalSlice s;
    s.interval_start = anchor + index * interval;
    s.interval_length = interval;
    s.tweets = std::move(tweets);
    slices.push_back(std::move(s));
  }
  return slices;
}

InspectionStats inspection_stats(std::span<const Tweet> tweets) {
  if (tweets.empty()) throw InvalidArgument("inspection_stats needs at least one tweet");
  InspectionStats s;
  s.tweet_count = tweets.size();
  std::unordered_set<std::string> distinct;
  std::unordered_set<std::string_view> authors;
  std::size_t total_tokens = 0, retweets = 0;
  double hashtag_sum = 0;
  for (const auto& t : tweets) {
    for (auto& token : tokenize(t.text)) {
      ++total_tokens;
      distinct.insert(std::move(token));
    }
    authors.insert(t.author_id);
    if (t.is_retweet()) ++retweets;
    hashtag_sum += t.hashtag_count();
  }
  const double n = static_cast<double>(tweets.size());
  s.distinct_word_pct =
      total_tokens == 0 ? 0.0 : 100.0 * static_cast<double>(distinct.size()) / double(total_tokens);
  s.tweets_per_user_mean = n / static_cast<double>(authors.size());
  s.retweet_pct = 100.0 * static_cast<double>(retweets) / n;
  const double mean = hashtag_sum / n;
  // Summed per distinct count so the result does not depend on input order.
  std::map<int, std::size_t> count_histogram;
  for (const auto& t : tweets) ++count_histogram[t.hashtag_count()];
  double ss = 0;
  for (const auto& [count, times] : count_histogram) {
    const double d = count - mean;
    ss += static_cast<double>(times) * d * d;
  }
  s.hashtags_per_tweet_var = ss / n;
  s.hashtags_per_tweet_std = std::sqrt(s.hashtags_per_tweet_var);
  return s;
}

OverlapReport user_overlap(const Collection& a, const Collection& b, Date cutoff) {
  OverlapReport r;
  for (const auto& [id, profile] : a.users) {
    const auto other = b.users.find(id);
    if (other == b.users.end()) continue;
    ++r.count;
    const auto& p = profile ? profile : other->second;
    if (!p) {
      ++r.without_profile;
      continue;
    }
    ++r.registration_years[year_of(p->registered_at)];
    if (p->registered_at > cutoff) ++r.registered_after_cutoff;
  }
  r.pct_of_a = a.users.empty() ? 0.0
                               : 100.0 * static_cast<double>(r.count) /
                                     static_cast<double>(a.users.size());
  return r;
}

}  // namespace collusion
