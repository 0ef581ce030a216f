#include "collusion/oracle.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "collusion/collection.hpp"
#include "collusion/error.hpp"
#include "collusion/schema.hpp"
#include "collusion/text.hpp"
#include "collusion/time.hpp"
#include "collusion/tweet.hpp"

namespace collusion {
namespace {

bool carries(const Tweet& t, const std::string& tag) {
  for (const auto& h : t.hashtags) {
    if (h == tag) return true;
  }
  return false;
}

bool in_list(const std::vector<std::string>& list, const std::string& s) {
  for (const auto& x : list) {
    if (x == s) return true;
  }
  return false;
}

double divide_or_zero(double a, double b) {
  if (b == 0) return 0;
  return a / b;
}

bool inside(const Bucket& b, double v) {
  bool ok_low = false;
  if (b.lower_closed) {
    ok_low = v >= b.lower;
  } else {
    ok_low = v > b.lower;
  }
  bool ok_high = false;
  if (b.upper_closed) {
    ok_high = v <= b.upper;
  } else {
    ok_high = v < b.upper;
  }
  return ok_low && ok_high;
}

void put_stats(std::map<std::string, double>& out, const std::string& prefix,
               const std::vector<double>& v) {
  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / double(v.size());
  double sq = 0;
  for (double x : v) sq += (x - mean) * (x - mean);
  const double var = sq / double(v.size());
  double lo = v[0], hi = v[0];
  for (double x : v) {
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  out[prefix + "_mean"] = mean;
  out[prefix + "_var"] = var;
  out[prefix + "_std"] = std::sqrt(var);
  out[prefix + "_min"] = lo;
  out[prefix + "_max"] = hi;
}

struct User {
  std::string id;
  UserProfile profile;
  std::map<std::string, double> value;
};

}  // namespace

FeatureRow oracle_extract(const Collection& c, Date today, const FeatureSchema& schema,
                          const SentimentScorer& scorer, Seconds interval,
                          Date registration_cutoff) {
  const std::string& tag = c.traced_hashtag;
  std::map<std::string, double> out;

  // Days on which anybody posted the traced hashtag.
  std::vector<long long> tag_days;
  for (const auto& t : c.expanded_tweets) {
    if (!carries(t, tag)) continue;
    const long long day = std::chrono::floor<std::chrono::days>(t.created_at).time_since_epoch().count();
    bool known = false;
    for (auto d : tag_days) known = known || d == day;
    if (!known) tag_days.push_back(day);
  }

  std::vector<User> users;
  int missing = 0;
  for (const auto& [id, profile] : c.users) {
    if (!profile) {
      ++missing;
      continue;
    }
    User u{id, *profile, {}};
    double posts = 0, hashtags = 0, urls = 0, mentions = 0, media = 0, traced = 0;
    for (const auto& t : c.expanded_tweets) {
      if (t.author_id != id) continue;
      posts += 1;
      hashtags += double(t.hashtags.size());
      urls += t.url_count;
      mentions += double(t.mentions.size());
      media += t.media_count;
      if (carries(t, tag)) traced += 1;
    }
    long long age = (today - profile->registered_at).count();
    if (age < 1) age = 1;
    const double per_day = double(profile->status_count) / double(age);
    const double daily_traced = divide_or_zero(traced, double(tag_days.size()));
    double fd = 0;
    if (profile->follower_count + profile->following_count > 0) {
      fd = double(profile->follower_count) /
           double(profile->follower_count + profile->following_count);
    }
    u.value["tweet_count"] = double(profile->status_count);
    u.value["favorite_count"] = double(profile->favorite_count);
    u.value["avg_tweets_per_day"] = per_day;
    u.value["follower_degree"] = fd;
    u.value["hashtag_use"] = divide_or_zero(hashtags, posts);
    u.value["url_use"] = divide_or_zero(urls, posts);
    u.value["mention_use"] = divide_or_zero(mentions, posts);
    u.value["media_use"] = divide_or_zero(media, posts);
    u.value["traced_hashtag_use"] = traced;
    u.value["daily_traced_avg"] = daily_traced;
    u.value["daily_comparison"] = divide_or_zero(daily_traced, per_day);
    users.push_back(std::move(u));
  }
  if (users.empty()) throw Error("oracle: no user with a profile");

  for (const auto& scheme : schema.user_schemes()) {
    std::vector<double> values;
    for (const auto& u : users) values.push_back(u.value.at(scheme.feature));
    for (const auto& b : scheme.buckets) {
      double hits = 0;
      for (double v : values) {
        if (inside(b, v)) hits += 1;
      }
      out[bucket_column(scheme.feature, b.label)] = 100.0 * hits / double(values.size());
    }
    put_stats(out, scheme.feature, values);
  }

  // Slices: hour grid anchored at the earliest seed post.
  Timestamp first = c.seed_tweets.at(0).created_at;
  for (const auto& t : c.seed_tweets) {
    if (t.created_at < first) first = t.created_at;
  }
  const long long anchor =
      Seconds{std::chrono::floor<std::chrono::hours>(first).time_since_epoch()}.count();
  const long long width = interval.count();
  std::vector<long long> slice_ids;
  std::vector<std::vector<const Tweet*>> slices;
  for (const auto& t : c.expanded_tweets) {
    if (!carries(t, tag)) continue;
    const long long offset = t.created_at.time_since_epoch().count() - anchor;
    const auto id = static_cast<long long>(std::floor(double(offset) / double(width)));
    std::size_t k = 0;
    while (k < slice_ids.size() && slice_ids[k] != id) ++k;
    if (k == slice_ids.size()) {
      slice_ids.push_back(id);
      slices.emplace_back();
    }
    slices[k].push_back(&t);
  }
  if (slices.empty()) throw Error("oracle: no post carries the traced hashtag");

  std::map<std::string, std::vector<double>> per_slice;
  for (const auto& s : slices) {
    const double n = double(s.size());
    double hashtags = 0, urls = 0, mentions = 0, media = 0, rts = 0;
    double rt_mentions = 0;
    std::vector<std::string> authors, retweeters, sources, mentioned, mentioned_rt, mentioned_org;
    double replies[5] = {0, 0, 0, 0, 0};
    for (const Tweet* t : s) {
      hashtags += double(t->hashtags.size());
      urls += t->url_count;
      mentions += double(t->mentions.size());
      media += t->media_count;
      if (!in_list(authors, t->author_id)) authors.push_back(t->author_id);
      if (t->retweeted_status_id) {
        rts += 1;
        rt_mentions += double(t->mentions.size());
        if (!in_list(retweeters, t->author_id)) retweeters.push_back(t->author_id);
        if (!in_list(sources, *t->retweeted_status_id)) sources.push_back(*t->retweeted_status_id);
      }
      for (const auto& m : t->mentions) {
        if (!in_list(mentioned, m)) mentioned.push_back(m);
        auto& side = t->retweeted_status_id ? mentioned_rt : mentioned_org;
        if (!in_list(side, m)) side.push_back(m);
      }
      if (t->replied_user_id) {
        switch (scorer.score(t->text)) {
          case Sentiment::VeryNegative: replies[0] += 1; break;
          case Sentiment::Negative: replies[1] += 1; break;
          case Sentiment::Neutral: replies[2] += 1; break;
          case Sentiment::Positive: replies[3] += 1; break;
          case Sentiment::VeryPositive: replies[4] += 1; break;
        }
      }
    }
    const double people = double(authors.size());
    const double rt_people = double(retweeters.size());
    per_slice["hashtag_use"].push_back(hashtags / n);
    per_slice["url_use"].push_back(urls / n);
    per_slice["mention_use"].push_back(mentions / n);
    per_slice["media_use"].push_back(media / n);
    per_slice["tpu"].push_back(n / people);
    per_slice["retweet_count"].push_back(rts);
    per_slice["retweet_pct"].push_back(rts / n);
    per_slice["original_retweeted_pct"].push_back(divide_or_zero(double(sources.size()), rts));
    per_slice["retweeting_users_count"].push_back(rt_people);
    per_slice["retweeting_users_pct"].push_back(rt_people / people);
    per_slice["unretweeted_pct"].push_back((n - rts) / n);
    per_slice["unretweeted_users_pct"].push_back((people - rt_people) / people);
    per_slice["unretweeted_count"].push_back(n - rts);
    per_slice["unretweeted_users_count"].push_back(people - rt_people);
    per_slice["unretweeted_tweet_user_ratio"].push_back(divide_or_zero(n - rts, people - rt_people));
    per_slice["mention_ratio"].push_back(divide_or_zero(double(mentioned.size()), mentions));
    per_slice["mention_rt_ratio"].push_back(divide_or_zero(double(mentioned_rt.size()), rt_mentions));
    per_slice["mention_nonrt_ratio"].push_back(
        divide_or_zero(double(mentioned_org.size()), mentions - rt_mentions));
    per_slice["sentiment_very_negative_pct"].push_back(replies[0] / n);
    per_slice["sentiment_negative_pct"].push_back(replies[1] / n);
    per_slice["sentiment_neutral_pct"].push_back(replies[2] / n);
    per_slice["sentiment_positive_pct"].push_back(replies[3] / n);
    per_slice["sentiment_very_positive_pct"].push_back(replies[4] / n);
  }
  for (const auto& [feature, values] : per_slice) put_stats(out, "slice_" + feature, values);

  const auto& bins = schema.registration();
  const double complete = double(users.size());
  for (int y = bins.first_year - 1; y <= bins.last_year + 1; ++y) {
    double hits = 0;
    for (const auto& u : users) {
      const int year = int(std::chrono::year_month_day{u.profile.registered_at}.year());
      if (y < bins.first_year) {
        if (year < bins.first_year) hits += 1;
      } else if (y > bins.last_year) {
        if (year > bins.last_year) hits += 1;
      } else if (year == y) {
        hits += 1;
      }
    }
    std::string name;
    if (y < bins.first_year) {
      name = registration_before_column(bins.first_year);
    } else if (y > bins.last_year) {
      name = registration_after_column(bins.last_year);
    } else {
      name = registration_year_column(y);
    }
    out[name] = 100.0 * hits / complete;
  }
  double late = 0;
  for (const auto& u : users) {
    if (u.profile.registered_at > registration_cutoff) late += 1;
  }
  out[std::string(kAfterCutoffColumn)] = 100.0 * late / complete;
  out[std::string(kIncompleteUserColumn)] = 100.0 * missing / double(c.users.size());

  FeatureRow row;
  row.collection_id = tag;
  row.labels = c.label;
  for (const auto& col : schema.columns()) {
    const auto it = out.find(col.name);
    if (it == out.end()) throw Error("oracle: no value for column " + col.name);
    row.values.push_back(it->second);
  }
  if (out.size() != schema.width()) throw Error("oracle: produced columns outside the schema");
  return row;
}

}  // namespace collusion
