#include "collusion/corpus_io.hpp"

#include <json.hpp>

#include "collusion/error.hpp"

namespace collusion {
namespace {

using nlohmann::json;

std::string id_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  if (it->is_string()) {
    auto s = it->get<std::string>();
    if (s.empty()) throw InputError(std::string("empty field '") + key + "'");
    return s;
  }
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw InputError(std::string("field '") + key + "' must be a string or integer id");
}

std::optional<std::string> nullable_id(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return id_field(obj, key);
}

std::int64_t counter(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return 0;
  if (!it->is_number_integer()) throw InputError(std::string("field '") + key + "' not an integer");
  const auto v = it->get<std::int64_t>();
  if (v < 0) throw InputError(std::string("field '") + key + "' is negative");
  return v;
}

std::string normalize_hashtag(std::string tag) {
  if (!tag.empty() && tag.front() == '#') tag.erase(0, 1);
  for (char& c : tag) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return tag;
}

std::vector<std::string> string_list(const json& obj, const char* key) {
  std::vector<std::string> out;
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  for (const auto& v : *it) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw InputError(std::string("field '") + key + "' holds a non-string");
    }
  }
  return out;
}

json parse_object(std::string_view line) {
  json obj = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) throw InputError("not a JSON object");
  return obj;
}

}  // namespace

std::string tweet_to_json_line(const Tweet& t) {
  json obj;
  obj["id"] = t.id;
  obj["author_id"] = t.author_id;
  obj["created_at"] = format_timestamp(t.created_at);
  obj["text"] = t.text;
  obj["hashtags"] = t.hashtags;
  obj["mentions"] = t.mentions;
  obj["url_count"] = t.url_count;
  obj["media_count"] = t.media_count;
  obj["retweeted_status_id"] = t.retweeted_status_id ? json(*t.retweeted_status_id) : json(nullptr);
  obj["replied_user_id"] = t.replied_user_id ? json(*t.replied_user_id) : json(nullptr);
  return obj.dump();
}

std::string profile_to_json_line(const UserProfile& p) {
  json obj;
  obj["id"] = p.id;
  obj["registered_at"] = format_date(p.registered_at);
  obj["follower_count"] = p.follower_count;
  obj["following_count"] = p.following_count;
  obj["status_count"] = p.status_count;
  obj["favorite_count"] = p.favorite_count;
  return obj.dump();
}

Tweet tweet_from_json_line(std::string_view line) {
  const json obj = parse_object(line);
  Tweet t;
  t.id = id_field(obj, "id");
  t.author_id = id_field(obj, "author_id");
  const auto created = obj.find("created_at");
  if (created == obj.end() || !created->is_string()) throw InputError("missing 'created_at'");
  t.created_at = parse_timestamp(created->get<std::string>());
  if (const auto it = obj.find("text"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("field 'text' must be a string");
    t.text = it->get<std::string>();
  }
  for (auto& h : string_list(obj, "hashtags")) {
    auto tag = normalize_hashtag(std::move(h));
    if (!tag.empty()) t.hashtags.push_back(std::move(tag));
  }
  t.mentions = string_list(obj, "mentions");
  t.url_count = static_cast<int>(counter(obj, "url_count"));
  t.media_count = static_cast<int>(counter(obj, "media_count"));
  t.retweeted_status_id = nullable_id(obj, "retweeted_status_id");
  t.replied_user_id = nullable_id(obj, "replied_user_id");
  return t;
}

UserProfile profile_from_json_line(std::string_view line) {
  const json obj = parse_object(line);
  UserProfile p;
  p.id = id_field(obj, "id");
  const auto reg = obj.find("registered_at");
  if (reg == obj.end() || !reg->is_string()) throw InputError("missing 'registered_at'");
  p.registered_at = parse_date(reg->get<std::string>());
  p.follower_count = counter(obj, "follower_count");
  p.following_count = counter(obj, "following_count");
  p.status_count = counter(obj, "status_count");
  p.favorite_count = counter(obj, "favorite_count");
  return p;
}

}  // namespace collusion
