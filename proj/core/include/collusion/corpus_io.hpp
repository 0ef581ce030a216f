#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "collusion/tweet.hpp"

namespace collusion {

/// One JSONL line (no trailing newline). Hashtags are written as stored.
std::string tweet_to_json_line(const Tweet& t);
std::string profile_to_json_line(const UserProfile& p);

/// Parses one line. Hashtags are lowercased and stripped of a leading '#'.
/// Throws InputError on malformed records.
Tweet tweet_from_json_line(std::string_view line);
UserProfile profile_from_json_line(std::string_view line);

}  // namespace collusion
