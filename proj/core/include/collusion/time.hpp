#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace collusion {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;
using Seconds = std::chrono::seconds;

/// Parses "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)" or the
/// same with a space separator. Offsets are folded into UTC. Throws
/// InputError on anything else.
Timestamp parse_timestamp(std::string_view text);

/// Date part of parse_timestamp (time of day, if present, is truncated).
Date parse_date(std::string_view text);

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_timestamp(Timestamp ts);

/// "YYYY-MM-DD"
std::string format_date(Date d);

inline Date day_of(Timestamp ts) { return std::chrono::floor<std::chrono::days>(ts); }

inline int year_of(Date d) {
  return static_cast<int>(std::chrono::year_month_day{d}.year());
}

}  // namespace collusion
