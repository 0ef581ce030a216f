#include "collusion/time.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "collusion/error.hpp"

namespace collusion {
namespace {

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, out);
  return ec == std::errc{} && ptr == s.data() + pos + len;
}

[[noreturn]] void bad(std::string_view text) {
  throw InputError("invalid timestamp: '" + std::string(text) + "'");
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  int y = 0, mo = 0, d = 0;
  if (!read_int(text, 0, 4, y) || text.size() < 10 || text[4] != '-' || text[7] != '-' ||
      !read_int(text, 5, 2, mo) || !read_int(text, 8, 2, d)) {
    bad(text);
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                        std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) bad(text);
  Timestamp ts{std::chrono::sys_days{ymd}};
  if (text.size() == 10) return ts;

  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') bad(text);
  int hh = 0, mm = 0, ss = 0;
  if (text.size() < 19 || !read_int(text, 11, 2, hh) || text[13] != ':' ||
      !read_int(text, 14, 2, mm) || text[16] != ':' || !read_int(text, 17, 2, ss)) {
    bad(text);
  }
  if (hh > 23 || mm > 59 || ss > 60) bad(text);
  ts += std::chrono::hours{hh} + std::chrono::minutes{mm} + Seconds{ss};

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad(text);
  }
  if (pos == text.size()) return ts;
  if ((text[pos] == 'Z' || text[pos] == 'z') && pos + 1 == text.size()) return ts;
  if (text[pos] == '+' || text[pos] == '-') {
    const int sign = text[pos] == '+' ? 1 : -1;
    int oh = 0, om = 0;
    if (!read_int(text, pos + 1, 2, oh)) bad(text);
    std::size_t next = pos + 3;
    if (next < text.size() && text[next] == ':') ++next;
    if (!read_int(text, next, 2, om) || next + 2 != text.size()) bad(text);
    return ts - sign * (std::chrono::hours{oh} + std::chrono::minutes{om});
  }
  bad(text);
}

Date parse_date(std::string_view text) { return day_of(parse_timestamp(text)); }

std::string format_timestamp(Timestamp ts) {
  const Date day = day_of(ts);
  const std::chrono::year_month_day ymd{day};
  const std::chrono::hh_mm_ss hms{ts - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()), int(hms.hours().count()),
                int(hms.minutes().count()), int(hms.seconds().count()));
  return buf;
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                unsigned(ymd.day()));
  return buf;
}

}  // namespace collusion
