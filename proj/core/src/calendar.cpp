#include "lvmforge/calendar.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "lvmforge/text.hpp"

namespace lvmforge {

namespace {

bool is_leap(int y) noexcept { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) noexcept {
  static constexpr std::array<int, 12> kDays{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[static_cast<std::size_t>(m - 1)];
}

bool all_digits(std::string_view s) noexcept {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<int> small_int(std::string_view s, std::size_t min_len, std::size_t max_len) {
  if (s.size() < min_len || s.size() > max_len || !all_digits(s)) return std::nullopt;
  int v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

// Howard Hinnant's days_from_civil / civil_from_days.
long long days_from_civil(long long y, unsigned m, unsigned d) noexcept {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

void civil_from_days(long long z, long long& y, unsigned& m, unsigned& d) noexcept {
  z += 719468;
  const long long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<long long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y += m <= 2;
}

}  // namespace

bool is_valid(const CalendarDate& d) noexcept {
  return d.year >= 1 && d.year <= 9999 && d.month >= 1 && d.month <= 12 && d.day >= 1 &&
         d.day <= days_in_month(d.year, d.month);
}

std::optional<CalendarDate> parse_date(std::string_view s) {
  s = text::trim(s);
  const auto parts = text::split(s, '/');
  if (parts.size() != 3) return std::nullopt;
  const auto y = small_int(parts[0], 4, 4);
  const auto m = small_int(parts[1], 1, 2);
  const auto d = small_int(parts[2], 1, 2);
  if (!y || !m || !d) return std::nullopt;
  CalendarDate out{*y, *m, *d};
  if (!is_valid(out)) return std::nullopt;
  return out;
}

std::string format_date(const CalendarDate& d) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%04d/%02d/%02d", d.year, d.month, d.day);
  return {buf.data(), static_cast<std::size_t>(n)};
}

double HighPrecisionTime::approx_fraction() const {
  if (fraction_digits.empty()) return 0.0;
  const std::string s = "0." + fraction_digits;
  return std::strtod(s.c_str(), nullptr);
}

bool is_valid(const HighPrecisionTime& t) noexcept {
  if (t.hours < 0 || t.hours > 23 || t.minutes < 0 || t.minutes > 59 || t.seconds < 0 || t.seconds > 60)
    return false;
  for (char c : t.fraction_digits)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<HighPrecisionTime> parse_time(std::string_view s) {
  s = text::trim(s);
  std::string_view frac;
  bool has_frac = false;
  if (const auto pos = s.find_first_of(".,"); pos != std::string_view::npos) {
    frac = s.substr(pos + 1);
    s = s.substr(0, pos);
    has_frac = true;
  }
  const auto parts = text::split(s, ':');
  if (parts.size() != 3) return std::nullopt;
  const auto h = small_int(parts[0], 1, 2);
  const auto m = small_int(parts[1], 1, 2);
  const auto sec = small_int(parts[2], 1, 2);
  if (!h || !m || !sec) return std::nullopt;
  if (has_frac && !all_digits(frac)) return std::nullopt;
  HighPrecisionTime out{*h, *m, *sec, std::string(frac)};
  if (!is_valid(out)) return std::nullopt;
  return out;
}

std::string format_time(const HighPrecisionTime& t, char decimal_separator) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%02d:%02d:%02d", t.hours, t.minutes, t.seconds);
  std::string out(buf.data(), static_cast<std::size_t>(n));
  if (!t.fraction_digits.empty()) {
    out += decimal_separator;
    out += t.fraction_digits;
  }
  return out;
}

Timestamp now_utc() {
  return std::chrono::time_point_cast<std::chrono::microseconds>(std::chrono::system_clock::now());
}

std::string format_iso8601(Timestamp ts) {
  using namespace std::chrono;
  const long long us = ts.time_since_epoch().count();
  long long days = us / 86'400'000'000LL;
  long long rem = us % 86'400'000'000LL;
  if (rem < 0) {
    rem += 86'400'000'000LL;
    --days;
  }
  long long y = 0;
  unsigned m = 0, d = 0;
  civil_from_days(days, y, m, d);
  const long long secs = rem / 1'000'000;
  const long long micros = rem % 1'000'000;
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%06lldZ", y, m, d,
                              secs / 3600, (secs / 60) % 60, secs % 60, micros);
  return {buf.data(), static_cast<std::size_t>(n)};
}

std::optional<Timestamp> parse_iso8601(std::string_view s) {
  // YYYY-MM-DDTHH:MM:SS[.ffffff]Z
  if (s.size() < 20 || s.back() != 'Z' || s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' ||
      s[16] != ':')
    return std::nullopt;
  const auto y = small_int(s.substr(0, 4), 4, 4);
  const auto mo = small_int(s.substr(5, 2), 2, 2);
  const auto d = small_int(s.substr(8, 2), 2, 2);
  const auto h = small_int(s.substr(11, 2), 2, 2);
  const auto mi = small_int(s.substr(14, 2), 2, 2);
  const auto se = small_int(s.substr(17, 2), 2, 2);
  if (!y || !mo || !d || !h || !mi || !se) return std::nullopt;
  if (!is_valid(CalendarDate{*y, *mo, *d}) || *h > 23 || *mi > 59 || *se > 60) return std::nullopt;
  long long micros = 0;
  std::string_view rest = s.substr(19, s.size() - 20);
  if (!rest.empty()) {
    if (rest.front() != '.' || rest.size() < 2 || rest.size() > 7 || !all_digits(rest.substr(1)))
      return std::nullopt;
    std::string digits(rest.substr(1));
    digits.resize(6, '0');
    micros = std::stoll(digits);
  }
  const long long days = days_from_civil(*y, static_cast<unsigned>(*mo), static_cast<unsigned>(*d));
  const long long us = ((days * 86400LL + *h * 3600LL + *mi * 60LL + *se) * 1'000'000LL) + micros;
  return Timestamp{std::chrono::microseconds{us}};
}

}  // namespace lvmforge
