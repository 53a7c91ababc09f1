#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace lvmforge {

/// Gregorian calendar date as written in .lvm headers (YYYY/MM/DD).
struct CalendarDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  friend bool operator==(const CalendarDate&, const CalendarDate&) = default;
  friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;
};

bool is_valid(const CalendarDate& d) noexcept;
std::optional<CalendarDate> parse_date(std::string_view s);
std::string format_date(const CalendarDate& d);

/// Time of day whose fractional seconds are kept as the literal digit string.
/// LabVIEW writes up to 19 fractional digits, more than a double can carry,
/// so equality is defined on the digits and approx_fraction() is for display.
struct HighPrecisionTime {
  int hours = 0;
  int minutes = 0;
  int seconds = 0;
  std::string fraction_digits;

  double approx_fraction() const;

  friend bool operator==(const HighPrecisionTime&, const HighPrecisionTime&) = default;
};

bool is_valid(const HighPrecisionTime& t) noexcept;

/// Accepts HH:MM:SS with an optional fraction introduced by '.' or ','.
std::optional<HighPrecisionTime> parse_time(std::string_view s);
std::string format_time(const HighPrecisionTime& t, char decimal_separator = '.');

using Timestamp = std::chrono::time_point<std::chrono::system_clock, std::chrono::microseconds>;

Timestamp now_utc();
/// "2013-02-06T17:49:40.839903Z"
std::string format_iso8601(Timestamp ts);
std::optional<Timestamp> parse_iso8601(std::string_view s);

}  // namespace lvmforge
