#include "lvmforge/text.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace lvmforge::text {

std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  });
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto lower = [](unsigned char c) { return c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c; };
    if (lower(static_cast<unsigned char>(a[i])) != lower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

std::optional<double> parse_real(std::string_view s, char decimal_separator) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;

  const char other = decimal_separator == ',' ? '.' : ',';
  std::string buf(s);
  for (char& c : buf) {
    if (c == other) return std::nullopt;
    if (c == decimal_separator) c = '.';
    // from_chars would accept "inf"/"nan"; the format only carries digits.
    const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
    if (!ok) return std::nullopt;
  }

  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{} || ptr != buf.data() + buf.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

namespace {

void replace_radix(std::string& s, char decimal_separator) {
  if (decimal_separator == '.') return;
  std::replace(s.begin(), s.end(), '.', decimal_separator);
}

}  // namespace

std::string format_fixed6(double v, char decimal_separator) {
  std::array<char, 400> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.6f", v);
  std::string out(buf.data(), static_cast<std::size_t>(n));
  replace_radix(out, decimal_separator);
  return out;
}

std::string format_real(double v, char decimal_separator) {
  std::string six = format_fixed6(v, '.');
  if (auto back = parse_real(six, '.'); back && *back == v) {
    replace_radix(six, decimal_separator);
    return six;
  }
  std::array<char, 400> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  std::string out(buf.data(), res.ptr);
  replace_radix(out, decimal_separator);
  return out;
}

std::string format_scientific16(double v, char decimal_separator) {
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.16E", v);
  std::string raw(buf.data(), static_cast<std::size_t>(n));
  const auto e = raw.find('E');
  std::string mantissa = raw.substr(0, e);
  const char sign = raw[e + 1];
  std::string_view digits = std::string_view(raw).substr(e + 2);
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  replace_radix(mantissa, decimal_separator);
  return mantissa + 'E' + sign + std::string(digits);
}

}  // namespace lvmforge::text
