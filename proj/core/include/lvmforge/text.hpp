#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Locale-independent number and string helpers shared by the parsers and
// the exporters.
namespace lvmforge::text {

std::string_view trim(std::string_view s) noexcept;
std::vector<std::string_view> split(std::string_view s, char sep);

std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b) noexcept;

/// Parses a finite real written with `decimal_separator` as the radix
/// character. Accepts fixed and scientific forms and an optional sign.
/// The other radix character is rejected, so "1.5" fails under ','.
std::optional<double> parse_real(std::string_view s, char decimal_separator = '.');

std::optional<std::int64_t> parse_integer(std::string_view s);

/// printf("%.6f") with the radix replaced.
std::string format_fixed6(double v, char decimal_separator = '.');

/// Six decimals when that text reads back as exactly `v`; otherwise the
/// shortest fixed-notation text that does. Keeps 6-decimal data looking like
/// instrument output while staying lossless for everything else.
std::string format_real(double v, char decimal_separator = '.');

/// Scientific notation with 16 fractional digits and an unpadded exponent,
/// e.g. "0,0000000000000000E+0". Always lossless for finite doubles.
std::string format_scientific16(double v, char decimal_separator = '.');

}  // namespace lvmforge::text
