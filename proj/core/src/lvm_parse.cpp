#include <string>
#include <string_view>
#include <vector>

#include "lvmforge/error.hpp"
#include "lvmforge/lvm.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::lvm {

char separator_char(Separator s) noexcept { return s == Separator::Tab ? '\t' : ','; }

std::string_view to_string(Separator s) noexcept { return s == Separator::Tab ? "Tab" : "Comma"; }

std::string_view to_string(XColumns x) noexcept {
  switch (x) {
    case XColumns::No: return "No";
    case XColumns::One: return "One";
    case XColumns::Multi: return "Multi";
  }
  return "One";
}

std::string_view to_string(TimePref t) noexcept { return t == TimePref::Absolute ? "Absolute" : "Relative"; }

bool LvmSegment::has_comment_column() const noexcept {
  return !column_names.empty() && column_names.size() == static_cast<std::size_t>(channels) + 2 &&
         column_names.back() == kCommentColumn;
}

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view input) {
  if (input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= input.size()) {
    auto end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view l = input.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({number++, l});
    if (end == input.size()) break;
    start = end + 1;
  }
  // A terminating newline does not introduce an extra line.
  if (!lines.empty() && lines.back().text.empty() && !input.empty() && input.back() == '\n') lines.pop_back();
  return lines;
}

bool is_blank(std::string_view s) { return text::trim(s).empty(); }

// LabVIEW frequently pads lines with a trailing separator.
std::string_view strip_trailing(std::string_view s, char sep) {
  s = text::trim(s);
  while (!s.empty() && (s.back() == sep || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Used before the separator is known.
std::string_view strip_any_separator(std::string_view s) {
  s = text::trim(s);
  while (!s.empty() && (s.back() == '\t' || s.back() == ',' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

bool is_terminator(std::string_view s, char sep) { return strip_trailing(s, sep) == kEndOfHeader; }

std::pair<std::string_view, std::string_view> split_key(std::string_view line, char sep) {
  const auto pos = line.find(sep);
  if (pos == std::string_view::npos) return {text::trim(line), {}};
  return {text::trim(line.substr(0, pos)), line.substr(pos + 1)};
}

std::vector<std::string_view> split_list(std::string_view value, char sep) {
  auto parts = text::split(value, sep);
  while (!parts.empty() && text::trim(parts.back()).empty()) parts.pop_back();
  for (auto& p : parts) p = text::trim(p);
  return parts;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void malformed_number(std::size_t line, std::size_t column, std::string_view field) {
  throw Error(Errc::MalformedNumber,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": '" + std::string(field) + "'");
}

[[noreturn]] void channel_mismatch(std::size_t line, std::size_t expected, std::size_t found) {
  throw Error(Errc::ChannelCountMismatch, "line " + std::to_string(line) + ": expected " + std::to_string(expected) +
                                              ", found " + std::to_string(found));
}

Separator detect_separator(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
  constexpr std::string_view key = "Separator";
  for (std::size_t i = begin; i < end; ++i) {
    const std::string_view l = lines[i].text;
    if (l.size() <= key.size() || l.substr(0, key.size()) != key) continue;
    const char next = l[key.size()];
    if (next != '\t' && next != ',') continue;
    const std::string_view value = strip_trailing(l.substr(key.size() + 1), next);
    if (value == "Tab") return Separator::Tab;
    if (value == "Comma") return Separator::Comma;
    fail(Errc::InvalidHeaderValue, lines[i].number, "Separator must be Tab or Comma, got '" + std::string(value) + "'");
  }
  return Separator::Tab;
}

bool parse_yes_no(std::string_view v, std::size_t line, std::string_view key) {
  if (v == "Yes") return true;
  if (v == "No") return false;
  fail(Errc::InvalidHeaderValue, line, std::string(key) + " must be Yes or No");
}

LvmFileHeader parse_file_header(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
  LvmFileHeader h;
  h.separator = detect_separator(lines, begin, end);
  const char sep = separator_char(h.separator);

  for (std::size_t i = begin; i < end; ++i) {
    const auto& [number, raw] = lines[i];
    if (is_blank(raw)) continue;
    const auto [key, rest] = split_key(raw, sep);
    const std::string_view value = strip_trailing(rest, sep);

    if (key == "Writer_Version" || key == "Reader_Version") {
      const auto v = text::parse_integer(value);
      if (!v) malformed_number(number, 2, value);
      (key == "Writer_Version" ? h.writer_version : h.reader_version) = static_cast<int>(*v);
    } else if (key == "Separator") {
      // handled by detect_separator
    } else if (key == "Decimal_Separator") {
      if (value != "." && value != ",")
        fail(Errc::InvalidHeaderValue, number, "Decimal_Separator must be '.' or ','");
      h.decimal_separator = value.front();
    } else if (key == "Multi_Headings") {
      h.multi_headings = parse_yes_no(value, number, key);
    } else if (key == "X_Columns") {
      if (value == "One")
        h.x_columns = XColumns::One;
      else if (value == "No")
        h.x_columns = XColumns::No;
      else if (value == "Multi")
        h.x_columns = XColumns::Multi;
      else
        fail(Errc::InvalidHeaderValue, number, "X_Columns must be No, One or Multi");
    } else if (key == "Time_Pref") {
      if (value == "Absolute")
        h.time_pref = TimePref::Absolute;
      else if (value == "Relative")
        h.time_pref = TimePref::Relative;
      else
        fail(Errc::InvalidHeaderValue, number, "Time_Pref must be Absolute or Relative");
    } else if (key == "Operator") {
      h.operator_name = std::string(text::trim(rest));
    } else if (key == "Date") {
      const auto d = parse_date(value);
      if (!d) fail(Errc::InvalidHeaderValue, number, "invalid Date '" + std::string(value) + "'");
      h.date = *d;
    } else if (key == "Time") {
      const auto t = parse_time(value);
      if (!t) fail(Errc::InvalidHeaderValue, number, "invalid Time '" + std::string(value) + "'");
      h.time = *t;
    } else {
      h.extra_keys.emplace_back(std::string(key), std::string(rest));
    }
  }

  if (h.separator == Separator::Comma && h.decimal_separator == ',')
    fail(Errc::InvalidHeaderValue, lines[begin].number, "comma separator with comma decimal separator is ambiguous");
  if (h.x_columns != XColumns::One)
    throw Error(Errc::UnsupportedFeature, "X_Columns " + std::string(to_string(h.x_columns)) + " is not supported");
  if (h.multi_headings) throw Error(Errc::UnsupportedFeature, "Multi_Headings Yes is not supported");
  return h;
}

template <typename T, typename Fn>
std::vector<T> parse_list(std::string_view value, char sep, std::size_t line, Fn&& convert) {
  std::vector<T> out;
  const auto parts = split_list(value, sep);
  for (std::size_t c = 0; c < parts.size(); ++c) out.push_back(convert(parts[c], c + 2, line));
  return out;
}

void expect_length(std::size_t actual, int channels, std::size_t line, std::string_view key) {
  if (actual != static_cast<std::size_t>(channels))
    throw Error(Errc::ChannelCountMismatch, "line " + std::to_string(line) + ": " + std::string(key) + " has " +
                                                std::to_string(actual) + " values, expected " +
                                                std::to_string(channels));
}

struct SegmentHeaderLines {
  std::size_t begin;
  std::size_t end;  // index of the terminator line
};

LvmSegment parse_segment_header(const std::vector<Line>& lines, SegmentHeaderLines range, const LvmFileHeader& h) {
  const char sep = separator_char(h.separator);
  const char dec = h.decimal_separator;
  LvmSegment seg;
  std::optional<std::size_t> channels_line;
  struct Seen {
    std::size_t samples = 0, x_dimension = 0, x0 = 0, delta_x = 0, date = 0, time = 0;
  } seen;

  auto real = [dec](std::string_view f, std::size_t column, std::size_t line) {
    const auto v = text::parse_real(f, dec);
    if (!v) malformed_number(line, column, f);
    return *v;
  };

  for (std::size_t i = range.begin; i < range.end; ++i) {
    const auto& [number, raw] = lines[i];
    if (is_blank(raw)) continue;
    const auto [key, rest] = split_key(raw, sep);

    if (key == "Notes") {
      seg.notes = std::string(text::trim(rest));
    } else if (key == "Channels") {
      const auto v = text::parse_integer(strip_trailing(rest, sep));
      if (!v || *v < 1) fail(Errc::InvalidHeaderValue, number, "Channels must be a positive integer");
      seg.channels = static_cast<int>(*v);
      channels_line = number;
    } else if (key == "Samples") {
      seg.samples_per_channel = parse_list<long long>(rest, sep, number, [](std::string_view f, std::size_t c,
                                                                            std::size_t l) {
        const auto v = text::parse_integer(f);
        if (!v) malformed_number(l, c, f);
        return static_cast<long long>(*v);
      });
      seen.samples = number;
    } else if (key == "Date") {
      seg.channel_dates = parse_list<CalendarDate>(rest, sep, number, [](std::string_view f, std::size_t,
                                                                         std::size_t l) {
        const auto d = parse_date(f);
        if (!d) fail(Errc::InvalidHeaderValue, l, "invalid Date '" + std::string(f) + "'");
        return *d;
      });
      seen.date = number;
    } else if (key == "Time") {
      seg.channel_times = parse_list<HighPrecisionTime>(rest, sep, number, [](std::string_view f, std::size_t,
                                                                               std::size_t l) {
        const auto t = parse_time(f);
        if (!t) fail(Errc::InvalidHeaderValue, l, "invalid Time '" + std::string(f) + "'");
        return *t;
      });
      seen.time = number;
    } else if (key == "X_Dimension") {
      seg.x_dimension = parse_list<std::string>(
          rest, sep, number, [](std::string_view f, std::size_t, std::size_t) { return std::string(f); });
      seen.x_dimension = number;
    } else if (key == "X0") {
      seg.x0 = parse_list<double>(rest, sep, number, real);
      seen.x0 = number;
    } else if (key == "Delta_X") {
      seg.delta_x = parse_list<double>(rest, sep, number, real);
      seen.delta_x = number;
    } else {
      seg.extra_keys.emplace_back(std::string(key), std::string(rest));
    }
  }

  const std::size_t at = lines[range.end].number;
  if (!channels_line) fail(Errc::InvalidHeaderValue, at, "segment header lacks Channels");

  auto required = [&](std::size_t seen_line, std::size_t size, std::string_view key) {
    if (seen_line == 0) fail(Errc::InvalidHeaderValue, at, "segment header lacks " + std::string(key));
    expect_length(size, seg.channels, seen_line, key);
  };
  required(seen.samples, seg.samples_per_channel.size(), "Samples");
  required(seen.x_dimension, seg.x_dimension.size(), "X_Dimension");
  required(seen.x0, seg.x0.size(), "X0");
  required(seen.delta_x, seg.delta_x.size(), "Delta_X");
  if (seen.date != 0) expect_length(seg.channel_dates.size(), seg.channels, seen.date, "Date");
  if (seen.time != 0) expect_length(seg.channel_times.size(), seg.channels, seen.time, "Time");
  return seg;
}

void parse_column_names(LvmSegment& seg, const Line& line, char sep) {
  auto parts = text::split(line.text, sep);
  while (!parts.empty() && text::trim(parts.back()).empty()) parts.pop_back();
  for (auto p : parts) seg.column_names.emplace_back(text::trim(p));
  const auto plain = static_cast<std::size_t>(seg.channels) + 1;
  if (seg.column_names.size() == plain || seg.has_comment_column()) return;
  channel_mismatch(line.number, plain, seg.column_names.size());
}

DataRow parse_row(const LvmSegment& seg, const Line& line, char sep, char dec, double x) {
  DataRow row;
  row.x = x;
  const auto channels = static_cast<std::size_t>(seg.channels);
  row.values.reserve(channels);

  std::size_t pos = line.text.find(sep);
  for (std::size_t c = 0; c < channels; ++c) {
    if (pos == std::string_view::npos) channel_mismatch(line.number, channels, c);
    const std::size_t start = pos + 1;
    const std::size_t next = line.text.find(sep, start);
    const std::string_view field =
        line.text.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start);
    if (text::trim(field).empty()) {
      row.values.emplace_back(std::nullopt);
    } else {
      const auto v = text::parse_real(field, dec);
      if (!v) malformed_number(line.number, c + 2, field);
      row.values.emplace_back(*v);
    }
    pos = next;
  }

  if (pos != std::string_view::npos) {
    const std::string_view tail = line.text.substr(pos + 1);
    if (seg.has_comment_column()) {
      if (!tail.empty()) row.comment = std::string(tail);
    } else {
      // Trailing separators are tolerated; extra values are not.
      for (auto f : text::split(tail, sep))
        if (!text::trim(f).empty()) channel_mismatch(line.number, channels, channels + 1);
    }
  }
  return row;
}

bool starts_header_line(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return false;
  const unsigned char c = static_cast<unsigned char>(s.front());
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '*' || c == '_';
}

}  // namespace

LvmDocument parse_lvm(std::string_view input) {
  const auto lines = split_lines(input);
  if (lines.empty() || strip_any_separator(lines.front().text) != kMagicLine)
    throw Error(Errc::MissingMagicLine, "first line must be '" + std::string(kMagicLine) + "'");

  std::size_t i = 1;
  std::size_t header_end = lines.size();
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (strip_any_separator(lines[k].text) == kEndOfHeader) {
      header_end = k;
      break;
    }
  }
  if (header_end == lines.size()) throw Error(Errc::MissingHeaderTerminator, "file header is not terminated");

  LvmDocument doc;
  doc.header = parse_file_header(lines, i, header_end);
  const char sep = separator_char(doc.header.separator);
  const char dec = doc.header.decimal_separator;
  i = header_end + 1;

  while (true) {
    while (i < lines.size() && is_blank(lines[i].text)) ++i;
    if (i == lines.size()) break;

    const std::size_t seg_begin = i;
    while (i < lines.size() && !is_terminator(lines[i].text, sep)) ++i;
    if (i == lines.size())
      throw Error(Errc::MissingHeaderTerminator,
                  "segment header starting at line " + std::to_string(lines[seg_begin].number) + " is not terminated");
    LvmSegment seg = parse_segment_header(lines, {seg_begin, i}, doc.header);
    const std::size_t terminator_line = lines[i].number;
    ++i;

    while (i < lines.size() && is_blank(lines[i].text)) ++i;
    if (i == lines.size()) channel_mismatch(terminator_line, static_cast<std::size_t>(seg.channels) + 1, 0);
    parse_column_names(seg, lines[i], sep);
    ++i;

    for (; i < lines.size(); ++i) {
      const Line& line = lines[i];
      if (is_blank(line.text)) continue;
      const std::string_view first = line.text.substr(0, line.text.find(sep));
      const auto x = text::parse_real(first, dec);
      if (!x) {
        if (starts_header_line(first)) break;
        malformed_number(line.number, 1, first);
      }
      seg.rows.push_back(parse_row(seg, line, sep, dec, *x));
    }
    doc.segments.push_back(std::move(seg));
  }

  if (doc.segments.empty()) throw Error(Errc::MissingHeaderTerminator, "file contains no segment");
  return doc;
}

std::vector<SeriesPoint> channel_series(const LvmDocument& doc, std::size_t segment_index,
                                        std::size_t channel_index) {
  if (segment_index >= doc.segments.size())
    throw Error(Errc::IndexOutOfRange, "segment " + std::to_string(segment_index) + " of " +
                                           std::to_string(doc.segments.size()));
  const LvmSegment& seg = doc.segments[segment_index];
  if (channel_index >= static_cast<std::size_t>(seg.channels))
    throw Error(Errc::IndexOutOfRange, "channel " + std::to_string(channel_index) + " of " +
                                           std::to_string(seg.channels));
  std::vector<SeriesPoint> out;
  out.reserve(seg.rows.size());
  for (const DataRow& row : seg.rows) {
    const auto& v = row.values[channel_index];
    if (v) out.push_back({row.x, *v});
  }
  return out;
}

}  // namespace lvmforge::lvm
