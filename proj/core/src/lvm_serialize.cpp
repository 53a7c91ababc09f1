#include <string>

#include "lvmforge/error.hpp"
#include "lvmforge/lvm.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::lvm {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::InvariantViolation, what); }

bool has_line_break(std::string_view s) { return s.find_first_of("\r\n") != std::string_view::npos; }

void check_text(std::string_view s, std::string_view what, char sep, bool allow_separator) {
  if (has_line_break(s)) violation(std::string(what) + " contains a line break");
  if (!allow_separator && s.find(sep) != std::string_view::npos)
    violation(std::string(what) + " contains the field separator");
}

// Keys, dimension names and column names are trimmed by the reader.
void check_token(std::string_view s, std::string_view what, char sep) {
  check_text(s, what, sep, false);
  if (s.empty() || text::trim(s) != s) violation(std::string(what) + " '" + std::string(s) + "' is empty or padded");
}

bool is_reserved_header_key(std::string_view k) {
  for (std::string_view r : {"Writer_Version", "Reader_Version", "Separator", "Decimal_Separator", "Multi_Headings",
                             "X_Columns", "Time_Pref", "Operator", "Date", "Time"})
    if (k == r) return true;
  return k == kEndOfHeader;
}

bool is_reserved_segment_key(std::string_view k) {
  for (std::string_view r : {"Notes", "Channels", "Samples", "Date", "Time", "X_Dimension", "X0", "Delta_X"})
    if (k == r) return true;
  return k == kEndOfHeader;
}

void check_count(std::size_t n, int channels, std::string_view what) {
  if (n != static_cast<std::size_t>(channels))
    violation(std::string(what) + " has " + std::to_string(n) + " entries for " + std::to_string(channels) +
              " channels");
}

class Writer {
 public:
  explicit Writer(char sep) : sep_(sep) {}

  void line(std::string_view s) {
    out_ += s;
    out_ += '\n';
  }

  void key(std::string_view k, std::string_view v) {
    out_ += k;
    out_ += sep_;
    out_ += v;
    out_ += '\n';
  }

  template <typename Range, typename Fn>
  void list(std::string_view k, const Range& values, Fn&& render) {
    out_ += k;
    for (const auto& v : values) {
      out_ += sep_;
      out_ += render(v);
    }
    out_ += '\n';
  }

  std::string take() { return std::move(out_); }

 private:
  char sep_;
  std::string out_;
};

}  // namespace

void validate(const LvmDocument& doc) {
  const LvmFileHeader& h = doc.header;
  if (h.decimal_separator != '.' && h.decimal_separator != ',') violation("decimal separator must be '.' or ','");
  if (h.separator == Separator::Comma && h.decimal_separator == ',')
    violation("comma separator with comma decimal separator is ambiguous");
  if (h.x_columns != XColumns::One) violation("only X_Columns One can be written");
  if (h.multi_headings) violation("Multi_Headings Yes cannot be written");
  if (h.date && !is_valid(*h.date)) violation("header date is not a valid calendar date");
  if (h.time && !is_valid(*h.time)) violation("header time is out of range");
  const char sep = separator_char(h.separator);
  if (h.operator_name) {
    check_text(*h.operator_name, "Operator", sep, true);
    if (text::trim(*h.operator_name) != *h.operator_name) violation("Operator has surrounding whitespace");
  }
  for (const auto& [k, v] : h.extra_keys) {
    check_token(k, "header key", sep);
    if (is_reserved_header_key(k)) violation("extra header key '" + k + "' shadows a standard key");
    check_text(v, "header value", sep, true);
  }
  if (doc.segments.empty()) violation("document has no segment");

  for (const LvmSegment& seg : doc.segments) {
    if (seg.channels < 1) violation("segment needs at least one channel");
    check_count(seg.samples_per_channel.size(), seg.channels, "Samples");
    check_count(seg.x_dimension.size(), seg.channels, "X_Dimension");
    check_count(seg.x0.size(), seg.channels, "X0");
    check_count(seg.delta_x.size(), seg.channels, "Delta_X");
    if (!seg.channel_dates.empty()) check_count(seg.channel_dates.size(), seg.channels, "Date");
    if (!seg.channel_times.empty()) check_count(seg.channel_times.size(), seg.channels, "Time");
    for (const auto& d : seg.channel_dates)
      if (!is_valid(d)) violation("segment date is not a valid calendar date");
    for (const auto& t : seg.channel_times)
      if (!is_valid(t)) violation("segment time is out of range");
    for (const auto& x : seg.x_dimension) check_token(x, "X_Dimension", sep);
    if (seg.notes) {
      check_text(*seg.notes, "Notes", sep, true);
      if (text::trim(*seg.notes) != *seg.notes) violation("Notes has surrounding whitespace");
    }
    for (const auto& [k, v] : seg.extra_keys) {
      check_token(k, "segment key", sep);
      if (is_reserved_segment_key(k)) violation("extra segment key '" + k + "' shadows a standard key");
      check_text(v, "segment value", sep, true);
    }

    const auto plain = static_cast<std::size_t>(seg.channels) + 1;
    if (seg.column_names.size() != plain && !seg.has_comment_column())
      violation("column row must name the X column and every channel");
    for (const auto& c : seg.column_names) check_token(c, "column name", sep);

    for (const DataRow& row : seg.rows) {
      check_count(row.values.size(), seg.channels, "data row");
      if (row.comment) {
        if (!seg.has_comment_column()) violation("row comment without a Comment column");
        check_text(*row.comment, "comment", sep, true);
        if (row.comment->empty()) violation("empty comment must be absent instead");
      }
    }
  }
}

std::string serialize_lvm(const LvmDocument& doc) {
  validate(doc);
  const LvmFileHeader& h = doc.header;
  const char sep = separator_char(h.separator);
  const char dec = h.decimal_separator;
  auto real = [dec](double v) { return text::format_real(v, dec); };

  Writer w(sep);
  w.line(kMagicLine);
  w.key("Writer_Version", std::to_string(h.writer_version));
  w.key("Reader_Version", std::to_string(h.reader_version));
  w.key("Separator", to_string(h.separator));
  w.key("Decimal_Separator", std::string(1, dec));
  w.key("Multi_Headings", h.multi_headings ? "Yes" : "No");
  w.key("X_Columns", to_string(h.x_columns));
  w.key("Time_Pref", to_string(h.time_pref));
  if (h.operator_name) w.key("Operator", *h.operator_name);
  if (h.date) w.key("Date", format_date(*h.date));
  if (h.time) w.key("Time", format_time(*h.time, dec));
  for (const auto& [k, v] : h.extra_keys) w.key(k, v);
  w.line(kEndOfHeader);
  w.line("");

  for (const LvmSegment& seg : doc.segments) {
    if (seg.notes) w.key("Notes", *seg.notes);
    w.key("Channels", std::to_string(seg.channels));
    w.list("Samples", seg.samples_per_channel, [](long long n) { return std::to_string(n); });
    if (!seg.channel_dates.empty()) w.list("Date", seg.channel_dates, format_date);
    if (!seg.channel_times.empty())
      w.list("Time", seg.channel_times, [dec](const HighPrecisionTime& t) { return format_time(t, dec); });
    w.list("X_Dimension", seg.x_dimension, [](const std::string& s) { return s; });
    w.list("X0", seg.x0, [dec](double v) { return text::format_scientific16(v, dec); });
    w.list("Delta_X", seg.delta_x, real);
    for (const auto& [k, v] : seg.extra_keys) w.key(k, v);
    w.line(kEndOfHeader);

    std::string row_text;
    for (std::size_t c = 0; c < seg.column_names.size(); ++c) {
      if (c) row_text += sep;
      row_text += seg.column_names[c];
    }
    w.line(row_text);

    for (const DataRow& row : seg.rows) {
      row_text = real(row.x);
      for (const auto& v : row.values) {
        row_text += sep;
        if (v) row_text += real(*v);
      }
      if (row.comment) {
        row_text += sep;
        row_text += *row.comment;
      }
      w.line(row_text);
    }
  }
  return w.take();
}

}  // namespace lvmforge::lvm
