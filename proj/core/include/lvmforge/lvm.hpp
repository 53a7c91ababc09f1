#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvmforge/calendar.hpp"

// Reader and writer for the LabVIEW Measurement (.lvm) text format.
//
// Layout handled here:
//
//   LabVIEW Measurement
//   <file header: Key<sep>Value lines>
//   ***End_of_Header***
//   [Notes<sep>text]
//   <segment header: Channels, Samples, Date, Time, X_Dimension, X0, Delta_X>
//   ***End_of_Header***
//   X_Value<sep>Channel 0<sep>...[<sep>Comment]
//   <data rows>
//   [next segment header, terminator, column row, rows ...]
//
// Only X_Columns=One with Multi_Headings=No is accepted. Anything else is
// rejected with Errc::UnsupportedFeature instead of being misread.
namespace lvmforge::lvm {

inline constexpr std::string_view kMagicLine = "LabVIEW Measurement";
inline constexpr std::string_view kEndOfHeader = "***End_of_Header***";
inline constexpr std::string_view kCommentColumn = "Comment";

enum class Separator { Tab, Comma };
enum class XColumns { No, One, Multi };
enum class TimePref { Absolute, Relative };

char separator_char(Separator s) noexcept;
std::string_view to_string(Separator s) noexcept;
std::string_view to_string(XColumns x) noexcept;
std::string_view to_string(TimePref t) noexcept;

using KeyValueList = std::vector<std::pair<std::string, std::string>>;

struct LvmFileHeader {
  int writer_version = 2;
  int reader_version = 2;
  Separator separator = Separator::Tab;
  char decimal_separator = '.';
  bool multi_headings = false;
  XColumns x_columns = XColumns::One;
  TimePref time_pref = TimePref::Relative;
  std::optional<std::string> operator_name;
  std::optional<CalendarDate> date;
  std::optional<HighPrecisionTime> time;
  /// Keys the reader does not recognise, in file order, raw values.
  KeyValueList extra_keys;

  friend bool operator==(const LvmFileHeader&, const LvmFileHeader&) = default;
};

struct DataRow {
  double x = 0.0;
  std::vector<std::optional<double>> values;  // empty field -> nullopt
  std::optional<std::string> comment;

  friend bool operator==(const DataRow&, const DataRow&) = default;
};

struct LvmSegment {
  std::optional<std::string> notes;
  int channels = 0;
  std::vector<long long> samples_per_channel;
  // May be empty when the writer omits per-channel stamps; otherwise one per channel.
  std::vector<CalendarDate> channel_dates;
  std::vector<HighPrecisionTime> channel_times;
  std::vector<std::string> x_dimension;
  std::vector<double> x0;
  std::vector<double> delta_x;
  std::vector<std::string> column_names;
  std::vector<DataRow> rows;
  KeyValueList extra_keys;

  bool has_comment_column() const noexcept;

  friend bool operator==(const LvmSegment&, const LvmSegment&) = default;
};

struct LvmDocument {
  LvmFileHeader header;
  std::vector<LvmSegment> segments;

  friend bool operator==(const LvmDocument&, const LvmDocument&) = default;
};

struct SeriesPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Accepts LF or CRLF line endings and an optional UTF-8 BOM.
/// Throws lvmforge::Error (MissingMagicLine, MissingHeaderTerminator,
/// MalformedNumber, ChannelCountMismatch, UnsupportedFeature,
/// InvalidHeaderValue).
LvmDocument parse_lvm(std::string_view input);

/// Canonical writer, LF line endings. Data values and Delta_X use six
/// decimals whenever that is lossless; X0 uses 16-digit scientific notation.
/// Throws Errc::InvariantViolation when the document breaks a structural rule.
std::string serialize_lvm(const LvmDocument& doc);

/// Checks the structural invariants serialize_lvm relies on.
void validate(const LvmDocument& doc);

/// (x, value) pairs of one channel, skipping rows where that channel is empty.
std::vector<SeriesPoint> channel_series(const LvmDocument& doc, std::size_t segment_index,
                                        std::size_t channel_index);

}  // namespace lvmforge::lvm
