#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lvmforge/calendar.hpp"
#include "lvmforge/equipment.hpp"
#include "lvmforge/lvm.hpp"

namespace lvmforge {

struct NamedValue {
  std::string name;
  model::Value value;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct ChannelSeries {
  std::string name;  // a Data-category parameter, e.g. Channel_0
  std::optional<std::string> unit;
  std::vector<lvm::SeriesPoint> points;

  friend bool operator==(const ChannelSeries&, const ChannelSeries&) = default;
};

/// One imported measurement in the unified form. Values and series follow the
/// equipment model's declaration order; that is also the order the store
/// hands them back in.
struct MeasurementRecord {
  std::int64_t record_id = 0;
  std::string equipment_name;
  Timestamp imported_at{};
  std::map<model::ConceptCategory, std::vector<NamedValue>> values;
  std::vector<ChannelSeries> series;
  std::vector<std::string> warnings;
  /// Auxiliary facts kept alongside the values, e.g. the full per-channel X0 list.
  std::vector<std::string> notes;
  std::string source_file;

  const model::Value* find_value(std::string_view parameter) const noexcept;
  const ChannelSeries* find_series(std::string_view name) const noexcept;
  std::size_t value_count() const noexcept;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

}  // namespace lvmforge
