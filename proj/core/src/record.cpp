#include "lvmforge/record.hpp"

namespace lvmforge {

const model::Value* MeasurementRecord::find_value(std::string_view parameter) const noexcept {
  for (const auto& [category, list] : values)
    for (const auto& nv : list)
      if (nv.name == parameter) return &nv.value;
  return nullptr;
}

const ChannelSeries* MeasurementRecord::find_series(std::string_view name) const noexcept {
  for (const auto& s : series)
    if (s.name == name) return &s;
  return nullptr;
}

std::size_t MeasurementRecord::value_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [category, list] : values) n += list.size();
  return n;
}

}  // namespace lvmforge
