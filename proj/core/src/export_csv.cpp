#include <map>
#include <utility>

#include "lvmforge/error.hpp"
#include "lvmforge/export.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::exporter {

namespace {

void field(std::string& out, std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void row(std::string& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    if (!first) out += ',';
    first = false;
    field(out, f);
  }
  out += '\n';
}

}  // namespace

std::string export_csv(const MeasurementRecord& r, const model::EquipmentModel& m) {
  std::string out;
  row(out, {"category", "parameter", "type", "unit", "value"});
  for (const auto category : model::kAllCategories) {
    const auto it = r.values.find(category);
    if (it == r.values.end()) continue;
    for (const auto& nv : it->second) {
      const auto* def = m.find(nv.name);
      if (!def) throw Error(Errc::InvariantViolation, m.name + " has no parameter '" + nv.name + "'");
      row(out, {model::to_string(category), nv.name, model::to_string(def->value_type), def->unit.value_or(""),
                model::render_value(nv.value)});
    }
  }
  if (r.series.empty()) return out;

  // Row keys in order of first appearance across channels.
  using Key = std::pair<double, std::size_t>;
  std::vector<Key> keys;
  std::map<Key, std::size_t> row_of;
  std::vector<std::map<Key, double>> cells(r.series.size());
  for (std::size_t c = 0; c < r.series.size(); ++c) {
    if (!m.find(r.series[c].name))
      throw Error(Errc::InvariantViolation, m.name + " has no series '" + r.series[c].name + "'");
    std::map<double, std::size_t> seen;
    for (const auto& p : r.series[c].points) {
      const Key key{p.x, seen[p.x]++};
      if (row_of.emplace(key, keys.size()).second) keys.push_back(key);
      cells[c][key] = p.y;
    }
  }

  out += '\n';
  field(out, model::kAbscissaParameter);
  for (const auto& s : r.series) {
    out += ',';
    field(out, s.name);
  }
  out += '\n';
  for (const Key& key : keys) {
    out += text::format_fixed6(key.first);
    for (const auto& channel : cells) {
      out += ',';
      const auto it = channel.find(key);
      if (it != channel.end()) out += text::format_fixed6(it->second);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lvmforge::exporter
