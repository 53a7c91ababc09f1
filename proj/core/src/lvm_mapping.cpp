#include <set>
#include <string>

#include "lvmforge/error.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::ingest {

namespace {

struct KeyEntry {
  std::string key;
  std::string raw;                  // text handed to validate_value
  std::vector<std::string> values;  // full per-channel list, empty for scalar keys
  bool standard = true;             // part of the .lvm format rather than an extra key
};

template <typename Range, typename Fn>
KeyEntry per_channel(std::string key, const Range& items, Fn&& render) {
  KeyEntry e{std::move(key), {}, {}, true};
  for (const auto& item : items) e.values.push_back(render(item));
  if (!e.values.empty()) e.raw = e.values.front();
  return e;
}

std::vector<KeyEntry> collect_keys(const lvm::LvmDocument& doc) {
  const lvm::LvmFileHeader& h = doc.header;
  const lvm::LvmSegment& seg = doc.segments.front();
  std::vector<KeyEntry> keys;
  auto scalar = [&keys](std::string key, std::string raw) { keys.push_back({std::move(key), std::move(raw), {}, true}); };

  scalar("Writer_Version", std::to_string(h.writer_version));
  scalar("Reader_Version", std::to_string(h.reader_version));
  scalar("Separator", std::string(lvm::to_string(h.separator)));
  scalar("Decimal_Separator", std::string(1, h.decimal_separator));
  scalar("Multi_Headings", h.multi_headings ? "Yes" : "No");
  scalar("X_Columns", std::string(lvm::to_string(h.x_columns)));
  scalar("Time_Pref", std::string(lvm::to_string(h.time_pref)));
  if (h.operator_name) scalar("Operator", *h.operator_name);
  if (h.date) scalar("Date", format_date(*h.date));
  if (h.time) scalar("Time", format_time(*h.time, '.'));
  for (const auto& [k, v] : h.extra_keys) keys.push_back({k, std::string(text::trim(v)), {}, false});

  if (seg.notes) scalar("Notes", *seg.notes);
  scalar("Channels", std::to_string(seg.channels));
  keys.push_back(per_channel("Samples", seg.samples_per_channel, [](long long n) { return std::to_string(n); }));
  if (!seg.channel_dates.empty()) keys.push_back(per_channel("Date", seg.channel_dates, format_date));
  if (!seg.channel_times.empty())
    keys.push_back(
        per_channel("Time", seg.channel_times, [](const HighPrecisionTime& t) { return format_time(t, '.'); }));
  keys.push_back(per_channel("X_Dimension", seg.x_dimension, [](const std::string& s) { return s; }));
  auto real = [](double v) { return text::format_real(v, '.'); };
  keys.push_back(per_channel("X0", seg.x0, real));
  keys.push_back(per_channel("Delta_X", seg.delta_x, real));
  for (const auto& [k, v] : seg.extra_keys) keys.push_back({k, std::string(text::trim(v)), {}, false});
  return keys;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

MeasurementRecord map_lvm_to_record(const lvm::LvmDocument& doc, const model::EquipmentModel& model) {
  if (!model.extensions.count("lvm"))
    throw Error(Errc::ExtensionNotDeclared, model.name + " does not declare the lvm extension");
  if (doc.segments.empty()) throw Error(Errc::InvariantViolation, "document has no segment");

  const lvm::LvmSegment& seg = doc.segments.front();
  const auto channels = model::channel_parameters(model);
  if (channels.size() != static_cast<std::size_t>(seg.channels))
    throw Error(Errc::ChannelCountMismatch, model.name + " models " + std::to_string(channels.size()) +
                                                " channels, file has " + std::to_string(seg.channels));

  MeasurementRecord rec;
  rec.equipment_name = model.name;

  std::map<std::string, model::Value, std::less<>> assigned;
  for (const KeyEntry& e : collect_keys(doc)) {
    if (model.ignored_file_keys.count(e.key)) continue;
    if (!e.values.empty()) rec.notes.push_back(e.key + ": " + join(e.values));

    const model::ParameterDefinition* def = model.find(e.key);
    // Data parameters are the abscissa and the channels, filled from the data block.
    if (def && def->category == model::ConceptCategory::Data) def = nullptr;

    if (!def) {
      if (!e.standard)
        rec.warnings.push_back("unrecognised key '" + e.key + "' with value '" + e.raw + "'");
      else if (e.values.empty())
        rec.notes.push_back(e.key + ": " + e.raw);
      continue;
    }
    if (assigned.count(e.key)) continue;  // file header wins over per-channel stamps
    if (!e.values.empty() && e.raw.empty()) continue;
    assigned.emplace(e.key, model::validate_value(*def, e.raw));
  }

  for (const auto& p : model.parameters) {
    const auto it = assigned.find(p.name);
    if (it != assigned.end()) rec.values[p.category].push_back({p.name, it->second});
  }

  for (std::size_t k = 0; k < channels.size(); ++k) {
    auto points = lvm::channel_series(doc, 0, k);
    if (points.empty()) continue;
    rec.series.push_back({channels[k]->name, channels[k]->unit, std::move(points)});
  }

  if (doc.segments.size() > 1)
    rec.warnings.push_back(std::to_string(doc.segments.size() - 1) + " additional segment(s) not imported");
  return rec;
}

}  // namespace lvmforge::ingest
