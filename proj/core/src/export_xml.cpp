#include "lvmforge/error.hpp"
#include "lvmforge/export.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::exporter {

namespace {

// Characters XML 1.0 cannot carry become U+FFFD.
void escape_into(std::string& out, std::string_view s, bool attribute) {
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\r': out += "&#13;"; break;
      default:
        if (c < 0x20) out += "\xEF\xBF\xBD";
        else out += ch;
    }
  }
}

std::string attr(std::string_view name, std::string_view value) {
  std::string out = " ";
  out += name;
  out += "=\"";
  escape_into(out, value, true);
  out += '"';
  return out;
}

std::string element(std::string_view indent, std::string_view tag, std::string_view body) {
  std::string out(indent);
  out += '<';
  out += tag;
  out += '>';
  escape_into(out, body, false);
  out += "</";
  out += tag;
  out += ">\n";
  return out;
}

}  // namespace

std::string_view to_string(ExportFormat f) noexcept { return f == ExportFormat::Xml ? "xml" : "csv"; }

std::optional<ExportFormat> parse_format(std::string_view s) {
  if (text::iequals(s, "xml")) return ExportFormat::Xml;
  if (text::iequals(s, "csv")) return ExportFormat::Csv;
  return std::nullopt;
}

std::string_view file_suffix(ExportFormat f) noexcept { return to_string(f); }

std::string export_xml(const MeasurementRecord& r, const model::EquipmentModel& m) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<measurement" + attr("equipment", r.equipment_name) + attr("imported-at", format_iso8601(r.imported_at)) +
         attr("source-file", r.source_file) + ">\n";

  for (const auto category : model::kAllCategories) {
    const auto it = r.values.find(category);
    if (it == r.values.end() || it->second.empty()) continue;
    out += "  <category" + attr("name", model::to_string(category)) + ">\n";
    for (const auto& nv : it->second) {
      const auto* def = m.find(nv.name);
      if (!def) throw Error(Errc::InvariantViolation, m.name + " has no parameter '" + nv.name + "'");
      out += "    <parameter" + attr("name", nv.name) + attr("type", model::to_string(def->value_type));
      if (def->unit) out += attr("unit", *def->unit);
      out += '>';
      escape_into(out, model::render_value(nv.value), false);
      out += "</parameter>\n";
    }
    out += "  </category>\n";
  }

  for (const auto& s : r.series) {
    if (!m.find(s.name)) throw Error(Errc::InvariantViolation, m.name + " has no series '" + s.name + "'");
    out += "  <series" + attr("name", s.name);
    if (s.unit) out += attr("unit", *s.unit);
    out += ">\n";
    for (const auto& p : s.points)
      out += "    <point" + attr("x", text::format_fixed6(p.x)) + attr("y", text::format_fixed6(p.y)) + "/>\n";
    out += "  </series>\n";
  }

  for (const auto& n : r.notes) out += element("  ", "note", n);
  for (const auto& w : r.warnings) out += element("  ", "warning", w);
  out += "</measurement>\n";
  return out;
}

std::string export_record(ExportFormat format, const MeasurementRecord& record, const model::EquipmentModel& model) {
  return format == ExportFormat::Xml ? export_xml(record, model) : export_csv(record, model);
}

}  // namespace lvmforge::exporter
