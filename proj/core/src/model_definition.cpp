#include <string>

#include "lvmforge/equipment.hpp"
#include "lvmforge/error.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::model {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(Errc::MalformedDefinition, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> comma_list(std::string_view s) {
  std::vector<std::string> out;
  if (text::trim(s).empty()) return out;
  for (auto part : text::split(s, ',')) out.emplace_back(text::trim(part));
  return out;
}

std::optional<std::string> optional_field(std::string_view v) {
  if (v.empty()) return std::nullopt;
  return std::string(v);
}

std::string join(const auto& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

EquipmentModel parse_model_definition(std::string_view input, const UnitTable& units) {
  EquipmentDescriptor d;
  std::vector<std::string> extensions;
  std::vector<std::string> ignored;
  std::vector<std::pair<std::size_t, ParameterDefinition>> params;
  bool have_name = false;

  std::size_t number = 0;
  for (auto raw : text::split(input, '\n')) {
    ++number;
    const std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) malformed(number, "expected 'key: value'");
    const std::string_view key = text::trim(line.substr(0, colon));
    const std::string_view value = text::trim(line.substr(colon + 1));

    if (key == "name") {
      d.name = value;
      have_name = true;
    } else if (key == "producer") {
      d.producer = value;
    } else if (key == "description") {
      d.description = value;
    } else if (key == "webpage") {
      d.webpage = optional_field(value);
    } else if (key == "picture") {
      d.picture = optional_field(value);
    } else if (key == "visual_model") {
      d.visual_model = optional_field(value);
    } else if (key == "extensions") {
      extensions = comma_list(value);
    } else if (key == "ignore") {
      ignored = comma_list(value);
    } else if (key == "param") {
      const auto f = text::split(value, '|');
      if (f.size() != 5 && f.size() != 6) malformed(number, "param needs name|category|type|unit|source[|domain]");
      ParameterDefinition p;
      p.name = text::trim(f[0]);
      const auto category = parse_category(text::trim(f[1]));
      const auto type = parse_value_type(text::trim(f[2]));
      const auto source = parse_value_source(text::trim(f[4]));
      if (!category) malformed(number, "unknown category '" + std::string(f[1]) + "'");
      if (!type) malformed(number, "unknown type '" + std::string(f[2]) + "'");
      if (!source) malformed(number, "unknown source '" + std::string(f[4]) + "'");
      p.category = *category;
      p.value_type = *type;
      p.source = *source;
      p.unit = optional_field(text::trim(f[3]));
      if (f.size() == 6) p.enum_domain = comma_list(f[5]);
      params.emplace_back(number, std::move(p));
    } else {
      malformed(number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_name) throw Error(Errc::MalformedDefinition, "definition has no name line");

  EquipmentModel m = define_equipment(d);
  for (const auto& e : extensions) m = add_extension(std::move(m), e);
  m.ignored_file_keys.insert(ignored.begin(), ignored.end());
  for (auto& [line, p] : params) m = add_parameter(std::move(m), std::move(p), units);
  return m;
}

std::string render_model_definition(const EquipmentModel& m) {
  std::string out;
  auto field = [&out](std::string_view key, std::string_view value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };
  field("name", m.name);
  field("producer", m.producer);
  field("description", m.description);
  field("webpage", m.webpage.value_or(""));
  field("picture", m.picture.value_or(""));
  field("visual_model", m.visual_model.value_or(""));
  field("extensions", join(m.extensions, ", "));
  field("ignore", join(m.ignored_file_keys, ", "));
  for (const auto& p : m.parameters) {
    std::string line = p.name + "|" + std::string(to_string(p.category)) + "|" + std::string(to_string(p.value_type)) +
                       "|" + p.unit.value_or("") + "|" + std::string(to_string(p.source));
    if (!p.enum_domain.empty()) line += "|" + join(p.enum_domain, ",");
    field("param", line);
  }
  return out;
}

}  // namespace lvmforge::model
