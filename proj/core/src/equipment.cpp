#include <algorithm>
#include <string>

#include "lvmforge/equipment.hpp"
#include "lvmforge/error.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::model {

std::string_view to_string(ConceptCategory c) noexcept {
  switch (c) {
    case ConceptCategory::InstrumentSetup: return "InstrumentSetup";
    case ConceptCategory::Data: return "Data";
    case ConceptCategory::MeasurementInformation: return "MeasurementInformation";
    case ConceptCategory::ExperimentCharacterization: return "ExperimentCharacterization";
    case ConceptCategory::Warnings: return "Warnings";
    case ConceptCategory::MeasuredObject: return "MeasuredObject";
  }
  return "Data";
}

std::string_view to_string(ValueType t) noexcept {
  switch (t) {
    case ValueType::Integer: return "Integer";
    case ValueType::Real: return "Real";
    case ValueType::Boolean: return "Boolean";
    case ValueType::Time: return "Time";
    case ValueType::Date: return "Date";
    case ValueType::Enumeration: return "Enumeration";
    case ValueType::String: return "String";
  }
  return "String";
}

std::string_view to_string(ValueSource s) noexcept { return s == ValueSource::File ? "File" : "Keyboard"; }

std::optional<ConceptCategory> parse_category(std::string_view s) {
  for (ConceptCategory c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::optional<ValueType> parse_value_type(std::string_view s) {
  for (ValueType t : {ValueType::Integer, ValueType::Real, ValueType::Boolean, ValueType::Time, ValueType::Date,
                      ValueType::Enumeration, ValueType::String})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<ValueSource> parse_value_source(std::string_view s) {
  if (s == "File") return ValueSource::File;
  if (s == "Keyboard") return ValueSource::Keyboard;
  return std::nullopt;
}

const ParameterDefinition* EquipmentModel::find(std::string_view parameter) const noexcept {
  const auto it = std::find_if(parameters.begin(), parameters.end(),
                               [&](const ParameterDefinition& p) { return p.name == parameter; });
  return it == parameters.end() ? nullptr : &*it;
}

UnitTable::UnitTable()
    : names_{"Second", "Radian", "Tesla", "Ampere", "CelsiusDegree", "Kelvin", "Volt", "Ohm", "Metre", "Kilogram"} {}

const UnitTable& UnitTable::defaults() {
  static const UnitTable table;
  return table;
}

void UnitTable::add(std::string unit) { names_.insert(std::move(unit)); }

bool UnitTable::contains(std::string_view unit) const { return names_.find(unit) != names_.end(); }

EquipmentModel define_equipment(const EquipmentDescriptor& d, std::span<const std::string> existing_names) {
  if (text::trim(d.name).empty()) throw Error(Errc::EmptyName, "equipment name is empty");
  if (std::find(existing_names.begin(), existing_names.end(), d.name) != existing_names.end())
    throw Error(Errc::DuplicateEquipmentName, "equipment '" + d.name + "' is already defined");
  EquipmentModel m;
  m.name = d.name;
  m.producer = d.producer;
  m.description = d.description;
  m.webpage = d.webpage;
  m.picture = d.picture;
  m.visual_model = d.visual_model;
  return m;
}

EquipmentModel add_parameter(EquipmentModel model, ParameterDefinition def, const UnitTable& units) {
  if (text::trim(def.name).empty()) throw Error(Errc::EmptyName, "parameter name is empty");
  if (model.find(def.name))
    throw Error(Errc::DuplicateParameterName, "'" + def.name + "' already exists in " + model.name);
  if (def.value_type == ValueType::Enumeration && def.enum_domain.empty())
    throw Error(Errc::MissingEnumDomain, "enumeration '" + def.name + "' has no domain");
  if (def.value_type != ValueType::Enumeration && !def.enum_domain.empty())
    throw Error(Errc::MalformedDefinition, "'" + def.name + "' is not an enumeration but lists a domain");
  if (def.unit && !units.contains(*def.unit))
    throw Error(Errc::UnknownUnit, "unit '" + *def.unit + "' of '" + def.name + "' is not in the unit table");
  model.parameters.push_back(std::move(def));
  return model;
}

EquipmentModel add_extension(EquipmentModel model, std::string_view extension) {
  std::string_view e = text::trim(extension);
  if (!e.empty() && e.front() == '.') e.remove_prefix(1);
  if (e.empty() || e.find('.') != std::string_view::npos)
    throw Error(Errc::MalformedDefinition, "invalid file extension '" + std::string(extension) + "'");
  model.extensions.insert(text::to_lower(e));
  return model;
}

EquipmentModel builtin_sytherm(int channel_count) {
  if (channel_count < 1)
    throw Error(Errc::InvalidChannelCount, "SYTHERM needs at least one channel, got " + std::to_string(channel_count));

  EquipmentModel m = define_equipment({"SYTHERM", "UPB Measurement Laboratory", "thermocouple acquisition ensemble",
                                       std::nullopt, std::nullopt, std::nullopt});
  m = add_extension(std::move(m), "lvm");
  m.ignored_file_keys = {"Writer_Version", "Reader_Version"};

  using C = ConceptCategory;
  using T = ValueType;
  auto add = [&m](std::string name, C c, T t, std::optional<std::string> unit = std::nullopt,
                  std::vector<std::string> domain = {}) {
    m = add_parameter(std::move(m), {std::move(name), c, t, std::move(unit), ValueSource::File, std::move(domain)});
  };

  add(std::string(kAbscissaParameter), C::Data, T::Real, "Second");
  for (int k = 0; k < channel_count; ++k) add("Channel_" + std::to_string(k), C::Data, T::Real, "CelsiusDegree");

  add("Operator", C::MeasurementInformation, T::String);
  add("Date", C::MeasurementInformation, T::Date);
  add("Time", C::MeasurementInformation, T::Time);

  add("Channels", C::ExperimentCharacterization, T::Integer);
  add("Separator", C::ExperimentCharacterization, T::Enumeration, std::nullopt, {"Tab", "Comma"});
  add("Decimal_Separator", C::ExperimentCharacterization, T::String);
  add("Multi_Headings", C::ExperimentCharacterization, T::Boolean);
  add("X_Columns", C::ExperimentCharacterization, T::Enumeration, std::nullopt, {"No", "One", "Multi"});
  add("Time_Pref", C::ExperimentCharacterization, T::Enumeration, std::nullopt, {"Absolute", "Relative"});
  add("X_Dimension", C::ExperimentCharacterization, T::String);
  add("X0", C::ExperimentCharacterization, T::Real, "Second");
  add("Delta_X", C::ExperimentCharacterization, T::Real, "Second");
  return m;
}

std::vector<const ParameterDefinition*> parameters_in(const EquipmentModel& model, ConceptCategory category) {
  std::vector<const ParameterDefinition*> out;
  for (const auto& p : model.parameters)
    if (p.category == category) out.push_back(&p);
  return out;
}

std::vector<const ParameterDefinition*> channel_parameters(const EquipmentModel& model) {
  std::vector<const ParameterDefinition*> out;
  for (const auto& p : model.parameters)
    if (p.category == ConceptCategory::Data && p.name != kAbscissaParameter) out.push_back(&p);
  return out;
}

namespace {

[[noreturn]] void mismatch(const ParameterDefinition& def, std::string_view raw) {
  throw Error(Errc::TypeMismatch, "'" + std::string(raw) + "' is not a valid " + std::string(to_string(def.value_type)) +
                                      " for " + def.name);
}

}  // namespace

Value validate_value(const ParameterDefinition& def, std::string_view raw) {
  const std::string_view s = text::trim(raw);
  switch (def.value_type) {
    case ValueType::Integer:
      if (auto v = text::parse_integer(s)) return *v;
      break;
    case ValueType::Real: {
      auto v = text::parse_real(s, '.');
      if (!v) v = text::parse_real(s, ',');
      if (v) return *v;
      break;
    }
    case ValueType::Boolean:
      if (text::iequals(s, "yes") || text::iequals(s, "true")) return true;
      if (text::iequals(s, "no") || text::iequals(s, "false")) return false;
      break;
    case ValueType::Time:
      if (auto t = parse_time(s)) return *t;
      break;
    case ValueType::Date:
      if (auto d = parse_date(s)) return *d;
      break;
    case ValueType::Enumeration:
      if (std::find(def.enum_domain.begin(), def.enum_domain.end(), s) != def.enum_domain.end()) return std::string(s);
      break;
    case ValueType::String:
      return std::string(raw);
  }
  mismatch(def, raw);
}

std::string render_value(const Value& value) {
  struct Renderer {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return text::format_real(v, '.'); }
    std::string operator()(bool v) const { return v ? "Yes" : "No"; }
    std::string operator()(const CalendarDate& d) const { return format_date(d); }
    std::string operator()(const HighPrecisionTime& t) const { return format_time(t, '.'); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Renderer{}, value);
}

}  // namespace lvmforge::model
