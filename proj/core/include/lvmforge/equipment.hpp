#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lvmforge/calendar.hpp"

namespace lvmforge::model {

/// The six parameter groups every equipment model is organised by.
enum class ConceptCategory {
  InstrumentSetup,
  Data,
  MeasurementInformation,
  ExperimentCharacterization,
  Warnings,
  MeasuredObject,
};

inline constexpr std::array<ConceptCategory, 6> kAllCategories{
    ConceptCategory::InstrumentSetup,  ConceptCategory::Data,     ConceptCategory::MeasurementInformation,
    ConceptCategory::ExperimentCharacterization, ConceptCategory::Warnings, ConceptCategory::MeasuredObject};

enum class ValueType { Integer, Real, Boolean, Time, Date, Enumeration, String };
enum class ValueSource { File, Keyboard };

std::string_view to_string(ConceptCategory c) noexcept;
std::string_view to_string(ValueType t) noexcept;
std::string_view to_string(ValueSource s) noexcept;
std::optional<ConceptCategory> parse_category(std::string_view s);
std::optional<ValueType> parse_value_type(std::string_view s);
std::optional<ValueSource> parse_value_source(std::string_view s);

/// Typed parameter value. Enumeration and String share the string
/// alternative; the owning ParameterDefinition says which one it is.
using Value = std::variant<std::int64_t, double, bool, CalendarDate, HighPrecisionTime, std::string>;

struct ParameterDefinition {
  std::string name;
  ConceptCategory category = ConceptCategory::ExperimentCharacterization;
  ValueType value_type = ValueType::String;
  std::optional<std::string> unit;
  ValueSource source = ValueSource::File;
  std::vector<std::string> enum_domain;

  friend bool operator==(const ParameterDefinition&, const ParameterDefinition&) = default;
};

struct EquipmentModel {
  std::string name;
  std::string producer;
  std::string description;
  std::optional<std::string> webpage;
  std::optional<std::string> picture;
  std::optional<std::string> visual_model;
  std::set<std::string> extensions;  // lowercase, no leading dot
  std::vector<ParameterDefinition> parameters;
  std::set<std::string> ignored_file_keys;

  const ParameterDefinition* find(std::string_view parameter) const noexcept;

  friend bool operator==(const EquipmentModel&, const EquipmentModel&) = default;
};

/// SI unit names a parameter may carry. Starts with the built-in table and
/// can be extended from configuration.
class UnitTable {
 public:
  static const UnitTable& defaults();

  UnitTable();
  void add(std::string unit);
  bool contains(std::string_view unit) const;
  const std::set<std::string, std::less<>>& names() const noexcept { return names_; }

 private:
  std::set<std::string, std::less<>> names_;
};

struct EquipmentDescriptor {
  std::string name;
  std::string producer;
  std::string description;
  std::optional<std::string> webpage;
  std::optional<std::string> picture;
  std::optional<std::string> visual_model;
};

/// Creates an empty model. `existing_names` are the models already known to
/// the target store.
EquipmentModel define_equipment(const EquipmentDescriptor& descriptor,
                                std::span<const std::string> existing_names = {});

EquipmentModel add_parameter(EquipmentModel model, ParameterDefinition def,
                             const UnitTable& units = UnitTable::defaults());

EquipmentModel add_extension(EquipmentModel model, std::string_view extension);

/// The thermocouple acquisition ensemble: X_Value plus one Celsius channel
/// per input, operator/date/time, and the .lvm experiment settings.
EquipmentModel builtin_sytherm(int channel_count);

std::vector<const ParameterDefinition*> parameters_in(const EquipmentModel& model, ConceptCategory category);

/// Data-category parameters that carry a numeric series, i.e. every Data
/// parameter except the shared X_Value abscissa, in declaration order.
std::vector<const ParameterDefinition*> channel_parameters(const EquipmentModel& model);

inline constexpr std::string_view kAbscissaParameter = "X_Value";

/// Applies the declared value type to raw text. Throws Errc::TypeMismatch.
Value validate_value(const ParameterDefinition& def, std::string_view raw);

/// Canonical text form: base-10 integers, reals with six decimals and '.'
/// (more digits only when six would lose information), Yes/No, YYYY/MM/DD,
/// HH:MM:SS.fraction with every stored digit.
std::string render_value(const Value& value);

// Line-oriented model definition files:
//
//   name: SYTHERM
//   producer: UPB Measurement Laboratory
//   extensions: lvm
//   ignore: Writer_Version, Reader_Version
//   param: Operator|MeasurementInformation|String||File
//   param: Separator|ExperimentCharacterization|Enumeration||File|Tab,Comma
//
// A param line is name|category|type|unit|source with an optional sixth
// field listing the enumeration domain. '#' starts a comment line.
EquipmentModel parse_model_definition(std::string_view text, const UnitTable& units = UnitTable::defaults());
std::string render_model_definition(const EquipmentModel& model);

}  // namespace lvmforge::model
