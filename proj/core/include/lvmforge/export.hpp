#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lvmforge/equipment.hpp"
#include "lvmforge/record.hpp"

// Writers for the normalised side of the pipeline. The model supplies each
// parameter's type and unit; the record supplies the values.
namespace lvmforge::exporter {

enum class ExportFormat { Xml, Csv };

std::string_view to_string(ExportFormat f) noexcept;
/// "xml" or "csv", case-insensitive.
std::optional<ExportFormat> parse_format(std::string_view s);
std::string_view file_suffix(ExportFormat f) noexcept;

/// <measurement equipment=".." imported-at="ISO 8601" source-file="..">
///   <category name="MeasurementInformation">
///     <parameter name="Operator" type="String">Profesor</parameter>
///   </category>
///   <series name="Channel_0" unit="CelsiusDegree"><point x="0.000000" y="23.400000"/></series>
///   <note>..</note> <warning>..</warning>
/// </measurement>
///
/// A unit attribute is written only when the parameter has one.
/// Throws InvariantViolation when a value or series is not in the model.
std::string export_xml(const MeasurementRecord& record, const model::EquipmentModel& model);

/// Metadata block `category,parameter,type,unit,value`, then a blank line and
/// the series block `X_Value,<channels>` with one row per abscissa. Series
/// points are aligned on (x, occurrence of x); a channel without a point at
/// that abscissa leaves its cell empty. The series block is omitted when the
/// record has no series. RFC 4180 quoting, LF line endings.
std::string export_csv(const MeasurementRecord& record, const model::EquipmentModel& model);

std::string export_record(ExportFormat format, const MeasurementRecord& record, const model::EquipmentModel& model);

}  // namespace lvmforge::exporter
