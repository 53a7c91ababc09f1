#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvmforge/calendar.hpp"
#include "lvmforge/equipment.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/record.hpp"

struct sqlite3;

namespace lvmforge::store {

inline constexpr int kSchemaVersion = 1;

/// Tables of the unified schema, in creation order.
inline constexpr std::string_view kTables[] = {
    "t_eqp_equipments", "t_psf_parsingfunction", "t_efe_equipmentfileextension", "t_prm_parameters",
    "t_msr_measurements", "t_val_values", "t_ser_series"};

struct ParameterMatch {
  model::ConceptCategory category;
  std::string parameter;
  std::string value;  // raw text, normalised through the parameter's type when possible
};

struct QueryFilter {
  std::optional<std::string> equipment;
  std::optional<ParameterMatch> parameter;
  std::optional<std::string> operator_name;  // value of the "Operator" parameter
  std::optional<CalendarDate> date_from;     // inclusive bounds on the "Date" parameter
  std::optional<CalendarDate> date_to;
};

struct RecordSummary {
  std::int64_t record_id = 0;
  std::string equipment_name;
  Timestamp imported_at{};
  std::string source_file;

  friend bool operator==(const RecordSummary&, const RecordSummary&) = default;
};

/// Embedded relational store for equipment models, parsing procedures and
/// measurements.
///
/// Every mutating call runs in one IMMEDIATE transaction, so a failed call
/// leaves no partial rows. Separate processes may read while one writes
/// (WAL journal); writers queue on the database lock.
class Store {
 public:
  /// Creates the schema if needed. Re-opening an existing store is a no-op.
  /// Throws StorageUnavailable or SchemaVersionMismatch.
  static Store open(const std::filesystem::path& path);

  Store(Store&&) noexcept;
  Store& operator=(Store&&) noexcept;
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  std::int64_t put_equipment(const model::EquipmentModel& model);
  std::int64_t put_procedure(const ingest::ParsingProcedure& procedure);
  std::string put_binding(const ingest::ParsingBinding& binding);

  std::vector<std::string> equipment_names() const;
  model::EquipmentModel get_equipment(std::string_view name) const;
  std::vector<ingest::ParsingProcedure> procedures() const;
  std::vector<ingest::ParsingBinding> bindings() const;

  /// Ignores record.record_id; returns the new msr_number.
  std::int64_t put_measurement(const MeasurementRecord& record);
  MeasurementRecord get_measurement(std::int64_t record_id) const;
  std::vector<RecordSummary> query(const QueryFilter& filter) const;
  std::vector<std::int64_t> measurement_ids() const;

  void delete_measurement(std::int64_t record_id);
  void update_value(std::int64_t record_id, std::string_view parameter, std::string_view raw);

  std::int64_t row_count(std::string_view table) const;
  /// Rows that reference a missing parent, or values/series whose parameter
  /// belongs to a different equipment than their measurement.
  std::int64_t orphan_row_count() const;

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  Store(sqlite3* db, std::filesystem::path path);

  struct Closer {
    void operator()(sqlite3* db) const noexcept;
  };
  std::unique_ptr<sqlite3, Closer> db_;
  std::filesystem::path path_;
};

}  // namespace lvmforge::store
