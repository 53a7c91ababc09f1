#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lvmforge/equipment.hpp"
#include "lvmforge/lvm.hpp"
#include "lvmforge/record.hpp"

namespace lvmforge::store {
class Store;
}

namespace lvmforge::ingest {

/// A named parser, e.g. LVM_PARSING, backed by an in-process handler.
struct ParsingProcedure {
  std::string name;
  std::string handler_id;

  friend bool operator==(const ParsingProcedure&, const ParsingProcedure&) = default;
};

/// Associates one (equipment, extension) pair with a parsing procedure.
struct ParsingBinding {
  std::string binding_name;  // PROCEDURE_EXT, e.g. LVM_PARSING_LVM
  std::string equipment_name;
  std::string procedure_name;
  std::string extension;  // lowercase

  friend bool operator==(const ParsingBinding&, const ParsingBinding&) = default;
};

using ParseHandler = std::function<MeasurementRecord(std::string_view content, const model::EquipmentModel& model,
                                                     std::string_view source_file)>;

inline constexpr std::string_view kLvmHandler = "lvm";
inline constexpr std::string_view kLvmProcedure = "LVM_PARSING";

std::string binding_name(std::string_view procedure, std::string_view extension);

/// Lowercased suffix after the final dot of the file name; empty if none.
std::string file_extension(std::string_view filename);

/// Handler id implied by a procedure name: LVM_PARSING -> "lvm".
std::string default_handler_for(std::string_view procedure_name);

/// Parsers keyed by (equipment, extension).
///
/// Registration and binding follow a single-writer contract (startup or one
/// CLI command); resolve() and handler() are const and safe to call
/// concurrently once the registry is built.
class ParserRegistry {
 public:
  /// Registry with the built-in handlers (currently "lvm") available.
  static ParserRegistry with_builtin_handlers();

  void register_handler(std::string handler_id, ParseHandler handler);
  void register_procedure(ParsingProcedure procedure);
  void add_equipment(model::EquipmentModel model);

  ParsingBinding bind(std::string_view equipment, std::string_view procedure, std::string_view extension);

  const ParsingProcedure& resolve(std::string_view equipment, std::string_view filename) const;

  const ParseHandler& handler(const ParsingProcedure& procedure) const;
  const model::EquipmentModel& equipment(std::string_view name) const;
  bool has_handler(std::string_view handler_id) const;

  const std::vector<ParsingBinding>& bindings() const noexcept { return bindings_; }
  std::vector<ParsingProcedure> procedures() const;

 private:
  std::map<std::string, ParseHandler, std::less<>> handlers_;
  std::map<std::string, ParsingProcedure, std::less<>> procedures_;
  std::map<std::string, model::EquipmentModel, std::less<>> equipment_;
  std::vector<ParsingBinding> bindings_;
};

/// Maps a parsed .lvm file onto an equipment model.
///
/// Header and segment keys are matched to parameters by name and typed with
/// model::validate_value. Keys in the model's ignored set are dropped
/// silently. Non-standard keys the model does not declare each add a warning.
/// Standard .lvm keys the model does not declare, and the full per-channel
/// lists behind channel-0 values such as X0, go to the record notes.
/// Channel columns of the first segment become series named after the
/// model's channel parameters; channels with no values are omitted.
MeasurementRecord map_lvm_to_record(const lvm::LvmDocument& doc, const model::EquipmentModel& model);

/// Rebuilds the registry from persisted equipment, procedures and bindings.
ParserRegistry load_registry(const store::Store& store);

/// Reads, parses, maps and persists one measurement file. Returns its id.
std::int64_t import_file(const std::filesystem::path& path, std::string_view equipment,
                         const ParserRegistry& registry, store::Store& store, Timestamp imported_at = now_utc());

}  // namespace lvmforge::ingest
