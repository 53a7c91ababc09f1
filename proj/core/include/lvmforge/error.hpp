#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvmforge {

/// Stable error identifiers. The CLI prints them as `ERROR <Name>: <detail>`,
/// so renaming an enumerator is a user-visible change.
enum class Errc {
  // .lvm format
  MissingMagicLine,
  MissingHeaderTerminator,
  MalformedNumber,
  ChannelCountMismatch,
  UnsupportedFeature,
  InvalidHeaderValue,
  InvariantViolation,
  IndexOutOfRange,
  // equipment models
  EmptyName,
  DuplicateEquipmentName,
  DuplicateParameterName,
  MissingEnumDomain,
  UnknownUnit,
  InvalidChannelCount,
  TypeMismatch,
  MalformedDefinition,
  // ingest
  DuplicateProcedure,
  UnknownHandler,
  UnknownEquipment,
  UnknownProcedure,
  ExtensionNotDeclared,
  DuplicateBinding,
  NoBinding,
  FileNotFound,
  // store
  StorageUnavailable,
  SchemaVersionMismatch,
  DuplicateKey,
  ForeignKeyViolation,
  UnknownParameter,
  NotFound,
  StorageError,
  // analysis
  DenominatorZero,
  LengthMismatch,
  InsufficientData,
  NoCrossing,
  DegenerateStep,
  InvalidParameters,
  GridMismatch,
  NoSteadyState,
  // misc
  IoError,
};

std::string_view error_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail) : std::runtime_error(detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  Errc code_;
};

}  // namespace lvmforge
