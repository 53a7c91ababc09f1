#include "lvmforge/error.hpp"

namespace lvmforge {

std::string_view error_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingMagicLine: return "MissingMagicLine";
    case Errc::MissingHeaderTerminator: return "MissingHeaderTerminator";
    case Errc::MalformedNumber: return "MalformedNumber";
    case Errc::ChannelCountMismatch: return "ChannelCountMismatch";
    case Errc::UnsupportedFeature: return "UnsupportedFeature";
    case Errc::InvalidHeaderValue: return "InvalidHeaderValue";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyName: return "EmptyName";
    case Errc::DuplicateEquipmentName: return "DuplicateEquipmentName";
    case Errc::DuplicateParameterName: return "DuplicateParameterName";
    case Errc::MissingEnumDomain: return "MissingEnumDomain";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::InvalidChannelCount: return "InvalidChannelCount";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::MalformedDefinition: return "MalformedDefinition";
    case Errc::DuplicateProcedure: return "DuplicateProcedure";
    case Errc::UnknownHandler: return "UnknownHandler";
    case Errc::UnknownEquipment: return "UnknownEquipment";
    case Errc::UnknownProcedure: return "UnknownProcedure";
    case Errc::ExtensionNotDeclared: return "ExtensionNotDeclared";
    case Errc::DuplicateBinding: return "DuplicateBinding";
    case Errc::NoBinding: return "NoBinding";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::StorageUnavailable: return "StorageUnavailable";
    case Errc::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::ForeignKeyViolation: return "ForeignKeyViolation";
    case Errc::UnknownParameter: return "UnknownParameter";
    case Errc::NotFound: return "NotFound";
    case Errc::StorageError: return "StorageError";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::NoCrossing: return "NoCrossing";
    case Errc::DegenerateStep: return "DegenerateStep";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::NoSteadyState: return "NoSteadyState";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lvmforge
