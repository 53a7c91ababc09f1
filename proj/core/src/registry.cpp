#include <algorithm>

#include "lvmforge/error.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::ingest {

std::string binding_name(std::string_view procedure, std::string_view extension) {
  return text::to_upper(procedure) + "_" + text::to_upper(extension);
}

std::string file_extension(std::string_view filename) {
  const auto slash = filename.find_last_of("/\\");
  if (slash != std::string_view::npos) filename.remove_prefix(slash + 1);
  const auto dot = filename.rfind('.');
  if (dot == std::string_view::npos || dot + 1 == filename.size()) return {};
  return text::to_lower(filename.substr(dot + 1));
}

std::string default_handler_for(std::string_view procedure_name) {
  constexpr std::string_view suffix = "_PARSING";
  std::string upper = text::to_upper(procedure_name);
  if (upper.size() > suffix.size() && std::string_view(upper).ends_with(suffix)) upper.resize(upper.size() - suffix.size());
  return text::to_lower(upper);
}

ParserRegistry ParserRegistry::with_builtin_handlers() {
  ParserRegistry r;
  r.register_handler(std::string(kLvmHandler),
                     [](std::string_view content, const model::EquipmentModel& model, std::string_view source_file) {
                       MeasurementRecord rec = map_lvm_to_record(lvm::parse_lvm(content), model);
                       rec.source_file = source_file;
                       return rec;
                     });
  return r;
}

void ParserRegistry::register_handler(std::string handler_id, ParseHandler handler) {
  handlers_[std::move(handler_id)] = std::move(handler);
}

void ParserRegistry::register_procedure(ParsingProcedure procedure) {
  if (text::trim(procedure.name).empty()) throw Error(Errc::EmptyName, "procedure name is empty");
  if (procedures_.count(procedure.name))
    throw Error(Errc::DuplicateProcedure, "procedure '" + procedure.name + "' is already registered");
  if (!has_handler(procedure.handler_id))
    throw Error(Errc::UnknownHandler, "no handler '" + procedure.handler_id + "' for procedure " + procedure.name);
  const std::string key = procedure.name;
  procedures_.emplace(key, std::move(procedure));
}

void ParserRegistry::add_equipment(model::EquipmentModel model) {
  if (equipment_.count(model.name))
    throw Error(Errc::DuplicateEquipmentName, "equipment '" + model.name + "' is already registered");
  const std::string key = model.name;
  equipment_.emplace(key, std::move(model));
}

ParsingBinding ParserRegistry::bind(std::string_view equipment_name, std::string_view procedure,
                                    std::string_view extension) {
  const auto eq = equipment_.find(equipment_name);
  if (eq == equipment_.end()) throw Error(Errc::UnknownEquipment, "no equipment '" + std::string(equipment_name) + "'");
  if (!procedures_.count(procedure))
    throw Error(Errc::UnknownProcedure, "no procedure '" + std::string(procedure) + "'");

  std::string ext = text::to_lower(text::trim(extension));
  if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
  if (!eq->second.extensions.count(ext))
    throw Error(Errc::ExtensionNotDeclared,
                "extension '" + ext + "' is not declared by " + std::string(equipment_name));

  const auto dup = std::find_if(bindings_.begin(), bindings_.end(), [&](const ParsingBinding& b) {
    return b.equipment_name == equipment_name && b.extension == ext;
  });
  if (dup != bindings_.end())
    throw Error(Errc::DuplicateBinding,
                std::string(equipment_name) + " already parses ." + ext + " with " + dup->procedure_name);

  ParsingBinding b{binding_name(procedure, ext), std::string(equipment_name), std::string(procedure), ext};
  bindings_.push_back(b);
  return b;
}

const ParsingProcedure& ParserRegistry::resolve(std::string_view equipment_name, std::string_view filename) const {
  const std::string ext = file_extension(filename);
  for (const auto& b : bindings_) {
    if (b.equipment_name == equipment_name && b.extension == ext) return procedures_.find(b.procedure_name)->second;
  }
  throw Error(Errc::NoBinding, "no parsing procedure for (" + std::string(equipment_name) + ", ." + ext + ")");
}

const ParseHandler& ParserRegistry::handler(const ParsingProcedure& procedure) const {
  const auto it = handlers_.find(procedure.handler_id);
  if (it == handlers_.end()) throw Error(Errc::UnknownHandler, "no handler '" + procedure.handler_id + "'");
  return it->second;
}

const model::EquipmentModel& ParserRegistry::equipment(std::string_view name) const {
  const auto it = equipment_.find(name);
  if (it == equipment_.end()) throw Error(Errc::UnknownEquipment, "no equipment '" + std::string(name) + "'");
  return it->second;
}

bool ParserRegistry::has_handler(std::string_view handler_id) const { return handlers_.find(handler_id) != handlers_.end(); }

std::vector<ParsingProcedure> ParserRegistry::procedures() const {
  std::vector<ParsingProcedure> out;
  for (const auto& [name, p] : procedures_) out.push_back(p);
  return out;
}

}  // namespace lvmforge::ingest
