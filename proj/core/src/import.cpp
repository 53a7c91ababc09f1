#include <fstream>
#include <sstream>

#include "lvmforge/error.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/store.hpp"

namespace lvmforge::ingest {

ParserRegistry load_registry(const store::Store& store) {
  ParserRegistry registry = ParserRegistry::with_builtin_handlers();
  for (const auto& name : store.equipment_names()) registry.add_equipment(store.get_equipment(name));
  for (auto& p : store.procedures()) registry.register_procedure(std::move(p));
  for (const auto& b : store.bindings()) registry.bind(b.equipment_name, b.procedure_name, b.extension);
  return registry;
}

std::int64_t import_file(const std::filesystem::path& path, std::string_view equipment,
                         const ParserRegistry& registry, store::Store& store, Timestamp imported_at) {
  const std::string filename = path.filename().string();
  const ParsingProcedure& procedure = registry.resolve(equipment, filename);
  const ParseHandler& handler = registry.handler(procedure);

  if (!std::filesystem::is_regular_file(path)) throw Error(Errc::FileNotFound, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "failed reading " + path.string());

  MeasurementRecord rec = handler(content.str(), registry.equipment(equipment), filename);
  rec.equipment_name = std::string(equipment);
  rec.source_file = filename;
  rec.imported_at = imported_at;
  return store.put_measurement(rec);
}

}  // namespace lvmforge::ingest
