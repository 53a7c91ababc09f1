#include "lvmforge/store.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "lvmforge/error.hpp"
#include "sqlite.hpp"

namespace lvmforge::store {

using detail::Statement;
using detail::Transaction;

namespace {

constexpr const char* kSchemaSql = R"sql(
CREATE TABLE IF NOT EXISTS t_eqp_equipments (
  eqp_number      INTEGER PRIMARY KEY,
  eqp_name        TEXT NOT NULL UNIQUE,
  eqp_producer    TEXT NOT NULL,
  eqp_description TEXT NOT NULL,
  eqp_webpage     TEXT,
  eqp_picture     TEXT,
  eqp_visualmodel TEXT,
  eqp_extensions  TEXT NOT NULL,
  eqp_ignoredkeys TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS t_psf_parsingfunction (
  psf_number  INTEGER PRIMARY KEY,
  psf_name    TEXT NOT NULL UNIQUE,
  psf_handler TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS t_efe_equipmentfileextension (
  efe_number    TEXT NOT NULL,
  eqp_number    INTEGER NOT NULL REFERENCES t_eqp_equipments(eqp_number),
  psf_number    INTEGER NOT NULL REFERENCES t_psf_parsingfunction(psf_number),
  efe_extension TEXT NOT NULL,
  PRIMARY KEY (efe_number, eqp_number),
  UNIQUE (eqp_number, psf_number, efe_extension),
  UNIQUE (eqp_number, efe_extension)
);
CREATE TABLE IF NOT EXISTS t_prm_parameters (
  prm_number     INTEGER PRIMARY KEY,
  eqp_number     INTEGER NOT NULL REFERENCES t_eqp_equipments(eqp_number),
  prm_name       TEXT NOT NULL,
  prm_category   TEXT NOT NULL,
  prm_type       TEXT NOT NULL,
  prm_unit       TEXT,
  prm_source     TEXT NOT NULL,
  prm_enumdomain TEXT NOT NULL,
  prm_order      INTEGER NOT NULL,
  UNIQUE (eqp_number, prm_name)
);
CREATE TABLE IF NOT EXISTS t_msr_measurements (
  msr_number      INTEGER PRIMARY KEY,
  eqp_number      INTEGER NOT NULL REFERENCES t_eqp_equipments(eqp_number),
  msr_imported_at TEXT NOT NULL,
  msr_sourcefile  TEXT NOT NULL,
  msr_warnings    TEXT NOT NULL,
  msr_notes       TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS t_val_values (
  val_number INTEGER PRIMARY KEY,
  msr_number INTEGER NOT NULL REFERENCES t_msr_measurements(msr_number) ON DELETE CASCADE,
  prm_number INTEGER NOT NULL REFERENCES t_prm_parameters(prm_number),
  val_text   TEXT NOT NULL,
  UNIQUE (msr_number, prm_number)
);
CREATE TABLE IF NOT EXISTS t_ser_series (
  ser_number INTEGER PRIMARY KEY,
  msr_number INTEGER NOT NULL REFERENCES t_msr_measurements(msr_number) ON DELETE CASCADE,
  prm_number INTEGER NOT NULL REFERENCES t_prm_parameters(prm_number),
  ser_index  INTEGER NOT NULL,
  ser_x      REAL NOT NULL,
  ser_y      REAL NOT NULL,
  UNIQUE (msr_number, prm_number, ser_index)
);
CREATE INDEX IF NOT EXISTS i_val_msr ON t_val_values(msr_number);
CREATE INDEX IF NOT EXISTS i_msr_eqp ON t_msr_measurements(eqp_number);
)sql";

std::string to_json(const auto& strings) { return nlohmann::json(strings).dump(); }

std::vector<std::string> from_json(const std::string& text) {
  if (text.empty()) return {};
  return nlohmann::json::parse(text).get<std::vector<std::string>>();
}

struct StoredParameter {
  std::int64_t prm_number = 0;
  model::ParameterDefinition def;
};

model::ParameterDefinition read_parameter(const Statement& s, int first_col) {
  model::ParameterDefinition p;
  p.name = s.text(first_col);
  const auto category = model::parse_category(s.text(first_col + 1));
  const auto type = model::parse_value_type(s.text(first_col + 2));
  const auto source = model::parse_value_source(s.text(first_col + 4));
  if (!category || !type || !source) throw Error(Errc::StorageError, "corrupt parameter row for " + p.name);
  p.category = *category;
  p.value_type = *type;
  p.unit = s.optional_text(first_col + 3);
  p.source = *source;
  p.enum_domain = from_json(s.text(first_col + 5));
  return p;
}

constexpr const char* kParamColumns = "prm_name, prm_category, prm_type, prm_unit, prm_source, prm_enumdomain";

std::optional<std::int64_t> equipment_number(sqlite3* db, std::string_view name) {
  Statement s(db, "SELECT eqp_number FROM t_eqp_equipments WHERE eqp_name = ?1");
  s.bind(1, name);
  if (!s.step()) return std::nullopt;
  return s.integer(0);
}

std::map<std::string, StoredParameter, std::less<>> parameters_of(sqlite3* db, std::int64_t eqp_number) {
  Statement s(db, std::string("SELECT prm_number, ") + kParamColumns +
                      " FROM t_prm_parameters WHERE eqp_number = ?1 ORDER BY prm_order");
  s.bind(1, eqp_number);
  std::map<std::string, StoredParameter, std::less<>> out;
  while (s.step()) {
    StoredParameter p{s.integer(0), read_parameter(s, 1)};
    const std::string key = p.def.name;
    out.emplace(key, std::move(p));
  }
  return out;
}

// eqp_number of an existing measurement.
std::int64_t measurement_equipment(sqlite3* db, std::int64_t record_id) {
  Statement s(db, "SELECT eqp_number FROM t_msr_measurements WHERE msr_number = ?1");
  s.bind(1, record_id);
  if (!s.step()) throw Error(Errc::NotFound, "no measurement " + std::to_string(record_id));
  return s.integer(0);
}

}  // namespace

void Store::Closer::operator()(sqlite3* db) const noexcept { sqlite3_close_v2(db); }

Store::Store(sqlite3* db, std::filesystem::path path) : db_(db), path_(std::move(path)) {}
Store::Store(Store&&) noexcept = default;
Store& Store::operator=(Store&&) noexcept = default;
Store::~Store() = default;

Store Store::open(const std::filesystem::path& path) {
  const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  if (!std::filesystem::is_directory(parent))
    throw Error(Errc::StorageUnavailable, "directory " + parent.string() + " does not exist");
  if (std::filesystem::is_directory(path))
    throw Error(Errc::StorageUnavailable, path.string() + " is a directory");

  sqlite3* raw = nullptr;
  const int rc = sqlite3_open_v2(path.c_str(), &raw, SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE, nullptr);
  Store store(raw, path);
  if (rc != SQLITE_OK) throw Error(Errc::StorageUnavailable, "cannot open " + path.string() + ": " + sqlite3_errstr(rc));
  sqlite3* db = store.db_.get();
  sqlite3_extended_result_codes(db, 1);
  sqlite3_busy_timeout(db, 5000);

  try {
    detail::exec(db, "PRAGMA foreign_keys = ON");
    Statement probe(db, "SELECT name FROM sqlite_master WHERE type = 'table'");
    bool has_meta = false;
    bool has_tables = false;
    while (probe.step()) {
      has_tables = true;
      if (probe.text(0) == "t_meta") has_meta = true;
    }

    if (has_meta) {
      Statement v(db, "SELECT meta_value FROM t_meta WHERE meta_key = 'schema_version'");
      const std::string found = v.step() ? v.text(0) : std::string("<missing>");
      if (found != std::to_string(kSchemaVersion))
        throw Error(Errc::SchemaVersionMismatch, path.string() + " has schema version " + found + ", expected " +
                                                     std::to_string(kSchemaVersion));
    } else if (has_tables) {
      throw Error(Errc::SchemaVersionMismatch, path.string() + " is a database without a schema version marker");
    }

    sqlite3_exec(db, "PRAGMA journal_mode = WAL", nullptr, nullptr, nullptr);
    Transaction tx(db);
    detail::exec(db, "CREATE TABLE IF NOT EXISTS t_meta (meta_key TEXT PRIMARY KEY, meta_value TEXT NOT NULL)");
    detail::exec(db, kSchemaSql);
    Statement mark(db, "INSERT OR IGNORE INTO t_meta (meta_key, meta_value) VALUES ('schema_version', ?1)");
    mark.bind(1, std::to_string(kSchemaVersion)).run();
    tx.commit();
  } catch (const Error& e) {
    if (e.code() == Errc::StorageError) throw Error(Errc::StorageUnavailable, e.what());
    throw;
  }
  return store;
}

std::int64_t Store::put_equipment(const model::EquipmentModel& m) {
  sqlite3* db = db_.get();
  Transaction tx(db);
  Statement eqp(db,
                "INSERT INTO t_eqp_equipments (eqp_name, eqp_producer, eqp_description, eqp_webpage, eqp_picture, "
                "eqp_visualmodel, eqp_extensions, eqp_ignoredkeys) VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8)");
  eqp.bind(1, m.name)
      .bind(2, m.producer)
      .bind(3, m.description)
      .bind(4, m.webpage)
      .bind(5, m.picture)
      .bind(6, m.visual_model)
      .bind(7, to_json(m.extensions))
      .bind(8, to_json(m.ignored_file_keys));
  eqp.run();
  const std::int64_t eqp_number = sqlite3_last_insert_rowid(db);

  Statement prm(db,
                "INSERT INTO t_prm_parameters (eqp_number, prm_name, prm_category, prm_type, prm_unit, prm_source, "
                "prm_enumdomain, prm_order) VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8)");
  std::int64_t order = 0;
  for (const auto& p : m.parameters) {
    prm.reset();
    prm.bind(1, eqp_number)
        .bind(2, p.name)
        .bind(3, model::to_string(p.category))
        .bind(4, model::to_string(p.value_type))
        .bind(5, p.unit)
        .bind(6, model::to_string(p.source))
        .bind(7, to_json(p.enum_domain))
        .bind(8, order++);
    prm.run();
  }
  tx.commit();
  return eqp_number;
}

std::int64_t Store::put_procedure(const ingest::ParsingProcedure& procedure) {
  sqlite3* db = db_.get();
  Transaction tx(db);
  Statement s(db, "INSERT INTO t_psf_parsingfunction (psf_name, psf_handler) VALUES (?1, ?2)");
  s.bind(1, procedure.name).bind(2, procedure.handler_id).run();
  const std::int64_t id = sqlite3_last_insert_rowid(db);
  tx.commit();
  return id;
}

std::string Store::put_binding(const ingest::ParsingBinding& b) {
  if (b.binding_name != ingest::binding_name(b.procedure_name, b.extension))
    throw Error(Errc::InvariantViolation, "binding name " + b.binding_name + " does not follow PROCEDURE_EXT");
  sqlite3* db = db_.get();
  Transaction tx(db);
  const auto eqp_number = equipment_number(db, b.equipment_name);
  if (!eqp_number) throw Error(Errc::ForeignKeyViolation, "no equipment row for " + b.equipment_name);
  Statement psf(db, "SELECT psf_number FROM t_psf_parsingfunction WHERE psf_name = ?1");
  psf.bind(1, b.procedure_name);
  if (!psf.step()) throw Error(Errc::ForeignKeyViolation, "no parsing function row for " + b.procedure_name);
  const std::int64_t psf_number = psf.integer(0);

  Statement s(db,
              "INSERT INTO t_efe_equipmentfileextension (efe_number, eqp_number, psf_number, efe_extension) "
              "VALUES (?1, ?2, ?3, ?4)");
  s.bind(1, b.binding_name).bind(2, *eqp_number).bind(3, psf_number).bind(4, b.extension).run();
  tx.commit();
  return b.binding_name;
}

std::vector<std::string> Store::equipment_names() const {
  Statement s(db_.get(), "SELECT eqp_name FROM t_eqp_equipments ORDER BY eqp_number");
  std::vector<std::string> out;
  while (s.step()) out.push_back(s.text(0));
  return out;
}

model::EquipmentModel Store::get_equipment(std::string_view name) const {
  sqlite3* db = db_.get();
  Statement s(db,
              "SELECT eqp_number, eqp_name, eqp_producer, eqp_description, eqp_webpage, eqp_picture, "
              "eqp_visualmodel, eqp_extensions, eqp_ignoredkeys FROM t_eqp_equipments WHERE eqp_name = ?1");
  s.bind(1, name);
  if (!s.step()) throw Error(Errc::NotFound, "no equipment '" + std::string(name) + "'");
  model::EquipmentModel m;
  const std::int64_t eqp_number = s.integer(0);
  m.name = s.text(1);
  m.producer = s.text(2);
  m.description = s.text(3);
  m.webpage = s.optional_text(4);
  m.picture = s.optional_text(5);
  m.visual_model = s.optional_text(6);
  for (auto& e : from_json(s.text(7))) m.extensions.insert(std::move(e));
  for (auto& k : from_json(s.text(8))) m.ignored_file_keys.insert(std::move(k));

  Statement p(db, std::string("SELECT ") + kParamColumns +
                      " FROM t_prm_parameters WHERE eqp_number = ?1 ORDER BY prm_order");
  p.bind(1, eqp_number);
  while (p.step()) m.parameters.push_back(read_parameter(p, 0));
  return m;
}

std::vector<ingest::ParsingProcedure> Store::procedures() const {
  Statement s(db_.get(), "SELECT psf_name, psf_handler FROM t_psf_parsingfunction ORDER BY psf_number");
  std::vector<ingest::ParsingProcedure> out;
  while (s.step()) out.push_back({s.text(0), s.text(1)});
  return out;
}

std::vector<ingest::ParsingBinding> Store::bindings() const {
  Statement s(db_.get(),
              "SELECT f.efe_number, e.eqp_name, p.psf_name, f.efe_extension "
              "FROM t_efe_equipmentfileextension f "
              "JOIN t_eqp_equipments e ON e.eqp_number = f.eqp_number "
              "JOIN t_psf_parsingfunction p ON p.psf_number = f.psf_number "
              "ORDER BY e.eqp_number, f.efe_extension");
  std::vector<ingest::ParsingBinding> out;
  while (s.step()) out.push_back({s.text(0), s.text(1), s.text(2), s.text(3)});
  return out;
}

std::int64_t Store::put_measurement(const MeasurementRecord& r) {
  sqlite3* db = db_.get();
  Transaction tx(db);
  const auto eqp_number = equipment_number(db, r.equipment_name);
  if (!eqp_number) throw Error(Errc::UnknownEquipment, "no equipment '" + r.equipment_name + "'");
  const auto params = parameters_of(db, *eqp_number);

  auto lookup = [&](const std::string& name) -> const StoredParameter& {
    const auto it = params.find(name);
    if (it == params.end())
      throw Error(Errc::UnknownParameter, r.equipment_name + " has no parameter '" + name + "'");
    return it->second;
  };

  Statement msr(db,
                "INSERT INTO t_msr_measurements (eqp_number, msr_imported_at, msr_sourcefile, msr_warnings, "
                "msr_notes) VALUES (?1, ?2, ?3, ?4, ?5)");
  msr.bind(1, *eqp_number)
      .bind(2, format_iso8601(r.imported_at))
      .bind(3, r.source_file)
      .bind(4, to_json(r.warnings))
      .bind(5, to_json(r.notes));
  msr.run();
  const std::int64_t msr_number = sqlite3_last_insert_rowid(db);

  Statement val(db, "INSERT INTO t_val_values (msr_number, prm_number, val_text) VALUES (?1, ?2, ?3)");
  for (const auto& [category, list] : r.values) {
    for (const auto& nv : list) {
      const StoredParameter& p = lookup(nv.name);
      if (p.def.category != category)
        throw Error(Errc::UnknownParameter, "'" + nv.name + "' is not in category " +
                                                std::string(model::to_string(category)));
      const std::string text = model::render_value(nv.value);
      // The canonical text must read back as the same value under the declared type.
      if (model::validate_value(p.def, text) != nv.value)
        throw Error(Errc::TypeMismatch, "value of '" + nv.name + "' does not match type " +
                                            std::string(model::to_string(p.def.value_type)));
      val.reset();
      val.bind(1, msr_number).bind(2, p.prm_number).bind(3, text).run();
    }
  }

  Statement ser(db,
                "INSERT INTO t_ser_series (msr_number, prm_number, ser_index, ser_x, ser_y) "
                "VALUES (?1, ?2, ?3, ?4, ?5)");
  for (const auto& series : r.series) {
    const StoredParameter& p = lookup(series.name);
    if (p.def.category != model::ConceptCategory::Data)
      throw Error(Errc::UnknownParameter, "series '" + series.name + "' is not a Data parameter");
    if (p.def.unit != series.unit)
      throw Error(Errc::InvariantViolation, "series '" + series.name + "' unit differs from the model");
    std::int64_t index = 0;
    for (const auto& pt : series.points) {
      ser.reset();
      ser.bind(1, msr_number).bind(2, p.prm_number).bind(3, index++).bind(4, pt.x).bind(5, pt.y).run();
    }
  }
  tx.commit();
  return msr_number;
}

MeasurementRecord Store::get_measurement(std::int64_t record_id) const {
  sqlite3* db = db_.get();
  Statement msr(db,
                "SELECT e.eqp_name, m.msr_imported_at, m.msr_sourcefile, m.msr_warnings, m.msr_notes "
                "FROM t_msr_measurements m JOIN t_eqp_equipments e ON e.eqp_number = m.eqp_number "
                "WHERE m.msr_number = ?1");
  msr.bind(1, record_id);
  if (!msr.step()) throw Error(Errc::NotFound, "no measurement " + std::to_string(record_id));

  MeasurementRecord r;
  r.record_id = record_id;
  r.equipment_name = msr.text(0);
  const auto ts = parse_iso8601(msr.text(1));
  if (!ts) throw Error(Errc::StorageError, "corrupt timestamp on measurement " + std::to_string(record_id));
  r.imported_at = *ts;
  r.source_file = msr.text(2);
  r.warnings = from_json(msr.text(3));
  r.notes = from_json(msr.text(4));

  Statement val(db, std::string("SELECT ") + kParamColumns +
                        ", v.val_text FROM t_val_values v JOIN t_prm_parameters p ON p.prm_number = v.prm_number "
                        "WHERE v.msr_number = ?1 ORDER BY p.prm_order");
  val.bind(1, record_id);
  while (val.step()) {
    const model::ParameterDefinition def = read_parameter(val, 0);
    r.values[def.category].push_back({def.name, model::validate_value(def, val.text(6))});
  }

  Statement ser(db,
                "SELECT p.prm_name, p.prm_unit, s.ser_x, s.ser_y FROM t_ser_series s "
                "JOIN t_prm_parameters p ON p.prm_number = s.prm_number "
                "WHERE s.msr_number = ?1 ORDER BY p.prm_order, s.ser_index");
  ser.bind(1, record_id);
  while (ser.step()) {
    const std::string name = ser.text(0);
    if (r.series.empty() || r.series.back().name != name) r.series.push_back({name, ser.optional_text(1), {}});
    r.series.back().points.push_back({ser.real(2), ser.real(3)});
  }
  return r;
}

std::vector<RecordSummary> Store::query(const QueryFilter& f) const {
  sqlite3* db = db_.get();
  std::string sql =
      "SELECT m.msr_number, e.eqp_name, m.msr_imported_at, m.msr_sourcefile "
      "FROM t_msr_measurements m JOIN t_eqp_equipments e ON e.eqp_number = m.eqp_number WHERE 1 = 1";
  constexpr const char* kValueOf =
      "(SELECT v.val_text FROM t_val_values v JOIN t_prm_parameters p ON p.prm_number = v.prm_number "
      "WHERE v.msr_number = m.msr_number AND p.prm_name = ";
  if (f.equipment) sql += " AND e.eqp_name = ?1";
  if (f.operator_name) sql += std::string(" AND ") + kValueOf + "'Operator') = ?2";
  if (f.date_from) sql += std::string(" AND ") + kValueOf + "'Date') >= ?3";
  if (f.date_to) sql += std::string(" AND ") + kValueOf + "'Date') <= ?4";
  sql += " ORDER BY m.msr_imported_at, m.msr_number";

  Statement s(db, sql);
  if (f.equipment) s.bind(1, *f.equipment);
  if (f.operator_name) s.bind(2, *f.operator_name);
  if (f.date_from) s.bind(3, format_date(*f.date_from));
  if (f.date_to) s.bind(4, format_date(*f.date_to));

  std::vector<RecordSummary> out;
  while (s.step()) {
    const auto ts = parse_iso8601(s.text(2));
    if (!ts) throw Error(Errc::StorageError, "corrupt timestamp on measurement " + std::to_string(s.integer(0)));
    out.push_back({s.integer(0), s.text(1), *ts, s.text(3)});
  }

  if (f.parameter) {
    Statement pv(db, std::string("SELECT ") + kParamColumns +
                         ", v.val_text FROM t_val_values v JOIN t_prm_parameters p ON p.prm_number = v.prm_number "
                         "WHERE v.msr_number = ?1 AND p.prm_name = ?2 AND p.prm_category = ?3");
    std::erase_if(out, [&](const RecordSummary& summary) {
      pv.reset();
      pv.bind(1, summary.record_id).bind(2, f.parameter->parameter).bind(3, model::to_string(f.parameter->category));
      if (!pv.step()) return true;
      const model::ParameterDefinition def = read_parameter(pv, 0);
      std::string wanted = f.parameter->value;
      try {
        wanted = model::render_value(model::validate_value(def, wanted));
      } catch (const Error&) {
        return true;  // cannot equal any stored value of this type
      }
      return pv.text(6) != wanted;
    });
  }
  return out;
}

std::vector<std::int64_t> Store::measurement_ids() const {
  Statement s(db_.get(), "SELECT msr_number FROM t_msr_measurements ORDER BY msr_number");
  std::vector<std::int64_t> out;
  while (s.step()) out.push_back(s.integer(0));
  return out;
}

void Store::delete_measurement(std::int64_t record_id) {
  sqlite3* db = db_.get();
  Transaction tx(db);
  measurement_equipment(db, record_id);
  for (const char* sql : {"DELETE FROM t_val_values WHERE msr_number = ?1", "DELETE FROM t_ser_series WHERE msr_number = ?1",
                          "DELETE FROM t_msr_measurements WHERE msr_number = ?1"}) {
    Statement s(db, sql);
    s.bind(1, record_id).run();
  }
  tx.commit();
}

void Store::update_value(std::int64_t record_id, std::string_view parameter, std::string_view raw) {
  sqlite3* db = db_.get();
  Transaction tx(db);
  const std::int64_t eqp_number = measurement_equipment(db, record_id);
  const auto params = parameters_of(db, eqp_number);
  const auto it = params.find(parameter);
  if (it == params.end() || it->second.def.category == model::ConceptCategory::Data)
    throw Error(Errc::UnknownParameter, "no editable parameter '" + std::string(parameter) + "'");
  const std::string text = model::render_value(model::validate_value(it->second.def, raw));

  Statement s(db,
              "INSERT INTO t_val_values (msr_number, prm_number, val_text) VALUES (?1, ?2, ?3) "
              "ON CONFLICT (msr_number, prm_number) DO UPDATE SET val_text = excluded.val_text");
  s.bind(1, record_id).bind(2, it->second.prm_number).bind(3, text).run();
  tx.commit();
}

std::int64_t Store::row_count(std::string_view table) const {
  const bool known = table == "t_meta" || std::find(std::begin(kTables), std::end(kTables), table) != std::end(kTables);
  if (!known) throw Error(Errc::NotFound, "no table '" + std::string(table) + "'");
  Statement s(db_.get(), "SELECT COUNT(*) FROM " + std::string(table));
  s.step();
  return s.integer(0);
}

std::int64_t Store::orphan_row_count() const {
  constexpr const char* kSql = R"sql(
SELECT
  (SELECT COUNT(*) FROM t_val_values v WHERE NOT EXISTS (SELECT 1 FROM t_msr_measurements m WHERE m.msr_number = v.msr_number)
                                          OR NOT EXISTS (SELECT 1 FROM t_prm_parameters p WHERE p.prm_number = v.prm_number))
+ (SELECT COUNT(*) FROM t_ser_series s WHERE NOT EXISTS (SELECT 1 FROM t_msr_measurements m WHERE m.msr_number = s.msr_number)
                                          OR NOT EXISTS (SELECT 1 FROM t_prm_parameters p WHERE p.prm_number = s.prm_number))
+ (SELECT COUNT(*) FROM t_efe_equipmentfileextension f
     WHERE NOT EXISTS (SELECT 1 FROM t_eqp_equipments e WHERE e.eqp_number = f.eqp_number)
        OR NOT EXISTS (SELECT 1 FROM t_psf_parsingfunction p WHERE p.psf_number = f.psf_number))
+ (SELECT COUNT(*) FROM t_prm_parameters p WHERE NOT EXISTS (SELECT 1 FROM t_eqp_equipments e WHERE e.eqp_number = p.eqp_number))
+ (SELECT COUNT(*) FROM t_msr_measurements m WHERE NOT EXISTS (SELECT 1 FROM t_eqp_equipments e WHERE e.eqp_number = m.eqp_number))
+ (SELECT COUNT(*) FROM t_val_values v JOIN t_msr_measurements m ON m.msr_number = v.msr_number
     JOIN t_prm_parameters p ON p.prm_number = v.prm_number WHERE p.eqp_number <> m.eqp_number)
+ (SELECT COUNT(*) FROM t_ser_series s JOIN t_msr_measurements m ON m.msr_number = s.msr_number
     JOIN t_prm_parameters p ON p.prm_number = s.prm_number WHERE p.eqp_number <> m.eqp_number)
)sql";
  Statement s(db_.get(), kSql);
  s.step();
  return s.integer(0);
}

}  // namespace lvmforge::store
