#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lvmforge/analysis.hpp"
#include "lvmforge/error.hpp"
#include "lvmforge/export.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/store.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::cli {

namespace {

struct Options {
  std::string store;

  std::string model_file;
  std::string model_name;
  int channels = 3;

  std::string proc_name;
  std::string handler;

  std::string bind_equipment;
  std::string bind_proc;
  std::string bind_ext;

  std::string file;
  std::string equipment;
  std::string operator_name;
  std::string date_from;
  std::string date_to;

  std::int64_t id = 0;
  std::string parameter;
  std::string value;
  std::string format;
  std::string out_path;

  std::string refs;
  std::string at;
  double tref30 = 0.0;
  int channel = 0;
  std::size_t window = analysis::kDefaultWindow;
  double epsilon = analysis::kDefaultEpsilon;
  std::optional<double> yinf_override;

  double tau = 0.0;
  double y0 = 0.0;
  double yinf = 0.0;
  double dt = 0.0;
  std::size_t n = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string gen_date;
  std::string gen_time;
  std::string gen_operator = "lvmforge";
};

// Raised for command-line problems detected after CLI11 accepted the syntax.
struct UsageError {
  std::string message;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

store::Store open_store(const Options& o, bool create) {
  if (o.store.empty()) throw UsageError{"no store given; pass --store or set LVMFORGE_STORE"};
  if (!create && !std::filesystem::exists(o.store))
    throw Error(Errc::StorageUnavailable, o.store + " does not exist; run 'init' first");
  return store::Store::open(o.store);
}

CalendarDate date_arg(const std::string& s, std::string_view flag) {
  const auto d = parse_date(s);
  if (!d) throw UsageError{std::string(flag) + " expects YYYY/MM/DD, got '" + s + "'"};
  return *d;
}

std::vector<double> real_list(const std::string& s, std::string_view flag) {
  std::vector<double> out;
  for (auto part : text::split(s, ',')) {
    const auto v = text::parse_real(text::trim(part));
    if (!v) throw UsageError{std::string(flag) + " expects comma-separated numbers, got '" + s + "'"};
    out.push_back(*v);
  }
  return out;
}

const ChannelSeries& channel_of(const MeasurementRecord& r, const model::EquipmentModel& m, int k) {
  const auto channels = model::channel_parameters(m);
  if (k < 0 || static_cast<std::size_t>(k) >= channels.size())
    throw Error(Errc::IndexOutOfRange, "channel " + std::to_string(k) + " of " + std::to_string(channels.size()));
  const ChannelSeries* s = r.find_series(channels[static_cast<std::size_t>(k)]->name);
  if (!s) throw Error(Errc::InsufficientData, channels[static_cast<std::size_t>(k)]->name + " has no samples");
  return *s;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot write " + path.string());
  f << content;
  f.close();
  if (!f) throw Error(Errc::IoError, "failed writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) throw Error(Errc::FileNotFound, path.string());
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void cmd_model_add(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  const auto existing = st.equipment_names();
  model::EquipmentModel m = model::parse_model_definition(read_file(o.model_file));
  model::define_equipment({m.name, m.producer, m.description, m.webpage, m.picture, m.visual_model}, existing);
  st.put_equipment(m);
  out << m.name << '\n';
}

void cmd_model_sytherm(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  const auto existing = st.equipment_names();
  model::EquipmentModel m = model::builtin_sytherm(o.channels);
  model::define_equipment({m.name, m.producer, m.description, {}, {}, {}}, existing);
  st.put_equipment(m);
  out << m.name << '\n';
}

void cmd_proc_add(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  auto registry = ingest::load_registry(st);
  ingest::ParsingProcedure p{o.proc_name, o.handler.empty() ? ingest::default_handler_for(o.proc_name) : o.handler};
  registry.register_procedure(p);
  st.put_procedure(p);
  out << p.name << '\n';
}

void cmd_bind(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  auto registry = ingest::load_registry(st);
  const auto b = registry.bind(o.bind_equipment, o.bind_proc, o.bind_ext);
  st.put_binding(b);
  out << b.binding_name << '\n';
}

void cmd_show(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  const MeasurementRecord r = st.get_measurement(o.id);
  out << "record\t" << r.record_id << '\n'
      << "equipment\t" << r.equipment_name << '\n'
      << "imported-at\t" << format_iso8601(r.imported_at) << '\n'
      << "source-file\t" << r.source_file << '\n';
  for (const auto category : model::kAllCategories) {
    const auto it = r.values.find(category);
    if (it == r.values.end()) continue;
    for (const auto& nv : it->second)
      out << "value\t" << model::to_string(category) << '\t' << nv.name << '\t' << model::render_value(nv.value)
          << '\n';
  }
  for (const auto& s : r.series)
    out << "series\t" << s.name << '\t' << s.unit.value_or("") << '\t' << s.points.size() << '\n';
  for (const auto& n : r.notes) out << "note\t" << n << '\n';
  for (const auto& w : r.warnings) out << "warning\t" << w << '\n';
}

void cmd_list(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  store::QueryFilter f;
  if (!o.equipment.empty()) f.equipment = o.equipment;
  if (!o.operator_name.empty()) f.operator_name = o.operator_name;
  if (!o.date_from.empty()) f.date_from = date_arg(o.date_from, "--from");
  if (!o.date_to.empty()) f.date_to = date_arg(o.date_to, "--to");
  for (const auto& s : st.query(f))
    out << s.record_id << '\t' << s.equipment_name << '\t' << format_iso8601(s.imported_at) << '\t' << s.source_file
        << '\n';
}

void cmd_export(const Options& o, std::ostream& out) {
  const auto format = exporter::parse_format(o.format);
  if (!format) throw UsageError{"--format must be xml or csv"};
  auto st = open_store(o, false);
  const MeasurementRecord r = st.get_measurement(o.id);
  const model::EquipmentModel m = st.get_equipment(r.equipment_name);
  const std::filesystem::path path =
      o.out_path.empty() ? "measurement-" + std::to_string(o.id) + "." + std::string(exporter::file_suffix(*format))
                         : o.out_path;
  write_file(path, exporter::export_record(*format, r, m));
  out << path.string() << '\n';
}

void cmd_nonlin(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  const MeasurementRecord r = st.get_measurement(o.id);
  const auto& series = channel_of(r, st.get_equipment(r.equipment_name), o.channel);

  analysis::NonLinearityInput in;
  in.t_ref = real_list(o.refs, "--refs");
  in.t_ref30 = o.tref30;
  if (o.at.empty()) {
    for (const auto& p : series.points) in.t_real.push_back(p.y);
  } else {
    for (auto part : text::split(o.at, ',')) {
      const auto i = text::parse_integer(text::trim(part));
      if (!i) throw UsageError{"--at expects comma-separated sample indices"};
      if (*i < 0 || static_cast<std::size_t>(*i) >= series.points.size())
        throw Error(Errc::IndexOutOfRange, "sample " + std::to_string(*i) + " of " +
                                               std::to_string(series.points.size()));
      in.t_real.push_back(series.points[static_cast<std::size_t>(*i)].y);
    }
  }
  for (double e : analysis::nonlinearity_error(in)) out << fixed6(e) << '\n';
}

void cmd_tau(const Options& o, std::ostream& out) {
  auto st = open_store(o, false);
  const MeasurementRecord r = st.get_measurement(o.id);
  const auto& series = channel_of(r, st.get_equipment(r.equipment_name), o.channel);

  analysis::StepResponse resp;
  resp.samples = series.points;
  if (resp.samples.empty()) throw Error(Errc::InsufficientData, "no samples");
  resp.y0 = resp.samples.front().y;
  if (o.yinf_override) {
    resp.y_inf = *o.yinf_override;
  } else {
    if (!analysis::detect_steady_state(std::span<const lvm::SeriesPoint>(resp.samples), o.window, o.epsilon))
      throw Error(Errc::NoSteadyState, "no window of " + std::to_string(o.window) + " samples varies less than " +
                                           fixed6(o.epsilon) + "; pass --yinf");
    // The tail is the closest the record gets to the final value.
    const auto tail = resp.samples.end() - static_cast<std::ptrdiff_t>(o.window);
    resp.y_inf = std::accumulate(tail, resp.samples.end(), 0.0,
                                 [](double acc, const lvm::SeriesPoint& p) { return acc + p.y; }) /
                 static_cast<double>(o.window);
  }
  out << fixed6(analysis::estimate_time_constant(resp)) << '\n';
}

void cmd_gen(const Options& o, std::ostream& out) {
  if (o.channels < 1) throw UsageError{"--channels must be at least 1"};
  std::vector<analysis::StepResponse> responses;
  for (int k = 0; k < o.channels; ++k)
    responses.push_back(analysis::synth_first_order(o.y0, o.yinf, o.tau, o.dt, o.n, o.noise,
                                                    o.seed + static_cast<std::uint64_t>(k)));

  analysis::GenHeader h;
  h.operator_name = o.gen_operator;
  const auto now = std::chrono::floor<std::chrono::microseconds>(std::chrono::system_clock::now());
  const std::string iso = format_iso8601(now);  // YYYY-MM-DDTHH:MM:SS.ffffffZ
  h.date = o.gen_date.empty() ? CalendarDate{std::stoi(iso.substr(0, 4)), std::stoi(iso.substr(5, 2)),
                                             std::stoi(iso.substr(8, 2))}
                              : date_arg(o.gen_date, "--date");
  if (o.gen_time.empty()) {
    h.time = *parse_time(iso.substr(11, 15));
  } else {
    const auto t = parse_time(o.gen_time);
    if (!t) throw UsageError{"--time expects HH:MM:SS[.fraction]"};
    h.time = *t;
  }
  write_file(o.out_path, lvm::serialize_lvm(analysis::gen_lvm(responses, h)));
  out << o.out_path << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Import LabVIEW .lvm measurements into a unified store, analyse and export them", "lvmforge"};
  app.require_subcommand(1);
  app.add_option("--store", o.store, "Store file")->envname("LVMFORGE_STORE");

  auto* init = app.add_subcommand("init", "Create the store (no-op if it exists)");

  auto* model = app.add_subcommand("model", "Equipment models")->require_subcommand(1);
  auto* model_add = model->add_subcommand("add", "Install a model from a definition file");
  model_add->add_option("file", o.model_file)->required();
  auto* model_list = model->add_subcommand("list", "List model names");
  auto* model_show = model->add_subcommand("show", "Print a model as a definition file");
  model_show->add_option("name", o.model_name)->required();
  auto* model_sytherm = model->add_subcommand("sytherm", "Install the built-in SYTHERM model");
  model_sytherm->add_option("--channels", o.channels, "Thermocouple channels")->check(CLI::PositiveNumber);

  auto* proc = app.add_subcommand("proc", "Parsing procedures")->require_subcommand(1);
  auto* proc_add = proc->add_subcommand("add", "Register a parsing procedure");
  proc_add->add_option("name", o.proc_name)->required();
  proc_add->add_option("--handler", o.handler, "Handler id (default: derived from the name)");
  auto* proc_list = proc->add_subcommand("list", "List parsing procedures");

  auto* bind = app.add_subcommand("bind", "Bind a parsing procedure to an equipment file extension");
  bind->add_option("equipment", o.bind_equipment)->required();
  bind->add_option("procedure", o.bind_proc)->required();
  bind->add_option("extension", o.bind_ext)->required();

  auto* import = app.add_subcommand("import", "Import a measurement file; prints the record id");
  import->add_option("file", o.file)->required();
  import->add_option("--equipment", o.equipment)->required();

  auto* list = app.add_subcommand("list", "List measurements");
  list->add_option("--equipment", o.equipment);
  list->add_option("--operator", o.operator_name);
  list->add_option("--from", o.date_from, "YYYY/MM/DD, inclusive");
  list->add_option("--to", o.date_to, "YYYY/MM/DD, inclusive");

  auto* show = app.add_subcommand("show", "Print a measurement");
  show->add_option("id", o.id)->required();

  auto* edit = app.add_subcommand("edit", "Replace one parameter value");
  edit->add_option("id", o.id)->required();
  edit->add_option("parameter", o.parameter)->required();
  edit->add_option("value", o.value)->required();

  auto* remove = app.add_subcommand("remove", "Delete a measurement");
  remove->add_option("id", o.id)->required();

  auto* exp = app.add_subcommand("export", "Write a measurement as XML or CSV");
  exp->add_option("id", o.id)->required();
  exp->add_option("--format", o.format)->required();
  exp->add_option("--out", o.out_path, "Output path (default: measurement-<id>.<format>)");

  auto* analyze = app.add_subcommand("analyze", "Thermocouple analyses")->require_subcommand(1);
  auto* nonlin = analyze->add_subcommand("nonlin", "Non-linearity error per point, percent");
  nonlin->add_option("id", o.id)->required();
  nonlin->add_option("--refs", o.refs, "Reference temperatures, comma-separated")->required();
  nonlin->add_option("--tref30", o.tref30, "Reference temperature at ambient")->required();
  nonlin->add_option("--channel", o.channel);
  nonlin->add_option("--at", o.at, "Sample indices paired with --refs (default: all samples)");
  auto* tau = analyze->add_subcommand("tau", "First-order time constant in seconds");
  tau->add_option("id", o.id)->required();
  tau->add_option("--channel", o.channel);
  tau->add_option("--window", o.window, "Steady-state window, samples")->check(CLI::Range(2, 1 << 30));
  tau->add_option("--epsilon", o.epsilon, "Steady-state span, degrees")->check(CLI::PositiveNumber);
  tau->add_option("--yinf", o.yinf_override, "Final value (skips steady-state detection)");

  auto* gen = app.add_subcommand("gen", "Write a synthetic first-order cooling curve as .lvm");
  gen->add_option("--tau", o.tau)->required();
  gen->add_option("--y0", o.y0)->required();
  gen->add_option("--yinf", o.yinf)->required();
  gen->add_option("--dt", o.dt)->required();
  gen->add_option("--n", o.n)->required();
  gen->add_option("--noise", o.noise, "Gaussian noise sigma");
  gen->add_option("--seed", o.seed);
  gen->add_option("--channels", o.channels);
  gen->add_option("--operator", o.gen_operator);
  gen->add_option("--date", o.gen_date, "YYYY/MM/DD (default: today, UTC)");
  gen->add_option("--time", o.gen_time, "HH:MM:SS[.fraction] (default: now, UTC)");
  gen->add_option("--out", o.out_path)->required();

  // Let --store appear after the subcommand too.
  std::function<void(CLI::App*)> fall_through = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall_through(sub);
    }
  };
  fall_through(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (init->parsed()) {
      open_store(o, true);
      out << o.store << '\n';
    } else if (model_add->parsed()) {
      cmd_model_add(o, out);
    } else if (model_list->parsed()) {
      for (const auto& name : open_store(o, false).equipment_names()) out << name << '\n';
    } else if (model_show->parsed()) {
      out << model::render_model_definition(open_store(o, false).get_equipment(o.model_name));
    } else if (model_sytherm->parsed()) {
      cmd_model_sytherm(o, out);
    } else if (proc_add->parsed()) {
      cmd_proc_add(o, out);
    } else if (proc_list->parsed()) {
      for (const auto& p : open_store(o, false).procedures()) out << p.name << '\t' << p.handler_id << '\n';
    } else if (bind->parsed()) {
      cmd_bind(o, out);
    } else if (import->parsed()) {
      auto st = open_store(o, false);
      out << ingest::import_file(o.file, o.equipment, ingest::load_registry(st), st) << '\n';
    } else if (list->parsed()) {
      cmd_list(o, out);
    } else if (show->parsed()) {
      cmd_show(o, out);
    } else if (edit->parsed()) {
      open_store(o, false).update_value(o.id, o.parameter, o.value);
      out << o.id << '\n';
    } else if (remove->parsed()) {
      open_store(o, false).delete_measurement(o.id);
      out << o.id << '\n';
    } else if (exp->parsed()) {
      cmd_export(o, out);
    } else if (nonlin->parsed()) {
      cmd_nonlin(o, out);
    } else if (tau->parsed()) {
      cmd_tau(o, out);
    } else if (gen->parsed()) {
      cmd_gen(o, out);
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ERROR " << e.name() << ": " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ERROR " << error_name(Errc::IoError) << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace lvmforge::cli
