// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance          run every criterion
//   acceptance 3 7      run the listed criteria only
//
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lvmforge/analysis.hpp"
#include "lvmforge/error.hpp"
#include "lvmforge/export.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/lvm.hpp"
#include "lvmforge/store.hpp"
#include "support/fixture.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lvmforge;
namespace t = lvmforge::testkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

template <typename Fn>
bool throws(Errc code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

// 1. Annex fixture decodes to the exact header, segment and boundary rows.
Outcome annex_fidelity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto d = lvm::parse_lvm(t::slurp(t::data_path("annex1.lvm")));
  const double elapsed = seconds_since(start);

  const auto& h = d.header;
  o.require(h.operator_name == "Profesor", "operator");
  o.require(h.date == CalendarDate{2013, 2, 6}, "date");
  o.require(h.time && h.time->hours == 17 && h.time->minutes == 49 && h.time->seconds == 40 &&
                h.time->fraction_digits == "8399038314819335937",
            "time");
  o.require(d.segments.size() == 1, "segment count");
  if (!o.pass) return o;
  const auto& s = d.segments[0];
  o.require(s.channels == 3, "channels");
  o.require(s.delta_x == std::vector<double>{1, 1, 1}, "Delta_X");
  o.require(s.rows.size() == 16, "row count " + std::to_string(s.rows.size()));
  if (!o.pass) return o;
  using Values = std::vector<std::optional<double>>;
  o.require(s.rows.front().x == 0.0 && s.rows.front().values == Values{23.4, 23.4, 23.6}, "row 0");
  o.require(s.rows.back().x == 64.53125 && s.rows.back().values == Values{24.0, 24.0, 24.200001}, "last row");
  o.require(elapsed < 1.0, "took " + num(elapsed) + " s");
  if (o.pass) o.detail = "16 rows, parsed in " + num(elapsed * 1000) + " ms";
  return o;
}

// 2. parse(serialize(d)) == d over random documents.
Outcome round_trip() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  t::Gen g(20130206);
  constexpr int kDocs = 600;
  int comma = 0;
  for (int i = 0; i < kDocs && o.pass; ++i) {
    const char dec = i % 2 == 0 ? ',' : '.';
    comma += dec == ',';
    const auto d = t::random_document(g, 4, 200, dec);
    try {
      if (lvm::parse_lvm(lvm::serialize_lvm(d)) != d) o.fail("document " + std::to_string(i) + " differs");
    } catch (const Error& e) {
      o.fail("document " + std::to_string(i) + ": " + std::string(e.name()) + " " + e.what());
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, "took " + num(elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(kDocs) + " documents (" + std::to_string(comma) + " with ',' decimals) in " +
               num(elapsed) + " s";
  return o;
}

// 3. Non-linearity error against a direct evaluation.
Outcome nonlinearity_oracle() {
  Outcome o;
  t::Gen g(3);
  double worst = 0;
  for (int i = 0; i < 1000 && o.pass; ++i) {
    const double t_ref = g.uniform(-200, 1200);
    double t_ref30 = g.uniform(-200, 1200);
    while (std::abs(t_ref30 - t_ref) < 1) t_ref30 = g.uniform(-200, 1200);
    const double t_real = t_ref + g.uniform(-50, 50);
    const double got = analysis::nonlinearity_error({{t_real}, {t_ref}, t_ref30})[0];
    const double want = t::direct_nonlinearity(t_real, t_ref, t_ref30);
    const double rel = want == 0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
    worst = std::max(worst, rel);
    o.require(rel <= 1e-12, "triple " + std::to_string(i) + " relative error " + num(rel));
  }
  o.require(throws(Errc::DenominatorZero, [] { analysis::nonlinearity_error({{25.0}, {30.0}, 30.0}); }),
            "singular case did not raise DenominatorZero");
  if (o.pass) o.detail = "1000 triples, worst relative error " + num(worst) + "; singular case raises";
  return o;
}

// 4. Time-constant recovery, noiseless and noisy.
Outcome time_constant() {
  Outcome o;
  std::string summary;
  for (double tau : {1.0, 5.0, 15.0, 60.0}) {
    const double dt = tau / 20;
    const auto clean = analysis::synth_first_order(100, 20, tau, dt, 200, 0, 0);
    const double est = analysis::estimate_time_constant(clean);
    o.require(std::abs(est - tau) <= dt / 2, "tau " + num(tau) + ": noiseless estimate " + num(est));

    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto noisy = analysis::synth_first_order(100, 20, tau, dt, 200, 0.05, seed * 1000 + static_cast<std::uint64_t>(tau));
      errors.push_back(std::abs(analysis::estimate_time_constant(noisy) - tau) / tau);
    }
    std::sort(errors.begin(), errors.end());
    const double median = (errors[49] + errors[50]) / 2;
    const double max = errors.back();
    o.require(median <= 0.02, "tau " + num(tau) + ": median relative error " + num(median));
    o.require(max <= 0.05, "tau " + num(tau) + ": max relative error " + num(max));
    summary += " tau=" + num(tau) + " noiseless|err|=" + num(std::abs(est - tau)) + " noisy median=" +
               num(median * 100) + "% max=" + num(max * 100) + "%;";
  }
  if (o.pass) o.detail = summary.substr(1);
  return o;
}

// 5. Steady-state detection against the all-windows scan.
Outcome steady_state_oracle() {
  Outcome o;
  t::Gen g(5);
  int found = 0;
  for (int i = 0; i < 1000 && o.pass; ++i) {
    const int n = g.integer(3, 500);
    const auto window = static_cast<std::size_t>(g.integer(2, std::min(n, 25)));
    const double eps = g.uniform(0.05, 2.0);
    std::vector<double> y;
    if (g.chance(0.5)) {
      const auto r = analysis::synth_first_order(g.uniform(20, 120), g.uniform(0, 40), g.uniform(1, 50), 1.0,
                                                 static_cast<std::size_t>(n), g.uniform(0, 0.3), g.bits());
      for (const auto& p : r.samples) y.push_back(p.y);
    } else {
      double level = g.uniform(0, 100);
      for (int k = 0; k < n; ++k) {
        if (g.chance(0.2)) level += g.uniform(-3, 3);
        y.push_back(level + g.uniform(-0.6, 0.6));
      }
    }
    const auto got = analysis::detect_steady_state(std::span<const double>(y), window, eps);
    const auto want = t::brute_force_steady_state(y, window, eps);
    found += want.has_value();
    o.require(got == want, "series " + std::to_string(i) + " differs");
  }
  if (o.pass) o.detail = "1000 series, " + std::to_string(found) + " with a steady window";
  return o;
}

// 6. Dispatch law through the store and the rebuilt registry.
Outcome dispatch_law() {
  Outcome o;
  t::TempDir dir;
  auto st = store::Store::open(dir / "s.db");
  auto registry = ingest::ParserRegistry::with_builtin_handlers();
  registry.add_equipment(model::builtin_sytherm(3));
  registry.register_procedure({std::string(ingest::kLvmProcedure), std::string(ingest::kLvmHandler)});
  const auto binding = registry.bind("SYTHERM", ingest::kLvmProcedure, "lvm");
  st.put_equipment(model::builtin_sytherm(3));
  st.put_procedure({std::string(ingest::kLvmProcedure), std::string(ingest::kLvmHandler)});
  st.put_binding(binding);

  const auto loaded = ingest::load_registry(st);
  o.require(loaded.resolve("SYTHERM", "x.lvm").name == "LVM_PARSING", "x.lvm did not resolve to LVM_PARSING");
  const auto stored = st.bindings();
  o.require(stored.size() == 1 && stored[0].binding_name == "LVM_PARSING_LVM",
            "stored binding name is not LVM_PARSING_LVM");
  o.require(throws(Errc::NoBinding, [&] { loaded.resolve("SYTHERM", "x.txt"); }), "x.txt did not raise NoBinding");
  if (o.pass) o.detail = "x.lvm -> LVM_PARSING, stored LVM_PARSING_LVM, x.txt -> NoBinding";
  return o;
}

// 7. gen -> import -> analyze tau -> export through the command line.
Outcome end_to_end() {
  Outcome o;
  t::TempDir dir;
  const std::string store = (dir / "e2e.db").string();
  auto cli = [&](std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), {"--store", store});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (code != 0) o.fail(args[2] + " exited " + std::to_string(code) + ": " + err.str());
    if (out_text) *out_text = out.str();
    return code == 0;
  };
  auto last_line = [](std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s.substr(s.find_last_of('\n') + 1);
  };

  const auto lvm_path = dir / "cooling.lvm";
  std::string id;
  std::string tau_text;
  if (!(cli({"init"}) && cli({"model", "sytherm", "--channels", "3"}) && cli({"proc", "add", "LVM_PARSING"}) &&
        cli({"bind", "SYTHERM", "LVM_PARSING", "lvm"}) &&
        cli({"gen", "--tau", "15", "--y0", "100", "--yinf", "20", "--dt", "1", "--n", "120", "--out",
             lvm_path.string()}) &&
        cli({"import", lvm_path.string(), "--equipment", "SYTHERM"}, &id)))
    return o;
  id = last_line(id);
  if (!cli({"analyze", "tau", id}, &tau_text)) return o;
  const double tau = std::stod(last_line(tau_text));
  o.require(tau >= 14.5 && tau <= 15.5, "analyze tau printed " + last_line(tau_text));

  // CSV series block against the generated file, through a generic CSV reader.
  const auto csv_path = dir / "out.csv";
  if (!cli({"export", id, "--format", "csv", "--out", csv_path.string()})) return o;
  const auto table = t::read_csv(t::slurp(csv_path));
  const auto doc = lvm::parse_lvm(t::slurp(lvm_path));
  std::size_t header = 0;
  while (header < table.size() && !(table[header].size() > 0 && table[header][0] == "X_Value")) ++header;
  o.require(header < table.size(), "no series header in CSV");
  if (!o.pass) return o;
  const std::size_t channels = static_cast<std::size_t>(doc.segments[0].channels);
  std::size_t compared = 0;
  for (std::size_t c = 0; c < channels; ++c) {
    const auto pts = lvm::channel_series(doc, 0, c);
    o.require(table.size() - header - 1 == pts.size(), "CSV row count differs");
    for (std::size_t k = 0; k < pts.size() && o.pass; ++k) {
      const auto& row = table[header + 1 + k];
      o.require(row.size() == channels + 1, "CSV row width");
      if (!o.pass) break;
      o.require(std::abs(std::stod(row[0]) - pts[k].x) <= 5e-7 && std::abs(std::stod(row[c + 1]) - pts[k].y) <= 5e-7,
                "CSV cell differs at row " + std::to_string(k));
      ++compared;
    }
  }

  // XML: one parameter element per stored value row.
  const auto xml_path = dir / "out.xml";
  if (!cli({"export", id, "--format", "xml", "--out", xml_path.string()})) return o;
  const auto parameters = t::count_xml_parameters(t::slurp(xml_path));
  const auto st = store::Store::open(store);
  const auto rows = st.row_count("t_val_values");
  o.require(static_cast<std::int64_t>(parameters) == rows,
            "XML has " + std::to_string(parameters) + " parameters, store has " + std::to_string(rows) + " rows");
  if (o.pass)
    o.detail = "tau=" + last_line(tau_text) + ", " + std::to_string(compared) + " CSV cells match, " +
               std::to_string(parameters) + " XML parameters = t_val rows";
  return o;
}

// 8. Random operation sequences against an in-memory reference.
Outcome store_integrity() {
  Outcome o;
  t::TempDir dir;
  auto st = store::Store::open(dir / "s.db");
  const auto m = model::builtin_sytherm(3);
  st.put_equipment(m);
  std::map<std::int64_t, MeasurementRecord> ref;
  t::Gen g(8);
  int rejected = 0;

  auto set_value = [&](MeasurementRecord& r, const model::ParameterDefinition& p, const model::Value& v) {
    auto& list = r.values[p.category];
    std::vector<NamedValue> rebuilt;
    for (const auto* q : model::parameters_in(m, p.category)) {
      if (q->name == p.name) {
        rebuilt.push_back({p.name, v});
        continue;
      }
      const auto it = std::find_if(list.begin(), list.end(), [&](const NamedValue& nv) { return nv.name == q->name; });
      if (it != list.end()) rebuilt.push_back(*it);
    }
    list = std::move(rebuilt);
  };
  auto check_get = [&](std::int64_t id) {
    auto got = st.get_measurement(id);
    got.record_id = 0;
    o.require(got == ref.at(id), "record " + std::to_string(id) + " differs from the last accepted write");
  };
  auto any_id = [&]() -> std::int64_t {
    if (ref.empty() || g.chance(0.1)) return 100000 + g.integer(0, 99);
    auto it = ref.begin();
    std::advance(it, g.integer(0, static_cast<int>(ref.size()) - 1));
    return it->first;
  };

  for (int op = 0; op < 200 && o.pass; ++op) {
    const int kind = g.integer(0, 9);
    if (kind <= 3) {
      auto rec = t::random_record(g, m, op * 1000);
      if (g.chance(0.15)) {
        rec.values[model::ConceptCategory::MeasuredObject].push_back({"Specimen", std::string("x")});
        o.require(throws(Errc::UnknownParameter, [&] { st.put_measurement(rec); }), "invalid put accepted");
        ++rejected;
      } else {
        ref[st.put_measurement(rec)] = rec;
      }
    } else if (kind <= 5) {
      const auto id = any_id();
      if (ref.count(id)) check_get(id);
      else o.require(throws(Errc::NotFound, [&] { st.get_measurement(id); }), "get of missing id");
    } else if (kind <= 6) {
      const auto id = any_id();
      if (ref.count(id)) {
        st.delete_measurement(id);
        ref.erase(id);
      } else {
        o.require(throws(Errc::NotFound, [&] { st.delete_measurement(id); }), "delete of missing id");
      }
    } else {
      const auto id = any_id();
      const auto& p = m.parameters[static_cast<std::size_t>(g.integer(0, static_cast<int>(m.parameters.size()) - 1))];
      if (!ref.count(id)) {
        o.require(throws(Errc::NotFound, [&] { st.update_value(id, "Operator", "x"); }), "update of missing id");
      } else if (p.category == model::ConceptCategory::Data) {
        o.require(throws(Errc::UnknownParameter, [&] { st.update_value(id, p.name, "1"); }), "update of Data");
        ++rejected;
      } else if (p.value_type != model::ValueType::String && g.chance(0.3)) {
        o.require(throws(Errc::TypeMismatch, [&] { st.update_value(id, p.name, "not a value"); }),
                  "ill-typed update accepted");
        ++rejected;
      } else {
        const auto v = t::random_value(g, p);
        st.update_value(id, p.name, model::render_value(v));
        set_value(ref.at(id), p, v);
      }
    }
    o.require(st.orphan_row_count() == 0, "orphan rows after operation " + std::to_string(op));
  }

  std::vector<std::int64_t> ids;
  for (const auto& [id, r] : ref) ids.push_back(id);
  o.require(st.measurement_ids() == ids, "surviving ids differ");
  std::int64_t values = 0, points = 0;
  for (const auto& [id, r] : ref) {
    if (o.pass) check_get(id);
    values += static_cast<std::int64_t>(r.value_count());
    for (const auto& s : r.series) points += static_cast<std::int64_t>(s.points.size());
  }
  o.require(st.row_count("t_val_values") == values, "t_val row count");
  o.require(st.row_count("t_ser_series") == points, "t_ser row count");
  if (o.pass)
    o.detail = "200 operations, " + std::to_string(ref.size()) + " surviving records, " + std::to_string(rejected) +
               " rejected writes, 0 orphans";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Annex-1 fidelity", annex_fidelity},
      {"Round-trip property", round_trip},
      {"Non-linearity oracle equivalence", nonlinearity_oracle},
      {"Time-constant recovery", time_constant},
      {"Steady-state oracle", steady_state_oracle},
      {"Dispatch law", dispatch_law},
      {"End-to-end CLI", end_to_end},
      {"Store integrity", store_integrity},
  };

  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(static_cast<std::size_t>(std::stoul(argv[i])));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);

  int failures = 0;
  for (std::size_t n : selected) {
    if (n < 1 || n > criteria.size()) {
      std::printf("AC%zu FAIL no such criterion\n", n);
      ++failures;
      continue;
    }
    const auto& [name, fn] = criteria[n - 1];
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    std::printf("AC%zu %s %s: %s\n", n, out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str());
    failures += !out.pass;
  }
  return failures == 0 ? 0 : 1;
}
