#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "support/fixture.hpp"

using namespace lvmforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--store", (dir / "store.db").string()});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  void setup_sytherm() {
    ASSERT_EQ(run({"init"}).code, 0);
    ASSERT_EQ(run({"model", "sytherm", "--channels", "3"}).code, 0);
    ASSERT_EQ(run({"proc", "add", "LVM_PARSING"}).code, 0);
    const auto b = run({"bind", "SYTHERM", "LVM_PARSING", "lvm"});
    ASSERT_EQ(b.code, 0) << b.err;
    ASSERT_EQ(b.out, "LVM_PARSING_LVM\n");
  }

  std::string import_annex() {
    const auto r = run({"import", testkit::data_path("annex1.lvm").string(), "--equipment", "SYTHERM"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::string id = r.out;
    if (!id.empty() && id.back() == '\n') id.pop_back();
    return id;
  }

  testkit::TempDir dir;
};

}  // namespace

TEST_F(Cli, InitIsIdempotent) {
  EXPECT_EQ(run({"init"}).code, 0);
  EXPECT_EQ(run({"init"}).code, 0);
}

TEST_F(Cli, ImportShowListRemove) {
  setup_sytherm();
  const std::string id = import_annex();
  EXPECT_EQ(id, "1");

  const auto show = run({"show", id});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("value\tMeasurementInformation\tOperator\tProfesor\n"), std::string::npos);
  EXPECT_NE(show.out.find("series\tChannel_0\tCelsiusDegree\t16\n"), std::string::npos);

  EXPECT_EQ(run({"list", "--operator", "Profesor"}).out.rfind("1\tSYTHERM\t", 0), 0u);
  EXPECT_EQ(run({"list", "--from", "2013/02/07"}).out, "");
  EXPECT_EQ(run({"list", "--from", "2013-02-07"}).code, 2);

  EXPECT_EQ(run({"edit", id, "Operator", "Student1"}).code, 0);
  EXPECT_NE(run({"show", id}).out.find("Operator\tStudent1\n"), std::string::npos);
  const auto bad = run({"edit", id, "Channels", "abc"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("ERROR TypeMismatch: ", 0), 0u) << bad.err;

  EXPECT_EQ(run({"remove", id}).code, 0);
  const auto gone = run({"show", id});
  EXPECT_EQ(gone.code, 1);
  EXPECT_EQ(gone.err.rfind("ERROR NotFound: ", 0), 0u);
}

TEST_F(Cli, ImportWithoutBinding) {
  setup_sytherm();
  const auto csv = dir / "annex1.csv";
  std::filesystem::copy_file(testkit::data_path("annex1.lvm"), csv);
  const auto r = run({"import", csv.string(), "--equipment", "SYTHERM"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("ERROR NoBinding", 0), 0u) << r.err;
}

TEST_F(Cli, ExportCsvAndXml) {
  setup_sytherm();
  const std::string id = import_annex();
  const auto csv_path = dir / "out.csv";
  ASSERT_EQ(run({"export", id, "--format", "csv", "--out", csv_path.string()}).code, 0);
  EXPECT_NE(testkit::slurp(csv_path).find("\nX_Value,Channel_0,Channel_1,Channel_2\n0.000000,23.400000,23.400000,"
                                          "23.600000\n"),
            std::string::npos);
  const auto xml_path = dir / "out.xml";
  ASSERT_EQ(run({"export", id, "--format", "XML", "--out", xml_path.string()}).code, 0);
  EXPECT_NE(testkit::slurp(xml_path).find("Profesor</parameter>"), std::string::npos);
  EXPECT_EQ(run({"export", id, "--format", "xls"}).code, 2);
}

TEST_F(Cli, ModelDefinitionFile) {
  ASSERT_EQ(run({"init"}).code, 0);
  const auto def = dir / "hysto.model";
  testkit::spit(def, "name: HYSTO\nproducer: lab\nextensions: hys\nparam: H|Data|Real|Ampere|File\n");
  EXPECT_EQ(run({"model", "add", def.string()}).out, "HYSTO\n");
  const auto again = run({"model", "add", def.string()});
  EXPECT_EQ(again.code, 1);
  EXPECT_EQ(again.err.rfind("ERROR DuplicateEquipmentName", 0), 0u);
  EXPECT_EQ(run({"model", "list"}).out, "HYSTO\n");
  EXPECT_NE(run({"model", "show", "HYSTO"}).out.find("param: H|Data|Real|Ampere|File"), std::string::npos);
  const auto unknown = run({"proc", "add", "HYS_PARSING"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_EQ(unknown.err.rfind("ERROR UnknownHandler", 0), 0u);
}

TEST_F(Cli, AnalyzeNonlin) {
  setup_sytherm();
  const std::string id = import_annex();
  const auto r = run({"analyze", "nonlin", id, "--refs", "23,23", "--tref30", "300", "--at", "0,15", "--channel", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  // |23.6 - 23| / 277 * 100 and |24.200001 - 23| / 277 * 100
  EXPECT_EQ(r.out, "0.216606\n0.433213\n");
  EXPECT_EQ(run({"analyze", "nonlin", id, "--refs", "23,23", "--tref30", "300"}).code, 1);
  EXPECT_EQ(run({"analyze", "nonlin", id, "--refs", "23", "--tref30", "23", "--at", "0"}).err.rfind(
                "ERROR DenominatorZero", 0),
            0u);
}

TEST_F(Cli, GenImportTau) {
  setup_sytherm();
  const auto lvm = dir / "gen.lvm";
  const auto g = run({"gen", "--tau", "15", "--y0", "100", "--yinf", "20", "--dt", "1", "--n", "120", "--out",
                      lvm.string(), "--date", "2020/01/02", "--time", "10:00:00"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto imp = run({"import", lvm.string(), "--equipment", "SYTHERM"});
  ASSERT_EQ(imp.code, 0) << imp.err;
  std::string id = imp.out.substr(0, imp.out.size() - 1);
  const auto tau = run({"analyze", "tau", id, "--channel", "0"});
  ASSERT_EQ(tau.code, 0) << tau.err;
  const double t = std::stod(tau.out);
  EXPECT_GE(t, 14.5);
  EXPECT_LE(t, 15.5);

  const auto no_steady = run({"analyze", "tau", id, "--epsilon", "0.0000001"});
  EXPECT_EQ(no_steady.code, 1);
  EXPECT_EQ(no_steady.err.rfind("ERROR NoSteadyState", 0), 0u);
  EXPECT_EQ(run({"analyze", "tau", id, "--channel", "7"}).err.rfind("ERROR IndexOutOfRange", 0), 0u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"import"}).code, 2);
  ::unsetenv("LVMFORGE_STORE");
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"list"}, out, err), 2);
  EXPECT_EQ(cli::run({"--help"}, out, err), 0);
}

TEST_F(Cli, DataCommandsNeedStore) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("ERROR StorageUnavailable", 0), 0u);
}
