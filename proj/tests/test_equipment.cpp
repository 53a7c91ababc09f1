#include <gtest/gtest.h>

#include <algorithm>

#include "lvmforge/equipment.hpp"
#include "lvmforge/error.hpp"
#include "support/generators.hpp"

using namespace lvmforge;
using namespace lvmforge::model;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::IoError;
}

std::vector<std::string> names(const std::vector<const ParameterDefinition*>& ps) {
  std::vector<std::string> out;
  for (const auto* p : ps) out.push_back(p->name);
  return out;
}

}  // namespace

TEST(Equipment, DefineEquipment) {
  const auto m = define_equipment({"SYTHERM", "UPB Measurement Laboratory", "thermocouple acquisition ensemble",
                                   std::nullopt, std::nullopt, std::nullopt});
  EXPECT_EQ(m.producer, "UPB Measurement Laboratory");
  EXPECT_TRUE(m.parameters.empty());
  EXPECT_TRUE(m.extensions.empty());

  const auto x = define_equipment({"X", "", "", {}, {}, {}});
  EXPECT_EQ(x.name, "X");

  const std::vector<std::string> existing{"SYTHERM"};
  EXPECT_EQ(error_of([&] { define_equipment({"SYTHERM", "", "", {}, {}, {}}, existing); }),
            Errc::DuplicateEquipmentName);
  EXPECT_EQ(error_of([&] { define_equipment({"  ", "", "", {}, {}, {}}); }), Errc::EmptyName);
}

TEST(Equipment, AddParameter) {
  auto m = define_equipment({"X", "", "", {}, {}, {}});
  m = add_parameter(m, {"Channels", ConceptCategory::ExperimentCharacterization, ValueType::Integer, {},
                        ValueSource::File, {}});
  m = add_parameter(m, {"Operator", ConceptCategory::MeasurementInformation, ValueType::String, {},
                        ValueSource::File, {}});
  ASSERT_NE(m.find("Channels"), nullptr);
  EXPECT_EQ(m.find("Channels")->category, ConceptCategory::ExperimentCharacterization);
  EXPECT_EQ(names(parameters_in(m, ConceptCategory::MeasurementInformation)), (std::vector<std::string>{"Operator"}));

  EXPECT_EQ(error_of([&] {
              add_parameter(m, {"Channels", ConceptCategory::Data, ValueType::Real, {}, ValueSource::File, {}});
            }),
            Errc::DuplicateParameterName);
  EXPECT_EQ(error_of([&] {
              add_parameter(m, {"Mode", ConceptCategory::InstrumentSetup, ValueType::Enumeration, {},
                                ValueSource::Keyboard, {}});
            }),
            Errc::MissingEnumDomain);
  EXPECT_EQ(error_of([&] {
              add_parameter(m, {"Gain", ConceptCategory::InstrumentSetup, ValueType::Real, "Furlong",
                                ValueSource::Keyboard, {}});
            }),
            Errc::UnknownUnit);

  UnitTable units;
  units.add("Furlong");
  EXPECT_NO_THROW(add_parameter(
      m, {"Gain", ConceptCategory::InstrumentSetup, ValueType::Real, "Furlong", ValueSource::Keyboard, {}}, units));
}

TEST(Equipment, UnitTableDefaults) {
  for (const char* u : {"Second", "Radian", "Tesla", "Ampere", "CelsiusDegree", "Kelvin", "Volt", "Ohm", "Metre",
                        "Kilogram"})
    EXPECT_TRUE(UnitTable::defaults().contains(u)) << u;
}

TEST(Sytherm, ThreeChannels) {
  const auto m = builtin_sytherm(3);
  EXPECT_EQ(m.name, "SYTHERM");
  EXPECT_EQ(m.producer, "UPB Measurement Laboratory");
  EXPECT_EQ(m.extensions, (std::set<std::string>{"lvm"}));
  EXPECT_EQ(m.ignored_file_keys, (std::set<std::string>{"Writer_Version", "Reader_Version"}));
  EXPECT_EQ(channel_parameters(m).size(), 3u);
  // X_Value, three measurement-information and nine experiment parameters.
  EXPECT_EQ(m.parameters.size() - 3, 13u);
  EXPECT_EQ(names(parameters_in(m, ConceptCategory::MeasurementInformation)),
            (std::vector<std::string>{"Operator", "Date", "Time"}));
  EXPECT_EQ(names(parameters_in(m, ConceptCategory::ExperimentCharacterization)),
            (std::vector<std::string>{"Channels", "Separator", "Decimal_Separator", "Multi_Headings", "X_Columns",
                                      "Time_Pref", "X_Dimension", "X0", "Delta_X"}));
  for (auto c : {ConceptCategory::InstrumentSetup, ConceptCategory::MeasuredObject, ConceptCategory::Warnings})
    EXPECT_TRUE(parameters_in(m, c).empty());
  EXPECT_EQ(m.find("Channel_2")->unit, "CelsiusDegree");
  EXPECT_EQ(m.find("X_Value")->unit, "Second");
  EXPECT_EQ(m.find("Separator")->enum_domain, (std::vector<std::string>{"Tab", "Comma"}));
}

TEST(Sytherm, OneChannel) {
  const auto m = builtin_sytherm(1);
  EXPECT_EQ(names(parameters_in(m, ConceptCategory::Data)), (std::vector<std::string>{"X_Value", "Channel_0"}));
  EXPECT_EQ(error_of([] { builtin_sytherm(0); }), Errc::InvalidChannelCount);
}

TEST(Sytherm, CategoriesPartitionParameters) {
  const auto m = builtin_sytherm(4);
  std::size_t total = 0;
  for (auto c : kAllCategories) total += parameters_in(m, c).size();
  EXPECT_EQ(total, m.parameters.size());
}

TEST(ValidateValue, Examples) {
  const auto m = builtin_sytherm(3);
  EXPECT_EQ(validate_value(*m.find("Multi_Headings"), "No"), Value(false));
  EXPECT_EQ(validate_value(*m.find("Multi_Headings"), "true"), Value(true));
  EXPECT_EQ(validate_value(*m.find("Channels"), "3"), Value(std::int64_t{3}));
  EXPECT_EQ(error_of([&] { validate_value(*m.find("Channels"), "three"); }), Errc::TypeMismatch);
  EXPECT_EQ(validate_value(*m.find("Delta_X"), "1,000000"), Value(1.0));
  EXPECT_EQ(validate_value(*m.find("Date"), "2013/02/06"), Value(CalendarDate{2013, 2, 6}));
  EXPECT_EQ(std::get<HighPrecisionTime>(validate_value(*m.find("Time"), "17:49:40,8399038314819335937"))
                .fraction_digits,
            "8399038314819335937");
  EXPECT_EQ(validate_value(*m.find("Separator"), "Tab"), Value(std::string("Tab")));
  EXPECT_EQ(error_of([&] { validate_value(*m.find("Separator"), "Space"); }), Errc::TypeMismatch);
  EXPECT_EQ(error_of([&] { validate_value(*m.find("Date"), "2013/13/01"); }), Errc::TypeMismatch);
  EXPECT_EQ(validate_value(*m.find("Operator"), " Prof "), Value(std::string(" Prof ")));
}

TEST(ValidateValue, RenderIsCanonical) {
  EXPECT_EQ(render_value(std::int64_t{-3}), "-3");
  EXPECT_EQ(render_value(23.4), "23.400000");
  EXPECT_EQ(render_value(true), "Yes");
  EXPECT_EQ(render_value(false), "No");
  EXPECT_EQ(render_value(CalendarDate{2013, 2, 6}), "2013/02/06");
  EXPECT_EQ(render_value(HighPrecisionTime{17, 49, 40, "8399038314819335937"}), "17:49:40.8399038314819335937");
}

TEST(ValidateValueProperty, RenderRoundTripsThroughValidate) {
  testkit::Gen g(99);
  const auto m = builtin_sytherm(2);
  for (int i = 0; i < 3000; ++i) {
    const auto& p = m.parameters[static_cast<std::size_t>(g.integer(0, static_cast<int>(m.parameters.size()) - 1))];
    const Value v = testkit::random_value(g, p);
    const std::string text = render_value(v);
    EXPECT_EQ(validate_value(p, text), v) << p.name << " " << text;
    EXPECT_EQ(render_value(validate_value(p, text)), text);
  }
}

TEST(ModelDefinition, RoundTrip) {
  const auto m = builtin_sytherm(2);
  const std::string text = render_model_definition(m);
  EXPECT_EQ(parse_model_definition(text), m);
}

TEST(ModelDefinition, HandWritten) {
  const auto m = parse_model_definition(
      "# hysteresis graph\n"
      "name: HYSTO\n"
      "producer: lab\n"
      "description: magnetic material bench\n"
      "webpage: http://example.org/hysto\n"
      "extensions: hys, .MSR\n"
      "param: H|Data|Real|Ampere|File\n"
      "param: B|Data|Real|Tesla|File\n"
      "param: Sample|MeasuredObject|String||Keyboard\n"
      "param: Mode|InstrumentSetup|Enumeration||Keyboard|AC,DC\n");
  EXPECT_EQ(m.name, "HYSTO");
  EXPECT_EQ(m.webpage, "http://example.org/hysto");
  EXPECT_EQ(m.extensions, (std::set<std::string>{"hys", "msr"}));
  EXPECT_EQ(m.parameters.size(), 4u);
  EXPECT_EQ(m.find("Mode")->enum_domain, (std::vector<std::string>{"AC", "DC"}));
  EXPECT_EQ(m.find("Sample")->source, ValueSource::Keyboard);

  EXPECT_EQ(error_of([] { parse_model_definition("producer: x\n"); }), Errc::MalformedDefinition);
  EXPECT_EQ(error_of([] { parse_model_definition("name: A\nparam: B|Nowhere|Real||File\n"); }),
            Errc::MalformedDefinition);
  EXPECT_EQ(error_of([] { parse_model_definition("name: A\nparam: B|Data|Real|Parsec|File\n"); }),
            Errc::UnknownUnit);
}
