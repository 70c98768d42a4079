#include <gtest/gtest.h>

#include "periodeq/error.hpp"
#include "periodeq/report.hpp"
#include "periodeq/scanner.hpp"

using namespace periodeq;

namespace {

ScanReport small_report() {
  ScanSpec spec;
  spec.e_min = 2;
  spec.e_max = 12;
  spec.p_bound = 60;
  return scan(spec);
}

}  // namespace

TEST(Csv, RowLayout) {
  const auto rec = classify(make_context(5, 2));
  const std::vector<ClassificationRecord> one{rec};
  EXPECT_EQ(records_to_csv(one),
            std::string(kCsvHeader) + "\n5,2,11,2,5,1,4,1,1,true,reduced,\"1 1 -4 -3 3 1\"\n");
}

TEST(Csv, RoundTripIsByteIdentical) {
  const ScanReport report = small_report();
  const std::string csv = records_to_csv(report.records);
  const auto parsed = records_from_csv(csv);
  EXPECT_EQ(parsed, report.records);
  EXPECT_EQ(records_to_csv(parsed), csv);
}

TEST(Csv, RejectsMalformed) {
  EXPECT_THROW(records_from_csv("e,f\n"), MathError);
  const std::string header = std::string(kCsvHeader) + "\n";
  EXPECT_THROW(records_from_csv(header + "5,2,11\n"), MathError);
  EXPECT_THROW(records_from_csv(header + "5,2,11,2,5,1,4,1,1,maybe,reduced,\"1 1\"\n"), MathError);
  EXPECT_THROW(records_from_csv(header + "5,2,11,2,5,1,4,1,1,true,sideways,\"1 1\"\n"), MathError);
  EXPECT_THROW(records_from_csv(header + "5,2,11,2,5,1,4,1,1,true,reduced,\"1 1\n"), MathError);
}

TEST(Json, RoundTripIsByteIdentical) {
  const ScanReport report = small_report();
  const std::string json = report_to_json(report);
  const ScanReport parsed = report_from_json(json);
  EXPECT_EQ(report_to_json(parsed), json);
  EXPECT_EQ(parsed.records, report.records);
  EXPECT_EQ(parsed.monogenic_map, report.monogenic_map);
}

TEST(Json, BigIntegersAreStrings) {
  ScanSpec spec;
  spec.e_min = 6;
  spec.e_max = 6;
  spec.p_bound = 20;
  const std::string json = report_to_json(scan(spec));
  EXPECT_NE(json.find("\"-14680790971\""), std::string::npos);
  EXPECT_EQ(json.find("workers"), std::string::npos);
  EXPECT_NE(json.find("\"conjecture_conditional\": false"), std::string::npos);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(report_from_json("{"), MathError);
  EXPECT_THROW(report_from_json("{}"), MathError);
  EXPECT_THROW(report_from_json(R"({"spec": {"e_min": 1, "e_max": 2, "p_bound": 5, "mode": "odd"},
    "records": [], "missing_e": [], "doublets": [], "counterexamples": []})"),
               MathError);
}

TEST(Format, Parsing) {
  EXPECT_EQ(parse_output_format("human"), OutputFormat::HumanTable);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::CSV);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::JSON);
  EXPECT_THROW(parse_output_format("xml"), MathError);
}

TEST(Human, MentionsKeyFields) {
  const std::string text = record_to_human(classify(make_context(6, 1)));
  EXPECT_NE(text.find("-16807"), std::string::npos);
  EXPECT_NE(text.find("direct"), std::string::npos);
  const std::string table = render_report(small_report(), OutputFormat::HumanTable);
  EXPECT_FALSE(table.empty());
}
