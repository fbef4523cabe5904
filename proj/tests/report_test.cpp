#include <doctest.h>

#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "timcm/report.hpp"

using timcm::AnalysisReport;
using timcm::Classification;
using timcm::Rational;
using timcm::Topology;
using timcm::UserSet;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

const AnalysisReport* find_class(const Classification& c, const Topology& t) {
  std::uint64_t key = t.canonical().matrix_key();
  for (const AnalysisReport& r : c.rows)
    if (r.topology.matrix_key() == key) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("six-user analysis assembles every bound") {
  AnalysisReport r = timcm::analyze(fixtures::six_user());
  CHECK(r.feasibility.feasible);
  REQUIRE(r.tdma.has_value());
  CHECK(r.tdma->value == Rational(1, 6));
  REQUIRE(r.partition.has_value());
  CHECK(r.partition->value == Rational(1, 5));
  REQUIRE(r.fractional.has_value());
  CHECK(r.fractional->bound.value == Rational(1, 5));
  CHECK(r.cancellation.value == Rational(1, 3));
  CHECK(r.generator.value == Rational(1, 4));
  CHECK(r.combined == Rational(1, 4));
  CHECK(r.nonsecure == Rational(1, 4));
  CHECK(r.best_lower == Rational(1, 5));
  CHECK(!r.optimal.has_value());  // the 1/5 .. 1/4 gap stays open
}

TEST_CASE("five-user analysis keeps its gap open between 2/5 and 1/2") {
  AnalysisReport r = timcm::analyze(fixtures::five_user());
  CHECK(r.best_lower == Rational(2, 5));
  CHECK(r.combined == Rational(1, 2));
  CHECK(r.nonsecure == Rational(1, 2));
  CHECK(!r.optimal.has_value());
}

TEST_CASE("analysis settles networks whose bounds meet") {
  AnalysisReport chain = timcm::analyze(fixtures::chain3());
  REQUIRE(chain.optimal.has_value());
  CHECK(*chain.optimal == Rational(1, 3));

  AnalysisReport hub = timcm::analyze(fixtures::hub3());
  REQUIRE(hub.optimal.has_value());
  CHECK(*hub.optimal == Rational(1, 2));

  AnalysisReport solo = timcm::analyze(Topology::parse_text("1\n1\n"));
  REQUIRE(solo.optimal.has_value());
  CHECK(*solo.optimal == Rational(1));
}

TEST_CASE("blocked networks settle at zero with no lower-bound entries") {
  AnalysisReport r = timcm::analyze(fixtures::blocked3());
  CHECK(!r.feasibility.feasible);
  CHECK(!r.tdma.has_value());
  CHECK(!r.partition.has_value());
  CHECK(!r.fractional.has_value());
  CHECK(r.combined == Rational(0));
  CHECK(r.best_lower == Rational(0));
  REQUIRE(r.optimal.has_value());
  CHECK(r.optimal->zero());
}

TEST_CASE("json report carries parseable values under stable keys") {
  nlohmann::json j = timcm::report_json(timcm::analyze(fixtures::six_user()));
  CHECK(j["k"] == 6);
  CHECK(j["feasible"] == true);
  CHECK(j["blocking_pair"].is_null());
  CHECK(j["heard"][0] == nlohmann::json::array({1, 4}));
  CHECK(Rational::parse(j["lower_bounds"]["tdma"]["value"]) == Rational(1, 6));
  CHECK(Rational::parse(j["lower_bounds"]["partition"]["value"]) == Rational(1, 5));
  CHECK(Rational::parse(j["lower_bounds"]["fractional"]["value"]) == Rational(1, 5));
  CHECK(Rational::parse(j["upper_bounds"]["cancellation"]["value"]) == Rational(1, 3));
  CHECK(Rational::parse(j["upper_bounds"]["generator"]["value"]) == Rational(1, 4));
  CHECK(Rational::parse(j["upper_bounds"]["combined"].get<std::string>()) == Rational(1, 4));
  CHECK(Rational::parse(j["nonsecure"].get<std::string>()) == Rational(1, 4));
  CHECK(Rational::parse(j["best_lower"].get<std::string>()) == Rational(1, 5));
  CHECK(j["optimal"].is_null());
  CHECK(j["upper_bounds"]["generator"]["s1"] == nlohmann::json::array({2}));
  CHECK(j["upper_bounds"]["generator"]["s2"] == nlohmann::json::array({1}));

  nlohmann::json b = timcm::report_json(timcm::analyze(fixtures::blocked3()));
  CHECK(b["feasible"] == false);
  CHECK(b["blocking_pair"]["first"] == 2);
  CHECK(b["blocking_pair"]["second"] == 3);
  CHECK(b["blocking_pair"]["nesting"] == "equal");
  CHECK(b["lower_bounds"]["tdma"].is_null());
  CHECK(b["lower_bounds"]["partition"].is_null());
  CHECK(b["lower_bounds"]["fractional"].is_null());
  CHECK(b["optimal"] == "0/1");
}

TEST_CASE("text report highlights the verdict") {
  std::string six = timcm::report_text(timcm::analyze(fixtures::six_user()));
  CHECK(six.find("feasible: yes") != std::string::npos);
  CHECK(six.find("combined: 1/4") != std::string::npos);
  CHECK(six.find("between 1/5 and 1/4") != std::string::npos);

  std::string blocked = timcm::report_text(timcm::analyze(fixtures::blocked3()));
  CHECK(blocked.find("blocking pair 2,3 equal") != std::string::npos);
  CHECK(blocked.find("secure rate: 0/1") != std::string::npos);
}

TEST_CASE("csv rows stay aligned with the header") {
  CHECK(timcm::report_csv_header() ==
        "index,users,matrix,feasible,tdma,partition,fractional,nonsecure,"
        "cancellation,generator,combined,best_lower,optimal");
  std::string row = timcm::report_csv_row(timcm::analyze(fixtures::six_user()), 7);
  std::vector<std::string> fields(1);
  for (char c : row) {
    if (c == ',')
      fields.emplace_back();
    else
      fields.back() += c;
  }
  REQUIRE(fields.size() == 13);
  CHECK(fields[0] == "7");
  CHECK(fields[1] == "6");
  CHECK(fields[2] == "100100/111100/101000/001110/001010/001001");
  CHECK(fields[3] == "yes");
  CHECK(fields[4] == "1/6");
  CHECK(fields[12] == "");  // unsettled

  std::string zero = timcm::report_csv_row(timcm::analyze(fixtures::blocked3()), 1);
  CHECK(zero.find(",no,") != std::string::npos);
  CHECK(zero.substr(zero.size() - 4) == ",0/1");
}

TEST_CASE("two-user classification: three classes, one blocked, all settled") {
  Classification c = timcm::classify_all(2);
  CHECK(c.k == 2);
  CHECK(c.rows.size() == 3);
  CHECK(c.zero_count == 1);
  CHECK(c.positive_count == 2);
  CHECK(c.settled_count == 3);
}

TEST_CASE("three-user classification pins all sixteen classes") {
  Classification c = timcm::classify_all(3);
  REQUIRE(c.rows.size() == 16);
  CHECK(c.zero_count == 9);
  CHECK(c.positive_count == 7);
  CHECK(c.settled_count == 16);

  const AnalysisReport* hub = find_class(c, fixtures::hub3());
  REQUIRE(hub != nullptr);
  REQUIRE(hub->optimal.has_value());
  CHECK(*hub->optimal == Rational(1, 2));

  const AnalysisReport* chain = find_class(c, fixtures::chain3());
  REQUIRE(chain != nullptr);
  REQUIRE(chain->optimal.has_value());
  CHECK(*chain->optimal == Rational(1, 3));

  const AnalysisReport* blocked = find_class(c, fixtures::blocked3());
  REQUIRE(blocked != nullptr);
  REQUIRE(blocked->optimal.has_value());
  CHECK(blocked->optimal->zero());

  for (const AnalysisReport& r : c.rows) {
    CHECK(r.topology.canonical() == r.topology);
    CHECK(r.best_lower <= r.combined);
    CHECK(r.combined.zero() == !r.feasibility.feasible);
  }
}

TEST_CASE("classification output does not depend on the worker count") {
  Classification one = timcm::classify_all(3, 1);
  Classification many = timcm::classify_all(3, 4);
  REQUIRE(one.rows.size() == many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].topology == many.rows[i].topology);
    CHECK(one.rows[i].best_lower == many.rows[i].best_lower);
    CHECK(one.rows[i].combined == many.rows[i].combined);
    CHECK(one.rows[i].optimal.has_value() == many.rows[i].optimal.has_value());
  }
}

TEST_CASE("classification serializers cover every class") {
  Classification c = timcm::classify_all(3);
  nlohmann::json j = timcm::classification_json(c);
  CHECK(j["k"] == 3);
  CHECK(j["classes"] == 16);
  CHECK(j["zero"] == 9);
  CHECK(j["positive"] == 7);
  CHECK(j["settled"] == 16);
  CHECK(j["rows"].size() == 16);

  CHECK(count_lines(timcm::classification_csv(c)) == 17);  // header + one row per class
  std::string text = timcm::classification_text(c);
  CHECK(text.find("16 classes") != std::string::npos);
  CHECK(text.find("7 with positive secure rate") != std::string::npos);
}
