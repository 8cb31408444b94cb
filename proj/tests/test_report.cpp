#include "doctest.h"
#include "schema_check.hpp"

#include "rfdiv/report.hpp"

#include <sstream>

using namespace rfdiv;
using report::json;

namespace {

const schema::Validator& validator() {
  static const schema::Validator v(schema::load(std::string(RFDIV_SOURCE_DIR) + "/docs/report.schema.json"));
  return v;
}

std::size_t csv_rows(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines - 1;
}

}  // namespace

TEST_CASE("weak report structure and CSV") {
  const auto c = covers::parse_cover("y^2 - (x^3 - x)");
  const auto r = diversity::weak_diversity_count(c, 30, diversity::Method::ramified_set);
  const json doc = report::to_json(r, {{"subcommand", "weak-diversity"}, {"output", "json"}, {"N", 30}});
  CHECK(report::validate(doc) == "");
  CHECK(validator().check(doc) == "");
  CHECK(doc["series"]["n"].size() == 30);
  CHECK(doc["series"]["D"].back() == r.distinct());
  CHECK(doc["summary"]["excluded_primes"] == json::array({"2"}));
  std::ostringstream csv;
  report::write_csv(r, csv);
  CHECK(csv.str().rfind("n,D\n", 0) == 0);
  CHECK(csv_rows(csv.str()) == 30 - r.skipped.size());
}

TEST_CASE("strong report structure and CSV") {
  const auto c = covers::parse_cover("y^3 - (x^2 + 1)");
  const auto r = diversity::strong_diversity_rank(c, 25);
  const json doc = report::to_json(r, {{"subcommand", "strong-diversity"}, {"output", "json"}, {"N", 25}});
  CHECK(report::validate(doc) == "");
  CHECK(validator().check(doc) == "");
  std::ostringstream csv;
  report::write_csv(r, csv);
  CHECK(csv.str().rfind("n,r\n", 0) == 0);
  CHECK(csv_rows(csv.str()) == 25 - r.skipped.size());
}

TEST_CASE("sieve report structure and CSV") {
  sieve::SieveOptions options;
  options.keep_flags = true;
  const auto r = sieve::squarefree_value_count(polyring::parse_int_poly("x^2 + 1"), 50, options);
  json doc = report::to_json(r, {{"subcommand", "squarefree-density"}, {"output", "json"}, {"N", 50}});
  doc["summary"]["euler_density"] = 0.89;
  CHECK(report::validate(doc) == "");
  CHECK(validator().check(doc) == "");
  std::ostringstream csv;
  report::write_csv(r, csv);
  CHECK(csv.str().rfind("n,squarefree\n", 0) == 0);
  CHECK(csv_rows(csv.str()) == 50);
}

TEST_CASE("validators reject malformed reports") {
  json doc = report::envelope({{"subcommand", "norm-collisions"}, {"output", "json"}}, json::object(),
                              {{"h", "x"}, {"N", 5}, {"max_multiplicity", 1}, {"witness", "1"}, {"bound", 2}, {"within_bound", true}},
                              json::array(), json::array());
  CHECK(report::validate(doc) == "");
  CHECK(validator().check(doc) == "");
  json bad = doc;
  bad.erase("assumptions");
  CHECK(report::validate(bad) != "");
  CHECK(validator().check(bad) != "");
  bad = doc;
  bad["summary"].erase("witness");
  CHECK(report::validate(bad) != "");
  CHECK(validator().check(bad) != "");
  bad = doc;
  bad["skipped"] = json::array({{{"n", 3}, {"reason", "lost"}}});
  CHECK(report::validate(bad) != "");
  CHECK(validator().check(bad) != "");
  bad = doc;
  bad["series"] = {{"n", {1, 2}}, {"D", {1}}};
  CHECK(report::validate(bad) != "");
}

TEST_CASE("factorization rendering") {
  const json f = report::factorization_json(arith::factor(-360));
  CHECK(f["sign"] == -1);
  CHECK(f["factors"] == json::array({{"2", 3}, {"3", 2}, {"5", 1}}));
}
