#include "fixtures.hpp"

#include "homhopf/cli.hpp"

#include <doctest.h>

#include <string>

using namespace homhopf;
using namespace homhopf::cli;
using nlohmann::json;

namespace {

std::string example(std::string const& name) { return std::string(HOMHOPF_EXAMPLES_DIR) + "/" + name; }

json fixture_b_doc() {
  return json::parse(R"({
    "field": "Q",
    "hom_lie": {"g": {"dim": 1, "phi": "id"}, "h": {"dim": 1, "phi": "id"}},
    "actions": {
      "l": {"side": "left", "acting": "h", "carrier": "g", "table": [[0, 0, [[0, "1/1"]]]], "gamma": "id"},
      "r": {"side": "right", "acting": "g", "carrier": "h", "trivial": true, "gamma": "id"}
    },
    "pipeline": {"command": "hom-lie-hopf", "g": "g", "h": "h", "left": "l", "right": "r", "degree": 2}
  })");
}

json one_dim_hopf(json alpha) {
  return json{{"field", "Q"},
              {"hopf", {{"k", {{"dim", 1},
                               {"mul", json::array({json::array({0, 0, json::array({json::array({0, "1"})})})})},
                               {"unit", json::array({json::array({0, "1"})})},
                               {"comul", json::array({json::array({json::array({0, 0, "1"})})})},
                               {"counit", json::array({"1"})},
                               {"antipode", "id"},
                               {"alpha", alpha}}}}},
              {"pipeline", {{"command", "verify-hopf"}, {"hopf", "k"}}}};
}

}  // namespace

TEST_CASE("shipped examples pass") {
  for (char const* f : {"kz4_twist.json", "abelian2_uea.json", "fixture_b.json", "fixture_a_prime.json",
                        "finite_matched.json", "finite_mutual.json"}) {
    CAPTURE(f);
    RunReport const r = run(parse_input_file(example(f)), Options{});
    CHECK(r.exit_code() == 0);
    CHECK(report_to_text(r).find("ALL CHECKS PASSED") != std::string::npos);
  }
}

TEST_CASE("abelian enveloping algebra reports its dimensions") {
  RunReport const r = run(parse_input_file(example("abelian2_uea.json")), Options{});
  REQUIRE_FALSE(r.dims.empty());
  CHECK(r.dims.front().second == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("JSON output is byte-identical across runs") {
  InputDocument const d = parse_input(fixture_b_doc());
  std::string const a = report_to_json(run(d, Options{})).dump(2);
  std::string const b = report_to_json(run(parse_input(fixture_b_doc()), Options{})).dump(2);
  CHECK(a == b);
  CHECK(a.find("timing_seconds") == std::string::npos);
  Options timed;
  timed.timing = true;
  CHECK(report_to_json(run(d, timed)).contains("timing_seconds"));
}

TEST_CASE("dangling references carry a JSON pointer") {
  json doc = fixture_b_doc();
  doc["actions"]["l"]["acting"] = "nowhere";
  try {
    parse_input(doc);
    FAIL("expected SchemaError");
  } catch (SchemaError const& e) {
    CHECK(e.pointer() == "/actions/l/acting");
  }
  doc = fixture_b_doc();
  doc["pipeline"]["left"] = "missing";
  try {
    parse_input(doc);
    FAIL("expected SchemaError");
  } catch (SchemaError const& e) {
    CHECK(e.pointer() == "/pipeline/left");
  }
  doc = fixture_b_doc();
  doc["pipeline"].erase("right");
  RunReport const r = run(parse_input(doc), Options{});
  CHECK(r.exit_code() == 2);
  REQUIRE(r.error);
  CHECK(r.error->pointer == "/pipeline/right");
}

TEST_CASE("malformed rationals and wrong fields") {
  json doc = fixture_b_doc();
  doc["actions"]["l"]["table"][0][2][0][1] = "1/0";
  CHECK_THROWS_AS(parse_input(doc), SchemaError);
  doc = fixture_b_doc();
  doc["field"] = "R";
  CHECK_THROWS_AS(parse_input(doc), SchemaError);
}

TEST_CASE("declared inverses are checked") {
  json const bad = one_dim_hopf({{"columns", json::array({json::array({json::array({0, "2"})})})},
                                 {"inverse", json::array({json::array({json::array({0, "1"})})})}});
  try {
    parse_input(bad);
    FAIL("expected InverseMismatch");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::InverseMismatch);
  }
  CHECK_THROWS_AS(parse_input(one_dim_hopf({{"scalar", "0"}})), Error);
  RunReport const ok = run(parse_input(one_dim_hopf({{"columns", json::array({json::array({json::array({0, "1"})})})},
                                                     {"inverse", json::array({json::array({json::array({0, "1"})})})}})),
                           Options{});
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("violations exit with 1") {
  RunReport const r = run(parse_input(one_dim_hopf({{"scalar", "2"}})), Options{});
  CHECK(r.exit_code() == 1);
  std::string const text = report_to_text(r);
  CHECK(text.find("FAIL ") != std::string::npos);
  json const j = json::parse(report_to_json(r).dump());
  CHECK(j["status"] == "fail");
}

TEST_CASE("structures round-trip through the input schema") {
  HomHopf const h = fixtures::kz4_twist();
  json doc = {{"field", "Q"}, {"hopf", {{"h", json::parse(hopf_to_json(h).dump())}}}};
  InputDocument const d = parse_input(doc);
  CHECK(fixtures::same_tables(d.hopf.at("h"), h));

  RunReport const r = run(parse_input(fixture_b_doc()), Options{});
  REQUIRE_FALSE(r.structures.empty());
  for (auto const& [name, s] : r.structures) {
    CAPTURE(name);
    json d2 = {{"field", "Q"}, {"hopf", {{"s", json::parse(hopf_to_json(s).dump())}}}};
    CHECK(fixtures::same_tables(parse_input(d2).hopf.at("s"), s));
  }
}

TEST_CASE("unknown commands are input errors") {
  Options o;
  o.command = "frobnicate";
  RunReport const r = run(parse_input(fixture_b_doc()), o);
  CHECK(r.exit_code() == 2);
  CHECK(report_to_text(r).find("ERROR SchemaError") != std::string::npos);
}
