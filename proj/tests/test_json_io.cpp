#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "hopfsg/claims.hpp"
#include "hopfsg/errors.hpp"
#include "hopfsg/json_io.hpp"

using namespace hopfsg;

namespace {
  ParseError error_of(std::string const& text) {
    try {
      (void) table_from_json(detail::parse_json(text, "in.json"), "in.json");
    } catch (ParseError const& e) {
      return e;
    }
    FAIL("no parse error for:\n" << text);
    return ParseError("", 0, 0, "", "");
  }
}  // namespace

TEST_CASE("tables round-trip", "[json]") {
  auto s    = cyclic_group(3, "g");
  auto back = table_from_json(json::parse(to_json(s).dump()));
  CHECK(back.names() == s.names());
  CHECK(back.rows() == s.rows());
  auto named = table_from_json(json::parse(
      R"({"elements": ["p", "q"], "table": [["p", "p"], ["p", "q"]]})"));
  CHECK(named.product(1, 1) == 1);
  CHECK(named.product(0, 1) == 0);
  auto lz = load_table(HOPFSG_DATA_DIR "/left-zero4.json");
  CHECK(lz.size() == 4);
  CHECK(lz.product(2, 3) == 2);
}

TEST_CASE("graphs round-trip", "[json]") {
  auto g = load_graph(HOPFSG_DATA_DIR "/path3.json");
  CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edges().size() == 2);
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(graph_from_json(json::parse(R"({"vertices": ["u"]})")).size() == 1);
  auto sg = load_table(HOPFSG_DATA_DIR "/edge-semigroup.json");
  CHECK(sg.rows() == graph_semigroup(load_graph(HOPFSG_DATA_DIR "/edge.json")).rows());
}

TEST_CASE("schematic graphs load", "[json]") {
  auto g = load_schematic(HOPFSG_DATA_DIR "/tree-minus-y0.json");
  REQUIRE(g.families().size() == 3);
  CHECK(g.families()[1].domain.excluded == std::set<index_type>{0});
  CHECK(g.families()[2].domain.lower == index_type(1));
  REQUIRE(g.rules().size() == 3);
  CHECK(g.rules()[1].lo == index_type(1));
  auto report = to_json(schematic_check_endo(g, shift_family_map(g, 1)), g);
  CHECK(report["endomorphism"] == false);
  CHECK_THROWS_AS(schematic_from_json(json::parse(R"({"families": []})")), ParseError);
  CHECK_THROWS_AS(schematic_from_json(json::parse(
                      R"({"families": [{"name": "x"}], "rules": [["x i"]]})")),
                  ParseError);
  CHECK_THROWS_AS(schematic_from_json(json::parse(
                      R"({"families": [{"name": "x", "domain": "R"}], "rules": []})")),
                  ParseError);
}

TEST_CASE("malformed JSON reports line and column", "[json]") {
  auto e = error_of("{\n  \"elements\": [\"a\",]\n}");
  CHECK(e.source() == "in.json");
  CHECK(e.line() == 2);
  CHECK(e.column() == 20);
  CHECK(e.token() == "]");

  e = error_of(R"({"table": [[0]]})");
  CHECK(e.token() == "elements");
  e = error_of(R"({"elements": ["a"]})");
  CHECK(e.token() == "table");
  e = error_of(R"({"elements": ["a"], "table": [["b"]]})");
  CHECK(e.token() == "b");
  e = error_of(R"({"elements": ["a"], "table": [[true]]})");
  CHECK(e.token() == "true");
  // x - y mod 3 is not associative.
  e = error_of(R"({"elements": ["a", "b", "c"], "table": [[0, 2, 1], [1, 0, 2], [2, 1, 0]]})");
  CHECK(e.token() == "table");
  CHECK_THROWS_AS(load_table("/nonexistent/table.json"), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [["a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [["a", "a"]]})")),
                  ParseError);
}

TEST_CASE("certificates serialize", "[json]") {
  auto s    = FpSemigroup::free(Alphabet::from_chars("x"));
  auto cert = certify(s, parse_generator_map("x->x^2", s.alphabet()), 4);
  auto j    = to_json(cert, s.alphabet());
  CHECK(j["map"]["x"] == "x^2");
  CHECK(j["endomorphism"]["status"] == "verified");
  CHECK(j["injectivity"]["status"] == "exact-injective");
  CHECK(j["surjectivity"]["status"] == "exact-not-surjective");
  CHECK(j["surjectivity"]["uncovered"] == json::array({"x"}));
  CHECK(to_json(Witness{NotFound{"none"}}, s.alphabet())["found"] == false);

  auto c6 = cyclic_group(6);
  auto f  = to_json(certify(c6, element_map{0, 2, 4, 0, 2, 4}), c6);
  CHECK(f["injective"] == false);
  CHECK(f["collision"] == json::array({"0", "3"}));
}

TEST_CASE("claims can be selected by id or number", "[json]") {
  CHECK(claims().size() == 12);
  auto some = run_claims({}, "free-");
  REQUIRE(some.size() == 1);
  CHECK(some[0].number == 7);
  CHECK(some[0].status == ClaimStatus::pass);
  auto by_number = run_claims({}, "1");
  REQUIRE(by_number.size() == 1);
  CHECK(by_number[0].id == "t-confluent");
  CHECK(run_claims({}, "nothing").empty());
  auto report = format_report(some);
  CHECK(report.rfind("[PASS] 07 free-monogenic: ", 0) == 0);
}
