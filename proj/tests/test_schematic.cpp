#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"

#include "hopfsg/errors.hpp"
#include "hopfsg/json_io.hpp"
#include "hopfsg/schematic.hpp"

using namespace hopfsg;

namespace {
  SchematicGraph tree_graph(index_type naturals_start = 1) {
    return load_schematic(HOPFSG_DATA_DIR "/tree.json", naturals_start);
  }

  SchematicGraph pruned_graph() {
    return load_schematic(HOPFSG_DATA_DIR "/tree-minus-y0.json");
  }

  std::string vname(char f, index_type i) {
    return std::string(1, f) + "_" + std::to_string(i);
  }

  using edge_set = std::set<std::pair<std::string, std::string>>;

  // Vertices and edges of the window, listed straight from the rules:
  // x_i ~ y_i, y_j ~ z_j for j >= 1, x_i ~ x_{i+1}.
  std::pair<std::set<std::string>, edge_set>
  hand_window(index_type lo, index_type hi, bool without_y0) {
    std::set<std::string> vs;
    edge_set              es;
    auto has = [&](char f, index_type i) {
      if (i < lo || i > hi) {
        return false;
      }
      if (f == 'z') {
        return i >= 1;
      }
      return !(f == 'y' && i == 0 && without_y0);
    };
    auto add = [&](char f, index_type i, char g, index_type j) {
      if (has(f, i) && has(g, j)) {
        es.insert(std::minmax(vname(f, i), vname(g, j)));
      }
    };
    for (index_type i = lo; i <= hi; ++i) {
      for (char f : {'x', 'y', 'z'}) {
        if (has(f, i)) {
          vs.insert(vname(f, i));
        }
      }
      add('x', i, 'y', i);
      if (i >= 1) {
        add('y', i, 'z', i);
      }
      add('x', i, 'x', i + 1);
    }
    return {vs, es};
  }

  std::pair<std::set<std::string>, edge_set> as_sets(SimpleGraph const& g) {
    std::set<std::string> vs(g.names().begin(), g.names().end());
    edge_set              es;
    for (auto [u, v] : g.edges()) {
      es.insert(std::minmax(g.name(u), g.name(v)));
    }
    return {vs, es};
  }

  std::vector<std::string> names(SchematicGraph const& g, std::vector<Vertex> const& vs) {
    std::vector<std::string> out;
    for (auto v : vs) {
      out.push_back(g.name(v));
    }
    return out;
  }
}  // namespace

TEST_CASE("windows match the rules", "[schematic]") {
  auto w = window(tree_graph(), -3, 3);
  CHECK(w.size() == 17);
  CHECK(w.edges().size() == 16);
  CHECK(as_sets(w) == hand_window(-3, 3, false));

  auto d = window(pruned_graph(), -3, 3);
  CHECK(d.size() == 16);
  CHECK(d.edges().size() == 15);
  CHECK(as_sets(d) == hand_window(-3, 3, true));

  for (auto [lo, hi] : {std::pair<index_type, index_type>{0, 0}, {-7, 2}, {1, 9}}) {
    CHECK(as_sets(window(tree_graph(), lo, hi)) == hand_window(lo, hi, false));
    CHECK(as_sets(window(pruned_graph(), lo, hi)) == hand_window(lo, hi, true));
  }
  auto single = window(tree_graph(), 0, 0);
  CHECK(single.names() == std::vector<std::string>{"x_0", "y_0"});
  CHECK(single.edges().size() == 1);
  CHECK_THROWS_AS(window(tree_graph(), 1, 0), Error);
}

TEST_CASE("vertex degrees", "[schematic]") {
  auto d   = pruned_graph();
  auto deg = [&d](char const* v) { return schematic_degree(d, d.vertex(v)); };
  CHECK(deg("x_0") == 2);
  CHECK(deg("x_5") == 3);
  CHECK(deg("y_1") == 2);
  CHECK(deg("y_-1") == 1);
  CHECK(deg("z_3") == 1);
  CHECK_THROWS_AS(deg("y_0"), Error);
  CHECK_THROWS_AS(deg("z_0"), Error);
  auto g = tree_graph();
  CHECK(schematic_degree(g, g.vertex("x_0")) == 3);
  CHECK(schematic_degree(g, g.vertex("y_0")) == 1);
}

TEST_CASE("window degrees agree in the interior", "[schematic]") {
  for (auto const& g : {tree_graph(), pruned_graph()}) {
    auto w = window(g, -6, 6);
    for (std::size_t v = 0; v < w.size(); ++v) {
      auto vx = g.vertex(w.name(v));
      if (vx.index > -6 && vx.index < 6) {
        CHECK(w.degree(v) == schematic_degree(g, vx));
      }
    }
  }
}

TEST_CASE("vertex names", "[schematic]") {
  auto g = tree_graph();
  CHECK(g.vertex("x_-3") == Vertex{0, -3});
  CHECK(g.vertex("z3") == Vertex{2, 3});
  CHECK(g.vertex("y-2") == Vertex{1, -2});
  CHECK(g.name(Vertex{1, -2}) == "y_-2");
  CHECK_THROWS_AS(g.vertex("w_1"), Error);
  CHECK_THROWS_AS(g.vertex("x_"), Error);
  CHECK_THROWS_AS(g.vertex("x_1a"), Error);
}

TEST_CASE("shifts miss exactly z_1, ..., z_k", "[schematic]") {
  auto g     = tree_graph();
  auto shift = shift_family_map(g, 1);
  auto power = shift;
  for (index_type k = 1; k <= 5; ++k) {
    INFO("k = " << k);
    for (auto const& m : {shift_family_map(g, k), power}) {
      auto r = schematic_check_endo(g, m);
      CHECK(r.endomorphism);
      CHECK(r.injective);
      CHECK_FALSE(r.surjective);
      std::vector<std::string> expected;
      for (index_type j = 1; j <= k; ++j) {
        expected.push_back(vname('z', j));
      }
      CHECK(names(g, r.unreached) == expected);
      CHECK(r.window >= 2 * k);
    }
    power = compose(power, shift);
  }
}

TEST_CASE("identity and reflection", "[schematic]") {
  auto g  = tree_graph();
  auto id = schematic_check_endo(g, identity_family_map(g));
  CHECK(id.endomorphism);
  CHECK(id.injective);
  CHECK(id.surjective);

  auto d = pruned_graph();
  auto r = schematic_check_endo(d, reflection_family_map(d));
  CHECK_FALSE(r.endomorphism);
  REQUIRE_FALSE(r.domain_violations.empty());
  CHECK(d.name(r.domain_violations.front().first) == "z_1");
  CHECK(d.name(r.domain_violations.front().second) == "z_-1");
  bool y1z1 = false;
  for (auto const& [u, v] : r.rule_violations) {
    y1z1 = y1z1 || (d.name(u) == "y_1" && d.name(v) == "z_1");
  }
  CHECK(y1z1);
}

TEST_CASE("non-injective and non-endomorphic maps", "[schematic]") {
  auto g = tree_graph();
  // y i -> x i sends x_i and y_i to the same vertex.
  auto fold = parse_family_map(g, "x i -> x i; y i -> x i; z i -> z i");
  auto r    = schematic_check_endo(g, fold);
  CHECK_FALSE(r.injective);
  REQUIRE(r.collision);
  CHECK(r.collision->first.family == 0);
  CHECK(r.collision->second.family == 1);
  CHECK(r.collision->first.index == r.collision->second.index);
  CHECK_FALSE(r.endomorphism);

  auto swap = parse_family_map(g, "x i -> y i; y i -> x i; z i -> z i");
  CHECK_FALSE(schematic_check_endo(g, swap).endomorphism);
  CHECK_THROWS_AS(schematic_check_endo(g, FamilyMap{}), Error);
}

TEST_CASE("family maps with exceptions compose", "[schematic]") {
  auto g = pruned_graph();
  auto m = parse_family_map(g, "x i -> x i, y i -> y i, z i -> z i, y 1 -> y -1");
  CHECK(m(Vertex{1, 1}) == Vertex{1, -1});
  CHECK(m(Vertex{1, 2}) == Vertex{1, 2});
  auto shift = shift_family_map(g, 1);
  auto c     = compose(shift, m);
  for (index_type i = -4; i <= 4; ++i) {
    for (std::size_t f = 0; f < 3; ++f) {
      CHECK(c(Vertex{f, i}) == m(shift(Vertex{f, i})));
    }
  }
  auto c2 = compose(m, shift);
  for (index_type i = -4; i <= 4; ++i) {
    for (std::size_t f = 0; f < 3; ++f) {
      CHECK(c2(Vertex{f, i}) == shift(m(Vertex{f, i})));
    }
  }
}

TEST_CASE("the natural numbers may start at 0", "[schematic]") {
  auto g = tree_graph(0);
  CHECK(g.contains(Vertex{2, 0}));
  CHECK(schematic_degree(g, Vertex{2, 0}) == 0);
  auto r = schematic_check_endo(g, shift_family_map(g, 1));
  CHECK(r.endomorphism);
  CHECK(names(g, r.unreached) == std::vector<std::string>{"z_0"});
}

TEST_CASE("domains and rules from text", "[schematic]") {
  CHECK_FALSE(parse_domain("Z", {}).lower);
  CHECK(parse_domain("N", {}).lower == index_type(1));
  CHECK(parse_domain("N", {}, 0).lower == index_type(0));
  auto d = parse_domain("Z>=-2", {3});
  CHECK(d.lower == index_type(-2));
  CHECK(d.contains(-2));
  CHECK_FALSE(d.contains(-3));
  CHECK_FALSE(d.contains(3));
  CHECK_THROWS_AS(parse_domain("Q", {}), Error);

  std::vector<Family> fams{{"x", {}}, {"y", {}}};
  auto r = parse_edge_rule(fams, "x i", "y -i+2", "1<=i<=5");
  CHECK(r.from == 0);
  CHECK(r.to == 1);
  CHECK(r.f == AffineIndex{-1, 2});
  CHECK(r.lo == index_type(1));
  CHECK(r.hi == index_type(5));
  CHECK(parse_edge_rule(fams, "x_i", "x_i-1").f == AffineIndex{1, -1});
  CHECK_THROWS_AS(parse_edge_rule(fams, "x i+1", "y i"), Error);
  CHECK_THROWS_AS(parse_edge_rule(fams, "x i", "y j"), Error);
  CHECK_THROWS_AS(parse_edge_rule(fams, "x i", "w i"), Error);
  CHECK_THROWS_AS(parse_edge_rule(fams, "x i", "y i", "k>=1"), Error);
  CHECK_THROWS_AS(parse_edge_rule(fams, "x i", "y i", "i>1"), Error);
  CHECK_THROWS_AS(parse_edge_rule(fams, "x", "y i"), Error);
}

TEST_CASE("graph construction rejects loops and repeats", "[schematic]") {
  std::vector<Family> fams{{"x", {}}, {"y", {}}};
  CHECK_THROWS_AS(SchematicGraph(fams, {parse_edge_rule(fams, "x i", "x i")}), Error);
  CHECK_THROWS_AS(SchematicGraph(fams, {parse_edge_rule(fams, "x i", "y i"),
                                        parse_edge_rule(fams, "y i", "x i")}),
                  Error);
  CHECK_THROWS_AS(SchematicGraph({{"x", {}}, {"x", {}}}, {}), Error);
  CHECK_NOTHROW(SchematicGraph(fams, {parse_edge_rule(fams, "x i", "x i+1", "i>=1"),
                                      parse_edge_rule(fams, "x i", "y i")})
                    .families());
}

TEST_CASE("family maps from text", "[schematic]") {
  auto g = tree_graph();
  auto m = parse_family_map(g, "x i -> x i+1; y i -> y i+1; z i -> z i+1");
  CHECK(m.components.size() == 3);
  CHECK(m.components[2].f == AffineIndex{1, 1});
  CHECK_THROWS_AS(parse_family_map(g, "x i -> x i; y i -> y i"), Error);
  CHECK_THROWS_AS(parse_family_map(g, "x i -> x i; x i -> y i; y i -> y i; z i -> z i"),
                  Error);
  CHECK_THROWS_AS(parse_family_map(g, "x i x i; y i -> y i; z i -> z i"), Error);
  CHECK_THROWS_AS(parse_family_map(g, "x i -> w i; y i -> y i; z i -> z i"), Error);
  CHECK_THROWS_AS(parse_family_map(g, "x i+1 -> x i; y i -> y i; z i -> z i"), Error);
  CHECK_THROWS_AS(parse_family_map(g, "x 1 -> x i; x i -> x i; y i -> y i; z i -> z i"),
                  Error);
}
