#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "catch_amalgamated.hpp"

#include "hopfsg/errors.hpp"
#include "hopfsg/finsemi.hpp"
#include "hopfsg/graphs.hpp"
#include "oracles.hpp"

using namespace hopfsg;

namespace {
  SimpleGraph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + 1) % n);
    }
    return SimpleGraph(default_vertex_names(n), edges);
  }

  SimpleGraph star(std::size_t leaves) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= leaves; ++i) {
      edges.emplace_back(0, i);
    }
    return SimpleGraph(default_vertex_names(leaves + 1), edges);
  }

  // Bijections preserving adjacency in both directions.
  std::size_t automorphisms(SimpleGraph const& g) {
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (std::size_t u = 0; u < g.size() && ok; ++u) {
        for (std::size_t v = 0; v < g.size() && ok; ++v) {
          ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
        }
      }
      count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }
}  // namespace

TEST_CASE("graph construction", "[graphs]") {
  auto g = SimpleGraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(SimpleGraph({"a"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a", ""}, {}), Error);
  CHECK_THROWS_AS(SimpleGraph({"a"}, {{0, 1}}), Error);
  CHECK_THROWS_AS(SimpleGraph::from_names({"a"}, {{"a", "b"}}), Error);
  auto h = induced(g, {2, 0});
  CHECK(h.names() == std::vector<std::string>{"a", "c"});
  CHECK(h.edges().empty());
  CHECK_THROWS_AS(induced(g, {1, 1}), Error);
}

TEST_CASE("the graph semigroup of an edge", "[graphs]") {
  auto s = graph_semigroup(SimpleGraph({"v", "w"}, {{0, 1}}));
  REQUIRE(s.size() == 5);
  CHECK(s.names() == std::vector<std::string>{"v", "w", "e", "n", "0"});
  CHECK(s.product(0, 1) == 2);
  CHECK(s.product(1, 0) == 2);
  CHECK(s.product(0, 0) == 3);
  for (std::size_t x = 2; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) {
      CHECK(s.product(x, y) == 4);
      CHECK(s.product(y, x) == 4);
    }
  }
  CHECK_THROWS_AS(graph_semigroup(SimpleGraph({"e"}, {})), Error);
}

TEST_CASE("graph semigroups are associative for every small graph", "[graphs]") {
  // The FiniteSemigroup constructor checks associativity.
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& g : labeled_graphs(n)) {
      CHECK_NOTHROW(graph_semigroup(g));
    }
  }
}

TEST_CASE("{e, n, 0} is the only three-element null subsemigroup", "[graphs]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& g : unlabeled_graphs(n)) {
      auto nulls = three_element_null_subsemigroups(graph_semigroup(g));
      CHECK(nulls == std::vector<std::vector<std::size_t>>{{n, n + 1, n + 2}});
    }
  }
  // In a null semigroup with zero z, any two other elements with z form one.
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4, 3));
  CHECK(three_element_null_subsemigroups(FiniteSemigroup({"a", "b", "c", "z"}, table)).size()
        == 3);
}

TEST_CASE("Rees index of induced subgraphs", "[graphs]") {
  auto edge = SimpleGraph({"v", "w"}, {{0, 1}});
  CHECK(rees_index_of_induced(edge, {0}) == 2);
  CHECK(rees_index_of_induced(edge, {0, 1}) == 1);
  CHECK(rees_index_of_induced(star(3), {1, 2, 3}) == 2);
  CHECK(rees_index_of_induced(star(3), {0}) == 4);
  std::mt19937 rng(53);
  for (auto const& g : labeled_graphs(4)) {
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < 4; ++v) {
      if (rng() % 2) {
        subset.push_back(v);
      }
    }
    if (subset.empty()) {
      subset.push_back(0);
    }
    CHECK(rees_index_of_induced(g, subset) == 4 - subset.size() + 1);
  }
}

TEST_CASE("injective graph endomorphisms", "[graphs]") {
  auto path = SimpleGraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto endos = injective_graph_endos(path);
  REQUIRE(endos.size() == 2);
  CHECK(endos[0].map == vertex_map{0, 1, 2});
  CHECK(endos[1].map == vertex_map{2, 1, 0});
  CHECK(injective_graph_endos(cycle(4)).size() == 8);
  CHECK(injective_graph_endos(SimpleGraph({"v"}, {})).size() == 1);
  for (auto const& e : endos) {
    CHECK(e.automorphism);
  }
}

TEST_CASE("hat and restrict are inverse on small graphs", "[graphs]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& g : unlabeled_graphs(n)) {
      auto endos = injective_graph_endos(g);
      CHECK(endos.size() == automorphisms(g));
      for (auto const& e : endos) {
        REQUIRE(e.automorphism);
        auto hat = hat_extension(g, e.map);
        REQUIRE(std::holds_alternative<element_map>(hat));
        auto const& psi = std::get<element_map>(hat);
        CHECK(is_endomorphism(graph_semigroup(g), psi));
        CHECK(restrict_to_graph(g, psi) == e.map);
      }
    }
  }
}

TEST_CASE("injective endomorphisms of S_Γ by brute force", "[graphs]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& g : labeled_graphs(n)) {
      auto        s     = graph_semigroup(g);
      std::size_t found = 0;
      for (auto const& psi : oracle::all_maps(s.size())) {
        if (oracle::injective(psi) && oracle::homomorphism(s, psi)) {
          ++found;
          auto phi = restrict_to_graph(g, psi);
          auto hat = hat_extension(g, phi);
          REQUIRE(std::holds_alternative<element_map>(hat));
          CHECK(std::get<element_map>(hat) == psi);
        }
      }
      CHECK(found == automorphisms(g));
    }
  }
}

TEST_CASE("restriction failures name the step", "[graphs]") {
  auto g = SimpleGraph({"v", "w"}, {{0, 1}});
  auto step_of = [&g](element_map const& psi) -> std::string {
    try {
      (void) restrict_to_graph(g, psi);
    } catch (RestrictionError const& e) {
      return e.step();
    }
    return "none";
  };
  CHECK(step_of({0, 1, 2, 3, 4}) == "none");
  CHECK(step_of({1, 0, 2, 3, 4}) == "none");
  CHECK(step_of({0, 1, 2}) == "endomorphism");
  CHECK(step_of({0, 1, 2, 3, 9}) == "endomorphism");
  CHECK(step_of({0, 0, 2, 3, 4}) == "endomorphism");
  CHECK(step_of({4, 4, 4, 4, 4}) == "injective");
}

TEST_CASE("hat_extension validates the vertex map", "[graphs]") {
  auto g = SimpleGraph({"a", "b", "c"}, {{0, 1}});
  CHECK_THROWS_AS(hat_extension(g, {0, 0, 1}), Error);
  CHECK_THROWS_AS(hat_extension(g, {0, 2, 1}), Error);
  CHECK_THROWS_AS(hat_extension(g, {0, 1}), Error);
  CHECK_FALSE(find_extension_failure(g, {1, 0, 2}));
}

TEST_CASE("graph enumeration", "[graphs]") {
  std::vector<std::size_t> labeled;
  for (std::size_t n = 1; n <= 4; ++n) {
    labeled.push_back(labeled_graphs(n).size());
  }
  CHECK(labeled == std::vector<std::size_t>{1, 2, 8, 64});
  CHECK(unlabeled_graphs(3).size() == 4);
  CHECK(unlabeled_graphs(4).size() == 11);
  CHECK(unlabeled_graphs(5).size() == 34);
  CHECK(canonical_form(cycle(4)) == canonical_form(SimpleGraph(
                                        default_vertex_names(4), {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
  CHECK(canonical_form(cycle(4)) != canonical_form(star(3)));
}

TEST_CASE("graph DOT output", "[graphs]") {
  auto dot = to_dot(SimpleGraph({"v", "w"}, {{0, 1}}), "edge");
  CHECK(dot == "graph edge {\n  \"v\";\n  \"w\";\n  \"v\" -- \"w\";\n}\n");
}
