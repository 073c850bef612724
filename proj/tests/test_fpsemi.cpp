#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "hopfsg/errors.hpp"
#include "hopfsg/fpsemi.hpp"
#include "hopfsg/presentation.hpp"
#include "oracles.hpp"

using namespace hopfsg;

namespace {
  FpSemigroup load(char const* file) {
    return FpSemigroup::from_presentation(
        load_presentation(std::string(HOPFSG_DATA_DIR "/") + file), 50);
  }

  std::vector<std::string> names(FpSemigroup const& s, std::vector<Element> const& xs) {
    std::vector<std::string> out;
    for (auto const& x : xs) {
      out.push_back(s.format(x));
    }
    return out;
  }

  // Ball by brute force: the distinct normal forms of every word of length
  // at most r, in shortlex order.
  std::vector<word_type> brute_ball(FpSemigroup const& s, std::size_t r) {
    std::set<word_type> forms;
    for (auto const& w : oracle::words_up_to(s.alphabet().size(), r)) {
      auto nf = s.normal_form(w);
      if (nf.size() <= r) {
        forms.insert(nf);
      }
    }
    std::vector<word_type> out(forms.begin(), forms.end());
    std::sort(out.begin(), out.end(), s.order().comparator());
    return out;
  }
}  // namespace

TEST_CASE("balls match brute force", "[fpsemi]") {
  struct Case {
    char const* file;
    std::size_t radius;
  };
  for (auto [file, radius] : {Case{"t.rs", 8}, Case{"xy.rs", 7}, Case{"s.rs", 6},
                              Case{"t-relation-ab.rs", 8}, Case{"free1.rs", 5}}) {
    INFO(file);
    auto s    = load(file);
    auto ball = enumerate_ball(s, radius);
    std::vector<word_type> words;
    for (auto const& e : ball) {
      words.push_back(e.word);
    }
    CHECK(words == brute_ball(s, radius));
  }
}

TEST_CASE("balls grow monotonically", "[fpsemi]") {
  auto s = load("s.rs");
  for (std::size_t r = 1; r < 7; ++r) {
    auto small = enumerate_ball(s, r);
    auto big   = enumerate_ball(s, r + 1);
    for (auto const& e : small) {
      CHECK(std::find(big.begin(), big.end(), e) != big.end());
      CHECK(s.normal_form(e.word) == e.word);
    }
  }
}

TEST_CASE("multiplication is associative on radius-3 balls", "[fpsemi]") {
  for (auto file : {"t.rs", "s.rs", "xy.rs"}) {
    auto s    = load(file);
    auto ball = enumerate_ball(s, 3);
    for (auto const& x : ball) {
      for (auto const& y : ball) {
        for (auto const& z : ball) {
          REQUIRE(s.multiply(s.multiply(x, y), z) == s.multiply(x, s.multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("elements of T", "[fpsemi]") {
  auto t = load("t.rs");
  CHECK(t.equal("ababbab", "abab^2ab"));
  CHECK(t.equal("abab^2ab", "b"));
  CHECK_FALSE(t.equal("ab^2a^2b^2", "b"));
  CHECK(t.format(t.element("abab^3")) == "bab^2ab");
  CHECK(t.multiply(t.element("ab"), t.element("ab^2ab")) == t.element("b"));
  auto other = load("t.rs");
  CHECK_THROWS_AS(t.multiply(t.generator(0), other.generator(0)), Error);
  CHECK_THROWS_AS(t.normal_form(word_type{}), Error);
}

TEST_CASE("S is T with f added", "[fpsemi]") {
  auto s    = load("s.rs");
  auto t    = load("t-relation-ab.rs");
  auto ball = enumerate_ball(s, 8);
  std::size_t f_free = 0;
  for (auto const& e : ball) {
    if (std::count(e.word.begin(), e.word.end(), 2) == 0) {
      ++f_free;
    } else {
      CHECK(s.format(e) == "f");
    }
  }
  CHECK(f_free == enumerate_ball(t, 8).size());
  CHECK(s.equal("fa", "ba"));
  CHECK(s.equal("f^2", "b^2"));
}

TEST_CASE("constructor rejects bad engines", "[fpsemi]") {
  auto p = parse_presentation("letters: a b\nrelation: abab^2ab = b\n");
  CHECK_THROWS_AS(FpSemigroup(p.defining_relations(), p.system()), Error);
  auto rs = parse_presentation("letters: a b\nrule: ab -> a\n").system();
  CHECK_THROWS_AS(FpSemigroup({{word_type{0}, word_type{1}}}, rs), Error);
  CHECK_THROWS_AS(FpSemigroup::from_presentation(p, 1), FuelExhausted);
}

TEST_CASE("Cayley graph of y^2 = xy = yx = x^2", "[fpsemi]") {
  auto s = load("xy.rs");
  CHECK(names(s, enumerate_ball(s, 6))
        == std::vector<std::string>{"x", "y", "x^2", "x^3", "x^4", "x^5", "x^6"});
  auto g = cayley_graph(s, 4);
  CHECK(g.vertices.size() == 5);
  CHECK(g.edges.size() == 10);
  CHECK(g.dangling() == 2);
  for (auto const& e : g.edges) {
    auto product = s.multiply(g.vertices[e.source], s.generator(e.label));
    if (e.target) {
      CHECK(product == g.vertices[*e.target]);
    } else {
      CHECK(product.word == e.target_word);
      CHECK(e.target_word.size() == 5);
    }
  }
  auto dot = to_dot(g, s, "fig");
  CHECK(dot.rfind("digraph fig {", 0) == 0);
  CHECK(dot.find("n0 -> n2 [label=\"x\"];") != std::string::npos);
  CHECK(dot.find("n1 -> n2 [label=\"y\"];") != std::string::npos);
  CHECK(dot.find("n4 -> d0 [label=\"y\", style=dashed];") != std::string::npos);
  CHECK(dot.find("d0 [label=\"x^5\", style=dashed];") != std::string::npos);
}

TEST_CASE("square roots", "[fpsemi]") {
  auto s = load("xy.rs");
  auto x = [&s](std::size_t k) { return s.element(word_type(k, 0)); };
  CHECK(names(s, solve_square_root(s, x(2), 2)) == std::vector<std::string>{"x", "y"});
  for (std::size_t k = 2; k <= 5; ++k) {
    auto roots = solve_square_root(s, x(2 * k), 2 * k);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == x(k));
  }
  CHECK(solve_square_root(s, x(3), 3).empty());
  CHECK(solve_square_root(s, s.element("y"), 3).empty());
}

TEST_CASE("indecomposables", "[fpsemi]") {
  auto s = load("s.rs");
  auto r = indecomposables(s, 1, 8);
  CHECK(names(s, r.elements) == std::vector<std::string>{"a", "f"});
  REQUIRE(r.decompositions.size() == 1);
  auto const& d = r.decompositions[0];
  CHECK(s.format(d.target) == "b");
  CHECK(s.multiply(d.left, d.right) == d.target);

  auto xy = load("xy.rs");
  CHECK(names(xy, indecomposables(xy, 2, 2).elements) == std::vector<std::string>{"x", "y"});
  auto free1 = load("free1.rs");
  CHECK(names(free1, indecomposables(free1, 4, 4).elements) == std::vector<std::string>{"x"});
  CHECK_THROWS_AS(indecomposables(s, 3, 2), Error);
}

TEST_CASE("free semigroups", "[fpsemi]") {
  auto s = FpSemigroup::free(Alphabet::from_chars("ab"));
  CHECK(enumerate_ball(s, 3).size() == 2 + 4 + 8);
  CHECK(s.multiply(s.element("ab"), s.element("a")) == s.element("aba"));
  CHECK_THROWS_AS(enumerate_ball(s, 0), Error);
}
