#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "catch_amalgamated.hpp"

#include "hopfsg/errors.hpp"
#include "hopfsg/finsemi.hpp"
#include "hopfsg/fpsemi.hpp"
#include "hopfsg/morph.hpp"
#include "hopfsg/presentation.hpp"
#include "oracles.hpp"

using namespace hopfsg;

namespace {
  FpSemigroup load(char const* file) {
    return FpSemigroup::from_presentation(
        load_presentation(std::string(HOPFSG_DATA_DIR "/") + file), 50);
  }

  // Number of ways to write w as a product of words from code.
  std::size_t factorizations(word_type const& w, std::vector<word_type> const& code) {
    std::vector<std::size_t> ways(w.size() + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (ways[i] == 0) {
        continue;
      }
      for (auto const& c : code) {
        if (i + c.size() <= w.size() && std::equal(c.begin(), c.end(), w.begin() + i)) {
          ways[i + c.size()] += ways[i];
        }
      }
    }
    return ways.back();
  }

  // Some product of at most n code words factors in two ways.
  bool ambiguous_up_to(std::vector<word_type> const& code, std::size_t n) {
    std::set<word_type> layer{word_type{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::set<word_type> next;
      for (auto const& u : layer) {
        for (auto const& c : code) {
          auto v = u;
          v.insert(v.end(), c.begin(), c.end());
          if (factorizations(v, code) > 1) {
            return true;
          }
          next.insert(v);
        }
      }
      layer = std::move(next);
    }
    return false;
  }

  std::string position_of(std::string const& text, Alphabet const& a) {
    try {
      (void) parse_generator_map(text, a);
    } catch (ParseError const& e) {
      return std::to_string(e.column()) + ":" + e.token();
    }
    return "no error";
  }
}  // namespace

TEST_CASE("parse generator maps", "[morph]") {
  auto a = Alphabet::from_chars("ab");
  auto m = parse_generator_map("b->bab, a -> a", a);
  CHECK(m.images == std::vector<word_type>{a.parse("a"), a.parse("bab")});
  CHECK(format(m, a) == "a->a, b->bab");
  CHECK(parse_generator_map("a->a,b->b,", a) == identity_map(2));
  CHECK(position_of("a->a, c->b", a) == "6:c");
  CHECK(position_of("a->a, a->b", a) == "6:a");
  CHECK(position_of("a->a", a) == "1:b");
  CHECK(position_of("a a, b->b", a) == "1:a a");
  CHECK(position_of("a->a,,b->b", a) == "6:");
  CHECK(position_of("a->, b->b", a) == "1:a");
  CHECK(position_of("a->a, b->bc", a) == "11:c");
}

TEST_CASE("substitute and compose", "[morph]") {
  auto t   = load("t.rs");
  auto a   = t.alphabet();
  auto phi = parse_generator_map("a->a, b->bab", a);
  CHECK(substitute(phi, a.parse("ab")) == a.parse("abab"));
  CHECK_THROWS_AS(substitute(phi, word_type{2}), Error);
  auto sq = square(t, phi);
  CHECK(sq.images[0] == a.parse("a"));
  CHECK(sq.images[1] == t.normal_form(a.parse("bababab")));
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    auto w = oracle::random_word(rng, 2, 1 + i % 10);
    CHECK(t.normal_form(substitute(sq, w))
          == t.normal_form(substitute(phi, substitute(phi, w))));
  }
}

TEST_CASE("is_code agrees with counting factorizations", "[morph]") {
  CHECK(is_code({{0}, {0, 1}}));
  CHECK_FALSE(is_code({{0}, {0, 1}, {1, 0}}));  // a.ba = ab.a
  CHECK_FALSE(is_code({{0}, {0}}));
  CHECK_FALSE(is_code({{0}, {}}));
  CHECK(is_code({{0, 0}}));
  auto short_words = oracle::words_up_to(2, 3);
  std::mt19937 rng(43);
  std::size_t  codes = 0;
  for (int i = 0; i < 400; ++i) {
    std::set<word_type> picked;
    std::size_t const   k = 2 + rng() % 2;
    while (picked.size() < k) {
      picked.insert(short_words[rng() % short_words.size()]);
    }
    std::vector<word_type> code(picked.begin(), picked.end());
    INFO(code.size());
    bool const sp = is_code(code);
    CHECK(sp == !ambiguous_up_to(code, 6));
    codes += sp;
  }
  CHECK(codes > 50);
}

TEST_CASE("the map b -> bab on T", "[morph]") {
  auto t    = load("t.rs");
  auto a    = t.alphabet();
  auto phi  = parse_generator_map("a->a, b->bab", a);
  auto cert = certify(t, phi, 7);
  REQUIRE(cert.verified());
  auto const* col = std::get_if<Collision>(&*cert.injectivity);
  REQUIRE(col);
  CHECK(col->u == a.parse("b"));
  CHECK(col->v == a.parse("ab^2a^2b^2"));
  CHECK(is_irreducible(col->u, t.engine()));
  CHECK(is_irreducible(col->v, t.engine()));
  CHECK(t.normal_form(substitute(phi, col->u)) == col->image);
  CHECK(t.normal_form(substitute(phi, col->v)) == col->image);
  auto const* cov = std::get_if<GeneratorsCovered>(&*cert.surjectivity);
  REQUIRE(cov);
  for (letter_type g = 0; g < 2; ++g) {
    CHECK(t.normal_form(substitute(phi, cov->witnesses[g])) == word_type{g});
  }
  CHECK(cert.surjective());
  CHECK(cert.has_collision());

  auto w = non_hopf_witness(t, 3, 7);
  REQUIRE(std::holds_alternative<EndoCertificate>(w));
  CHECK(std::get<EndoCertificate>(w).map == phi);
}

TEST_CASE("maps that are not endomorphisms", "[morph]") {
  auto t    = load("t.rs");
  auto cert = check_endomorphism(t, parse_generator_map("a->b, b->a", t.alphabet()));
  auto const* f = std::get_if<FailedRelation>(&cert.endo);
  REQUIRE(f);
  CHECK(f->left_image != f->right_image);
  CHECK_FALSE(certify(t, cert.map, 3).injectivity);
  CHECK_THROWS_AS(check_endomorphism(t, GeneratorMap{{word_type{0}}}), Error);
  CHECK_THROWS_AS(check_endomorphism(t, GeneratorMap{{word_type{0}, word_type{}}}), Error);
  CHECK_THROWS_AS(find_endomorphisms(t, 0, 3), Error);
}

TEST_CASE("exact injectivity", "[morph]") {
  auto t    = load("t.rs");
  auto cert = certify(t, identity_map(2), 5);
  REQUIRE(cert.verified());
  CHECK(std::holds_alternative<ExactInjective>(*cert.injectivity));
  CHECK(cert.surjective());

  auto free2 = FpSemigroup::free(Alphabet::from_chars("ab"));
  auto code  = certify(free2, parse_generator_map("a->ab, b->b", free2.alphabet()), 4);
  CHECK(std::holds_alternative<ExactInjective>(*code.injectivity));
  auto fold = certify(free2, parse_generator_map("a->ab, b->ab", free2.alphabet()), 4);
  auto const* col = std::get_if<Collision>(&*fold.injectivity);
  REQUIRE(col);
  CHECK(col->u == word_type{0});
  CHECK(col->v == word_type{1});
}

TEST_CASE("endomorphisms of y^2 = xy = yx = x^2", "[morph]") {
  auto s     = load("xy.rs");
  auto endos = find_endomorphisms(s, 2, 5);
  // Products only add lengths, so a map is an endomorphism exactly when
  // both images have the same length.
  std::vector<std::vector<std::string>> expected;
  for (auto const& u : {"x", "y", "x^2"}) {
    for (auto const& v : {"x", "y", "x^2"}) {
      if (s.element(u).word.size() == s.element(v).word.size()) {
        expected.push_back({u, v});
      }
    }
  }
  std::vector<std::vector<std::string>> got;
  for (auto const& e : endos) {
    got.push_back({s.alphabet().format(e.map.images[0]),
                   s.alphabet().format(e.map.images[1])});
  }
  std::sort(expected.begin(), expected.end());
  auto sorted = got;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == expected);
  std::vector<std::vector<std::string>> injective;
  for (auto const& e : endos) {
    if (!e.has_collision()) {
      injective.push_back({s.alphabet().format(e.map.images[0]),
                           s.alphabet().format(e.map.images[1])});
    }
  }
  std::sort(injective.begin(), injective.end());
  CHECK(injective == std::vector<std::vector<std::string>>{{"x", "y"}, {"y", "x"}});
  // Deterministic order.
  auto again = find_endomorphisms(s, 2, 5);
  REQUIRE(again.size() == endos.size());
  for (std::size_t i = 0; i < endos.size(); ++i) {
    CHECK(again[i].map == endos[i].map);
  }
  CHECK(std::holds_alternative<NotFound>(non_cohopf_witness(s, 2, 5)));
}

TEST_CASE("x -> x^2 on the free monogenic semigroup", "[morph]") {
  auto s    = load("free1.rs");
  auto m    = parse_generator_map("x->x^2", s.alphabet());
  auto cert = certify(s, m, 6);
  REQUIRE(cert.verified());
  CHECK(std::holds_alternative<ExactInjective>(*cert.injectivity));
  auto const* ns = std::get_if<ExactNotSurjective>(&*cert.surjectivity);
  REQUIRE(ns);
  CHECK(ns->uncovered == std::vector<letter_type>{0});
  auto w = non_cohopf_witness(s, 3, 6);
  REQUIRE(std::holds_alternative<EndoCertificate>(w));
  CHECK(std::get<EndoCertificate>(w).map == m);
  CHECK(std::holds_alternative<NotFound>(non_hopf_witness(s, 3, 6)));
}

TEST_CASE("finite certificates", "[morph]") {
  auto c6 = cyclic_group(6);
  auto ok = certify(c6, element_map{0, 5, 4, 3, 2, 1});
  CHECK(ok.verified());
  CHECK(ok.injective);
  CHECK(ok.surjective);
  auto dbl = certify(c6, element_map{0, 2, 4, 0, 2, 4});
  CHECK(dbl.verified());
  CHECK_FALSE(dbl.injective);
  CHECK_FALSE(dbl.surjective);
  REQUIRE(dbl.collision);
  CHECK(*dbl.collision == std::make_pair(std::size_t(0), std::size_t(3)));
  CHECK(dbl.uncovered == std::size_t(1));
  auto bad = certify(c6, element_map{1, 1, 1, 1, 1, 1});
  CHECK_FALSE(bad.verified());
  CHECK_FALSE(non_cohopf_witness(c6).reason.empty());
}

TEST_CASE("injective endomorphisms match brute force", "[morph]") {
  std::vector<FiniteSemigroup> samples{cyclic_group(4), left_zero(3),
                                       transformation_semigroup({{1, 1, 2}, {0, 2, 2}}),
                                       transformation_semigroup({{0, 0, 0, 1}}),
                                       clifford_of_two_groups(cyclic_group(2, "a"), cyclic_group(2, "b"),
                                                              {0, 1})};
  for (auto const& s : samples) {
    REQUIRE(s.size() <= 6);
    std::vector<element_map> expected;
    for (auto const& m : oracle::all_maps(s.size())) {
      if (oracle::injective(m) && oracle::homomorphism(s, m)) {
        expected.push_back(m);
      }
    }
    std::sort(expected.begin(), expected.end());
    auto got = injective_endomorphisms(s);
    CHECK(got == expected);
    for (auto const& m : got) {
      auto cert = certify(s, m);
      CHECK(cert.verified());
      CHECK(cert.injective == cert.surjective);
    }
  }
}
