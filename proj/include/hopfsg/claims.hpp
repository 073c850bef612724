#ifndef HOPFSG_CLAIMS_HPP_
#define HOPFSG_CLAIMS_HPP_

// The acceptance manifest: twelve claims about the bundled example
// semigroups and graphs, each checked end to end with a time limit.

#include <algorithm>   // for sort, all_of
#include <chrono>      // for steady_clock
#include <exception>   // for exception
#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <fstream>     // for ofstream
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <random>      // for mt19937
#include <regex>       // for regex
#include <set>         // for set
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <tuple>       // for tuple
#include <utility>     // for pair, move
#include <variant>     // for get_if
#include <vector>      // for vector

#include "core.hpp"          // for Alphabet, word_type
#include "finsemi.hpp"       // for FiniteSemigroup, power_stabilizer
#include "fpsemi.hpp"        // for FpSemigroup, cayley_graph
#include "graphs.hpp"        // for SimpleGraph, graph_semigroup
#include "morph.hpp"         // for certify, non_hopf_witness
#include "presentation.hpp"  // for parse_presentation
#include "rewriting.hpp"     // for complete, is_confluent
#include "schematic.hpp"     // for SchematicGraph

namespace hopfsg {

  //! The bundled example systems, also shipped under data/.
  namespace builtin {
    //! T: one relation, ordered with b < a so that completion returns the
    //! two-rule system below.
    inline constexpr char const* t_relation = "letters: a b\n"
                                              "order: b a\n"
                                              "relation: abab^2ab = b\n";

    inline constexpr char const* t_system = "letters: a b\n"
                                            "order: b a\n"
                                            "rule: abab^2ab -> b\n"
                                            "rule: abab^3 -> bab^2ab\n";

    //! The same relation under a < b.
    inline constexpr char const* t_relation_ab = "letters: a b\n"
                                                 "relation: abab^2ab = b\n";

    //! S = T ∪ {f}.
    inline constexpr char const* s_relations = "letters: a b f\n"
                                               "relation: abab^2ab = b\n"
                                               "relation: fa = ba\n"
                                               "relation: af = ab\n"
                                               "relation: fb = b^2\n"
                                               "relation: bf = b^2\n"
                                               "relation: f^2 = b^2\n";

    //! y² = xy = yx = x².
    inline constexpr char const* xy_system = "letters: x y\n"
                                             "rule: y^2 -> x^2\n"
                                             "rule: xy -> x^2\n"
                                             "rule: yx -> x^2\n";

    inline constexpr char const* free_monogenic = "letters: x\n";

    //! Families x_i, y_i (i ∈ Z), z_j (j >= naturals_start); edges x_i ~ y_i,
    //! y_j ~ z_j, x_i ~ x_{i+1}. With \p remove_y0 the subgraph induced by
    //! deleting y_0.
    inline SchematicGraph tree(bool remove_y0, index_type naturals_start = 1) {
      std::vector<Family> families{
          {"x", parse_domain("Z", {})},
          {"y", parse_domain("Z", remove_y0 ? std::vector<index_type>{0}
                                            : std::vector<index_type>{})},
          {"z", parse_domain("N", {}, naturals_start)}};
      std::vector<EdgeRule> rules{
          parse_edge_rule(families, "x i", "y i"),
          parse_edge_rule(families,
                          "y j",
                          "z j",
                          "j>=" + std::to_string(naturals_start)),
          parse_edge_rule(families, "x i", "x i+1")};
      return SchematicGraph(std::move(families), std::move(rules));
    }
  }  // namespace builtin

  enum class ClaimStatus { pass, bounded, fail };

  inline char const* to_string(ClaimStatus s) {
    switch (s) {
      case ClaimStatus::pass:
        return "PASS";
      case ClaimStatus::bounded:
        return "PASS (bounded)";
      default:
        return "FAIL";
    }
  }

  struct ClaimResult {
    std::size_t              number;
    std::string              id;
    std::string              title;
    ClaimStatus              status;
    double                   seconds;
    double                   limit;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    std::vector<std::string> artifacts;
  };

  //! Collects named checks for one claim.
  class Checker {
   public:
    bool check(bool ok, std::string what) {
      (ok ? passed : failed).push_back(std::move(what));
      return ok;
    }

    //! Runs \p f, recording an exception as a failed check.
    template <typename F>
    void guard(std::string const& what, F&& f) {
      try {
        f();
      } catch (std::exception const& e) {
        failed.push_back(what + ": unexpected exception: " + e.what());
      }
    }

    void artifact(std::string path) {
      artifacts.push_back(std::move(path));
    }

    std::vector<std::string> passed;
    std::vector<std::string> failed;
    std::vector<std::string> artifacts;
  };

  struct ClaimOptions {
    //! Where DOT files are written; nothing is written if empty.
    std::filesystem::path out_dir;
    index_type            naturals_start = 1;
  };

  struct Claim {
    std::size_t number;
    std::string id;
    std::string title;
    double      limit;
    bool        bounded;
    std::function<void(Checker&, ClaimOptions const&)> run;
  };

  namespace detail {
    inline FpSemigroup load_builtin(char const* text, std::size_t fuel = 50) {
      return FpSemigroup::from_presentation(parse_presentation(text, "<builtin>"), fuel);
    }

    inline void write_artifact(Checker&             c,
                               ClaimOptions const&  opts,
                               std::string const&   file,
                               std::string const&   content) {
      if (opts.out_dir.empty()) {
        return;
      }
      std::filesystem::create_directories(opts.out_dir);
      auto          path = opts.out_dir / file;
      std::ofstream out(path);
      out << content;
      if (c.check(static_cast<bool>(out), "write " + path.string())) {
        c.artifact(path.string());
      }
    }

    inline std::vector<std::string> formatted(FpSemigroup const&          s,
                                              std::vector<Element> const& xs) {
      std::vector<std::string> out;
      for (auto const& x : xs) {
        out.push_back(s.format(x));
      }
      return out;
    }

    inline std::string join(std::vector<std::string> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : ", ") + x;
      }
      return "{" + out + "}";
    }

    struct RandomTriple {
      FiniteSemigroup          s;
      std::vector<std::size_t> gens;
      std::vector<std::size_t> t;
      element_map              phi;
    };

    //! Random (semigroup of at most 5 elements, subsemigroup with its
    //! generators, injective endomorphism). Semigroups are generated by
    //! random transformations of a 2- or 3-element set.
    inline std::vector<RandomTriple> random_triples(std::size_t count,
                                                    unsigned    seed = 20240501) {
      std::mt19937             rng(seed);
      std::vector<RandomTriple> out;
      auto uniform = [&rng](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      };
      while (out.size() < count) {
        std::size_t const                     degree = 2 + uniform(2);
        std::vector<std::vector<std::size_t>> gens(1 + uniform(2),
                                                   std::vector<std::size_t>(degree));
        for (auto& g : gens) {
          for (auto& x : g) {
            x = uniform(degree);
          }
        }
        auto s = transformation_semigroup(gens, 64);
        if (s.size() > 5) {
          continue;
        }
        std::vector<std::size_t> tgens{uniform(s.size())};
        if (uniform(2) == 1) {
          tgens.push_back(uniform(s.size()));
        }
        auto endos = injective_endomorphisms(s);
        auto phi   = endos[uniform(endos.size())];
        auto t     = closure(s, tgens);
        out.push_back(RandomTriple{std::move(s), std::move(tgens), std::move(t), std::move(phi)});
      }
      return out;
    }

    // Edge set (source label, target label, edge label) read back from DOT.
    inline std::set<std::tuple<std::string, std::string, std::string>>
    dot_edges(std::string const& dot) {
      std::map<std::string, std::string> labels;
      std::regex const node(R"re(\s*(\w+) \[label="([^"]*)".*\];)re");
      std::regex const edge(R"re(\s*(\w+) -> (\w+) \[label="([^"]*)".*\];)re");
      std::istringstream in(dot);
      std::vector<std::string> lines;
      for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
      }
      std::set<std::tuple<std::string, std::string, std::string>> out;
      std::vector<std::tuple<std::string, std::string, std::string>> raw;
      for (auto const& line : lines) {
        std::smatch m;
        if (std::regex_match(line, m, edge)) {
          raw.emplace_back(m[1], m[2], m[3]);
        } else if (std::regex_match(line, m, node)) {
          labels[m[1]] = m[2];
        }
      }
      for (auto const& [u, v, l] : raw) {
        out.emplace(labels[u], labels[v], l);
      }
      return out;
    }

    inline std::set<std::string> vertex_names(SimpleGraph const& g) {
      return {g.names().cbegin(), g.names().cend()};
    }

    inline std::set<std::pair<std::string, std::string>> edge_names(SimpleGraph const& g) {
      std::set<std::pair<std::string, std::string>> out;
      for (auto [u, v] : g.edges()) {
        out.insert(std::minmax(g.name(u), g.name(v)));
      }
      return out;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // The claims
  ////////////////////////////////////////////////////////////////////////

  inline void claim_t_confluent(Checker& c, ClaimOptions const&) {
    auto rs = parse_presentation(builtin::t_system).system();
    auto cps    = critical_pairs(rs);
    auto report = is_confluent(rs);
    c.check(!cps.empty(), std::to_string(cps.size()) + " critical pairs found");
    c.check(report.confluent, "every critical pair of {abab^2ab -> b, abab^3 -> bab^2ab} resolves");
  }

  inline void claim_t_completion(Checker& c, ClaimOptions const&) {
    auto expected = parse_presentation(builtin::t_system).system();
    auto ba       = complete(parse_presentation(builtin::t_relation).system(), 50);
    c.check(same_rules(ba, expected),
            "b<a: completion of abab^2ab = b gives exactly {abab^2ab -> b, abab^3 -> bab^2ab}");
    c.check(is_confluent(ba).confluent, "b<a: completed system is confluent");

    auto ab = complete(parse_presentation(builtin::t_relation_ab).system(), 50);
    c.check(is_confluent(ab).confluent, "a<b: completed system is confluent");
    std::string rules;
    for (auto const& r : ab.rules()) {
      rules += (rules.empty() ? "" : ", ") + ab.describe(r);
    }
    c.check(ab.size() == 2,
            "a<b: completed system has 2 rules (got " + std::to_string(ab.size())
                + ": " + rules + ")");

    // Same equality relation: a<b normal forms of the b<a normal forms are
    // a length-preserving bijection, length by length.
    auto s_ba = FpSemigroup(parse_presentation(builtin::t_relation).defining_relations(), ba);
    auto s_ab = FpSemigroup(parse_presentation(builtin::t_relation_ab).defining_relations(), ab);
    auto ball_ba = enumerate_ball(s_ba, 10);
    auto ball_ab = enumerate_ball(s_ab, 10);
    std::set<word_type> ab_forms;
    for (auto const& e : ball_ab) {
      ab_forms.insert(e.word);
    }
    std::set<word_type> mapped;
    bool                lengths_ok = true;
    for (auto const& e : ball_ba) {
      auto w     = s_ab.normal_form(e.word);
      lengths_ok = lengths_ok && w.size() == e.word.size();
      mapped.insert(std::move(w));
    }
    c.check(ball_ba.size() == ball_ab.size(),
            "both orders have " + std::to_string(ball_ba.size())
                + " normal forms up to length 10");
    c.check(lengths_ok && mapped.size() == ball_ba.size() && mapped == ab_forms,
            "normal forms up to length 10 correspond one-to-one between the orders");
  }

  inline void claim_t_non_hopfian(Checker& c, ClaimOptions const&) {
    auto  t   = detail::load_builtin(builtin::t_system);
    auto& a   = t.alphabet();
    auto  phi = parse_generator_map("a->a, b->bab", a);
    auto  end = check_endomorphism(t, phi);
    c.check(end.verified(), "a->a, b->bab is an endomorphism");
    c.check(t.normal_form(substitute(phi, a.parse("abab^2ab"))) == a.parse("bab")
                && t.normal_form(substitute(phi, a.parse("b"))) == a.parse("bab"),
            "both sides of the relation map to bab");
    c.check(t.equal("ababbab", "abab^2ab"), "a(bab)^2 = abab^2ab");

    auto surj = check_surjective(t, phi, 3);
    auto cov  = std::get_if<GeneratorsCovered>(&surj);
    c.check(cov && cov->witnesses.size() == 2 && cov->witnesses[0] == a.parse("a")
                && cov->witnesses[1] == a.parse("ab^2"),
            "surjective: a <- a, b <- ab^2");

    auto inj = check_injective(t, phi, 7);
    auto col = std::get_if<Collision>(&inj);
    c.check(col && col->u == a.parse("b") && col->v == a.parse("ab^2a^2b^2"),
            "collision (ab^2a^2b^2, b) at radius 7");
    c.check(is_irreducible(a.parse("ab^2a^2b^2"), t.engine())
                && is_irreducible(a.parse("b"), t.engine()),
            "ab^2a^2b^2 and b are both irreducible");
    c.check(col && !t.equal(col->u, col->v)
                && t.normal_form(substitute(phi, col->u)) == t.normal_form(substitute(phi, col->v)),
            "collision re-checked independently");

    auto w  = non_hopf_witness(t, 3, 7);
    auto wc = std::get_if<EndoCertificate>(&w);
    c.check(wc && wc->map == phi, "search over images of length <= 3 finds this map first");
  }

  inline void claim_s_census(Checker& c, ClaimOptions const&) {
    auto p  = parse_presentation(builtin::s_relations);
    auto rs = complete(p.system(), 50);
    c.check(is_confluent(rs).confluent,
            "completion within fuel 50 gives " + std::to_string(rs.size())
                + " confluent rules");
    FpSemigroup s(p.defining_relations(), rs);
    auto const  ball = enumerate_ball(s, 8);
    letter_type f    = *s.alphabet().index("f");
    std::vector<std::string> with_f;
    std::size_t              f_free = 0;
    for (auto const& e : ball) {
      if (std::find(e.word.cbegin(), e.word.cend(), f) != e.word.cend()) {
        with_f.push_back(s.format(e));
      } else {
        ++f_free;
      }
    }
    c.check(with_f == std::vector<std::string>{"f"},
            "normal forms up to length 8 containing f: " + detail::join(with_f));
    // The f-free part is T: compare with T's own normal forms.
    auto t = detail::load_builtin(builtin::t_relation_ab);
    c.check(f_free == enumerate_ball(t, 8).size(),
            "f-free normal forms match T up to length 8 ("
                + std::to_string(f_free) + ")");
    c.check(ball.size() - f_free + 1 == 2, "Rees index of T in S is 2");
  }

  inline void claim_s_indecomposables(Checker& c, ClaimOptions const&) {
    auto s   = detail::load_builtin(builtin::s_relations);
    auto res = indecomposables(s, 1, 8);
    auto got = detail::formatted(s, res.elements);
    c.check(got == std::vector<std::string>{"a", "f"},
            "indecomposable generators at search radius 8: " + detail::join(got));
    for (auto const& d : res.decompositions) {
      c.check(s.multiply(d.left, d.right) == d.target,
              s.format(d.target) + " = " + s.format(d.left) + " * " + s.format(d.right));
    }
  }

  inline void claim_xy(Checker& c, ClaimOptions const& opts) {
    auto s = detail::load_builtin(builtin::xy_system);
    auto x = [&s](std::size_t k) { return s.element(word_type(k, 0)); };
    c.check(is_confluent(s.engine()).confluent, "y^2 -> x^2, xy -> x^2, yx -> x^2 is confluent");
    auto ball = detail::formatted(s, enumerate_ball(s, 6));
    std::sort(ball.begin(), ball.end());
    std::vector<std::string> expected{"x", "x^2", "x^3", "x^4", "x^5", "x^6", "y"};
    c.check(ball == expected, "ball of radius 6 is " + detail::join(ball));

    auto g   = cayley_graph(s, 4);
    auto dot = to_dot(g, s);
    std::set<std::tuple<std::string, std::string, std::string>> want;
    for (std::string v : {"x", "y"}) {
      want.emplace(v, "x^2", "x");
      want.emplace(v, "x^2", "y");
    }
    for (int k = 2; k <= 4; ++k) {
      std::string from = "x^" + std::to_string(k);
      std::string to   = "x^" + std::to_string(k + 1);
      want.emplace(from, to, "x");
      want.emplace(from, to, "y");
    }
    c.check(detail::dot_edges(dot) == want,
            "Cayley graph at radius 4: x and y go to x^2 under both labels, "
            "x^k -> x^(k+1) under both labels");
    c.check(g.dangling() == 2, "the two edges out of x^4 leave the ball");
    detail::write_artifact(c, opts, "cayley_xy.dot", dot);

    auto roots = detail::formatted(s, solve_square_root(s, x(2), 2));
    std::sort(roots.begin(), roots.end());
    c.check(roots == std::vector<std::string>{"x", "y"}, "square roots of x^2: " + detail::join(roots));
    for (std::size_t k = 2; k <= 4; ++k) {
      auto r = solve_square_root(s, x(2 * k), 2 * k);
      c.check(r.size() == 1 && r[0] == x(k),
              "x^" + std::to_string(k) + " is the only square root of x^"
                  + std::to_string(2 * k));
    }

    auto                     endos = find_endomorphisms(s, 3, 6);
    std::vector<std::string> injective;
    bool                     all_auto = true;
    for (auto const& e : endos) {
      if (!e.has_collision()) {
        injective.push_back(format(e.map, s.alphabet()));
        all_auto = all_auto
                   && std::holds_alternative<ExactInjective>(*e.injectivity)
                   && e.surjective();
      }
    }
    c.check(injective == std::vector<std::string>{"x->x, y->y", "x->y, y->x"},
            "injective endomorphisms with images of length <= 3: "
                + detail::join(injective));
    c.check(all_auto, "both are automorphisms");
    c.check(std::holds_alternative<NotFound>(non_cohopf_witness(s, 3, 6)),
            "no injective non-surjective endomorphism within bounds");
  }

  inline void claim_free_monogenic(Checker& c, ClaimOptions const&) {
    auto s    = detail::load_builtin(builtin::free_monogenic);
    auto m    = parse_generator_map("x->x^2", s.alphabet());
    auto cert = certify(s, m, 10);
    c.check(cert.verified(), "x -> x^2 is an endomorphism");
    c.check(cert.injectivity && std::holds_alternative<ExactInjective>(*cert.injectivity),
            "x -> x^2 is injective (exact)");
    auto ns = cert.surjectivity ? std::get_if<ExactNotSurjective>(&*cert.surjectivity)
                                : nullptr;
    c.check(ns && ns->uncovered == std::vector<letter_type>{0},
            "x -> x^2 is not surjective (exact), x has no preimage");
    auto w = non_cohopf_witness(s, 2, 8);
    auto wc = std::get_if<EndoCertificate>(&w);
    c.check(wc && wc->map == m, "non-co-hopficity search returns x -> x^2");
  }

  inline void claim_graph_sweep(Checker& c, ClaimOptions const&) {
    std::vector<SimpleGraph> graphs;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto& g : labeled_graphs(n)) {
        graphs.push_back(std::move(g));
      }
    }
    c.check(graphs.size() == 75, "75 labeled graphs on 1 to 4 vertices");
    auto five = unlabeled_graphs(5);
    c.check(five.size() == 34, "34 isomorphism classes on 5 vertices");
    graphs.insert(graphs.end(), five.begin(), five.end());

    std::mt19937 rng(7);
    auto         uniform = [&rng](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    for (int i = 0; i < 200; ++i) {
      std::size_t const                                n = 1 + uniform(6);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (uniform(2)) {
            edges.emplace_back(u, v);
          }
        }
      }
      graphs.emplace_back(default_vertex_names(n), std::move(edges));
    }

    std::size_t bad_size = 0, bad_triple = 0, bad_rees = 0, failures = 0;
    for (auto const& g : graphs) {
      try {
        auto s = graph_semigroup(g);  // verifies associativity
        bad_size += s.size() != g.size() + 3;
        GraphSemigroupLayout L{g.size()};
        for (std::size_t x = 0; x < s.size(); ++x) {
          for (std::size_t y = 0; y < s.size(); ++y) {
            for (std::size_t z = 0; z < s.size(); ++z) {
              bad_triple += s.product(s.product(x, y), z) != L.zero();
            }
          }
        }
        std::vector<std::size_t> w;
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (uniform(2)) {
            w.push_back(v);
          }
        }
        bad_rees += rees_index_of_induced(g, w) != g.size() - w.size() + 1;
      } catch (std::exception const&) {
        ++failures;
      }
    }
    std::string n = std::to_string(graphs.size());
    c.check(failures == 0, n + " graph semigroups built, all associative");
    c.check(bad_size == 0, "|S_G| = |V| + 3 for all " + n);
    c.check(bad_triple == 0, "every product of three elements is 0 for all " + n);
    c.check(bad_rees == 0, "Rees index of induced S_D is |V - W| + 1 on a random subset of each");
  }

  inline void claim_graph_round_trip(Checker& c, ClaimOptions const&) {
    std::size_t graphs = 0, maps = 0, mismatches = 0, non_auto = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& g : labeled_graphs(n)) {
        ++graphs;
        auto const                         s    = graph_semigroup(g);
        auto const                         side = injective_graph_endos(g);
        auto const                         semi = injective_endomorphisms(s);
        std::set<element_map>              hats;
        for (auto const& e : side) {
          non_auto += !e.automorphism;
          auto h = hat_extension(g, e.map);
          auto m = std::get_if<element_map>(&h);
          if (!m || restrict_to_graph(g, *m) != e.map) {
            ++mismatches;
            continue;
          }
          hats.insert(*m);
        }
        std::set<element_map> all(semi.cbegin(), semi.cend());
        for (auto const& psi : semi) {
          auto phi = restrict_to_graph(g, psi);
          auto h   = hat_extension(g, phi);
          auto m   = std::get_if<element_map>(&h);
          mismatches += !m || *m != psi;
        }
        mismatches += side.size() != semi.size() || hats != all;
        maps += side.size();
      }
    }
    c.check(graphs == 75, "all 75 labeled graphs on 1 to 4 vertices");
    c.check(mismatches == 0,
            std::to_string(maps)
                + " injective graph endomorphisms match the injective endomorphisms "
                  "of S_G one to one");
    c.check(non_auto == 0, "every injective graph endomorphism is an automorphism");
  }

  inline void claim_tree_shift(Checker& c, ClaimOptions const& opts) {
    auto gamma = builtin::tree(false, opts.naturals_start);
    auto delta = builtin::tree(true, opts.naturals_start);
    auto z1    = Vertex{2, opts.naturals_start};

    auto rep = schematic_check_endo(gamma, shift_family_map(gamma, 1));
    c.check(rep.endomorphism, "shift is an endomorphism of the tree");
    c.check(rep.injective, "shift is injective");
    c.check(!rep.surjective && rep.unreached == std::vector<Vertex>{z1},
            "shift is not surjective: only " + gamma.name(z1) + " is missed");

    auto deg = [&delta](std::string const& v) { return delta.degree(delta.vertex(v)); };
    bool x_ok = deg("x_0") == 2;
    for (index_type i = 1; i <= 20; ++i) {
      x_ok = x_ok && deg("x_" + std::to_string(i)) == 3
             && deg("x_" + std::to_string(-i)) == 3;
    }
    c.check(x_ok, "with y_0 removed: x_0 has degree 2, other x_i degree 3 (|i| <= 20)");
    c.check(deg("y_1") == 2 && deg("y_-1") == 1, "y_1 has degree 2, y_-1 has degree 1");
    bool z_ok = true;
    for (index_type j = opts.naturals_start; j <= 20; ++j) {
      z_ok = z_ok && deg("z_" + std::to_string(j)) == 1;
    }
    c.check(z_ok, "every z_j has degree 1 (j <= 20)");

    auto refl   = schematic_check_endo(delta, reflection_family_map(delta));
    bool z_leak = std::any_of(refl.domain_violations.cbegin(),
                              refl.domain_violations.cend(),
                              [](auto const& p) { return p.first.family == 2; });
    bool yz_broken = std::any_of(refl.rule_violations.cbegin(),
                                 refl.rule_violations.cend(),
                                 [&](auto const& e) {
                                   return e.first == Vertex{1, 1}
                                          && e.second == Vertex{2, 1};
                                 });
    c.check(!refl.endomorphism && z_leak && yz_broken,
            "reflection i -> -i is rejected: z_j leaves the domain and {y_1, z_1} is not preserved");

    // The pictured portions.
    std::set<std::string>                         vg, vd;
    std::set<std::pair<std::string, std::string>> eg, ed;
    auto name = [](char f, index_type i) { return std::string(1, f) + "_" + std::to_string(i); };
    auto edge = [](std::string a, std::string b) { return std::minmax(a, b); };
    for (index_type i = -3; i <= 3; ++i) {
      vg.insert(name('x', i));
      vg.insert(name('y', i));
      eg.insert(edge(name('x', i), name('y', i)));
      if (i < 3) {
        eg.insert(edge(name('x', i), name('x', i + 1)));
      }
      if (i >= 1) {
        vg.insert(name('z', i));
        eg.insert(edge(name('y', i), name('z', i)));
      }
    }
    vd = vg;
    vd.erase("y_0");
    ed = eg;
    ed.erase(edge("x_0", "y_0"));
    auto wg = window(gamma, -3, 3);
    auto wd = window(delta, -3, 3);
    c.check(detail::vertex_names(wg) == vg && detail::edge_names(wg) == eg,
            "window [-3, 3] of the tree: " + std::to_string(wg.size()) + " vertices, "
                + std::to_string(wg.edges().size()) + " edges, as pictured");
    c.check(detail::vertex_names(wd) == vd && detail::edge_names(wd) == ed,
            "window [-3, 3] without y_0: " + std::to_string(wd.size()) + " vertices, "
                + std::to_string(wd.edges().size()) + " edges, as pictured");
    detail::write_artifact(c, opts, "tree_window.dot", to_dot(wg, "tree"));
    detail::write_artifact(c, opts, "tree_minus_y0_window.dot", to_dot(wd, "tree_minus_y0"));
  }

  inline void claim_power_stabilizer(Checker& c, ClaimOptions const&) {
    auto         s = left_zero(4);
    SubSemigroup t(s, {0, 1});
    element_map  cycle{1, 2, 3, 0};
    auto         cert = power_stabilizer(t, cycle, {0, 1});
    c.check(cert.exponent == 4 && cert.k == 1 && cert.m == 4,
            "left zero semigroup on 4 points, T = {1, 2}, 4-cycle: exponent "
                + std::to_string(cert.exponent));
    auto once = image(cycle, t.members(), 1);
    c.check(!std::includes(t.members().cbegin(), t.members().cend(), once.cbegin(), once.cend()),
            "T phi is not contained in T");
    c.check(cert.image == t.members() && cert.restriction_bijective,
            "T phi^4 = T");

    std::size_t stable = 0, complement = 0, total = 0;
    for (auto const& r : detail::random_triples(50)) {
      SubSemigroup sub(r.s, r.t);
      auto         k = power_stabilizer(sub, r.phi, r.gens);
      ++total;
      stable += k.stable;
      complement += k.restriction_bijective && k.complement_bijective;
    }
    c.check(stable == 50, std::to_string(stable) + "/" + std::to_string(total)
                              + " random triples: T phi^(km) is contained in T");
    c.check(complement == 50, std::to_string(complement) + "/" + std::to_string(total)
                                  + " random triples: phi^(km) permutes S - T");
  }

  inline void claim_clifford_green(Checker& c, ClaimOptions const&) {
    auto top    = cyclic_group(4, "a");
    auto bottom = cyclic_group(2, "b");
    auto s      = clifford_of_two_groups(top, bottom, {0, 1, 0, 1});
    SubSemigroup t(s, {0, 1, 2, 3});
    c.check(green_index(t) == 2, "Clifford semigroup C4 > C2: Green index of the top group is 2");
    auto h = relative_green(t, GreenRelation::H);
    c.check(std::count(h.classes.cbegin(), h.classes.cend(), std::vector<std::size_t>{4, 5}) == 1,
            "the bottom group is a single relative H-class");

    std::size_t straddling = 0, triples = 0;
    for (auto const& r : detail::random_triples(50)) {
      SubSemigroup sub(r.s, r.t);
      for (auto kind : {GreenRelation::R, GreenRelation::L, GreenRelation::H}) {
        for (auto const& cls : relative_green(sub, kind).classes) {
          bool in  = sub.contains(cls.front());
          straddling += std::any_of(cls.cbegin(), cls.cend(), [&](std::size_t x) {
            return sub.contains(x) != in;
          });
        }
      }
      ++triples;
    }
    c.check(straddling == 0,
            "no relative R, L or H class meets both T and S - T in "
                + std::to_string(triples) + " random cases");
  }

  //! The manifest, in order.
  inline std::vector<Claim> const& claims() {
    static std::vector<Claim> const all{
        {1, "t-confluent", "T's two-rule system is confluent", 1, false, claim_t_confluent},
        {2, "t-completion", "completion of T's relation under both letter orders", 5, false, claim_t_completion},
        {3, "t-non-hopfian", "surjective non-injective endomorphism of T", 5, false, claim_t_non_hopfian},
        {4, "s-census", "S completes and is T plus f", 30, true, claim_s_census},
        {5, "s-indecomposables", "a and f are the indecomposable generators of S", 30, true, claim_s_indecomposables},
        {6, "xy-semigroup", "the semigroup y^2 = xy = yx = x^2", 10, true, claim_xy},
        {7, "free-monogenic", "x -> x^2 on the free monogenic semigroup", 1, false, claim_free_monogenic},
        {8, "graph-semigroup-sweep", "S_G is a semigroup and Rees indices of induced subgraphs", 60, false, claim_graph_sweep},
        {9, "graph-round-trip", "injective endomorphisms of G and S_G correspond", 60, false, claim_graph_round_trip},
        {10, "tree-shift", "shift on the infinite tree, degrees and windows", 5, false, claim_tree_shift},
        {11, "power-stabilizer", "T phi^(km) is contained in T", 30, false, claim_power_stabilizer},
        {12, "clifford-green", "relative Green classes and Green index", 10, false, claim_clifford_green},
    };
    return all;
  }

  inline ClaimResult run_claim(Claim const& claim, ClaimOptions const& opts = {}) {
    Checker c;
    auto    start = std::chrono::steady_clock::now();
    c.guard(claim.id, [&] { claim.run(c, opts); });
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (seconds > claim.limit) {
      c.failed.push_back("time limit of " + std::to_string(claim.limit) + " s exceeded");
    }
    ClaimStatus status = !c.failed.empty() ? ClaimStatus::fail
                         : claim.bounded    ? ClaimStatus::bounded
                                            : ClaimStatus::pass;
    return ClaimResult{claim.number,
                       claim.id,
                       claim.title,
                       status,
                       seconds,
                       claim.limit,
                       std::move(c.passed),
                       std::move(c.failed),
                       std::move(c.artifacts)};
  }

  //! Runs every claim whose id starts with \p only (all if empty).
  inline std::vector<ClaimResult> run_claims(ClaimOptions const& opts = {},
                                             std::string const&  only = "") {
    std::vector<ClaimResult> out;
    for (auto const& claim : claims()) {
      if (claim.id.rfind(only, 0) == 0 || std::to_string(claim.number) == only) {
        out.push_back(run_claim(claim, opts));
      }
    }
    return out;
  }

  //! One line per claim, then the failed checks indented below it.
  inline std::string format_report(std::vector<ClaimResult> const& results,
                                   bool                            verbose = false) {
    std::ostringstream out;
    for (auto const& r : results) {
      out << '[' << to_string(r.status) << "] " << (r.number < 10 ? "0" : "")
          << r.number << ' ' << r.id << ": " << r.title << " ("
          << std::fixed;
      out.precision(2);
      out << r.seconds << " s, limit " << r.limit << " s)\n";
      for (auto const& f : r.failed) {
        out << "    failed: " << f << '\n';
      }
      if (verbose) {
        for (auto const& p : r.passed) {
          out << "    ok: " << p << '\n';
        }
      }
      for (auto const& a : r.artifacts) {
        out << "    wrote " << a << '\n';
      }
    }
    return out.str();
  }

}  // namespace hopfsg

#endif  // HOPFSG_CLAIMS_HPP_
