#ifndef HOPFSG_FPSEMI_HPP_
#define HOPFSG_FPSEMI_HPP_

#include <algorithm>      // for any_of, count_if
#include <atomic>         // for atomic
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <map>            // for map
#include <optional>       // for optional
#include <sstream>        // for ostringstream
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair, move
#include <vector>         // for vector

#include "core.hpp"          // for word_type, ShortLexOrder
#include "errors.hpp"        // for Error
#include "presentation.hpp"  // for Presentation, relation_type
#include "rewriting.hpp"     // for RewritingSystem, normal_form

namespace hopfsg {

  namespace detail {
    inline std::uint64_t next_semigroup_id() {
      static std::atomic<std::uint64_t> counter{0};
      return ++counter;
    }

    struct WordHash {
      std::size_t operator()(word_type const& w) const noexcept {
        std::size_t h = w.size();
        for (auto x : w) {
          h = h * 1'000'003u + x + 1;
        }
        return h;
      }
    };
  }  // namespace detail

  //! An element of an FpSemigroup: its normal form plus the id of the
  //! semigroup it belongs to.
  struct Element {
    word_type     word;
    std::uint64_t parent;

    bool operator==(Element const&) const = default;
  };

  //! A finitely presented semigroup realised as the set of normal forms of a
  //! confluent rewriting system, with multiplication "concatenate then
  //! reduce". Immutable after construction.
  class FpSemigroup {
   public:
    //! Uses \p engine directly; it must be confluent and each defining
    //! relation's sides must have the same normal form.
    FpSemigroup(std::vector<relation_type> relations, RewritingSystem engine)
        : _relations(std::move(relations)),
          _engine(std::move(engine)),
          _id(detail::next_semigroup_id()) {
      auto report = is_confluent(_engine);
      if (!report.confluent) {
        auto const& cp = report.unresolved.front();
        throw Error("rewriting system is not confluent: critical pair on "
                    + alphabet().format(cp.overlap_word) + " is unresolved");
      }
      for (auto const& [u, v] : _relations) {
        if (hopfsg::normal_form(u, _engine) != hopfsg::normal_form(v, _engine)) {
          throw Error("relation " + alphabet().format(u) + " = "
                      + alphabet().format(v)
                      + " does not hold in the rewriting system");
        }
      }
    }

    //! Builds the engine from \p p: uses the presented system if it is
    //! already confluent, otherwise runs completion with \p fuel.
    static FpSemigroup from_presentation(Presentation const& p,
                                         std::size_t         fuel = 0) {
      auto rs = p.system();
      if (!is_confluent(rs).confluent) {
        rs = complete(rs, fuel);
      }
      return FpSemigroup(p.defining_relations(), std::move(rs));
    }

    //! The free semigroup over \p alphabet.
    static FpSemigroup free(Alphabet alphabet) {
      return FpSemigroup({}, RewritingSystem(ShortLexOrder(std::move(alphabet))));
    }

    Alphabet const& alphabet() const noexcept {
      return _engine.alphabet();
    }

    ShortLexOrder const& order() const noexcept {
      return _engine.order();
    }

    RewritingSystem const& engine() const noexcept {
      return _engine;
    }

    std::vector<relation_type> const& relations() const noexcept {
      return _relations;
    }

    std::uint64_t id() const noexcept {
      return _id;
    }

    std::size_t number_of_generators() const noexcept {
      return alphabet().size();
    }

    word_type normal_form(word_type const& w) const {
      if (w.empty()) {
        throw Error("the empty word is not a semigroup element");
      }
      return hopfsg::normal_form(w, _engine);
    }

    Element element(word_type const& w) const {
      return Element{normal_form(w), _id};
    }

    Element element(std::string_view text) const {
      return element(alphabet().parse(text));
    }

    Element generator(letter_type x) const {
      return element(word_type{x});
    }

    std::string format(Element const& e) const {
      check(e);
      return alphabet().format(e.word);
    }

    Element multiply(Element const& a, Element const& b) const {
      check(a);
      check(b);
      return Element{
          detail::normal_form(
              concat(a.word, b.word), _engine.rules(), Strategy::leftmost, default_max_steps),
          _id};
    }

    //! u =_S v.
    bool equal(word_type const& u, word_type const& v) const {
      return normal_form(u) == normal_form(v);
    }

    bool equal(std::string_view u, std::string_view v) const {
      return equal(alphabet().parse(u), alphabet().parse(v));
    }

    void check(Element const& e) const {
      if (e.parent != _id) {
        throw Error("element belongs to a different semigroup");
      }
    }

   private:
    std::vector<relation_type> _relations;
    RewritingSystem            _engine;
    std::uint64_t              _id;
  };

  //! All normal forms of length at most \p radius, in shortlex order.
  //!
  //! Irreducible words are closed under taking prefixes, so the ball is
  //! grown a letter at a time, testing only whether a new suffix is a left
  //! hand side.
  inline std::vector<Element> enumerate_ball(FpSemigroup const& s,
                                             std::size_t        radius) {
    if (radius == 0) {
      throw Error("radius must be at least 1");
    }
    auto const&            rules   = s.engine().rules();
    auto const             letters = s.order().letters_by_rank();
    std::vector<Element>   out;
    std::vector<word_type> layer{word_type{}};
    for (std::size_t n = 1; n <= radius; ++n) {
      std::vector<word_type> next;
      for (auto const& w : layer) {
        for (auto x : letters) {
          word_type v = w;
          v.push_back(x);
          bool reducible = std::any_of(
              rules.cbegin(), rules.cend(), [&v](Rule const& r) {
                return detail::is_suffix(v, r.lhs);
              });
          if (!reducible) {
            next.push_back(std::move(v));
          }
        }
      }
      for (auto const& w : next) {
        out.push_back(Element{w, s.id()});
      }
      layer = std::move(next);
    }
    return out;
  }

  struct CayleyEdge {
    std::size_t source;
    letter_type label;
    //! Index into the vertex list, or std::nullopt if the target lies
    //! outside the ball.
    std::optional<std::size_t> target;
    word_type                  target_word;
  };

  //! Right Cayley graph restricted to a ball.
  struct CayleyGraph {
    std::vector<Element>    vertices;
    std::vector<CayleyEdge> edges;

    std::size_t dangling() const {
      return std::count_if(edges.cbegin(), edges.cend(), [](auto const& e) {
        return !e.target.has_value();
      });
    }
  };

  inline CayleyGraph cayley_graph(FpSemigroup const& s, std::size_t radius) {
    CayleyGraph g;
    g.vertices = enumerate_ball(s, radius);
    std::unordered_map<word_type, std::size_t, detail::WordHash> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      index.emplace(g.vertices[i].word, i);
    }
    auto const letters = s.order().letters_by_rank();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (auto x : letters) {
        auto target = s.multiply(g.vertices[i], s.generator(x));
        auto it     = index.find(target.word);
        g.edges.push_back(CayleyEdge{
            i,
            x,
            it == index.end() ? std::nullopt
                              : std::optional<std::size_t>(it->second),
            target.word});
      }
    }
    return g;
  }

  //! Graphviz rendering: one node per normal form, one edge per generator.
  //! Edges leaving the ball point at dashed nodes.
  inline std::string to_dot(CayleyGraph const& g,
                            FpSemigroup const& s,
                            std::string const& name = "cayley") {
    std::ostringstream out;
    auto const&        a = s.alphabet();
    out << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      out << "  n" << i << " [label=\"" << a.format(g.vertices[i].word)
          << "\"];\n";
    }
    std::map<word_type, std::size_t> outside;
    for (auto const& e : g.edges) {
      if (!e.target && !outside.count(e.target_word)) {
        std::size_t k = outside.size();
        outside.emplace(e.target_word, k);
        out << "  d" << k << " [label=\"" << a.format(e.target_word)
            << "\", style=dashed];\n";
      }
    }
    for (auto const& e : g.edges) {
      out << "  n" << e.source << " -> ";
      if (e.target) {
        out << 'n' << *e.target << " [label=\"" << a.letter(e.label)
            << "\"];\n";
      } else {
        out << 'd' << outside.at(e.target_word) << " [label=\""
            << a.letter(e.label) << "\", style=dashed];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  struct Decomposition {
    Element target;
    Element left;
    Element right;
  };

  //! Result of a bounded indecomposability search. `elements` may contain
  //! elements that do factor through longer normal forms: it is an
  //! over-approximation.
  struct IndecomposablesResult {
    std::vector<Element>       elements;
    std::vector<Decomposition> decompositions;
    std::size_t                search_radius;
    bool                       bounded = true;
  };

  //! Elements of the ball of radius \p ball_radius that are not the product
  //! of two normal forms of length at most \p search_radius.
  inline IndecomposablesResult indecomposables(FpSemigroup const& s,
                                               std::size_t        ball_radius,
                                               std::size_t search_radius) {
    if (search_radius < ball_radius) {
      throw Error("search radius must be at least the ball radius");
    }
    auto const candidates = enumerate_ball(s, ball_radius);
    auto const factors    = enumerate_ball(s, search_radius);
    std::unordered_map<word_type, std::optional<Decomposition>, detail::WordHash>
        found;
    for (auto const& c : candidates) {
      found.emplace(c.word, std::nullopt);
    }
    std::size_t remaining = candidates.size();
    for (auto const& u : factors) {
      if (remaining == 0) {
        break;
      }
      for (auto const& v : factors) {
        auto p  = s.multiply(u, v);
        auto it = found.find(p.word);
        if (it != found.end() && !it->second) {
          it->second = Decomposition{p, u, v};
          if (--remaining == 0) {
            break;
          }
        }
      }
    }
    IndecomposablesResult result{{}, {}, search_radius, true};
    for (auto const& c : candidates) {
      auto const& d = found.at(c.word);
      if (d) {
        result.decompositions.push_back(*d);
      } else {
        result.elements.push_back(c);
      }
    }
    return result;
  }

  //! All u in the ball of radius \p radius with u·u = target.
  inline std::vector<Element> solve_square_root(FpSemigroup const& s,
                                                Element const&     target,
                                                std::size_t        radius) {
    s.check(target);
    std::vector<Element> out;
    for (auto const& u : enumerate_ball(s, radius)) {
      if (s.multiply(u, u) == target) {
        out.push_back(u);
      }
    }
    return out;
  }

}  // namespace hopfsg

#endif  // HOPFSG_FPSEMI_HPP_
