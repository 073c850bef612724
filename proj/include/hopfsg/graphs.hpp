#ifndef HOPFSG_GRAPHS_HPP_
#define HOPFSG_GRAPHS_HPP_

#include <algorithm>  // for sort, find, next_permutation
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for pair, move
#include <variant>    // for variant
#include <vector>     // for vector

#include "errors.hpp"   // for Error
#include "finsemi.hpp"  // for FiniteSemigroup, SubSemigroup, element_map

namespace hopfsg {

  using vertex_map = std::vector<std::size_t>;

  //! Finite undirected graph without loops or multiple edges.
  class SimpleGraph {
   public:
    SimpleGraph() = default;

    SimpleGraph(std::vector<std::string>                         vertices,
                std::vector<std::pair<std::size_t, std::size_t>> edges)
        : _names(std::move(vertices)),
          _adj(_names.size(), std::vector<bool>(_names.size(), false)) {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i].empty()) {
          throw Error("vertex names must be nonempty");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_names[i] == _names[j]) {
            throw Error("duplicate vertex '" + _names[i] + "'");
          }
        }
      }
      for (auto [u, v] : edges) {
        if (u >= _names.size() || v >= _names.size()) {
          throw Error("edge endpoint out of range");
        }
        if (u == v) {
          throw Error("loop at vertex '" + _names[u] + "'");
        }
        if (_adj[u][v]) {
          throw Error("duplicate edge {" + _names[u] + ", " + _names[v] + "}");
        }
        _adj[u][v] = _adj[v][u] = true;
      }
    }

    static SimpleGraph
    from_names(std::vector<std::string>                               vertices,
               std::vector<std::pair<std::string, std::string>> const& edges) {
      std::vector<std::pair<std::size_t, std::size_t>> ids;
      auto find = [&vertices](std::string const& name) {
        auto it = std::find(vertices.cbegin(), vertices.cend(), name);
        if (it == vertices.cend()) {
          throw Error("edge mentions unknown vertex '" + name + "'");
        }
        return static_cast<std::size_t>(it - vertices.cbegin());
      };
      for (auto const& [u, v] : edges) {
        ids.emplace_back(find(u), find(v));
      }
      return SimpleGraph(std::move(vertices), std::move(ids));
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(std::size_t v) const {
      return _names.at(v);
    }

    std::optional<std::size_t> index(std::string const& name) const {
      auto it = std::find(_names.cbegin(), _names.cend(), name);
      if (it == _names.cend()) {
        return std::nullopt;
      }
      return it - _names.cbegin();
    }

    bool adjacent(std::size_t u, std::size_t v) const {
      return _adj.at(u).at(v);
    }

    std::size_t degree(std::size_t v) const {
      return std::count(_adj.at(v).cbegin(), _adj.at(v).cend(), true);
    }

    //! Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
          if (_adj[u][v]) {
            out.emplace_back(u, v);
          }
        }
      }
      return out;
    }

    bool operator==(SimpleGraph const&) const = default;

   private:
    std::vector<std::string>       _names;
    std::vector<std::vector<bool>> _adj;
  };

  //! The subgraph induced on \p subset, keeping vertex names and the
  //! relative order of vertices.
  inline SimpleGraph induced(SimpleGraph const&              g,
                             std::vector<std::size_t> const& subset) {
    std::vector<std::size_t> keep(subset);
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.cbegin(), keep.cend()) != keep.cend()) {
      throw Error("vertex subset lists a vertex twice");
    }
    std::vector<std::string> names;
    for (auto v : keep) {
      if (v >= g.size()) {
        throw Error("vertex index out of range");
      }
      names.push_back(g.name(v));
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (g.adjacent(keep[i], keep[j])) {
          edges.emplace_back(i, j);
        }
      }
    }
    return SimpleGraph(std::move(names), std::move(edges));
  }

  ////////////////////////////////////////////////////////////////////////
  // S_Γ
  ////////////////////////////////////////////////////////////////////////

  //! Position of e, n and 0 in graph_semigroup(g): right after the vertices.
  struct GraphSemigroupLayout {
    std::size_t vertices;

    std::size_t e() const noexcept {
      return vertices;
    }
    std::size_t n() const noexcept {
      return vertices + 1;
    }
    std::size_t zero() const noexcept {
      return vertices + 2;
    }
  };

  //! S_Γ = V ∪ {e, n, 0}: for vertices uv = e if u, v are adjacent and n
  //! otherwise; every other product is 0. Elements are the vertices in
  //! order followed by "e", "n", "0".
  inline FiniteSemigroup graph_semigroup(SimpleGraph const& g) {
    GraphSemigroupLayout const L{g.size()};
    std::vector<std::string>   names = g.names();
    for (std::string special : {"e", "n", "0"}) {
      if (g.index(special)) {
        throw Error("vertex name '" + special
                    + "' is reserved in the graph semigroup");
      }
      names.push_back(special);
    }
    std::size_t const                     size = g.size() + 3;
    std::vector<std::vector<std::size_t>> table(
        size, std::vector<std::size_t>(size, L.zero()));
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        table[u][v] = g.adjacent(u, v) ? L.e() : L.n();
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  //! Rees index of S_Δ in S_Γ for Δ induced on \p subset. Computed from the
  //! tables (embedding S_Δ by names) and as |V - W| + 1; throws if the two
  //! disagree.
  inline std::size_t rees_index_of_induced(SimpleGraph const&              g,
                                           std::vector<std::size_t> const& subset) {
    auto const sg    = graph_semigroup(g);
    auto const delta = induced(g, subset);
    auto const sd    = graph_semigroup(delta);
    element_map embed;
    for (auto const& name : sd.names()) {
      embed.push_back(*sg.index(name));
    }
    for (std::size_t x = 0; x < sd.size(); ++x) {
      for (std::size_t y = 0; y < sd.size(); ++y) {
        if (embed[sd.product(x, y)] != sg.product(embed[x], embed[y])) {
          throw Error("S_Δ does not embed in S_Γ");
        }
      }
    }
    std::size_t const from_table = rees_index(SubSemigroup(sg, embed));
    std::size_t const from_count = g.size() - delta.size() + 1;
    if (from_table != from_count) {
      throw Error("Rees index mismatch: " + std::to_string(from_table)
                  + " from the tables, " + std::to_string(from_count)
                  + " from |V - W| + 1");
    }
    return from_table;
  }

  //! Three-element subsets {a, b, z} with every product equal to z.
  inline std::vector<std::vector<std::size_t>>
  three_element_null_subsemigroups(FiniteSemigroup const& s) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t const                     n = s.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          std::vector<std::size_t> x{a, b, c};
          for (auto z : x) {
            bool ok = true;
            for (auto p : x) {
              for (auto q : x) {
                ok = ok && s.product(p, q) == z;
              }
            }
            if (ok) {
              out.push_back(x);
            }
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph endomorphisms and the bridge to S_Γ
  ////////////////////////////////////////////////////////////////////////

  inline bool preserves_edges(SimpleGraph const& g, vertex_map const& phi) {
    for (auto [u, v] : g.edges()) {
      if (!g.adjacent(phi[u], phi[v])) {
        return false;
      }
    }
    return true;
  }

  struct GraphEndo {
    vertex_map map;
    //! Bijective and preserves non-edges as well as edges.
    bool automorphism;
  };

  //! Every injective edge-preserving self-map of \p g, sorted by image
  //! tuple.
  inline std::vector<GraphEndo> injective_graph_endos(SimpleGraph const& g) {
    std::size_t const      n = g.size();
    std::vector<GraphEndo> out;
    vertex_map             phi(n);
    std::vector<bool>      used(n, false);
    auto search = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        bool aut = true;
        for (std::size_t u = 0; u < n && aut; ++u) {
          for (std::size_t v = 0; v < n && aut; ++v) {
            aut = g.adjacent(u, v) == g.adjacent(phi[u], phi[v]);
          }
        }
        aut = aut && std::all_of(used.cbegin(), used.cend(), [](bool b) {
                return b;
              });
        out.push_back(GraphEndo{phi, aut});
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) {
          continue;
        }
        phi[k]  = v;
        bool ok = true;
        for (std::size_t u = 0; u < k && ok; ++u) {
          ok = !g.adjacent(u, k) || g.adjacent(phi[u], v);
        }
        if (ok) {
          used[v] = true;
          self(self, k + 1);
          used[v] = false;
        }
      }
    };
    search(search, 0);
    return out;
  }

  //! A non-adjacent pair whose images are adjacent: the extension of φ by
  //! e, n, 0 ↦ e, n, 0 then fails to be a homomorphism at (v1, v2).
  struct ExtensionFailure {
    std::size_t v1;
    std::size_t v2;
  };

  namespace detail {
    inline void validate_injective_graph_endo(SimpleGraph const& g,
                                              vertex_map const&  phi) {
      if (phi.size() != g.size()) {
        throw Error("vertex map has " + std::to_string(phi.size())
                    + " images, expected " + std::to_string(g.size()));
      }
      for (auto v : phi) {
        if (v >= g.size()) {
          throw Error("vertex map image out of range");
        }
      }
      if (!is_injective(phi)) {
        throw Error("vertex map is not injective");
      }
      if (!preserves_edges(g, phi)) {
        throw Error("vertex map does not preserve edges");
      }
    }
  }  // namespace detail

  //! The non-adjacent pair (v1, v2), v1 < v2, least in that order, that φ
  //! sends to an edge.
  inline std::optional<ExtensionFailure>
  find_extension_failure(SimpleGraph const& g, vertex_map const& phi) {
    detail::validate_injective_graph_endo(g, phi);
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (!g.adjacent(u, v) && g.adjacent(phi[u], phi[v])) {
          return ExtensionFailure{u, v};
        }
      }
    }
    return std::nullopt;
  }

  //! φ̂ on graph_semigroup(g): φ on vertices, identity on e, n, 0. Verified
  //! to be an endomorphism before it is returned.
  inline std::variant<element_map, ExtensionFailure>
  hat_extension(SimpleGraph const& g, vertex_map const& phi) {
    if (auto failure = find_extension_failure(g, phi)) {
      return *failure;
    }
    GraphSemigroupLayout const L{g.size()};
    element_map                hat(phi);
    hat.push_back(L.e());
    hat.push_back(L.n());
    hat.push_back(L.zero());
    if (!is_endomorphism(graph_semigroup(g), hat)) {
      throw Error("extension is not an endomorphism");
    }
    return hat;
  }

  //! Raised by restrict_to_graph; step() names the check that failed.
  class RestrictionError : public Error {
   public:
    RestrictionError(std::string step, std::string const& what)
        : Error(step + ": " + what), _step(std::move(step)) {}

    std::string const& step() const noexcept {
      return _step;
    }

   private:
    std::string _step;
  };

  //! ψ restricted to the vertices, for an injective endomorphism ψ of
  //! graph_semigroup(g). Checks, in order: ψ is an injective endomorphism;
  //! {e, n, 0} is the only three-element null subsemigroup and ψ maps it to
  //! itself; 0, n, e are fixed; vertices go to vertices; and u ~ v iff
  //! uψ ~ vψ.
  inline vertex_map restrict_to_graph(SimpleGraph const& g, element_map const& psi) {
    auto const                 s = graph_semigroup(g);
    GraphSemigroupLayout const L{g.size()};
    if (psi.size() != s.size()) {
      throw RestrictionError("endomorphism", "map has the wrong number of images");
    }
    for (auto x : psi) {
      if (x >= s.size()) {
        throw RestrictionError("endomorphism", "image out of range");
      }
    }
    if (!is_endomorphism(s, psi)) {
      throw RestrictionError("endomorphism", "map is not an endomorphism");
    }
    if (!is_injective(psi)) {
      throw RestrictionError("injective", "map is not injective");
    }
    std::vector<std::size_t> const x{L.e(), L.n(), L.zero()};
    auto const                     nulls = three_element_null_subsemigroups(s);
    if (nulls.size() != 1 || nulls.front() != x) {
      throw RestrictionError("null subsemigroup",
                             "{e, n, 0} is not the unique three-element null "
                             "subsemigroup");
    }
    if (image(psi, x) != x) {
      throw RestrictionError("null subsemigroup", "image of {e, n, 0} differs");
    }
    if (psi[L.zero()] != L.zero()) {
      throw RestrictionError("zero", "0 is not fixed");
    }
    if (psi[L.n()] != L.n()) {
      throw RestrictionError("n", "n is not fixed");
    }
    if (psi[L.e()] != L.e()) {
      throw RestrictionError("e", "e is not fixed");
    }
    vertex_map phi(psi.cbegin(), psi.cbegin() + g.size());
    for (auto v : phi) {
      if (v >= g.size()) {
        throw RestrictionError("vertices", "a vertex is sent outside V");
      }
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.adjacent(u, v) != g.adjacent(phi[u], phi[v])) {
          throw RestrictionError("edges",
                                 "adjacency of " + g.name(u) + ", " + g.name(v)
                                     + " is not preserved");
        }
      }
    }
    return phi;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration helpers
  ////////////////////////////////////////////////////////////////////////

  //! Vertex names v1, ..., vn.
  inline std::vector<std::string> default_vertex_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
      out.push_back("v" + std::to_string(i));
    }
    return out;
  }

  //! All 2^(n(n-1)/2) graphs on the vertices v1, ..., vn.
  inline std::vector<SimpleGraph> labeled_graphs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        slots.emplace_back(u, v);
      }
    }
    if (slots.size() >= 32) {
      throw Error("too many labeled graphs to enumerate");
    }
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (mask >> k & 1) {
          edges.push_back(slots[k]);
        }
      }
      out.emplace_back(default_vertex_names(n), std::move(edges));
    }
    return out;
  }

  //! Least adjacency bit string over all vertex relabelings; equal for
  //! isomorphic graphs. Brute force, so only for small graphs.
  inline std::vector<bool> canonical_form(SimpleGraph const& g) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = i;
    }
    std::optional<std::vector<bool>> best;
    do {
      std::vector<bool> bits;
      for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
          bits.push_back(g.adjacent(perm[u], perm[v]));
        }
      }
      if (!best || bits < *best) {
        best = std::move(bits);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
  }

  //! One graph per isomorphism class on n vertices, the first labeled
  //! representative met.
  inline std::vector<SimpleGraph> unlabeled_graphs(std::size_t n) {
    std::set<std::vector<bool>> seen;
    std::vector<SimpleGraph>    out;
    for (auto& g : labeled_graphs(n)) {
      if (seen.insert(canonical_form(g)).second) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  inline std::string to_dot(SimpleGraph const& g, std::string const& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      out << "  \"" << g.name(v) << "\";\n";
    }
    for (auto [u, v] : g.edges()) {
      out << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace hopfsg

#endif  // HOPFSG_GRAPHS_HPP_
