#ifndef HOPFSG_SCHEMATIC_HPP_
#define HOPFSG_SCHEMATIC_HPP_

// Infinite graphs given by finitely many vertex families indexed by
// integers and edge rules "A_i ~ B_{±i+c}". Maps between families are
// unit-slope affine on indices, with finitely many exceptions.
//
// Every question asked here (membership, adjacency, whether an edge or a
// vertex is hit) depends on an index i only through finitely many
// comparisons of ±i with constants of the graph and the map. Outside
// [-C, C], C the largest such constant in absolute value, the answers are
// constant in each direction, so checking a window of a few multiples of C
// decides them exactly.

#include <algorithm>  // for max, sort
#include <cctype>     // for isdigit, isalpha
#include <cstddef>    // for size_t
#include <cstdlib>    // for labs
#include <exception>  // for exception
#include <map>        // for map
#include <optional>   // for optional
#include <set>        // for set
#include <string>     // for string
#include <string_view>  // for string_view
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "core.hpp"          // for Alphabet
#include "errors.hpp"        // for Error
#include "graphs.hpp"        // for SimpleGraph
#include "presentation.hpp"  // for detail::trim

namespace hopfsg {

  using index_type = long;

  //! Integers, or integers >= lower, minus a finite set.
  struct IndexDomain {
    std::optional<index_type> lower;
    std::set<index_type>      excluded;

    bool contains(index_type i) const {
      return (!lower || i >= *lower) && !excluded.count(i);
    }
  };

  struct Family {
    std::string name;
    IndexDomain domain;
  };

  struct Vertex {
    std::size_t family;
    index_type  index;

    auto operator<=>(Vertex const&) const = default;
  };

  //! i ↦ sign·i + offset with sign = ±1.
  struct AffineIndex {
    int        sign   = 1;
    index_type offset = 0;

    index_type operator()(index_type i) const {
      return sign * i + offset;
    }

    //! The unique i with (*this)(i) = j.
    index_type inverse(index_type j) const {
      return sign * (j - offset);
    }

    bool operator==(AffineIndex const&) const = default;
  };

  //! Edges {from_i, to_{f(i)}} for every i in [lo, hi] with both endpoints
  //! in their domains (so a subgraph induced by removing vertices needs no
  //! change of rules).
  struct EdgeRule {
    std::size_t               from;
    std::size_t               to;
    AffineIndex               f;
    std::optional<index_type> lo;
    std::optional<index_type> hi;
  };

  class SchematicGraph {
   public:
    SchematicGraph() = default;

    SchematicGraph(std::vector<Family> families, std::vector<EdgeRule> rules)
        : _families(std::move(families)), _rules(std::move(rules)) {
      for (std::size_t i = 0; i < _families.size(); ++i) {
        if (!Alphabet::is_identifier(_families[i].name)) {
          throw Error("invalid family name '" + _families[i].name + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_families[i].name == _families[j].name) {
            throw Error("duplicate family '" + _families[i].name + "'");
          }
        }
      }
      for (auto const& r : _rules) {
        if (r.from >= _families.size() || r.to >= _families.size()) {
          throw Error("edge rule refers to an unknown family");
        }
        if (r.f.sign != 1 && r.f.sign != -1) {
          throw Error("edge rule index maps must have slope 1 or -1");
        }
      }
      // Loops and repeated instances, checked on the exact window.
      index_type const         b = window_bound();
      std::set<std::pair<Vertex, Vertex>> seen;
      for (std::size_t k = 0; k < _rules.size(); ++k) {
        for (index_type i = -b; i <= b; ++i) {
          auto e = instance(k, i);
          if (!e) {
            continue;
          }
          if (e->first == e->second) {
            throw Error("edge rule " + std::to_string(k) + " gives a loop at "
                        + name(e->first));
          }
          auto key = std::minmax(e->first, e->second);
          if (!seen.insert(key).second) {
            throw Error("edge {" + name(e->first) + ", " + name(e->second)
                        + "} is produced twice");
          }
        }
      }
    }

    std::vector<Family> const& families() const noexcept {
      return _families;
    }

    std::vector<EdgeRule> const& rules() const noexcept {
      return _rules;
    }

    std::optional<std::size_t> family(std::string_view name) const {
      for (std::size_t i = 0; i < _families.size(); ++i) {
        if (_families[i].name == name) {
          return i;
        }
      }
      return std::nullopt;
    }

    bool contains(Vertex v) const {
      return v.family < _families.size()
             && _families[v.family].domain.contains(v.index);
    }

    //! "x_-3" style name.
    std::string name(Vertex v) const {
      return _families.at(v.family).name + "_" + std::to_string(v.index);
    }

    //! Parses "x_-3" (also "x-3", "x3").
    Vertex vertex(std::string_view text) const {
      std::size_t p = 0;
      while (p < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_')
             && !(std::isdigit(static_cast<unsigned char>(text[p])) && p > 0)) {
        ++p;
      }
      auto fam  = text.substr(0, p);
      auto rest = text.substr(p);
      if (!fam.empty() && fam.back() == '_') {
        fam.remove_suffix(1);
      }
      auto f = family(fam);
      if (!f || rest.empty()) {
        throw Error("cannot parse vertex '" + std::string(text) + "'");
      }
      std::size_t used = 0;
      index_type  i    = 0;
      try {
        i = std::stol(std::string(rest), &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != rest.size()) {
        throw Error("cannot parse vertex '" + std::string(text) + "'");
      }
      return Vertex{*f, i};
    }

    //! The edge rule k produces at i, if any.
    std::optional<std::pair<Vertex, Vertex>> instance(std::size_t k,
                                                      index_type  i) const {
      auto const& r = _rules.at(k);
      if ((r.lo && i < *r.lo) || (r.hi && i > *r.hi)) {
        return std::nullopt;
      }
      Vertex u{r.from, i};
      Vertex v{r.to, r.f(i)};
      if (!contains(u) || !contains(v)) {
        return std::nullopt;
      }
      return std::make_pair(u, v);
    }

    bool adjacent(Vertex u, Vertex v) const {
      for (std::size_t k = 0; k < _rules.size(); ++k) {
        auto const& r = _rules[k];
        if (u.family == r.from && v.family == r.to
            && v.index == r.f(u.index) && instance(k, u.index)) {
          return true;
        }
        if (v.family == r.from && u.family == r.to
            && u.index == r.f(v.index) && instance(k, v.index)) {
          return true;
        }
      }
      return false;
    }

    //! Number of rule instances incident to \p v.
    std::size_t degree(Vertex v) const {
      if (!contains(v)) {
        throw Error("vertex " + name(v) + " is not in the graph");
      }
      std::size_t d = 0;
      for (std::size_t k = 0; k < _rules.size(); ++k) {
        auto const& r = _rules[k];
        if (v.family == r.from && instance(k, v.index)) {
          ++d;
        }
        if (v.family == r.to && instance(k, r.f.inverse(v.index))) {
          ++d;
        }
      }
      return d;
    }

    //! Largest constant in absolute value.
    index_type constant() const {
      index_type c = 0;
      for (auto const& f : _families) {
        if (f.domain.lower) {
          c = std::max(c, std::labs(*f.domain.lower));
        }
        for (auto x : f.domain.excluded) {
          c = std::max(c, std::labs(x));
        }
      }
      for (auto const& r : _rules) {
        c = std::max(c, std::labs(r.f.offset));
        if (r.lo) {
          c = std::max(c, std::labs(*r.lo));
        }
        if (r.hi) {
          c = std::max(c, std::labs(*r.hi));
        }
      }
      return c;
    }

    index_type window_bound(index_type extra = 0) const {
      return 10 * std::max(constant(), extra) + 10;
    }

   private:
    std::vector<Family>   _families;
    std::vector<EdgeRule> _rules;
  };

  //! The finite graph induced on every vertex with index in [lo, hi],
  //! ordered by family, then index.
  inline SimpleGraph window(SchematicGraph const& g, index_type lo, index_type hi) {
    if (lo > hi) {
      throw Error("empty window");
    }
    std::vector<Vertex>      vs;
    std::vector<std::string> names;
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      for (index_type i = lo; i <= hi; ++i) {
        if (g.contains(Vertex{f, i})) {
          vs.push_back(Vertex{f, i});
          names.push_back(g.name(vs.back()));
        }
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (g.adjacent(vs[a], vs[b])) {
          edges.emplace_back(a, b);
        }
      }
    }
    return SimpleGraph(std::move(names), std::move(edges));
  }

  inline std::size_t schematic_degree(SchematicGraph const& g, Vertex v) {
    return g.degree(v);
  }

  //! Per source family: target family and affine index map, plus
  //! exceptional images for single vertices.
  struct FamilyMap {
    struct Component {
      std::size_t target;
      AffineIndex f;
    };
    std::vector<Component>   components;
    std::map<Vertex, Vertex> exceptions;

    Vertex operator()(Vertex v) const {
      if (auto it = exceptions.find(v); it != exceptions.end()) {
        return it->second;
      }
      auto const& c = components.at(v.family);
      return Vertex{c.target, c.f(v.index)};
    }

    index_type constant() const {
      index_type c = 0;
      for (auto const& comp : components) {
        c = std::max(c, std::labs(comp.f.offset));
      }
      for (auto const& [u, v] : exceptions) {
        c = std::max({c, std::labs(u.index), std::labs(v.index)});
      }
      return c;
    }
  };

  inline FamilyMap identity_family_map(SchematicGraph const& g) {
    FamilyMap m;
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      m.components.push_back({f, AffineIndex{1, 0}});
    }
    return m;
  }

  //! i ↦ i + c on every family.
  inline FamilyMap shift_family_map(SchematicGraph const& g, index_type c) {
    FamilyMap m;
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      m.components.push_back({f, AffineIndex{1, c}});
    }
    return m;
  }

  //! i ↦ -i on every family.
  inline FamilyMap reflection_family_map(SchematicGraph const& g) {
    FamilyMap m;
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      m.components.push_back({f, AffineIndex{-1, 0}});
    }
    return m;
  }

  //! First \p first, then \p second.
  inline FamilyMap compose(FamilyMap const& first, FamilyMap const& second) {
    FamilyMap out;
    for (auto const& c : first.components) {
      auto const& d = second.components.at(c.target);
      out.components.push_back(
          {d.target,
           AffineIndex{c.f.sign * d.f.sign, d.f.sign * c.f.offset + d.f.offset}});
    }
    // Vertices where either map is exceptional.
    std::set<Vertex> special;
    for (auto const& [u, v] : first.exceptions) {
      special.insert(u);
    }
    for (auto const& [u, v] : second.exceptions) {
      for (std::size_t f = 0; f < first.components.size(); ++f) {
        auto const& c = first.components[f];
        if (c.target == u.family) {
          special.insert(Vertex{f, c.f.inverse(u.index)});
        }
      }
    }
    for (auto const& v : special) {
      auto w = second(first(v));
      if (!(out(v) == w)) {
        out.exceptions[v] = w;
      }
    }
    return out;
  }

  struct SchematicReport {
    //! Vertices whose image is not a vertex of the graph.
    std::vector<std::pair<Vertex, Vertex>> domain_violations;
    //! Edges whose image is not an edge.
    std::vector<std::pair<Vertex, Vertex>> rule_violations;
    bool                                   endomorphism = false;
    bool                                   injective    = false;
    std::optional<std::pair<Vertex, Vertex>> collision;
    bool                                     surjective = false;
    //! Vertices with no preimage, in order.
    std::vector<Vertex> unreached;
    //! Half-width of the window the statements were decided on.
    index_type window = 0;
  };

  //! Decides whether \p m is an endomorphism of \p g, and whether it is
  //! injective and surjective.
  inline SchematicReport schematic_check_endo(SchematicGraph const& g,
                                              FamilyMap const&      m) {
    if (m.components.size() != g.families().size()) {
      throw Error("family map must give an image for every family");
    }
    for (auto const& c : m.components) {
      if (c.target >= g.families().size()
          || (c.f.sign != 1 && c.f.sign != -1)) {
        throw Error("family map component is invalid");
      }
    }
    SchematicReport  report;
    index_type const b = g.window_bound(m.constant());
    report.window      = b / 2;

    std::map<Vertex, Vertex> hit;  // image -> least preimage
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      for (index_type i = -b; i <= b; ++i) {
        Vertex v{f, i};
        if (!g.contains(v)) {
          continue;
        }
        Vertex w = m(v);
        if (!g.contains(w)) {
          report.domain_violations.emplace_back(v, w);
          continue;
        }
        auto [it, inserted] = hit.emplace(w, v);
        if (!inserted && !report.collision) {
          report.collision = std::make_pair(it->second, v);
        }
      }
    }
    for (std::size_t k = 0; k < g.rules().size(); ++k) {
      for (index_type i = -b; i <= b; ++i) {
        auto e = g.instance(k, i);
        if (!e) {
          continue;
        }
        Vertex u = m(e->first);
        Vertex v = m(e->second);
        if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) {
          report.rule_violations.push_back(*e);
        }
      }
    }
    report.endomorphism
        = report.domain_violations.empty() && report.rule_violations.empty();
    report.injective = !report.collision;
    // Preimages of vertices in the inner half lie inside the full window.
    for (std::size_t f = 0; f < g.families().size(); ++f) {
      for (index_type i = -report.window; i <= report.window; ++i) {
        Vertex w{f, i};
        if (g.contains(w) && !hit.count(w)) {
          report.unreached.push_back(w);
        }
      }
    }
    report.surjective = report.unreached.empty();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct Term {
      std::string               family;
      std::optional<std::string> variable;
      int                       sign  = 1;
      index_type                value = 0;
    };

    // "x i", "x i+1", "x -i+2", "y 3", "x_i-1".
    inline Term parse_term(std::string_view text) {
      text = trim(text);
      Term t;
      std::string_view rest;
      // Family name ends at a space or at "_" followed by the index.
      auto space = text.find(' ');
      if (space != std::string_view::npos) {
        t.family = std::string(text.substr(0, space));
        rest     = trim(text.substr(space + 1));
      } else if (auto u = text.rfind('_'); u != std::string_view::npos && u > 0) {
        t.family = std::string(text.substr(0, u));
        rest     = text.substr(u + 1);
      } else {
        throw Error("cannot parse index term '" + std::string(text) + "'");
      }
      std::string compact;
      for (char c : rest) {
        if (c != ' ') {
          compact += c;
        }
      }
      if (compact.empty()) {
        throw Error("missing index in term '" + std::string(text) + "'");
      }
      std::size_t q = 0;
      if (compact[0] == '-' && q + 1 < compact.size()
          && std::isalpha(static_cast<unsigned char>(compact[1]))) {
        t.sign = -1;
        ++q;
      }
      if (std::isalpha(static_cast<unsigned char>(compact[q]))) {
        std::size_t e = q;
        while (e < compact.size()
               && std::isalpha(static_cast<unsigned char>(compact[e]))) {
          ++e;
        }
        t.variable = compact.substr(q, e - q);
        q          = e;
        if (q == compact.size()) {
          return t;
        }
        if (compact[q] != '+' && compact[q] != '-') {
          throw Error("cannot parse index term '" + std::string(text) + "'");
        }
      }
      std::size_t used = 0;
      try {
        t.value = std::stol(compact.substr(q), &used);
      } catch (std::exception const&) {
        used = std::string::npos;
      }
      if (used != compact.size() - q) {
        throw Error("cannot parse index term '" + std::string(text) + "'");
      }
      return t;
    }

    inline std::size_t family_of(SchematicGraph const& g, std::string const& name) {
      auto f = g.family(name);
      if (!f) {
        throw Error("unknown family '" + name + "'");
      }
      return *f;
    }
  }  // namespace detail

  //! Domain text: "Z", "N" (integers >= \p naturals_start) or "Z>=k"/"N>=k".
  inline IndexDomain parse_domain(std::string_view              text,
                                  std::vector<index_type> const& exclude,
                                  index_type                    naturals_start = 1) {
    IndexDomain d;
    text = detail::trim(text);
    if (text == "Z") {
    } else if (text == "N") {
      d.lower = naturals_start;
    } else if (text.size() > 3 && (text[0] == 'Z' || text[0] == 'N')
               && text.substr(1, 2) == ">=") {
      d.lower = std::stol(std::string(text.substr(3)));
    } else {
      throw Error("unknown index domain '" + std::string(text) + "'");
    }
    d.excluded.insert(exclude.cbegin(), exclude.cend());
    return d;
  }

  //! Builds a rule from "x i", "y i+1" and an optional range such as
  //! "j>=1", "i<=5" or "1<=i<=5".
  inline EdgeRule parse_edge_rule(std::vector<Family> const& families,
                                  std::string_view           from,
                                  std::string_view           to,
                                  std::string_view           range = "") {
    auto a = detail::parse_term(from);
    auto b = detail::parse_term(to);
    auto find = [&families](std::string const& name) {
      for (std::size_t i = 0; i < families.size(); ++i) {
        if (families[i].name == name) {
          return i;
        }
      }
      throw Error("unknown family '" + name + "'");
    };
    if (!a.variable || a.sign != 1 || a.value != 0) {
      throw Error("left side of an edge rule must be 'family var'");
    }
    if (!b.variable || *b.variable != *a.variable) {
      throw Error("both sides of an edge rule must use the same variable");
    }
    EdgeRule r{find(a.family), find(b.family), AffineIndex{b.sign, b.value}, {}, {}};
    range = detail::trim(range);
    if (!range.empty()) {
      std::string s;
      for (char c : range) {
        if (c != ' ') {
          s += c;
        }
      }
      auto const& v   = *a.variable;
      auto        pos = s.find(v);
      if (pos == std::string::npos) {
        throw Error("range '" + s + "' does not mention " + v);
      }
      auto before = s.substr(0, pos);
      auto after  = s.substr(pos + v.size());
      if (!before.empty()) {
        if (before.size() < 3 || before.substr(before.size() - 2) != "<=") {
          throw Error("cannot parse range '" + s + "'");
        }
        r.lo = std::stol(before.substr(0, before.size() - 2));
      }
      if (!after.empty()) {
        auto op = after.substr(0, 2);
        if (op == ">=") {
          r.lo = std::stol(after.substr(2));
        } else if (op == "<=") {
          r.hi = std::stol(after.substr(2));
        } else {
          throw Error("cannot parse range '" + s + "'");
        }
      }
    }
    return r;
  }

  //! Entries separated by ';' or ',': "x i -> x i+1" for a family, or
  //! "y 1 -> y -1" for a single exceptional vertex. Every family needs an
  //! affine entry.
  inline FamilyMap parse_family_map(SchematicGraph const& g, std::string_view text) {
    FamilyMap                                    m;
    std::vector<std::optional<FamilyMap::Component>> comps(g.families().size());
    std::size_t                                  start = 0;
    while (start < text.size()) {
      auto end = text.find_first_of(";,", start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto item = detail::trim(text.substr(start, end - start));
      start     = end + 1;
      if (item.empty()) {
        continue;
      }
      auto arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw Error("expected '->' in '" + std::string(item) + "'");
      }
      auto a = detail::parse_term(item.substr(0, arrow));
      auto b = detail::parse_term(item.substr(arrow + 2));
      auto fa = detail::family_of(g, a.family);
      auto fb = detail::family_of(g, b.family);
      if (a.variable) {
        if (a.sign != 1 || a.value != 0 || !b.variable
            || *b.variable != *a.variable) {
          throw Error("family entry must read 'x i -> y ±i+c'");
        }
        if (comps[fa]) {
          throw Error("family '" + a.family + "' mapped twice");
        }
        comps[fa] = FamilyMap::Component{fb, AffineIndex{b.sign, b.value}};
      } else {
        if (b.variable) {
          throw Error("exceptional entry must map a vertex to a vertex");
        }
        m.exceptions[Vertex{fa, a.value}] = Vertex{fb, b.value};
      }
    }
    for (std::size_t f = 0; f < comps.size(); ++f) {
      if (!comps[f]) {
        throw Error("family '" + g.families()[f].name + "' has no image");
      }
      m.components.push_back(*comps[f]);
    }
    return m;
  }

}  // namespace hopfsg

#endif  // HOPFSG_SCHEMATIC_HPP_
