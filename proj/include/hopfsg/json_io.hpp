#ifndef HOPFSG_JSON_IO_HPP_
#define HOPFSG_JSON_IO_HPP_

// JSON reading and writing for tables, graphs, schematic graphs and
// certificates. The only header that needs nlohmann/json.

#include <algorithm>   // for find
#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <fstream>     // for ifstream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <utility>     // for move
#include <variant>     // for visit
#include <vector>      // for vector

#include <json.hpp>  // for nlohmann::json

#include "errors.hpp"     // for Error, ParseError
#include "finsemi.hpp"    // for FiniteSemigroup, StabilizerCertificate
#include "graphs.hpp"     // for SimpleGraph
#include "morph.hpp"      // for EndoCertificate
#include "schematic.hpp"  // for SchematicGraph

namespace hopfsg {

  using json = nlohmann::ordered_json;

  namespace detail {
    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    inline json parse_json(std::string const& text, std::string const& source) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        // nlohmann reports a byte offset; turn it into line and column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
          if (text[i] == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        std::string token
            = e.byte > 0 && e.byte <= text.size() ? text.substr(e.byte - 1, 1) : "";
        throw ParseError(source, line, column, token, "invalid JSON");
      }
    }

    inline std::string read_file(std::filesystem::path const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError(path.string(), 0, 0, path.string(), "cannot open file");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    inline json const& require(json const&        j,
                               char const*        key,
                               std::string const& source) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(source, 1, 1, key, std::string("missing key '") + key + "'");
      }
      return j.at(key);
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  //! `{"elements": [...], "table": [[...], ...]}`; entries are indices or
  //! element names.
  inline FiniteSemigroup table_from_json(json const&        j,
                                         std::string const& source = "<table>") {
    auto const&              elements = detail::require(j, "elements", source);
    auto const&              rows     = detail::require(j, "table", source);
    std::vector<std::string> names;
    for (auto const& e : elements) {
      names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    std::vector<std::vector<std::size_t>> table;
    for (auto const& row : rows) {
      std::vector<std::size_t> r;
      for (auto const& x : row) {
        if (x.is_number_unsigned()) {
          r.push_back(x.get<std::size_t>());
        } else if (x.is_string()) {
          auto it = std::find(names.cbegin(), names.cend(), x.get<std::string>());
          if (it == names.cend()) {
            throw ParseError(source, 1, 1, x.get<std::string>(), "unknown element in table");
          }
          r.push_back(it - names.cbegin());
        } else {
          throw ParseError(source, 1, 1, x.dump(), "table entries must be indices or names");
        }
      }
      table.push_back(std::move(r));
    }
    try {
      return FiniteSemigroup(std::move(names), std::move(table));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(source, 1, 1, "table", e.what());
    }
  }

  inline json to_json(FiniteSemigroup const& s) {
    return json{{"elements", s.names()}, {"table", s.rows()}};
  }

  inline FiniteSemigroup load_table(std::filesystem::path const& path) {
    return table_from_json(detail::parse_json(detail::read_file(path), path.string()),
                           path.string());
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  //! `{"vertices": [...], "edges": [["a", "b"], ...]}`.
  inline SimpleGraph graph_from_json(json const&        j,
                                     std::string const& source = "<graph>") {
    auto vertices = detail::require(j, "vertices", source).get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw ParseError(source, 1, 1, e.dump(), "an edge is a pair of vertex names");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    try {
      return SimpleGraph::from_names(std::move(vertices), edges);
    } catch (Error const& e) {
      throw ParseError(source, 1, 1, "edges", e.what());
    }
  }

  inline json to_json(SimpleGraph const& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
      edges.push_back({g.name(u), g.name(v)});
    }
    return json{{"vertices", g.names()}, {"edges", edges}};
  }

  inline SimpleGraph load_graph(std::filesystem::path const& path) {
    return graph_from_json(detail::parse_json(detail::read_file(path), path.string()),
                           path.string());
  }

  //! `{"families": [{"name": "x", "domain": "Z", "exclude": [0]}, ...],
  //!   "rules": [["x i", "y i"], ["y j", "z j", "j>=1"], ...]}`.
  //! The domain "N" means integers >= \p naturals_start.
  inline SchematicGraph schematic_from_json(json const&        j,
                                            std::string const& source = "<schematic>",
                                            index_type         naturals_start = 1) {
    try {
      std::vector<Family> families;
      for (auto const& f : detail::require(j, "families", source)) {
        std::vector<index_type> exclude;
        if (f.contains("exclude")) {
          exclude = f.at("exclude").get<std::vector<index_type>>();
        }
        families.push_back(Family{
            detail::require(f, "name", source).get<std::string>(),
            parse_domain(f.value("domain", "Z"), exclude, naturals_start)});
      }
      std::vector<EdgeRule> rules;
      for (auto const& r : detail::require(j, "rules", source)) {
        if (!r.is_array() || r.size() < 2 || r.size() > 3) {
          throw ParseError(source, 1, 1, r.dump(), "a rule is [from, to] or [from, to, range]");
        }
        rules.push_back(parse_edge_rule(families,
                                        r[0].get<std::string>(),
                                        r[1].get<std::string>(),
                                        r.size() == 3 ? r[2].get<std::string>() : ""));
      }
      return SchematicGraph(std::move(families), std::move(rules));
    } catch (ParseError const&) {
      throw;
    } catch (json::exception const& e) {
      throw ParseError(source, 1, 1, "", e.what());
    } catch (Error const& e) {
      throw ParseError(source, 1, 1, "", e.what());
    }
  }

  inline SchematicGraph load_schematic(std::filesystem::path const& path,
                                       index_type                   naturals_start = 1) {
    return schematic_from_json(
        detail::parse_json(detail::read_file(path), path.string()),
        path.string(),
        naturals_start);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(EndoCertificate const& c, Alphabet const& a) {
    json out;
    json images = json::object();
    for (std::size_t i = 0; i < c.map.images.size(); ++i) {
      images[a.letter(i)] = a.format(c.map.images[i]);
    }
    out["map"] = images;
    std::visit(detail::overloaded{
                   [&](Verified const&) { out["endomorphism"] = {{"status", "verified"}}; },
                   [&](FailedRelation const& f) {
                     out["endomorphism"] = {{"status", "failed-relation"},
                                            {"relation",
                                             {a.format(f.relation.first),
                                              a.format(f.relation.second)}},
                                            {"images",
                                             {a.format(f.left_image),
                                              a.format(f.right_image)}}};
                   }},
               c.endo);
    if (c.injectivity) {
      std::visit(
          detail::overloaded{
              [&](Collision const& x) {
                out["injectivity"] = {{"status", "collision"},
                                      {"u", a.format(x.u)},
                                      {"v", a.format(x.v)},
                                      {"image", a.format(x.image)}};
              },
              [&](NoCollisionUpTo const& x) {
                out["injectivity"] = {{"status", "no-collision-up-to"},
                                      {"radius", x.radius}};
              },
              [&](ExactInjective const& x) {
                out["injectivity"] = {{"status", "exact-injective"},
                                      {"reason", x.reason}};
              }},
          *c.injectivity);
    }
    if (c.surjectivity) {
      auto letters = [&a](std::vector<letter_type> const& xs) {
        json arr = json::array();
        for (auto x : xs) {
          arr.push_back(a.letter(x));
        }
        return arr;
      };
      std::visit(
          detail::overloaded{
              [&](GeneratorsCovered const& x) {
                json w = json::object();
                for (std::size_t i = 0; i < x.witnesses.size(); ++i) {
                  w[a.letter(i)] = a.format(x.witnesses[i]);
                }
                out["surjectivity"] = {{"status", "generators-covered"},
                                       {"witnesses", w}};
              },
              [&](ExactSurjective const& x) {
                out["surjectivity"] = {{"status", "exact-surjective"},
                                       {"reason", x.reason}};
              },
              [&](UncoveredUpTo const& x) {
                out["surjectivity"] = {{"status", "uncovered-up-to"},
                                       {"radius", x.radius},
                                       {"uncovered", letters(x.uncovered)}};
              },
              [&](ExactNotSurjective const& x) {
                out["surjectivity"] = {{"status", "exact-not-surjective"},
                                       {"uncovered", letters(x.uncovered)},
                                       {"reason", x.reason}};
              }},
          *c.surjectivity);
    }
    return out;
  }

  inline json to_json(Witness const& w, Alphabet const& a) {
    return std::visit(
        detail::overloaded{
            [&](EndoCertificate const& c) {
              json out         = to_json(c, a);
              out["found"]     = true;
              return out;
            },
            [](NotFound const& n) {
              return json{{"found", false}, {"reason", n.reason}};
            }},
        w);
  }

  inline json to_json(FiniteCertificate const& c, FiniteSemigroup const& s) {
    json map = json::object();
    for (std::size_t x = 0; x < c.map.size(); ++x) {
      map[s.name(x)] = s.name(c.map[x]);
    }
    json out{{"map", map}, {"endomorphism", c.verified()}};
    if (c.failure) {
      out["failure"] = {s.name(c.failure->first), s.name(c.failure->second)};
    }
    out["injective"]  = c.injective;
    out["surjective"] = c.surjective;
    if (c.collision) {
      out["collision"] = {s.name(c.collision->first), s.name(c.collision->second)};
    }
    if (c.uncovered) {
      out["uncovered"] = s.name(*c.uncovered);
    }
    return out;
  }

  inline json to_json(StabilizerCertificate const& c, FiniteSemigroup const& s) {
    json entries = json::array();
    for (auto const& e : c.entries) {
      entries.push_back({{"generator", s.name(e.generator)},
                         {"k", e.k},
                         {"m", e.m},
                         {"tail", e.tail},
                         {"cycle", e.cycle}});
    }
    json image = json::array();
    for (auto x : c.image) {
      image.push_back(s.name(x));
    }
    return json{{"entries", entries},
                {"k", c.k},
                {"m", c.m},
                {"exponent", c.exponent},
                {"image", image},
                {"stable", c.stable},
                {"restriction_bijective", c.restriction_bijective},
                {"complement_bijective", c.complement_bijective}};
  }

  inline json to_json(SchematicReport const& r, SchematicGraph const& g) {
    auto pairs = [&g](std::vector<std::pair<Vertex, Vertex>> const& ps) {
      json arr = json::array();
      for (auto const& [u, v] : ps) {
        arr.push_back({g.name(u), g.name(v)});
      }
      return arr;
    };
    json unreached = json::array();
    for (auto v : r.unreached) {
      unreached.push_back(g.name(v));
    }
    json out{{"endomorphism", r.endomorphism},
             {"domain_violations", pairs(r.domain_violations)},
             {"rule_violations", pairs(r.rule_violations)},
             {"injective", r.injective}};
    if (r.collision) {
      out["collision"] = {g.name(r.collision->first), g.name(r.collision->second)};
    }
    out["surjective"] = r.surjective;
    out["unreached"]  = unreached;
    out["window"]     = r.window;
    return out;
  }

}  // namespace hopfsg

#endif  // HOPFSG_JSON_IO_HPP_
