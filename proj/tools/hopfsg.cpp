// hopfsg: command-line front end for the hopfsg library.
//
// Exit status: 0 on success, 1 when a check or claim fails, 2 on usage,
// input or parse errors.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "hopfsg/claims.hpp"
#include "hopfsg/core.hpp"
#include "hopfsg/errors.hpp"
#include "hopfsg/finsemi.hpp"
#include "hopfsg/fpsemi.hpp"
#include "hopfsg/graphs.hpp"
#include "hopfsg/json_io.hpp"
#include "hopfsg/morph.hpp"
#include "hopfsg/presentation.hpp"
#include "hopfsg/rewriting.hpp"
#include "hopfsg/schematic.hpp"

namespace fs = std::filesystem;
using namespace hopfsg;

namespace {

  constexpr int exit_failed = 1;
  constexpr int exit_usage  = 2;

  // Set by subcommand callbacks.
  int status = 0;

  enum class Format { presentation, table, graph, schematic };

  struct Options {
    std::string file;
    std::string format = "auto";
    std::size_t fuel   = 50;
    std::string order;
    std::string word;
    std::string map;
    std::string sub;
    std::string gens;
    std::string relation = "H";
    std::string strategy = "leftmost";
    std::string dot;
    std::string vertex;
    std::size_t radius        = 0;
    std::size_t search_radius = 0;
    std::size_t image_len     = 3;
    long        lo            = -3;
    long        hi            = 3;
    long        shift         = 0;
    long        naturals_from = 1;
    bool        reflection    = false;
    bool        identity      = false;
    bool        json          = false;
    bool        trace         = false;
    bool        counts        = false;
  };

  using Handler = void (*)(Options const&);

  ////////////////////////////////////////////////////////////////////////
  // Input
  ////////////////////////////////////////////////////////////////////////

  Format detect(Options const& o) {
    if (o.format == "presentation") {
      return Format::presentation;
    } else if (o.format == "table") {
      return Format::table;
    } else if (o.format == "graph") {
      return Format::graph;
    } else if (o.format == "schematic") {
      return Format::schematic;
    } else if (o.format != "auto") {
      throw ParseError("--format", 1, 1, o.format, "unknown format");
    }
    if (fs::path(o.file).extension() != ".json") {
      return Format::presentation;
    }
    auto j = detail::parse_json(detail::read_file(o.file), o.file);
    if (j.contains("elements")) {
      return Format::table;
    } else if (j.contains("families")) {
      return Format::schematic;
    } else if (j.contains("vertices")) {
      return Format::graph;
    }
    throw ParseError(o.file, 1, 1, "", "cannot tell what this JSON file describes");
  }

  Presentation presentation(Options const& o) {
    auto p = load_presentation(o.file);
    if (!o.order.empty()) {
      std::vector<std::string> names;
      std::istringstream       in(o.order);
      for (std::string x; in >> x;) {
        names.push_back(x);
      }
      try {
        (void) ShortLexOrder(p.alphabet, names);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError("--order", 1, 1, o.order, e.what());
      }
      p.ranking = std::move(names);
    }
    return p;
  }

  FpSemigroup fp_semigroup(Options const& o) {
    if (detect(o) != Format::presentation) {
      throw ParseError(o.file, 1, 1, "", "expected a presentation file");
    }
    return FpSemigroup::from_presentation(presentation(o), o.fuel);
  }

  // A table file, or a graph file standing for its graph semigroup.
  FiniteSemigroup table(Options const& o) {
    switch (detect(o)) {
      case Format::table:
        return load_table(o.file);
      case Format::graph:
        return graph_semigroup(load_graph(o.file));
      default:
        throw ParseError(o.file, 1, 1, "", "expected a table or graph JSON file");
    }
  }

  SchematicGraph schematic(Options const& o) {
    if (detect(o) != Format::schematic) {
      throw ParseError(o.file, 1, 1, "", "expected a schematic graph JSON file");
    }
    return load_schematic(o.file, o.naturals_from);
  }

  word_type word(FpSemigroup const& s, std::string const& text) {
    auto w = s.alphabet().parse(text, "--word");
    if (w.empty()) {
      throw ParseError("--word", 1, 1, text, "empty word");
    }
    return w;
  }

  std::vector<std::string> split_list(std::string const& text) {
    std::vector<std::string> out;
    std::string              item;
    std::istringstream       in(text);
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  template <typename Lookup>
  std::vector<std::size_t> names_to_indices(std::string const& flag,
                                            std::string const& text,
                                            Lookup&&           lookup) {
    std::vector<std::size_t> out;
    std::size_t              column = 1;
    for (auto const& name : split_list(text)) {
      auto i = lookup(name);
      if (!i) {
        column = text.find(name) + 1;
        throw ParseError(flag, 1, column, name, "unknown element");
      }
      out.push_back(*i);
    }
    return out;
  }

  std::vector<std::size_t> elements(FiniteSemigroup const& s,
                                    std::string const&     flag,
                                    std::string const&     text) {
    return names_to_indices(flag, text, [&s](std::string const& x) { return s.index(x); });
  }

  // "x->y, y->x" on named elements; every element needs an image.
  std::vector<std::size_t> element_map_from(std::vector<std::string> const& names,
                                            std::string const&              text) {
    std::vector<std::optional<std::size_t>> images(names.size());
    auto find = [&names](std::string const& x) -> std::optional<std::size_t> {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == x) {
          return i;
        }
      }
      return std::nullopt;
    };
    for (auto const& item : split_list(text)) {
      auto        arrow  = item.find("->");
      std::size_t column = text.find(item) + 1;
      if (arrow == std::string::npos) {
        throw ParseError("--map", 1, column, item, "expected '->'");
      }
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      auto from = trim(item.substr(0, arrow));
      auto to   = trim(item.substr(arrow + 2));
      auto x    = find(from);
      auto y    = find(to);
      if (!x) {
        throw ParseError("--map", 1, column, from, "unknown element");
      }
      if (!y) {
        throw ParseError("--map", 1, column, to, "unknown element");
      }
      if (images[*x]) {
        throw ParseError("--map", 1, column, from, "element mapped twice");
      }
      images[*x] = *y;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) {
        throw ParseError("--map", 1, 1, names[i], "element has no image");
      }
      out.push_back(*images[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  void print(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  // Writes to stdout for "-" or an empty path.
  void emit(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) {
      throw ParseError(path, 0, 0, path, "cannot write file");
    }
  }

  json element_list(FpSemigroup const& s, std::vector<Element> const& xs) {
    json arr = json::array();
    for (auto const& x : xs) {
      arr.push_back(s.format(x));
    }
    return arr;
  }

  json names_of(FiniteSemigroup const& s, std::vector<std::size_t> const& xs) {
    json arr = json::array();
    for (auto x : xs) {
      arr.push_back(s.name(x));
    }
    return arr;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting and fp semigroups
  ////////////////////////////////////////////////////////////////////////

  void cmd_reduce(Options const& o) {
    auto      s = fp_semigroup(o);
    auto      w = word(s, o.word);
    auto      strategy = o.strategy == "rightmost" ? Strategy::rightmost : Strategy::leftmost;
    auto const& rs     = s.engine();
    if (o.trace) {
      std::cout << s.alphabet().format(w) << '\n';
      while (auto r = find_redex(w, rs, strategy)) {
        w = detail::splice(w, *r, rs.rules()[r->rule]);
        std::cout << "  -> " << s.alphabet().format(w) << "   [" << rs.describe(rs.rules()[r->rule])
                  << " at " << r->position << "]\n";
      }
      return;
    }
    std::cout << s.alphabet().format(normal_form(w, rs, strategy)) << '\n';
  }

  void cmd_complete(Options const& o) {
    auto rs = complete(presentation(o).system(), o.fuel);
    if (o.json) {
      json rules = json::array();
      for (auto const& r : rs.rules()) {
        rules.push_back({rs.alphabet().format(r.lhs), rs.alphabet().format(r.rhs)});
      }
      print(json{{"order", rs.order().ranking()}, {"rules", rules}});
      return;
    }
    std::cout << to_text(rs);
  }

  void cmd_confluence(Options const& o) {
    auto        rs     = presentation(o).system();
    auto        report = is_confluent(rs);
    auto const& a      = rs.alphabet();
    if (o.json) {
      json pairs = json::array();
      for (auto const& cp : report.unresolved) {
        pairs.push_back({{"overlap", a.format(cp.overlap_word)},
                         {"left", a.format(normal_form(cp.left_result, rs))},
                         {"right", a.format(normal_form(cp.right_result, rs))}});
      }
      print(json{{"confluent", report.confluent},
                 {"critical_pairs", critical_pairs(rs).size()},
                 {"unresolved", pairs}});
    } else {
      auto n = critical_pairs(rs).size();
      std::cout << (report.confluent ? "confluent" : "not confluent") << " (" << n
                << (n == 1 ? " critical pair)\n" : " critical pairs)\n");
      for (auto const& cp : report.unresolved) {
        std::cout << "  " << a.format(cp.overlap_word) << ": "
                  << a.format(normal_form(cp.left_result, rs))
                  << " != " << a.format(normal_form(cp.right_result, rs)) << '\n';
      }
    }
    status = report.confluent ? 0 : exit_failed;
  }

  void cmd_enumerate(Options const& o) {
    auto s    = fp_semigroup(o);
    auto ball = enumerate_ball(s, o.radius);
    if (o.counts) {
      std::vector<std::size_t> by_length(o.radius, 0);
      for (auto const& x : ball) {
        ++by_length[x.word.size() - 1];
      }
      if (o.json) {
        print(json(by_length));
      } else {
        for (std::size_t n = 0; n < by_length.size(); ++n) {
          std::cout << n + 1 << ' ' << by_length[n] << '\n';
        }
      }
      return;
    }
    if (o.json) {
      print(element_list(s, ball));
      return;
    }
    for (auto const& x : ball) {
      std::cout << s.format(x) << '\n';
    }
  }

  void cmd_cayley(Options const& o) {
    auto s = fp_semigroup(o);
    emit(o.dot, to_dot(cayley_graph(s, o.radius), s));
  }

  void cmd_indecomposables(Options const& o) {
    auto s      = fp_semigroup(o);
    auto search = o.search_radius == 0 ? std::max<std::size_t>(o.radius, 8) : o.search_radius;
    auto r      = indecomposables(s, o.radius, search);
    json decomp = json::object();
    for (auto const& d : r.decompositions) {
      decomp[s.format(d.target)] = {s.format(d.left), s.format(d.right)};
    }
    print(json{{"indecomposable", element_list(s, r.elements)},
               {"search_radius", r.search_radius},
               {"decompositions", decomp}});
  }

  void cmd_roots(Options const& o) {
    auto s = fp_semigroup(o);
    auto t = s.element(word(s, o.word));
    print(json{{"target", s.format(t)},
               {"radius", o.radius},
               {"roots", element_list(s, solve_square_root(s, t, o.radius))}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite semigroups
  ////////////////////////////////////////////////////////////////////////

  void cmd_indices(Options const& o) {
    auto         s = table(o);
    SubSemigroup t(s, elements(s, "--sub", o.sub));
    print(json{{"rees", rees_index(t)}, {"green", green_index(t)}});
  }

  void cmd_green(Options const& o) {
    auto          s = table(o);
    SubSemigroup  t(s, elements(s, "--sub", o.sub));
    GreenRelation kind;
    if (o.relation == "R") {
      kind = GreenRelation::R;
    } else if (o.relation == "L") {
      kind = GreenRelation::L;
    } else if (o.relation == "H") {
      kind = GreenRelation::H;
    } else {
      throw ParseError("--relation", 1, 1, o.relation, "expected R, L or H");
    }
    auto c       = relative_green(t, kind);
    json classes = json::array();
    for (auto const& cls : c.classes) {
      classes.push_back(names_of(s, cls));
    }
    print(json{{"relation", to_string(kind)}, {"classes", classes}});
  }

  void cmd_stabilizer(Options const& o) {
    auto         s = table(o);
    SubSemigroup t(s, elements(s, "--sub", o.sub));
    auto         phi  = element_map_from(s.names(), o.map);
    auto         gens = o.gens.empty() ? t.members() : elements(s, "--gens", o.gens);
    auto         cert = power_stabilizer(t, phi, gens);
    print(to_json(cert, s));
    status = cert.stable && cert.complement_bijective ? 0 : exit_failed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_table(Options const& o) {
    auto f = detect(o);
    return f == Format::table || f == Format::graph;
  }

  void cmd_morph_check(Options const& o) {
    if (is_table(o)) {
      auto s    = table(o);
      auto cert = certify(s, element_map_from(s.names(), o.map));
      print(to_json(cert, s));
      status = cert.verified() ? 0 : exit_failed;
      return;
    }
    auto s    = fp_semigroup(o);
    auto cert = certify(s, parse_generator_map(o.map, s.alphabet(), "--map"), o.radius);
    print(to_json(cert, s.alphabet()));
    status = cert.verified() ? 0 : exit_failed;
  }

  void cmd_hopf_witness(Options const& o) {
    if (is_table(o)) {
      print(json{{"found", false},
                 {"reason", "a finite semigroup has no surjective non-injective map"}});
      return;
    }
    auto s = fp_semigroup(o);
    print(to_json(non_hopf_witness(s, o.image_len, o.radius), s.alphabet()));
  }

  void cmd_cohopf_witness(Options const& o) {
    if (is_table(o)) {
      auto s = table(o);
      print(json{{"found", false}, {"reason", non_cohopf_witness(s).reason}});
      return;
    }
    auto s = fp_semigroup(o);
    print(to_json(non_cohopf_witness(s, o.image_len, o.radius), s.alphabet()));
  }

  void cmd_morph_endos(Options const& o) {
    json out = json::array();
    if (is_table(o)) {
      auto s = table(o);
      for (auto const& phi : injective_endomorphisms(s)) {
        out.push_back(to_json(certify(s, phi), s));
      }
    } else {
      auto s = fp_semigroup(o);
      for (auto const& cert : find_endomorphisms(s, o.image_len, o.radius)) {
        out.push_back(to_json(cert, s.alphabet()));
      }
    }
    print(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  SimpleGraph simple_graph(Options const& o) {
    if (detect(o) != Format::graph) {
      throw ParseError(o.file, 1, 1, "", "expected a graph JSON file");
    }
    return load_graph(o.file);
  }

  vertex_map vertex_map_from(SimpleGraph const& g, std::string const& text) {
    return element_map_from(g.names(), text);
  }

  void cmd_graph_semigroup(Options const& o) {
    print(to_json(graph_semigroup(simple_graph(o))));
  }

  void cmd_graph_endos(Options const& o) {
    auto g   = simple_graph(o);
    json out = json::array();
    for (auto const& e : injective_graph_endos(g)) {
      json map = json::object();
      for (std::size_t v = 0; v < g.size(); ++v) {
        map[g.name(v)] = g.name(e.map[v]);
      }
      out.push_back({{"map", map}, {"automorphism", e.automorphism}});
    }
    print(out);
  }

  void cmd_graph_rees(Options const& o) {
    auto g = simple_graph(o);
    auto w = names_to_indices("--sub", o.sub, [&g](std::string const& x) { return g.index(x); });
    print(json{{"rees", rees_index_of_induced(g, w)}});
  }

  void cmd_graph_hat(Options const& o) {
    auto g   = simple_graph(o);
    auto phi = vertex_map_from(g, o.map);
    auto h   = hat_extension(g, phi);
    if (auto f = std::get_if<ExtensionFailure>(&h)) {
      print(json{{"extended", false}, {"non_edge", {g.name(f->v1), g.name(f->v2)}}});
      status = exit_failed;
      return;
    }
    auto s   = graph_semigroup(g);
    auto hat = std::get<element_map>(h);
    json map = json::object();
    for (std::size_t x = 0; x < hat.size(); ++x) {
      map[s.name(x)] = s.name(hat[x]);
    }
    print(json{{"extended", true}, {"map", map}});
  }

  void cmd_graph_dot(Options const& o) {
    emit(o.dot, to_dot(simple_graph(o)));
  }

  void cmd_graph_window(Options const& o) {
    auto w = window(schematic(o), o.lo, o.hi);
    if (o.json) {
      print(to_json(w));
    } else {
      emit(o.dot, to_dot(w, "window"));
    }
  }

  void cmd_graph_degree(Options const& o) {
    auto g   = schematic(o);
    json out = json::object();
    for (auto const& name : split_list(o.vertex)) {
      Vertex v;
      try {
        v = g.vertex(name);
      } catch (Error const& e) {
        throw ParseError("--vertex", 1, o.vertex.find(name) + 1, name, e.what());
      }
      out[g.name(v)] = schematic_degree(g, v);
    }
    print(out);
  }

  void cmd_schematic_check(Options const& o) {
    auto      g = schematic(o);
    FamilyMap m;
    if (!o.map.empty()) {
      try {
        m = parse_family_map(g, o.map);
      } catch (Error const& e) {
        throw ParseError("--map", 1, 1, o.map, e.what());
      }
    } else if (o.reflection) {
      m = reflection_family_map(g);
    } else if (o.identity) {
      m = identity_family_map(g);
    } else {
      m = shift_family_map(g, o.shift);
    }
    auto report = schematic_check_endo(g, m);
    print(to_json(report, g));
    status = report.endomorphism ? 0 : exit_failed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Claims
  ////////////////////////////////////////////////////////////////////////

  struct ClaimsOptions {
    std::string only;
    std::string out = "hopfsg-out";
    long        naturals_from = 1;
    bool        verbose       = false;
    bool        json          = false;
  };

  void cmd_claims(ClaimsOptions const& o) {
    ClaimOptions opts;
    opts.out_dir        = o.out;
    opts.naturals_start = o.naturals_from;
    auto results        = run_claims(opts, o.only);
    if (results.empty()) {
      throw ParseError("--only", 1, 1, o.only, "no claim matches");
    }
    bool ok = true;
    for (auto const& r : results) {
      ok = ok && r.status != ClaimStatus::fail;
    }
    if (o.json) {
      json claims = json::array();
      json timing = json::object();
      for (auto const& r : results) {
        claims.push_back({{"number", r.number},
                          {"id", r.id},
                          {"title", r.title},
                          {"status", to_string(r.status)},
                          {"passed", r.passed},
                          {"failed", r.failed},
                          {"artifacts", r.artifacts}});
        timing[r.id] = {{"seconds", r.seconds}, {"limit", r.limit}};
      }
      print(json{{"meta", {{"timing", timing}}}, {"claims", claims}});
    } else {
      std::cout << format_report(results, o.verbose);
    }
    status = ok ? 0 : exit_failed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registration
  ////////////////////////////////////////////////////////////////////////

  // Flags a command takes beyond the input file.
  enum Flag : unsigned {
    fuel       = 1u << 0,
    order      = 1u << 1,
    word_flag  = 1u << 2,
    map_flag   = 1u << 3,
    sub        = 1u << 4,
    radius     = 1u << 5,
    image_len  = 1u << 6,
    dot        = 1u << 7,
    json_flag  = 1u << 8,
    window_lh  = 1u << 9,
    naturals   = 1u << 10,
    strategy   = 1u << 11,
    trace      = 1u << 12,
    counts     = 1u << 13,
    search     = 1u << 14,
    gens       = 1u << 15,
    relation   = 1u << 16,
    vertex     = 1u << 17,
    map_kind   = 1u << 18,
    map_needed = 1u << 19,
  };

  constexpr unsigned fp = fuel | order;

  CLI::App* add(CLI::App&          parent,
                std::string const& name,
                std::string const& about,
                unsigned           flags,
                Handler            handler,
                std::size_t        default_radius = 6) {
    auto o    = std::make_shared<Options>();
    o->radius = default_radius;
    auto* app = parent.add_subcommand(name, about);
    app->add_option("file,--system,--table,--graph", o->file, "input file")->required();
    app->add_option("--format", o->format, "auto, presentation, table, graph or schematic")
        ->capture_default_str();
    if (flags & fuel) {
      app->add_option("--fuel", o->fuel, "maximum number of rules completion may add")
          ->capture_default_str();
    }
    if (flags & order) {
      app->add_option("--order", o->order, "letters from least to greatest, e.g. \"a b f\"");
    }
    if (flags & word_flag) {
      app->add_option("--word,-w", o->word, "a word such as abab^3")->required();
    }
    if (flags & map_flag) {
      auto* opt = app->add_option("--map,-m", o->map, "generator images, e.g. \"a->a, b->bab\"");
      if (flags & map_needed) {
        opt->required();
      }
    }
    if (flags & map_kind) {
      app->add_option("--shift", o->shift, "index shift applied to every family");
      app->add_flag("--reflection", o->reflection, "i -> -i on every family");
      app->add_flag("--identity", o->identity, "the identity map");
    }
    if (flags & sub) {
      app->add_option("--sub", o->sub, "comma separated subset, e.g. \"e,n,0\"")->required();
    }
    if (flags & gens) {
      app->add_option("--gens", o->gens, "generators of the subsemigroup (default: all)");
    }
    if (flags & relation) {
      app->add_option("--relation", o->relation, "R, L or H")->capture_default_str();
    }
    if (flags & radius) {
      app->add_option("--radius,-r", o->radius, "ball radius")->capture_default_str();
    }
    if (flags & search) {
      app->add_option("--search-radius", o->search_radius, "factor length bound (default: max(radius, 8))");
    }
    if (flags & image_len) {
      app->add_option("--image-len", o->image_len, "maximum length of generator images")
          ->capture_default_str();
    }
    if (flags & dot) {
      app->add_option("--dot", o->dot, "DOT output path, - for stdout");
    }
    if (flags & json_flag) {
      app->add_flag("--json", o->json, "JSON output");
    }
    if (flags & window_lh) {
      app->add_option("--lo", o->lo, "least index")->capture_default_str();
      app->add_option("--hi", o->hi, "greatest index")->capture_default_str();
    }
    if (flags & naturals) {
      app->add_option("--naturals-from", o->naturals_from, "least index of domain N")
          ->capture_default_str();
    }
    if (flags & strategy) {
      app->add_option("--strategy", o->strategy, "leftmost or rightmost")
          ->check(CLI::IsMember({"leftmost", "rightmost"}))
          ->capture_default_str();
    }
    if (flags & trace) {
      app->add_flag("--trace", o->trace, "print every rewriting step");
    }
    if (flags & counts) {
      app->add_flag("--counts", o->counts, "print the number of elements of each length");
    }
    if (flags & vertex) {
      app->add_option("--vertex", o->vertex, "comma separated vertices, e.g. \"x_0,y_1\"")
          ->required();
    }
    app->callback([o, handler] { handler(*o); });
    return app;
  }

  void add_fpsemi(CLI::App& parent) {
    add(parent, "enumerate", "list normal forms up to a radius", fp | radius | json_flag | counts,
        cmd_enumerate);
    add(parent, "cayley", "right Cayley graph of a ball as DOT", fp | radius | dot, cmd_cayley, 4);
    add(parent, "indecomposables", "elements that are not products of two elements",
        fp | radius | search, cmd_indecomposables, 1);
    add(parent, "roots", "square roots of an element within a ball",
        fp | word_flag | radius, cmd_roots);
  }

  void add_finsemi(CLI::App& parent) {
    add(parent, "indices", "Rees and Green index of a subsemigroup", sub, cmd_indices);
    add(parent, "green-index", "Rees and Green index of a subsemigroup", sub, cmd_indices);
    add(parent, "green", "relative Green classes", sub | relation, cmd_green);
    add(parent, "stabilizer", "power of an injective endomorphism mapping T into T",
        sub | gens | map_flag | map_needed, cmd_stabilizer);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopfian and co-hopfian semigroups: rewriting, morphisms and graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  add(app, "reduce", "normal form of a word", fp | word_flag | strategy | trace, cmd_reduce);
  add(app, "complete", "Knuth-Bendix completion", fp | json_flag, cmd_complete);
  add(app, "confluence", "critical pair check of the presented rules", order | json_flag,
      cmd_confluence);
  add_fpsemi(app);
  add_finsemi(app);

  auto* fpsemi = app.add_subcommand("fpsemi", "finitely presented semigroups");
  fpsemi->require_subcommand(1);
  add_fpsemi(*fpsemi);

  auto* finsemi = app.add_subcommand("finsemi", "finite semigroups given by tables");
  finsemi->require_subcommand(1);
  add_finsemi(*finsemi);

  auto* morph = app.add_subcommand("morph", "endomorphisms and witnesses");
  morph->require_subcommand(1);
  add(*morph, "check", "certify a map on generators", fp | map_flag | map_needed | radius,
      cmd_morph_check, 7);
  add(*morph, "hopf-witness", "search for a surjective map with a collision",
      fp | radius | image_len, cmd_hopf_witness, 7);
  add(*morph, "cohopf-witness", "search for an injective map that is not surjective",
      fp | radius | image_len, cmd_cohopf_witness, 7);
  add(*morph, "endos", "all endomorphisms with short images", fp | radius | image_len,
      cmd_morph_endos);

  auto* graph = app.add_subcommand("graph", "graphs and their semigroups");
  graph->require_subcommand(1);
  add(*graph, "semigroup", "table of the graph semigroup", 0, cmd_graph_semigroup);
  add(*graph, "endos", "injective endomorphisms of a finite graph", 0, cmd_graph_endos);
  add(*graph, "rees", "Rees index of an induced subgraph's semigroup", sub, cmd_graph_rees);
  add(*graph, "hat", "extend a vertex map to the graph semigroup", map_flag | map_needed,
      cmd_graph_hat);
  add(*graph, "dot", "render a finite graph as DOT", dot, cmd_graph_dot);
  add(*graph, "window", "finite window of a schematic graph",
      window_lh | dot | json_flag | naturals, cmd_graph_window);
  add(*graph, "degree", "vertex degrees in a schematic graph", vertex | naturals,
      cmd_graph_degree);
  add(*graph, "schematic-check", "check a family map on a schematic graph",
      map_flag | map_kind | naturals, cmd_schematic_check);

  auto  co     = std::make_shared<ClaimsOptions>();
  auto* claims = app.add_subcommand("claims", "run the acceptance claims and report");
  claims->add_option("--only", co->only, "claim id prefix or number");
  claims->add_option("--out", co->out, "directory for DOT artifacts")->capture_default_str();
  claims->add_option("--naturals-from", co->naturals_from, "least index of domain N")
      ->capture_default_str();
  claims->add_flag("--verbose,-v", co->verbose, "list passing checks too");
  claims->add_flag("--json", co->json, "JSON report");
  claims->callback([co] { cmd_claims(*co); });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (FuelExhausted const& e) {
    std::cerr << "error: " << e.what() << " (fuel " << e.fuel() << ")\n";
    return exit_failed;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return status;
}
