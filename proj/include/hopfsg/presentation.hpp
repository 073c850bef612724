#ifndef HOPFSG_PRESENTATION_HPP_
#define HOPFSG_PRESENTATION_HPP_

// Text format for presentations and rewriting systems:
//
//   # comment
//   letters: a b
//   order: b a                 (optional; default is declaration order)
//   rule: a b a b^2 a b -> b   (must already be oriented)
//   relation: u = v            (oriented automatically)

#include <algorithm>    // for find
#include <cctype>       // for isspace
#include <cstddef>      // for size_t
#include <filesystem>   // for path
#include <fstream>      // for ifstream
#include <optional>     // for optional
#include <sstream>      // for ostringstream, istringstream
#include <string>       // for string, getline
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "core.hpp"       // for Alphabet, ShortLexOrder, word_type
#include "errors.hpp"     // for ParseError
#include "rewriting.hpp"  // for Rule, RewritingSystem, orient

namespace hopfsg {

  using relation_type = std::pair<word_type, word_type>;

  struct Presentation {
    Alphabet                                alphabet;
    std::optional<std::vector<std::string>> ranking;
    //! `rule:` lines, in file order.
    std::vector<Rule> rules;
    //! `relation:` lines, in file order.
    std::vector<relation_type> relations;

    ShortLexOrder order() const {
      return ranking ? ShortLexOrder(alphabet, *ranking)
                     : ShortLexOrder(alphabet);
    }

    //! Every defining relation: rules first, then relations.
    std::vector<relation_type> defining_relations() const {
      std::vector<relation_type> out;
      for (auto const& r : rules) {
        out.emplace_back(r.lhs, r.rhs);
      }
      out.insert(out.end(), relations.cbegin(), relations.cend());
      return out;
    }

    //! The rules together with the oriented relations.
    RewritingSystem system() const {
      auto              ord = order();
      std::vector<Rule> all = rules;
      for (auto const& [u, v] : relations) {
        Rule r = orient(u, v, ord);
        if (std::find(all.cbegin(), all.cend(), r) == all.cend()) {
          all.push_back(std::move(r));
        }
      }
      return RewritingSystem(std::move(ord), std::move(all));
    }
  };

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string> split_names(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              name;
      while (in >> name) {
        out.push_back(name);
      }
      return out;
    }
  }  // namespace detail

  inline Presentation parse_presentation(std::string_view   text,
                                         std::string const& source
                                         = "<presentation>") {
    Presentation p;
    bool         have_letters = false;
    std::size_t  line_no      = 0;
    std::size_t  start        = 0;
    // (line, column) of each rule, for orientation errors.
    std::vector<std::pair<std::size_t, std::size_t>> rule_positions;

    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      ++line_no;
      start = end + 1;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::string_view body = detail::trim(line);
      if (body.empty()) {
        continue;
      }
      std::size_t const indent = body.data() - line.data();
      auto fail = [&](std::size_t col, std::string token, std::string what) {
        throw ParseError(source, line_no, col + 1, std::move(token), what);
      };

      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        fail(indent,
             std::string(body.substr(0, body.find(' '))),
             "expected 'letters:', 'order:', 'rule:' or 'relation:'");
      }
      std::string_view key  = detail::trim(body.substr(0, colon));
      std::string_view rest = body.substr(colon + 1);
      std::size_t const rest_col = indent + colon + 1;

      if (key == "letters") {
        if (have_letters) {
          fail(indent, "letters", "letters declared twice");
        }
        auto names = detail::split_names(rest);
        if (names.empty()) {
          fail(rest_col, "", "expected at least one letter");
        }
        try {
          p.alphabet = Alphabet(names);
        } catch (Error const& e) {
          fail(rest_col, std::string(detail::trim(rest)), e.what());
        }
        have_letters = true;
        continue;
      }
      if (!have_letters) {
        fail(indent, std::string(key), "'letters:' must come first");
      }
      if (key == "order") {
        auto names = detail::split_names(rest);
        try {
          (void) ShortLexOrder(p.alphabet, names);
        } catch (Error const& e) {
          fail(rest_col, std::string(detail::trim(rest)), e.what());
        }
        p.ranking = std::move(names);
      } else if (key == "rule" || key == "relation") {
        std::string_view sep = key == "rule" ? "->" : "=";
        auto             at  = rest.find(sep);
        if (at == std::string_view::npos) {
          fail(rest_col,
               std::string(detail::trim(rest)),
               "expected '" + std::string(sep) + "'");
        }
        auto lhs_text = rest.substr(0, at);
        auto rhs_text = rest.substr(at + sep.size());
        auto lhs = p.alphabet.parse(lhs_text, source, line_no, rest_col);
        auto rhs = p.alphabet.parse(
            rhs_text, source, line_no, rest_col + at + sep.size());
        if (lhs.empty() || rhs.empty()) {
          fail(rest_col,
               std::string(detail::trim(rest)),
               "both sides must be nonempty words");
        }
        if (lhs == rhs) {
          fail(rest_col,
               std::string(detail::trim(rest)),
               "both sides are the same word");
        }
        if (key == "rule") {
          p.rules.push_back(Rule{std::move(lhs), std::move(rhs)});
          rule_positions.emplace_back(line_no, rest_col + 1);
        } else {
          p.relations.emplace_back(std::move(lhs), std::move(rhs));
        }
      } else {
        fail(indent, std::string(key), "unknown directive");
      }
    }
    if (!have_letters) {
      throw ParseError(source, line_no, 1, "", "missing 'letters:' line");
    }
    // Orientation of explicit rules is checked against the final order,
    // since an `order:` line may follow the rules.
    auto ord = p.order();
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
      auto const& r = p.rules[i];
      if (ord.compare(r.rhs, r.lhs) >= 0) {
        throw ParseError(source,
                         rule_positions[i].first,
                         rule_positions[i].second,
                         p.alphabet.format(r.lhs) + " -> "
                             + p.alphabet.format(r.rhs),
                         "rule is not oriented by the shortlex order "
                         "(right hand side must be smaller)");
      }
    }
    return p;
  }

  inline Presentation load_presentation(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path.string(), 0, 0, path.string(), "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str(), path.string());
  }

  //! Writes \p rs in the presentation format; parse_presentation reads it
  //! back to an identical system.
  inline std::string to_text(RewritingSystem const& rs) {
    std::ostringstream out;
    auto const&        a = rs.alphabet();
    out << "letters:";
    for (auto const& l : a.letters()) {
      out << ' ' << l;
    }
    out << "\norder:";
    for (auto const& l : rs.order().ranking()) {
      out << ' ' << l;
    }
    out << '\n';
    for (auto const& r : rs.rules()) {
      out << "rule: " << a.format(r.lhs) << " -> " << a.format(r.rhs) << '\n';
    }
    return out.str();
  }

}  // namespace hopfsg

#endif  // HOPFSG_PRESENTATION_HPP_
