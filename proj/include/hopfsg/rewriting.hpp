#ifndef HOPFSG_REWRITING_HPP_
#define HOPFSG_REWRITING_HPP_

#include <algorithm>  // for search, equal, sort, any_of
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <tuple>      // for tie
#include <utility>    // for move
#include <vector>     // for vector

#include "core.hpp"    // for word_type, ShortLexOrder
#include "errors.hpp"  // for Error, FuelExhausted

namespace hopfsg {

  struct Rule {
    word_type lhs;
    word_type rhs;

    bool operator==(Rule const&) const = default;
  };

  //! Orients the relation u = v so that the right hand side is the
  //! shortlex-smaller word. Throws if u and v are identical.
  inline Rule orient(word_type u, word_type v, ShortLexOrder const& order) {
    auto cmp = order.compare(u, v);
    if (cmp == 0) {
      throw Error("cannot orient a relation whose sides are equal");
    }
    if (cmp < 0) {
      std::swap(u, v);
    }
    return Rule{std::move(u), std::move(v)};
  }

  //! Where a redex sits: the rule index and the start position in the word.
  struct Redex {
    std::size_t rule;
    std::size_t position;
  };

  enum class Strategy {
    //! Leftmost start position, lowest rule index at that position.
    leftmost,
    //! Rightmost start position, lowest rule index at that position.
    rightmost
  };

  //! A finite set of rules ℓ → r with r < ℓ in a shortlex order. Every
  //! reduction step strictly decreases the shortlex rank, so the system is
  //! Noetherian. Immutable after construction.
  class RewritingSystem {
   public:
    RewritingSystem() = default;

    explicit RewritingSystem(ShortLexOrder order) : _order(std::move(order)) {}

    RewritingSystem(ShortLexOrder order, std::vector<Rule> rules)
        : _order(std::move(order)), _rules(std::move(rules)) {
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        auto const& r = _rules[i];
        if (r.lhs.empty() || r.rhs.empty()) {
          throw Error("rule " + std::to_string(i)
                      + " has an empty side; semigroup rules need nonempty "
                        "words");
        }
        if (_order.compare(r.rhs, r.lhs) >= 0) {
          throw Error("rule " + describe(r)
                      + " is not oriented by the reduction order (right hand "
                        "side must be shortlex-smaller)");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_rules[j] == r) {
            throw Error("duplicate rule " + describe(r));
          }
        }
      }
    }

    ShortLexOrder const& order() const noexcept {
      return _order;
    }

    Alphabet const& alphabet() const noexcept {
      return _order.alphabet();
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    std::size_t size() const noexcept {
      return _rules.size();
    }

    std::string describe(Rule const& r) const {
      return alphabet().format(r.lhs) + " -> " + alphabet().format(r.rhs);
    }

    //! True iff |lhs| = |rhs| for every rule (vacuously for no rules).
    bool length_preserving() const noexcept {
      return std::all_of(_rules.cbegin(), _rules.cend(), [](Rule const& r) {
        return r.lhs.size() == r.rhs.size();
      });
    }

    bool operator==(RewritingSystem const&) const = default;

   private:
    ShortLexOrder     _order;
    std::vector<Rule> _rules;
  };

  namespace detail {
    inline bool occurs_at(word_type const& w,
                          std::size_t      pos,
                          word_type const& pattern) {
      return pos + pattern.size() <= w.size()
             && std::equal(pattern.cbegin(), pattern.cend(), w.cbegin() + pos);
    }

    inline bool contains(word_type const& w, word_type const& pattern) {
      return std::search(w.cbegin(), w.cend(), pattern.cbegin(), pattern.cend())
             != w.cend();
    }

    inline bool is_suffix(word_type const& w, word_type const& pattern) {
      return pattern.size() <= w.size()
             && std::equal(pattern.cbegin(),
                           pattern.cend(),
                           w.cend() - pattern.size());
    }

    inline word_type splice(word_type const& w, Redex where, Rule const& r) {
      word_type out(w.cbegin(), w.cbegin() + where.position);
      out.insert(out.end(), r.rhs.cbegin(), r.rhs.cend());
      out.insert(
          out.end(), w.cbegin() + where.position + r.lhs.size(), w.cend());
      return out;
    }

    inline std::optional<Redex> find_redex(word_type const&         w,
                                           std::vector<Rule> const& rules,
                                           Strategy strategy) {
      std::size_t const n = w.size();
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t pos = strategy == Strategy::leftmost ? k : n - 1 - k;
        for (std::size_t i = 0; i < rules.size(); ++i) {
          if (occurs_at(w, pos, rules[i].lhs)) {
            return Redex{i, pos};
          }
        }
      }
      return std::nullopt;
    }

    inline word_type normal_form(word_type                w,
                                 std::vector<Rule> const& rules,
                                 Strategy                 strategy,
                                 std::size_t              max_steps) {
      for (std::size_t steps = 0;; ++steps) {
        auto redex = find_redex(w, rules, strategy);
        if (!redex) {
          return w;
        }
        if (steps == max_steps) {
          throw FuelExhausted("normal form computation did not terminate",
                              max_steps);
        }
        w = splice(w, *redex, rules[redex->rule]);
      }
    }
  }  // namespace detail

  inline constexpr std::size_t default_max_steps = 10'000'000;

  //! The redex normal_form would rewrite first, if any.
  inline std::optional<Redex> find_redex(word_type const&       w,
                                         RewritingSystem const& rs,
                                         Strategy strategy = Strategy::leftmost) {
    rs.alphabet().validate(w);
    return detail::find_redex(w, rs.rules(), strategy);
  }

  //! One rewriting step at the leftmost redex (lowest rule index on ties), or
  //! std::nullopt if \p w is irreducible.
  inline std::optional<word_type> reduce_once(word_type const&       w,
                                              RewritingSystem const& rs) {
    auto redex = find_redex(w, rs);
    if (!redex) {
      return std::nullopt;
    }
    return detail::splice(w, *redex, rs.rules()[redex->rule]);
  }

  inline bool is_irreducible(word_type const& w, RewritingSystem const& rs) {
    return !find_redex(w, rs).has_value();
  }

  //! Rewrites \p w until irreducible. The result is independent of
  //! \p strategy when \p rs is confluent.
  inline word_type normal_form(word_type const&       w,
                               RewritingSystem const& rs,
                               Strategy               strategy = Strategy::leftmost,
                               std::size_t max_steps = default_max_steps) {
    rs.alphabet().validate(w);
    return detail::normal_form(w, rs.rules(), strategy, max_steps);
  }

  //! An ambiguity: overlap_word rewrites in one step to left_result using
  //! rule `first` at position 0 and to right_result using rule `second` at
  //! `offset`.
  struct CriticalPair {
    word_type   overlap_word;
    word_type   left_result;
    word_type   right_result;
    bool        resolved;
    std::size_t first;
    std::size_t second;
    std::size_t offset;
  };

  namespace detail {
    inline std::vector<CriticalPair>
    critical_pairs(std::vector<Rule> const& rules, std::size_t max_steps) {
      std::vector<CriticalPair> out;
      auto add = [&](word_type   overlap,
                     word_type   left,
                     word_type   right,
                     std::size_t i,
                     std::size_t j,
                     std::size_t offset) {
        bool resolved
            = normal_form(left, rules, Strategy::leftmost, max_steps)
              == normal_form(right, rules, Strategy::leftmost, max_steps);
        out.push_back(CriticalPair{std::move(overlap),
                                   std::move(left),
                                   std::move(right),
                                   resolved,
                                   i,
                                   j,
                                   offset});
      };
      for (std::size_t i = 0; i < rules.size(); ++i) {
        auto const& l1 = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
          auto const& l2 = rules[j].lhs;
          // Proper overlaps: a nonempty proper suffix of l1 is a proper
          // prefix of l2.
          for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
            if (std::equal(l1.cend() - k, l1.cend(), l2.cbegin())) {
              word_type overlap = l1;
              overlap.insert(overlap.end(), l2.cbegin() + k, l2.cend());
              Redex second{j, l1.size() - k};
              word_type left = rules[i].rhs;
              left.insert(left.end(), l2.cbegin() + k, l2.cend());
              word_type right = splice(overlap, second, rules[j]);
              add(std::move(overlap),
                  std::move(left),
                  std::move(right),
                  i,
                  j,
                  second.position);
            }
          }
          // Containment: l2 occurs inside l1.
          if (i != j && l2.size() <= l1.size()) {
            for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
              if (occurs_at(l1, p, l2)) {
                add(l1,
                    rules[i].rhs,
                    splice(l1, Redex{j, p}, rules[j]),
                    i,
                    j,
                    p);
              }
            }
          }
        }
      }
      return out;
    }
  }  // namespace detail

  //! Every overlap and containment ambiguity between ordered pairs of rules.
  inline std::vector<CriticalPair>
  critical_pairs(RewritingSystem const& rs,
                 std::size_t            max_steps = default_max_steps) {
    return detail::critical_pairs(rs.rules(), max_steps);
  }

  struct ConfluenceReport {
    bool                      confluent;
    std::vector<CriticalPair> unresolved;
  };

  //! Local confluence via critical pairs; for a Noetherian system this is
  //! confluence.
  inline ConfluenceReport is_confluent(RewritingSystem const& rs) {
    ConfluenceReport report{true, {}};
    for (auto& cp : critical_pairs(rs)) {
      if (!cp.resolved) {
        report.confluent = false;
        report.unresolved.push_back(std::move(cp));
      }
    }
    return report;
  }

  namespace detail {
    // Removes rules whose left hand side contains another rule's left hand
    // side (re-adding the reduced consequence if nontrivial) and normalises
    // right hand sides, until nothing changes.
    inline void interreduce(std::vector<Rule>&   rules,
                            ShortLexOrder const& order,
                            std::size_t          max_steps) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rules.size() && !changed; ++i) {
          std::vector<Rule> others(rules.cbegin(), rules.cbegin() + i);
          others.insert(others.end(), rules.cbegin() + i + 1, rules.cend());
          bool reducible_lhs = std::any_of(
              others.cbegin(), others.cend(), [&](Rule const& o) {
                return contains(rules[i].lhs, o.lhs);
              });
          if (reducible_lhs) {
            auto l = normal_form(
                rules[i].lhs, others, Strategy::leftmost, max_steps);
            auto r = normal_form(
                rules[i].rhs, others, Strategy::leftmost, max_steps);
            rules = std::move(others);
            if (l != r) {
              rules.push_back(orient(std::move(l), std::move(r), order));
            }
            changed = true;
          } else {
            auto r = normal_form(
                rules[i].rhs, rules, Strategy::leftmost, max_steps);
            if (r != rules[i].rhs) {
              rules[i].rhs = std::move(r);
              changed      = true;
            }
          }
        }
      }
    }
  }  // namespace detail

  //! Knuth-Bendix completion with respect to the system's shortlex order.
  //!
  //! Critical pairs are processed in shortlex order of their overlap words;
  //! after each new rule the system is inter-reduced. At most \p fuel rules
  //! are added; FuelExhausted is thrown if the system is still not confluent
  //! at that point. The result is reduced, confluent and presents the same
  //! semigroup as \p rs.
  inline RewritingSystem complete(RewritingSystem const& rs,
                                  std::size_t            fuel,
                                  std::size_t max_steps = default_max_steps) {
    auto const&       order = rs.order();
    std::vector<Rule> rules = rs.rules();
    detail::interreduce(rules, order, max_steps);
    std::size_t added = 0;
    while (true) {
      auto pairs = detail::critical_pairs(rules, max_steps);
      std::sort(pairs.begin(),
                pairs.end(),
                [&order](CriticalPair const& x, CriticalPair const& y) {
                  auto c = order.compare_nc(x.overlap_word, y.overlap_word);
                  if (c != 0) {
                    return c < 0;
                  }
                  return std::tie(x.first, x.second, x.offset)
                         < std::tie(y.first, y.second, y.offset);
                });
      auto it = std::find_if(pairs.cbegin(), pairs.cend(), [](auto const& cp) {
        return !cp.resolved;
      });
      if (it == pairs.cend()) {
        return RewritingSystem(order, std::move(rules));
      }
      if (added == fuel) {
        throw FuelExhausted("Knuth-Bendix completion did not finish", fuel);
      }
      auto l = detail::normal_form(
          it->left_result, rules, Strategy::leftmost, max_steps);
      auto r = detail::normal_form(
          it->right_result, rules, Strategy::leftmost, max_steps);
      rules.push_back(orient(std::move(l), std::move(r), order));
      ++added;
      detail::interreduce(rules, order, max_steps);
    }
  }

  //! True iff both systems have the same rules, ignoring their order.
  inline bool same_rules(RewritingSystem const& x, RewritingSystem const& y) {
    if (x.size() != y.size() || !(x.order() == y.order())) {
      return false;
    }
    return std::all_of(
        x.rules().cbegin(), x.rules().cend(), [&y](Rule const& r) {
          return std::find(y.rules().cbegin(), y.rules().cend(), r)
                 != y.rules().cend();
        });
  }

}  // namespace hopfsg

#endif  // HOPFSG_REWRITING_HPP_
