#ifndef HOPFSG_MORPH_HPP_
#define HOPFSG_MORPH_HPP_

#include <algorithm>      // for all_of, any_of
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for move, pair
#include <variant>        // for variant, holds_alternative
#include <vector>         // for vector

#include "core.hpp"          // for word_type, Alphabet
#include "errors.hpp"        // for Error, ParseError
#include "finsemi.hpp"       // for FiniteSemigroup, element_map
#include "fpsemi.hpp"        // for FpSemigroup, enumerate_ball
#include "presentation.hpp"  // for detail::trim, relation_type

namespace hopfsg {

  //! A map defined on generators: generator i ↦ images[i]. Extends to a
  //! homomorphism of the free semigroup by substitution.
  struct GeneratorMap {
    std::vector<word_type> images;

    bool operator==(GeneratorMap const&) const = default;
  };

  //! Parses `a->a, b->bab`. Every letter of \p alphabet must appear exactly
  //! once on the left.
  inline GeneratorMap parse_generator_map(std::string_view   text,
                                          Alphabet const&    alphabet,
                                          std::string const& source = "<map>") {
    std::vector<std::optional<word_type>> images(alphabet.size());
    std::size_t                           start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto        item   = text.substr(start, end - start);
      std::size_t column = start;
      start              = end + 1;
      if (detail::trim(item).empty()) {
        if (end == text.size()) {
          break;
        }
        throw ParseError(source, 1, column + 1, "", "empty map entry");
      }
      auto arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError(
            source, 1, column + 1, std::string(detail::trim(item)), "expected '->'");
      }
      auto name = detail::trim(item.substr(0, arrow));
      auto x    = alphabet.index(name);
      if (!x) {
        throw ParseError(source, 1, column + 1, std::string(name), "unknown generator");
      }
      if (images[*x]) {
        throw ParseError(
            source, 1, column + 1, std::string(name), "generator mapped twice");
      }
      auto w = alphabet.parse(item.substr(arrow + 2), source, 1, column + arrow + 2);
      if (w.empty()) {
        throw ParseError(source, 1, column + 1, std::string(name), "empty image");
      }
      images[*x] = std::move(w);
    }
    GeneratorMap m;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) {
        throw ParseError(source, 1, 1, alphabet.letter(i), "generator has no image");
      }
      m.images.push_back(std::move(*images[i]));
    }
    return m;
  }

  inline std::string format(GeneratorMap const& m, Alphabet const& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < m.images.size(); ++i) {
      if (i) {
        out += ", ";
      }
      out += alphabet.letter(i) + "->" + alphabet.format(m.images[i]);
    }
    return out;
  }

  inline GeneratorMap identity_map(std::size_t generators) {
    GeneratorMap m;
    for (letter_type x = 0; x < generators; ++x) {
      m.images.push_back(word_type{x});
    }
    return m;
  }

  //! Substitutes images for letters.
  inline word_type substitute(GeneratorMap const& m, word_type const& w) {
    word_type out;
    for (auto x : w) {
      if (x >= m.images.size()) {
        throw Error("letter outside the domain of the map");
      }
      out.insert(out.end(), m.images[x].cbegin(), m.images[x].cend());
    }
    return out;
  }

  //! First \p first, then \p second (maps act on the right); images are
  //! reduced to normal forms in \p s.
  inline GeneratorMap compose(FpSemigroup const&  s,
                              GeneratorMap const& first,
                              GeneratorMap const& second) {
    GeneratorMap out;
    for (auto const& w : first.images) {
      out.images.push_back(s.normal_form(substitute(second, w)));
    }
    return out;
  }

  //! m followed by m.
  inline GeneratorMap square(FpSemigroup const& s, GeneratorMap const& m) {
    return compose(s, m, m);
  }

  //! Sardinas-Patterson test: true iff every word over \p words factors
  //! uniquely. Repeated words are never a code.
  inline bool is_code(std::vector<word_type> const& words) {
    std::set<word_type> code(words.cbegin(), words.cend());
    if (code.size() != words.size()
        || std::any_of(words.cbegin(), words.cend(), [](auto const& w) {
             return w.empty();
           })) {
      return false;
    }
    auto is_prefix = [](word_type const& p, word_type const& w) {
      return p.size() <= w.size() && std::equal(p.cbegin(), p.cend(), w.cbegin());
    };
    // Dangling suffixes.
    std::set<word_type> current;
    for (auto const& u : code) {
      for (auto const& v : code) {
        if (u != v && is_prefix(u, v)) {
          current.emplace(v.cbegin() + u.size(), v.cend());
        }
      }
    }
    std::set<std::set<word_type>> seen;
    while (!current.empty() && seen.insert(current).second) {
      std::set<word_type> next;
      for (auto const& w : current) {
        if (code.count(w)) {
          return false;
        }
        for (auto const& u : code) {
          if (is_prefix(u, w) && u.size() < w.size()) {
            next.emplace(w.cbegin() + u.size(), w.cend());
          }
          if (is_prefix(w, u) && w.size() < u.size()) {
            next.emplace(u.cbegin() + w.size(), u.cend());
          }
        }
      }
      current = std::move(next);
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  struct Verified {};

  //! A defining relation whose sides have different images.
  struct FailedRelation {
    relation_type relation;
    word_type     left_image;
    word_type     right_image;
  };

  using EndoStatus = std::variant<Verified, FailedRelation>;

  //! u != v but uφ = vφ; all words are normal forms.
  struct Collision {
    word_type u;
    word_type v;
    word_type image;
  };

  struct NoCollisionUpTo {
    std::size_t radius;
  };

  struct ExactInjective {
    std::string reason;
  };

  using Injectivity = std::variant<Collision, NoCollisionUpTo, ExactInjective>;

  //! witnesses[g] is a normal form w with wφ = g. Since the image of an
  //! endomorphism is a subsemigroup, this proves surjectivity.
  struct GeneratorsCovered {
    std::vector<word_type> witnesses;
  };

  struct ExactSurjective {
    std::string reason;
  };

  struct UncoveredUpTo {
    std::size_t              radius;
    std::vector<letter_type> uncovered;
  };

  struct ExactNotSurjective {
    std::vector<letter_type> uncovered;
    std::string              reason;
  };

  using Surjectivity = std::variant<GeneratorsCovered,
                                    ExactSurjective,
                                    UncoveredUpTo,
                                    ExactNotSurjective>;

  struct EndoCertificate {
    GeneratorMap map;
    EndoStatus   endo;
    //! Only present for verified endomorphisms.
    std::optional<Injectivity>  injectivity;
    std::optional<Surjectivity> surjectivity;

    bool verified() const {
      return std::holds_alternative<Verified>(endo);
    }

    bool surjective() const {
      return surjectivity
             && (std::holds_alternative<GeneratorsCovered>(*surjectivity)
                 || std::holds_alternative<ExactSurjective>(*surjectivity));
    }

    bool has_collision() const {
      return injectivity && std::holds_alternative<Collision>(*injectivity);
    }
  };

  struct NotFound {
    std::string reason;
  };

  using Witness = std::variant<EndoCertificate, NotFound>;

  namespace detail {
    inline void validate_map(FpSemigroup const& s, GeneratorMap const& m) {
      if (m.images.size() != s.number_of_generators()) {
        throw Error("map has " + std::to_string(m.images.size())
                    + " images, expected "
                    + std::to_string(s.number_of_generators()));
      }
      for (auto const& w : m.images) {
        if (w.empty()) {
          throw Error("generator images must be nonempty");
        }
        s.alphabet().validate(w);
      }
    }

    inline bool length_preserving(FpSemigroup const& s) {
      return s.engine().length_preserving();
    }

    // Images are single generators, pairwise distinct: a permutation of the
    // generators of finite order, so a power of the map is the identity.
    inline bool permutes_generators(FpSemigroup const& s, GeneratorMap const& m) {
      std::set<word_type> images;
      for (auto const& w : m.images) {
        auto nf = s.normal_form(w);
        if (nf.size() != 1) {
          return false;
        }
        images.insert(nf);
      }
      return images.size() == m.images.size();
    }
  }  // namespace detail

  //! Checks that every defining relation of \p s holds after applying \p m.
  inline EndoCertificate check_endomorphism(FpSemigroup const&  s,
                                            GeneratorMap const& m) {
    detail::validate_map(s, m);
    EndoCertificate cert{m, Verified{}, std::nullopt, std::nullopt};
    for (auto const& rel : s.relations()) {
      auto l = s.normal_form(substitute(m, rel.first));
      auto r = s.normal_form(substitute(m, rel.second));
      if (l != r) {
        cert.endo = FailedRelation{rel, std::move(l), std::move(r)};
        break;
      }
    }
    return cert;
  }

  //! Compares images of all elements of the ball of radius \p radius and
  //! reports the least colliding pair (u, v), u < v, ordered by u then v.
  //! Upgraded to ExactInjective when the images permute the generators or
  //! \p s is free and the images form a code.
  inline Injectivity check_injective(FpSemigroup const&  s,
                                     GeneratorMap const& m,
                                     std::size_t         radius) {
    detail::validate_map(s, m);
    auto const ball = enumerate_ball(s, radius);
    std::unordered_map<word_type, std::vector<std::size_t>, detail::WordHash>
        by_image;
    std::vector<word_type> images;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      images.push_back(s.normal_form(substitute(m, ball[i].word)));
      by_image[images.back()].push_back(i);
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (auto const& [img, members] : by_image) {
      if (members.size() > 1) {
        std::pair<std::size_t, std::size_t> p{members[0], members[1]};
        if (!best || p < *best) {
          best = p;
        }
      }
    }
    if (best) {
      return Collision{
          ball[best->first].word, ball[best->second].word, images[best->first]};
    }
    if (detail::permutes_generators(s, m)) {
      return ExactInjective{"images permute the generators"};
    }
    if (s.engine().size() == 0 && is_code(m.images)) {
      return ExactInjective{"free semigroup and the images form a code"};
    }
    return NoCollisionUpTo{radius};
  }

  //! Searches the ball for a preimage of each generator.
  inline Surjectivity check_surjective(FpSemigroup const&  s,
                                       GeneratorMap const& m,
                                       std::size_t         radius) {
    detail::validate_map(s, m);
    std::size_t const                     n = s.number_of_generators();
    std::vector<std::optional<word_type>> found(n);
    std::size_t                           missing = n;
    for (auto const& e : enumerate_ball(s, radius)) {
      auto img = s.normal_form(substitute(m, e.word));
      if (img.size() == 1 && !found[img[0]]) {
        found[img[0]] = e.word;
        if (--missing == 0) {
          break;
        }
      }
    }
    if (missing == 0) {
      GeneratorsCovered c;
      for (auto& w : found) {
        c.witnesses.push_back(std::move(*w));
      }
      return c;
    }
    std::vector<letter_type> uncovered;
    for (letter_type x = 0; x < n; ++x) {
      if (!found[x]) {
        uncovered.push_back(x);
      }
    }
    if (detail::length_preserving(s)) {
      // Length is an invariant and |wφ| >= |w|, so only generators can map
      // to generators, and those were all checked.
      return ExactNotSurjective{std::move(uncovered),
                                "every rule preserves length"};
    }
    return UncoveredUpTo{radius, std::move(uncovered)};
  }

  //! check_endomorphism followed, for verified maps, by both checks.
  inline EndoCertificate certify(FpSemigroup const&  s,
                                 GeneratorMap const& m,
                                 std::size_t         radius) {
    auto cert = check_endomorphism(s, m);
    if (cert.verified()) {
      cert.injectivity  = check_injective(s, m, radius);
      cert.surjectivity = check_surjective(s, m, radius);
    }
    return cert;
  }

  //! Every verified endomorphism whose generator images are normal forms of
  //! length at most \p image_length, fully certified at \p radius. Sorted by
  //! image tuple in shortlex order.
  inline std::vector<EndoCertificate> find_endomorphisms(FpSemigroup const& s,
                                                         std::size_t image_length,
                                                         std::size_t radius) {
    if (image_length == 0) {
      throw Error("image length must be at least 1");
    }
    auto const        candidates = enumerate_ball(s, image_length);
    std::size_t const n          = s.number_of_generators();
    std::vector<EndoCertificate> out;
    std::vector<std::size_t>     choice(n, 0);
    while (true) {
      GeneratorMap m;
      for (auto c : choice) {
        m.images.push_back(candidates[c].word);
      }
      auto cert = check_endomorphism(s, m);
      if (cert.verified()) {
        cert.injectivity  = check_injective(s, m, radius);
        cert.surjectivity = check_surjective(s, m, radius);
        out.push_back(std::move(cert));
      }
      std::size_t i = n;
      while (i > 0 && ++choice[i - 1] == candidates.size()) {
        choice[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  //! A surjective endomorphism with a collision: proof that \p s is not
  //! hopfian.
  inline Witness non_hopf_witness(FpSemigroup const& s,
                                  std::size_t        image_length,
                                  std::size_t        radius) {
    for (auto& cert : find_endomorphisms(s, image_length, radius)) {
      if (cert.surjective() && cert.has_collision()) {
        return cert;
      }
    }
    return NotFound{"no surjective endomorphism with a collision among maps "
                    "with images of length <= "
                    + std::to_string(image_length) + " (radius "
                    + std::to_string(radius) + ")"};
  }

  //! An endomorphism with no collision in the ball that misses a generator.
  //! The certificate records whether each half is exact or bounded.
  inline Witness non_cohopf_witness(FpSemigroup const& s,
                                    std::size_t        image_length,
                                    std::size_t        radius) {
    for (auto& cert : find_endomorphisms(s, image_length, radius)) {
      bool injective_ok = !cert.has_collision();
      bool missed
          = std::holds_alternative<ExactNotSurjective>(*cert.surjectivity)
            || std::holds_alternative<UncoveredUpTo>(*cert.surjectivity);
      if (injective_ok && missed) {
        return cert;
      }
    }
    return NotFound{"every injective endomorphism with images of length <= "
                    + std::to_string(image_length) + " is surjective (radius "
                    + std::to_string(radius) + ")"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite backend: every status is exact
  ////////////////////////////////////////////////////////////////////////

  struct FiniteCertificate {
    element_map map;
    //! A pair (x, y) with (xy)φ != (xφ)(yφ).
    std::optional<std::pair<std::size_t, std::size_t>> failure;
    bool                                               injective  = false;
    bool                                               surjective = false;
    std::optional<std::pair<std::size_t, std::size_t>> collision;
    std::optional<std::size_t>                         uncovered;

    bool verified() const {
      return !failure.has_value();
    }
  };

  inline FiniteCertificate certify(FiniteSemigroup const& s, element_map const& phi) {
    FiniteCertificate cert;
    cert.map     = phi;
    cert.failure = homomorphism_failure(s, s, phi);
    std::vector<std::optional<std::size_t>> preimage(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (preimage[phi[x]]) {
        if (!cert.collision) {
          cert.collision = std::make_pair(*preimage[phi[x]], x);
        }
      } else {
        preimage[phi[x]] = x;
      }
    }
    for (std::size_t y = 0; y < s.size() && !cert.uncovered; ++y) {
      if (!preimage[y]) {
        cert.uncovered = y;
      }
    }
    cert.injective  = !cert.collision;
    cert.surjective = !cert.uncovered;
    return cert;
  }

  //! All injective endomorphisms of \p s, by backtracking; sorted by image
  //! tuple.
  inline std::vector<element_map> injective_endomorphisms(FiniteSemigroup const& s) {
    std::size_t const        n = s.size();
    std::vector<element_map> out;
    element_map              phi(n);
    std::vector<bool>        used(n, false);
    // Products of already-assigned elements whose product is assigned.
    auto consistent = [&](std::size_t k) {
      for (std::size_t x = 0; x <= k; ++x) {
        for (std::size_t y = 0; y <= k; ++y) {
          if (x != k && y != k) {
            continue;
          }
          std::size_t xy = s.product(x, y);
          if (xy <= k && phi[xy] != s.product(phi[x], phi[y])) {
            return false;
          }
        }
      }
      // Earlier pairs whose product is k.
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (s.product(x, y) == k && phi[k] != s.product(phi[x], phi[y])) {
            return false;
          }
        }
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        out.push_back(phi);
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) {
          continue;
        }
        phi[k]  = v;
        used[v] = true;
        if (consistent(k)) {
          self(self, k + 1);
        }
        used[v] = false;
      }
    };
    search(search, 0);
    return out;
  }

  //! Always NotFound: an injective self-map of a finite set is a bijection.
  inline NotFound non_cohopf_witness(FiniteSemigroup const&) {
    return NotFound{"finite semigroup: every injective endomorphism is a "
                    "bijection"};
  }

}  // namespace hopfsg

#endif  // HOPFSG_MORPH_HPP_
