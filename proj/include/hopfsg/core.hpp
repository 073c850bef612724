#ifndef HOPFSG_CORE_HPP_
#define HOPFSG_CORE_HPP_

#include <algorithm>    // for lexicographical_compare, max
#include <cctype>       // for isalpha, isalnum, isdigit, isspace
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "errors.hpp"  // for Error, ParseError

namespace hopfsg {

  using letter_type = std::uint32_t;

  //! A word is a flat sequence of letter indices into some Alphabet. The
  //! empty word only ever appears as a rewriting context.
  using word_type = std::vector<letter_type>;

  //! Ordered list of distinct letter names. Names are identifiers
  //! (`[A-Za-z_][A-Za-z0-9_]*`); the index of a letter is its position in
  //! the declaration.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> letters)
        : _letters(std::move(letters)) {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (!is_identifier(_letters[i])) {
          throw Error("invalid letter name '" + _letters[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_letters[i] == _letters[j]) {
            throw Error("duplicate letter '" + _letters[i] + "'");
          }
        }
      }
    }

    //! Alphabet whose letters are the characters of \p chars.
    static Alphabet from_chars(std::string_view chars) {
      std::vector<std::string> letters;
      for (char c : chars) {
        letters.emplace_back(1, c);
      }
      return Alphabet(std::move(letters));
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    std::vector<std::string> const& letters() const noexcept {
      return _letters;
    }

    std::string const& letter(letter_type x) const {
      validate(x);
      return _letters[x];
    }

    std::optional<letter_type> index(std::string_view name) const {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_letters[i] == name) {
          return static_cast<letter_type>(i);
        }
      }
      return std::nullopt;
    }

    void validate(letter_type x) const {
      if (x >= _letters.size()) {
        throw Error("letter index " + std::to_string(x)
                    + " is out of range for an alphabet of size "
                    + std::to_string(_letters.size()));
      }
    }

    void validate(word_type const& w) const {
      for (letter_type x : w) {
        validate(x);
      }
    }

    //! Parses juxtaposed letters with optional `^k` powers, e.g. `abab^2ab`
    //! or `a b a b^2 a b`. Letters are matched longest first. Errors carry a
    //! column relative to \p text, shifted by \p column_offset.
    word_type parse(std::string_view   text,
                    std::string const& source        = "<word>",
                    std::size_t        line          = 1,
                    std::size_t        column_offset = 0) const {
      word_type   result;
      std::size_t pos = 0;
      auto fail = [&](std::size_t at, std::string token, std::string what) {
        throw ParseError(
            source, line, column_offset + at + 1, std::move(token), what);
      };
      while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
          continue;
        }
        std::size_t best = 0;
        letter_type which = 0;
        for (std::size_t i = 0; i < _letters.size(); ++i) {
          auto const& l = _letters[i];
          if (l.size() > best && text.substr(pos, l.size()) == l) {
            best  = l.size();
            which = static_cast<letter_type>(i);
          }
        }
        if (best == 0) {
          std::size_t end = pos + 1;
          while (end < text.size()
                 && std::isalnum(static_cast<unsigned char>(text[end]))) {
            ++end;
          }
          fail(pos,
               std::string(text.substr(pos, end - pos)),
               "unknown letter");
        }
        std::size_t start = pos;
        pos += best;
        std::size_t power = 1;
        if (pos < text.size() && text[pos] == '^') {
          std::size_t digits = pos + 1;
          while (digits < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[digits]))) {
            ++digits;
          }
          if (digits == pos + 1) {
            fail(pos, "^", "expected a positive exponent after '^'");
          }
          power = std::stoul(std::string(text.substr(pos + 1, digits - pos - 1)));
          if (power == 0) {
            fail(pos,
                 std::string(text.substr(start, digits - start)),
                 "exponent must be positive");
          }
          pos = digits;
        }
        result.insert(result.end(), power, which);
      }
      return result;
    }

    //! Inverse of parse: runs of a letter are written with a caret power.
    //! Multi-character letters are separated by spaces.
    std::string format(word_type const& w) const {
      validate(w);
      bool const  spaced = std::any_of(_letters.cbegin(),
                                      _letters.cend(),
                                      [](auto const& l) { return l.size() > 1; });
      std::string out;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        if (spaced && !out.empty()) {
          out += ' ';
        }
        out += _letters[w[i]];
        if (j - i > 1) {
          out += '^' + std::to_string(j - i);
        }
        i = j;
      }
      return out;
    }

    bool operator==(Alphabet const&) const = default;

    static bool is_identifier(std::string_view s) {
      if (s.empty()
          || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

   private:
    std::vector<std::string> _letters;
  };

  //! Shortlex order: shorter words first, equal lengths compared
  //! lexicographically by letter rank. The rank defaults to declaration
  //! order but may be any permutation of the alphabet.
  class ShortLexOrder {
   public:
    ShortLexOrder() = default;

    explicit ShortLexOrder(Alphabet alphabet)
        : _alphabet(std::move(alphabet)), _rank(_alphabet.size()) {
      for (std::size_t i = 0; i < _rank.size(); ++i) {
        _rank[i] = i;
      }
    }

    //! \p ranking lists every letter of \p alphabet exactly once, smallest
    //! first.
    ShortLexOrder(Alphabet alphabet, std::vector<std::string> const& ranking)
        : _alphabet(std::move(alphabet)),
          _rank(_alphabet.size(), _alphabet.size()) {
      if (ranking.size() != _alphabet.size()) {
        throw Error("order must list each of the "
                    + std::to_string(_alphabet.size()) + " letters once");
      }
      for (std::size_t r = 0; r < ranking.size(); ++r) {
        auto x = _alphabet.index(ranking[r]);
        if (!x) {
          throw Error("order names unknown letter '" + ranking[r] + "'");
        }
        if (_rank[*x] != _alphabet.size()) {
          throw Error("order lists letter '" + ranking[r] + "' twice");
        }
        _rank[*x] = r;
      }
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t rank(letter_type x) const {
      _alphabet.validate(x);
      return _rank[x];
    }

    //! Letters sorted from smallest to largest rank.
    std::vector<letter_type> letters_by_rank() const {
      std::vector<letter_type> out(_rank.size());
      for (std::size_t i = 0; i < _rank.size(); ++i) {
        out[_rank[i]] = static_cast<letter_type>(i);
      }
      return out;
    }

    std::vector<std::string> ranking() const {
      std::vector<std::string> out;
      for (auto x : letters_by_rank()) {
        out.push_back(_alphabet.letter(x));
      }
      return out;
    }

    std::strong_ordering compare(word_type const& u, word_type const& v) const {
      _alphabet.validate(u);
      _alphabet.validate(v);
      return compare_nc(u, v);
    }

    //! As compare, without validating letters.
    std::strong_ordering compare_nc(word_type const& u,
                                    word_type const& v) const noexcept {
      if (u.size() != v.size()) {
        return u.size() <=> v.size();
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) {
          return _rank[u[i]] <=> _rank[v[i]];
        }
      }
      return std::strong_ordering::equal;
    }

    bool less(word_type const& u, word_type const& v) const noexcept {
      return compare_nc(u, v) < 0;
    }

    //! Comparator object usable with standard algorithms.
    auto comparator() const {
      return [this](word_type const& u, word_type const& v) {
        return less(u, v);
      };
    }

    bool operator==(ShortLexOrder const&) const = default;

   private:
    Alphabet                 _alphabet;
    std::vector<std::size_t> _rank;
  };

  inline std::strong_ordering compare(word_type const&     u,
                                      word_type const&     v,
                                      ShortLexOrder const& order) {
    return order.compare(u, v);
  }

  inline word_type concat(word_type const& u, word_type const& v) {
    word_type result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.cbegin(), u.cend());
    result.insert(result.end(), v.cbegin(), v.cend());
    return result;
  }

  //! Concatenation checked against \p alphabet; semigroup elements must be
  //! nonempty, so empty operands are rejected.
  inline word_type concat(word_type const& u,
                          word_type const& v,
                          Alphabet const&  alphabet) {
    alphabet.validate(u);
    alphabet.validate(v);
    if (u.empty() || v.empty()) {
      throw Error("the empty word is not a semigroup element");
    }
    return concat(u, v);
  }

  //! The word x^k over letter \p x.
  inline word_type power(letter_type x, std::size_t k) {
    return word_type(k, x);
  }

  //! All words of length exactly \p n over \p size letters in lexicographic
  //! order of letter indices.
  inline std::vector<word_type> all_words(std::size_t size, std::size_t n) {
    std::vector<word_type> out{word_type{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<word_type> next;
      next.reserve(out.size() * size);
      for (auto const& w : out) {
        for (letter_type x = 0; x < size; ++x) {
          next.push_back(w);
          next.back().push_back(x);
        }
      }
      out = std::move(next);
    }
    return out;
  }

}  // namespace hopfsg

#endif  // HOPFSG_CORE_HPP_
