#ifndef HOPFSG_FINSEMI_HPP_
#define HOPFSG_FINSEMI_HPP_

#include <algorithm>  // for sort, all_of, find
#include <cstddef>    // for size_t
#include <map>        // for map
#include <numeric>    // for lcm, iota
#include <optional>   // for optional
#include <set>        // for set
#include <string>     // for string, to_string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "errors.hpp"  // for Error

namespace hopfsg {

  //! A self-map of a finite semigroup given by the image of every element.
  using element_map = std::vector<std::size_t>;

  //! A finite semigroup given by its multiplication table. Associativity is
  //! verified on construction.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    FiniteSemigroup(std::vector<std::string>              names,
                    std::vector<std::vector<std::size_t>> table)
        : _names(std::move(names)), _n(_names.size()) {
      if (_n == 0) {
        throw Error("a semigroup must have at least one element");
      }
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (_names[i] == _names[j]) {
            throw Error("duplicate element name '" + _names[i] + "'");
          }
        }
      }
      if (table.size() != _n) {
        throw Error("table has " + std::to_string(table.size())
                    + " rows, expected " + std::to_string(_n));
      }
      _table.reserve(_n * _n);
      for (std::size_t i = 0; i < _n; ++i) {
        if (table[i].size() != _n) {
          throw Error("row " + std::to_string(i) + " of the table has "
                      + std::to_string(table[i].size()) + " entries, expected "
                      + std::to_string(_n));
        }
        for (std::size_t j = 0; j < _n; ++j) {
          if (table[i][j] >= _n) {
            throw Error("table entry (" + std::to_string(i) + ", "
                        + std::to_string(j) + ") is out of range");
          }
          _table.push_back(table[i][j]);
        }
      }
      for (std::size_t x = 0; x < _n; ++x) {
        for (std::size_t y = 0; y < _n; ++y) {
          for (std::size_t z = 0; z < _n; ++z) {
            if (product(product(x, y), z) != product(x, product(y, z))) {
              throw Error("multiplication is not associative: (" + _names[x]
                          + _names[y] + ")" + _names[z] + " != " + _names[x]
                          + "(" + _names[y] + _names[z] + ")");
            }
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t product(std::size_t x, std::size_t y) const {
      return _table[x * _n + y];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(std::size_t x) const {
      return _names.at(x);
    }

    std::optional<std::size_t> index(std::string const& name) const {
      auto it = std::find(_names.cbegin(), _names.cend(), name);
      if (it == _names.cend()) {
        return std::nullopt;
      }
      return it - _names.cbegin();
    }

    std::vector<std::vector<std::size_t>> rows() const {
      std::vector<std::vector<std::size_t>> out(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        out[i].assign(_table.cbegin() + i * _n, _table.cbegin() + (i + 1) * _n);
      }
      return out;
    }

    std::optional<std::size_t> identity() const {
      for (std::size_t e = 0; e < _n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < _n && ok; ++x) {
          ok = product(e, x) == x && product(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    bool is_group() const {
      auto e = identity();
      if (!e) {
        return false;
      }
      for (std::size_t x = 0; x < _n; ++x) {
        bool has_inverse = false;
        for (std::size_t y = 0; y < _n && !has_inverse; ++y) {
          has_inverse = product(x, y) == *e && product(y, x) == *e;
        }
        if (!has_inverse) {
          return false;
        }
      }
      return true;
    }

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::vector<std::string> _names;
    std::size_t              _n = 0;
    std::vector<std::size_t> _table;
  };

  //! Sorted list of the elements of the subsemigroup generated by \p gens.
  inline std::vector<std::size_t> closure(FiniteSemigroup const&          s,
                                          std::vector<std::size_t> const& gens) {
    std::vector<bool>        in(s.size(), false);
    std::vector<std::size_t> todo;
    for (auto g : gens) {
      if (g >= s.size()) {
        throw Error("element index out of range");
      }
      if (!in[g]) {
        in[g] = true;
        todo.push_back(g);
      }
    }
    std::vector<std::size_t> members = todo;
    while (!todo.empty()) {
      std::vector<std::size_t> next;
      for (auto x : todo) {
        for (std::size_t k = 0; k < members.size(); ++k) {
          for (auto p : {s.product(x, members[k]), s.product(members[k], x)}) {
            if (!in[p]) {
              in[p] = true;
              next.push_back(p);
              members.push_back(p);
            }
          }
        }
      }
      todo = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  //! A subset of a FiniteSemigroup closed under multiplication. Keeps a
  //! reference to the parent, which must outlive it.
  class SubSemigroup {
   public:
    SubSemigroup(FiniteSemigroup const& parent, std::vector<std::size_t> members)
        : _parent(&parent), _mask(parent.size(), false) {
      if (members.empty()) {
        throw Error("a subsemigroup must be nonempty");
      }
      for (auto x : members) {
        if (x >= parent.size()) {
          throw Error("element index out of range");
        }
        _mask[x] = true;
      }
      for (std::size_t x = 0; x < _mask.size(); ++x) {
        if (_mask[x]) {
          _members.push_back(x);
        }
      }
      for (auto x : _members) {
        for (auto y : _members) {
          if (!_mask[parent.product(x, y)]) {
            throw Error("subset is not closed: " + parent.name(x)
                        + parent.name(y) + " = "
                        + parent.name(parent.product(x, y))
                        + " is outside it");
          }
        }
      }
    }

    static SubSemigroup generated_by(FiniteSemigroup const&          parent,
                                     std::vector<std::size_t> const& gens) {
      return SubSemigroup(parent, closure(parent, gens));
    }

    static SubSemigroup whole(FiniteSemigroup const& parent) {
      std::vector<std::size_t> all(parent.size());
      std::iota(all.begin(), all.end(), 0);
      return SubSemigroup(parent, std::move(all));
    }

    FiniteSemigroup const& parent() const noexcept {
      return *_parent;
    }

    std::vector<std::size_t> const& members() const noexcept {
      return _members;
    }

    std::vector<std::size_t> complement() const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < _mask.size(); ++x) {
        if (!_mask[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool contains(std::size_t x) const {
      return x < _mask.size() && _mask[x];
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

   private:
    FiniteSemigroup const*   _parent;
    std::vector<bool>        _mask;
    std::vector<std::size_t> _members;
  };

  //! |S - T| + 1.
  inline std::size_t rees_index(SubSemigroup const& t) {
    return t.parent().size() - t.size() + 1;
  }

  enum class GreenRelation { R, L, H };

  inline char const* to_string(GreenRelation kind) {
    switch (kind) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      default:
        return "H";
    }
  }

  struct RelativeGreenClasses {
    GreenRelation kind;
    //! Classes ordered by least element; each class sorted.
    std::vector<std::vector<std::size_t>> classes;
    //! class_of[x] indexes into classes.
    std::vector<std::size_t> class_of;
  };

  namespace detail {
    inline RelativeGreenClasses
    partition_by(GreenRelation kind, std::vector<std::vector<bool>> const& keys) {
      RelativeGreenClasses                   out{kind, {}, {}};
      std::map<std::vector<bool>, std::size_t> ids;
      for (std::size_t x = 0; x < keys.size(); ++x) {
        auto [it, inserted] = ids.emplace(keys[x], out.classes.size());
        if (inserted) {
          out.classes.emplace_back();
        }
        out.classes[it->second].push_back(x);
        out.class_of.push_back(it->second);
      }
      return out;
    }

    // xT^1 (right = true) or T^1x as a membership vector; the formal
    // identity contributes x itself.
    inline std::vector<bool> translate(SubSemigroup const& t,
                                       std::size_t         x,
                                       bool                right) {
      auto const&       s = t.parent();
      std::vector<bool> in(s.size(), false);
      in[x] = true;
      for (auto y : t.members()) {
        in[right ? s.product(x, y) : s.product(y, x)] = true;
      }
      return in;
    }
  }  // namespace detail

  //! The T-relative Green's relation \p kind on the parent of \p t:
  //! x R^T y iff xT^1 = yT^1, x L^T y iff T^1x = T^1y, H^T = R^T ∩ L^T.
  inline RelativeGreenClasses relative_green(SubSemigroup const& t,
                                             GreenRelation       kind) {
    std::size_t const n = t.parent().size();
    if (kind == GreenRelation::H) {
      auto r = relative_green(t, GreenRelation::R);
      auto l = relative_green(t, GreenRelation::L);
      std::vector<std::vector<bool>> keys(n);
      // Encode the pair of class ids as a key.
      for (std::size_t x = 0; x < n; ++x) {
        keys[x].assign(2 * n, false);
        keys[x][r.class_of[x]]     = true;
        keys[x][n + l.class_of[x]] = true;
      }
      return detail::partition_by(GreenRelation::H, keys);
    }
    std::vector<std::vector<bool>> keys;
    for (std::size_t x = 0; x < n; ++x) {
      keys.push_back(detail::translate(t, x, kind == GreenRelation::R));
    }
    return detail::partition_by(kind, keys);
  }

  //! One more than the number of H^T-classes contained in S - T.
  inline std::size_t green_index(SubSemigroup const& t) {
    auto        h     = relative_green(t, GreenRelation::H);
    std::size_t count = 0;
    for (auto const& c : h.classes) {
      if (!t.contains(c.front())) {
        ++count;
      }
    }
    return count + 1;
  }

  //! First pair (x, y) with (xy)φ != (xφ)(yφ), if any.
  inline std::optional<std::pair<std::size_t, std::size_t>>
  homomorphism_failure(FiniteSemigroup const& from,
                       FiniteSemigroup const& to,
                       element_map const&     phi) {
    if (phi.size() != from.size()) {
      throw Error("map has " + std::to_string(phi.size())
                  + " images, expected " + std::to_string(from.size()));
    }
    for (auto y : phi) {
      if (y >= to.size()) {
        throw Error("map image out of range");
      }
    }
    for (std::size_t x = 0; x < from.size(); ++x) {
      for (std::size_t y = 0; y < from.size(); ++y) {
        if (phi[from.product(x, y)] != to.product(phi[x], phi[y])) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_endomorphism(FiniteSemigroup const& s, element_map const& phi) {
    return !homomorphism_failure(s, s, phi).has_value();
  }

  inline bool is_injective(element_map const& phi) {
    std::set<std::size_t> seen(phi.cbegin(), phi.cend());
    return seen.size() == phi.size();
  }

  //! φ^k as an element map.
  inline element_map map_power(element_map const& phi, std::size_t k) {
    element_map out(phi.size());
    std::iota(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (auto& x : out) {
        x = phi[x];
      }
    }
    return out;
  }

  //! Sorted image of \p subset under φ^k.
  inline std::vector<std::size_t> image(element_map const&              phi,
                                        std::vector<std::size_t> const& subset,
                                        std::size_t                     k = 1) {
    auto                  p = map_power(phi, k);
    std::set<std::size_t> out;
    for (auto x : subset) {
      out.insert(p[x]);
    }
    return {out.cbegin(), out.cend()};
  }

  //! The strong semilattice of two groups top > bottom joined by the
  //! homomorphism \p hom : top → bottom. Elements are listed top first.
  inline FiniteSemigroup clifford_of_two_groups(FiniteSemigroup const& top,
                                                FiniteSemigroup const& bottom,
                                                element_map const&     hom) {
    if (!top.is_group() || !bottom.is_group()) {
      throw Error("both components of a Clifford semigroup must be groups");
    }
    if (auto bad = homomorphism_failure(top, bottom, hom)) {
      throw Error("connecting map is not a homomorphism at ("
                  + top.name(bad->first) + ", " + top.name(bad->second) + ")");
    }
    std::size_t const        nt = top.size();
    std::size_t const        n  = nt + bottom.size();
    std::vector<std::string> names = top.names();
    names.insert(names.end(), bottom.names().cbegin(), bottom.names().cend());
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x < nt && y < nt) {
          table[x][y] = top.product(x, y);
        } else {
          // At least one factor lies below: route top factors through hom.
          std::size_t bx = x < nt ? hom[x] : x - nt;
          std::size_t by = y < nt ? hom[y] : y - nt;
          table[x][y]    = nt + bottom.product(bx, by);
        }
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  struct StabilizerEntry {
    std::size_t generator;
    //! k_t: least k with tφ^{ℓ m_t} ∈ T for all ℓ ≥ k.
    std::size_t k;
    //! m_t.
    std::size_t m;
    //! Orbit shape of t under φ.
    std::size_t tail;
    std::size_t cycle;
  };

  struct StabilizerCertificate {
    std::vector<StabilizerEntry> entries;
    std::size_t                  k;
    std::size_t                  m;
    //! k·m.
    std::size_t exponent;
    //! Tφ^{km}, sorted.
    std::vector<std::size_t> image;
    //! Tφ^{km} ⊆ T, checked element-wise.
    bool stable;
    //! φ^{km}|_T is a bijection T → T.
    bool restriction_bijective;
    //! φ^{km}|_{S-T} is a bijection S-T → S-T.
    bool complement_bijective;
  };

  //! For an injective endomorphism φ of a finite semigroup S and a
  //! subsemigroup T generated by \p gens, finds k_t, m_t for each generator
  //! from its orbit t, tφ, tφ², ..., sets k = max k_t and m = lcm m_t, and
  //! verifies Tφ^{km} ⊆ T.
  inline StabilizerCertificate power_stabilizer(SubSemigroup const&             t,
                                                element_map const&              phi,
                                                std::vector<std::size_t> const& gens) {
    auto const& s = t.parent();
    if (auto bad = homomorphism_failure(s, s, phi)) {
      throw Error("map is not an endomorphism: fails at (" + s.name(bad->first)
                  + ", " + s.name(bad->second) + ")");
    }
    if (!is_injective(phi)) {
      throw Error("endomorphism is not injective");
    }
    if (closure(s, gens) != t.members()) {
      throw Error("the given elements do not generate the subsemigroup");
    }

    StabilizerCertificate cert{{}, 1, 1, 1, {}, false, false, false};
    for (auto g : gens) {
      std::vector<std::size_t>           orbit;
      std::map<std::size_t, std::size_t> first_seen;
      std::size_t                        x = g;
      while (!first_seen.count(x)) {
        first_seen.emplace(x, orbit.size());
        orbit.push_back(x);
        x = phi[x];
      }
      std::size_t const tail  = first_seen.at(x);
      std::size_t const cycle = orbit.size() - tail;
      auto at = [&](std::size_t p) {
        return p < orbit.size() ? orbit[p]
                                : orbit[tail + (p - tail) % cycle];
      };
      std::size_t const k = tail + 1;
      std::size_t       m = cycle;
      // Membership of tφ^{ℓm} for ℓ ≥ k only depends on ℓm mod cycle, so
      // the least workable m divides the cycle length.
      for (std::size_t d = 1; d <= cycle; ++d) {
        if (cycle % d != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t l = k; l < k + cycle && ok; ++l) {
          ok = t.contains(at(l * d));
        }
        if (ok) {
          m = d;
          break;
        }
      }
      cert.entries.push_back(StabilizerEntry{g, k, m, tail, cycle});
      cert.k = std::max(cert.k, k);
      cert.m = std::lcm(cert.m, m);
    }
    cert.exponent = cert.k * cert.m;
    cert.image    = image(phi, t.members(), cert.exponent);
    cert.stable   = std::all_of(cert.image.cbegin(),
                              cert.image.cend(),
                              [&t](std::size_t x) { return t.contains(x); });
    cert.restriction_bijective = cert.stable && cert.image == t.members();
    auto const complement      = t.complement();
    auto const complement_img  = image(phi, complement, cert.exponent);
    cert.complement_bijective  = complement_img == complement;
    return cert;
  }

  ////////////////////////////////////////////////////////////////////////
  // Small constructors
  ////////////////////////////////////////////////////////////////////////

  inline FiniteSemigroup cyclic_group(std::size_t n, std::string const& prefix = "") {
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(prefix + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = (i + j) % n;
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  //! xy = x.
  inline FiniteSemigroup left_zero(std::size_t n, std::string const& prefix = "") {
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(prefix + std::to_string(i + 1));
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = i;
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  //! The semigroup of transformations of {0, ..., degree-1} generated by
  //! \p gens, composed left to right ((x)fg = ((x)f)g). Throws if it has
  //! more than \p limit elements.
  inline FiniteSemigroup
  transformation_semigroup(std::vector<std::vector<std::size_t>> const& gens,
                           std::size_t limit = 1000) {
    if (gens.empty()) {
      throw Error("at least one generator is required");
    }
    std::size_t const                      degree = gens.front().size();
    std::vector<std::vector<std::size_t>>  elts;
    std::map<std::vector<std::size_t>, std::size_t> index;
    auto add = [&](std::vector<std::size_t> f) {
      if (f.size() != degree) {
        throw Error("transformations must have equal degree");
      }
      if (index.emplace(f, elts.size()).second) {
        elts.push_back(std::move(f));
        if (elts.size() > limit) {
          throw Error("transformation semigroup exceeds the size limit");
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    auto compose = [](auto const& f, auto const& g) {
      std::vector<std::size_t> h(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        h[i] = g[f[i]];
      }
      return h;
    };
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        add(compose(elts[i], g));
      }
    }
    std::size_t const                     n = elts.size();
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = "[";
      for (std::size_t p = 0; p < degree; ++p) {
        name += (p ? " " : "") + std::to_string(elts[i][p]);
      }
      names.push_back(name + "]");
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = index.at(compose(elts[i], elts[j]));
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

}  // namespace hopfsg

#endif  // HOPFSG_FINSEMI_HPP_
