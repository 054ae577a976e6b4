#pragma once

// Permutations of small point sets and naive subgroup closure.
//
// Products are read left to right: in p * q, p acts first, so that
// (p * q)(x) = q(p(x)). Every word evaluation in the library relies on this.

#include <algorithm>    // for all_of, max
#include <array>        // for array
#include <cctype>       // for isdigit, isspace
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for hash
#include <numeric>      // for lcm
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace knotcover {

  inline constexpr std::size_t max_degree = 12;

  // A permutation of {1, ..., N}. Points above the largest moved point are
  // fixed, so permutations written on different numbers of points compare
  // equal whenever they agree as maps.
  template <std::size_t N>
  class BasicPerm {
    static_assert(N > 0 && N < 256);

   public:
    using point_type = unsigned;

    constexpr BasicPerm() noexcept {
      for (std::size_t i = 0; i < N; ++i) {
        img_[i] = static_cast<std::uint8_t>(i);
      }
    }

    // images[p - 1] is the image of p; must be a bijection of {1..n}, n <= N.
    static BasicPerm from_images(std::span<point_type const> images) {
      if (images.size() > N) {
        throw DomainError("permutation degree " + std::to_string(images.size())
                          + " exceeds the maximum " + std::to_string(N));
      }
      BasicPerm         p;
      std::vector<bool> hit(images.size(), false);
      for (std::size_t i = 0; i < images.size(); ++i) {
        point_type x = images[i];
        if (x < 1 || x > images.size() || hit[x - 1]) {
          throw DomainError("images do not form a bijection");
        }
        hit[x - 1] = true;
        p.img_[i]  = static_cast<std::uint8_t>(x - 1);
      }
      return p;
    }

    static BasicPerm from_images(std::initializer_list<point_type> images) {
      return from_images(std::span<point_type const>(images.begin(), images.size()));
    }

    static constexpr BasicPerm identity() noexcept {
      return BasicPerm();
    }

    static constexpr std::size_t capacity() noexcept {
      return N;
    }

    // Image of a 1-based point; points beyond N are fixed.
    point_type operator()(point_type x) const noexcept {
      if (x < 1 || x > N) {
        return x;
      }
      return img_[x - 1] + 1u;
    }

    // Largest moved point, 0 for the identity.
    std::size_t degree() const noexcept {
      for (std::size_t i = N; i > 0; --i) {
        if (img_[i - 1] != i - 1) {
          return i;
        }
      }
      return 0;
    }

    bool is_identity() const noexcept {
      return degree() == 0;
    }

    BasicPerm inverse() const noexcept {
      BasicPerm r;
      for (std::size_t i = 0; i < N; ++i) {
        r.img_[img_[i]] = static_cast<std::uint8_t>(i);
      }
      return r;
    }

    // Left-to-right composite: apply *this, then q.
    BasicPerm operator*(BasicPerm const& q) const noexcept {
      BasicPerm r;
      for (std::size_t i = 0; i < N; ++i) {
        r.img_[i] = q.img_[img_[i]];
      }
      return r;
    }

    bool is_even() const noexcept {
      std::array<bool, N> seen{};
      std::size_t         transpositions = 0;
      for (std::size_t i = 0; i < N; ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t x = i; !seen[x]; x = img_[x]) {
          seen[x] = true;
          ++len;
        }
        transpositions += len - 1;
      }
      return transpositions % 2 == 0;
    }

    // Element order (lcm of cycle lengths).
    std::size_t order() const noexcept {
      std::array<bool, N> seen{};
      std::size_t         result = 1;
      for (std::size_t i = 0; i < N; ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t x = i; !seen[x]; x = img_[x]) {
          seen[x] = true;
          ++len;
        }
        result = std::lcm(result, len);
      }
      return result;
    }

    // Canonical cycle notation: each cycle starts at its least point, cycles
    // ordered by least point, fixed points omitted, "()" for the identity.
    std::string to_string() const {
      std::string         out;
      std::array<bool, N> seen{};
      for (std::size_t i = 0; i < N; ++i) {
        if (seen[i] || img_[i] == i) {
          continue;
        }
        out += '(';
        for (std::size_t x = i; !seen[x]; x = img_[x]) {
          seen[x] = true;
          if (x != i) {
            out += ',';
          }
          out += std::to_string(x + 1);
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    friend bool operator==(BasicPerm const&, BasicPerm const&) = default;

    friend auto operator<=>(BasicPerm const&, BasicPerm const&) = default;

    friend std::ostream& operator<<(std::ostream& os, BasicPerm const& p) {
      return os << p.to_string();
    }

    std::size_t hash() const noexcept {
      std::size_t h = 0;
      for (auto x : img_) {
        h = h * 31 + x;
      }
      return h;
    }

   private:
    std::array<std::uint8_t, N> img_;
  };

  using Perm = BasicPerm<max_degree>;

  template <std::size_t N>
  BasicPerm<N> compose(BasicPerm<N> const& p, BasicPerm<N> const& q) noexcept {
    return p * q;
  }

  template <std::size_t N>
  BasicPerm<N> inverse(BasicPerm<N> const& p) noexcept {
    return p.inverse();
  }

  template <std::size_t N>
  bool is_even(BasicPerm<N> const& p) noexcept {
    return p.is_even();
  }

  // Parses cycle notation such as "(1,2)(3,4)" or "()". Whitespace is ignored.
  template <std::size_t N = max_degree>
  BasicPerm<N> parse_cycles(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    if (s.empty()) {
      throw ParseError("empty permutation text");
    }
    if (s == "()") {
      return BasicPerm<N>();
    }
    std::array<unsigned, N> img;
    for (std::size_t i = 0; i < N; ++i) {
      img[i] = static_cast<unsigned>(i + 1);
    }
    std::array<bool, N> used{};
    std::size_t         pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') {
        throw ParseError("expected '(' but found '" + s.substr(pos, 1) + "'");
      }
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) {
        throw ParseError("unbalanced parenthesis in '" + s.substr(pos) + "'");
      }
      std::string_view body(s.data() + pos + 1, close - pos - 1);
      if (body.find('(') != std::string_view::npos) {
        throw ParseError("unbalanced parenthesis in '"
                         + s.substr(pos, close - pos + 1) + "'");
      }
      std::vector<unsigned> cycle;
      std::size_t           start = 0;
      while (true) {
        std::size_t      comma = body.find(',', start);
        std::string_view tok   = body.substr(
            start, comma == std::string_view::npos ? std::string_view::npos
                                                     : comma - start);
        if (tok.empty()
            || !std::all_of(tok.begin(), tok.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          throw ParseError("non-numeric token '" + std::string(tok) + "'");
        }
        unsigned long x = tok.size() > 3 ? 0 : std::stoul(std::string(tok));
        if (x < 1 || x > N) {
          throw ParseError("point '" + std::string(tok) + "' out of range 1.."
                           + std::to_string(N));
        }
        if (used[x - 1]) {
          throw ParseError("repeated point '" + std::string(tok) + "'");
        }
        used[x - 1] = true;
        cycle.push_back(static_cast<unsigned>(x));
        if (comma == std::string_view::npos) {
          break;
        }
        start = comma + 1;
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      }
      pos = close + 1;
    }
    return BasicPerm<N>::from_images(std::span<unsigned const>(img.data(), N));
  }

  template <std::size_t N>
  struct PermHash {
    std::size_t operator()(BasicPerm<N> const& p) const noexcept {
      return p.hash();
    }
  };

  // A finite permutation group together with its full element list.
  template <std::size_t N>
  class BasicPermGroup {
   public:
    using perm_type = BasicPerm<N>;

    std::vector<perm_type> const& generators() const noexcept {
      return gens_;
    }

    // Elements in breadth-first discovery order; elements()[0] is the identity.
    std::vector<perm_type> const& elements() const noexcept {
      return elts_;
    }

    std::size_t order() const noexcept {
      return elts_.size();
    }

    bool contains(perm_type const& p) const {
      return index_.count(p) != 0;
    }

    std::optional<std::size_t> index_of(perm_type const& p) const {
      auto it = index_.find(p);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    template <std::size_t M>
    friend BasicPermGroup<M> closure(std::vector<BasicPerm<M>> const&, std::size_t);

   private:
    std::vector<perm_type>                                          gens_;
    std::vector<perm_type>                                          elts_;
    std::unordered_map<perm_type, std::size_t, PermHash<N>>         index_;
  };

  using PermGroup = BasicPermGroup<max_degree>;

  inline constexpr std::size_t default_closure_cap = 10'000;

  // Breadth-first right-multiplication closure from the identity. Throws
  // CapacityError once more than cap elements have been found.
  template <std::size_t N>
  BasicPermGroup<N> closure(std::vector<BasicPerm<N>> const& gens,
                            std::size_t cap = default_closure_cap) {
    if (cap < 1) {
      throw DomainError("closure cap must be at least 1");
    }
    BasicPermGroup<N> g;
    g.gens_ = gens;
    g.elts_.push_back(BasicPerm<N>());
    g.index_.emplace(BasicPerm<N>(), 0);
    for (std::size_t k = 0; k < g.elts_.size(); ++k) {
      for (auto const& s : gens) {
        BasicPerm<N> y = g.elts_[k] * s;
        if (g.index_.emplace(y, g.elts_.size()).second) {
          g.elts_.push_back(y);
          if (g.elts_.size() > cap) {
            throw CapacityError("group closure exceeds cap of "
                                + std::to_string(cap) + " elements");
          }
        }
      }
    }
    return g;
  }

}  // namespace knotcover

template <std::size_t N>
struct std::hash<knotcover::BasicPerm<N>> {
  std::size_t operator()(knotcover::BasicPerm<N> const& p) const noexcept {
    return p.hash();
  }
};
