#pragma once

// Generator assignments: candidate homomorphisms into a permutation group,
// given by the image of each generator.

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <string_view>
#include <utility>  // for move
#include <vector>   // for vector

#include "error.hpp"
#include "fpgroup.hpp"
#include "perm.hpp"

namespace knotcover {

  class GenAssignment {
   public:
    GenAssignment() = default;
    explicit GenAssignment(std::string label) : label_(std::move(label)) {}

    std::string const& label() const noexcept {
      return label_;
    }

    void set(GenSym const& g, Perm const& p) {
      map_[g] = p;
    }

    bool contains(GenSym const& g) const {
      return map_.count(g) != 0;
    }

    Perm const& at(GenSym const& g) const {
      auto it = map_.find(g);
      if (it == map_.end()) {
        throw MissingAssignmentError("no image assigned to generator '" + g.name()
                                     + "'");
      }
      return it->second;
    }

    std::map<GenSym, Perm> const& mapping() const noexcept {
      return map_;
    }

    std::size_t size() const noexcept {
      return map_.size();
    }

    friend bool operator==(GenAssignment const& x, GenAssignment const& y) {
      return x.map_ == y.map_;
    }

   private:
    std::string            label_;
    std::map<GenSym, Perm> map_;
  };

  // Left-to-right product of the images, inverted where the exponent is -1.
  inline Perm eval_word(GenAssignment const& a, Word const& w) {
    Perm r;
    for (auto const& s : w.syllables()) {
      Perm const& x = a.at(s.gen);
      r             = r * (s.exp > 0 ? x : x.inverse());
    }
    return r;
  }

  // One "name = cycle-notation" per line; '#' starts a comment.
  inline GenAssignment parse_assignment(std::string_view text,
                                        std::string      label = {}) {
    GenAssignment a(std::move(label));
    std::size_t   lineno = 0, pos = 0;
    while (pos <= text.size()) {
      std::size_t      nl   = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++lineno;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      if (detail::trim(line).empty()) {
        continue;
      }
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected 'name = cycles'", lineno, 1);
      }
      std::string name = detail::trim(line.substr(0, eq));
      GenSym      g;
      Perm        p;
      try {
        g = GenSym::parse(name);
      } catch (ParseError const& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      try {
        p = parse_cycles(line.substr(eq + 1));
      } catch (ParseError const& e) {
        throw ParseError(e.what(), lineno, eq + 2);
      }
      if (a.contains(g)) {
        throw ParseError("generator '" + name + "' assigned twice", lineno, 1);
      }
      a.set(g, p);
    }
    return a;
  }

  inline std::string print_assignment(GenAssignment const& a) {
    std::string out;
    for (auto const& [g, p] : a.mapping()) {
      out += g.name() + " = " + p.to_string() + "\n";
    }
    return out;
  }

}  // namespace knotcover
