#pragma once

// Builders for the concrete presentations: the trefoil group, the link block
// of one stage, the knot-space groups K_j and their quotients with
// a_l = b_l = c_l = d_l, and the quoted fragment of Sternfeld's homomorphism
// data.

#include <array>    // for array
#include <cstddef>  // for size_t
#include <string>   // for string
#include <string_view>
#include <utility>  // for pair
#include <vector>   // for vector

#include "assignment.hpp"
#include "error.hpp"
#include "fpgroup.hpp"
#include "perm.hpp"

namespace knotcover {

  // Stage l of a j-stage construction, 1 <= l <= j.
  class StageIndex {
   public:
    StageIndex(unsigned l, unsigned j) : l_(l), j_(j) {
      if (l < 1 || l > j) {
        throw DomainError("stage index requires 1 <= l <= j, got l = "
                          + std::to_string(l) + ", j = " + std::to_string(j));
      }
    }
    // A stage considered on its own.
    explicit StageIndex(unsigned l) : StageIndex(l, l) {}

    unsigned l() const noexcept {
      return l_;
    }
    unsigned j() const noexcept {
      return j_;
    }

   private:
    unsigned l_;
    unsigned j_;
  };

  namespace detail {
    // "c^-1 a c" with every generator given subscript l.
    inline Word stage_word(std::string_view text, unsigned l) {
      Word w = parse_word(text);
      std::vector<Syllable> raw;
      for (auto s : w.syllables()) {
        s.gen.subscript = l;
        raw.push_back(s);
      }
      return Word(raw);
    }

    inline std::string stage_name(char const* base, unsigned l, unsigned k) {
      return std::string(base) + "_{" + std::to_string(l) + "," + std::to_string(k)
             + "}";
    }

    // The Wirtinger relators x = w of the link block, in printed order.
    inline constexpr std::array<std::pair<char const*, char const*>, 9>
        link_relators{{{"b", "c^-1 a c"},
                       {"c", "a^-1 b a"},
                       {"d", "b^-1 c b"},
                       {"e", "g d g^-1"},
                       {"f", "h e h^-1"},
                       {"g", "e f e^-1"},
                       {"a", "h^-1 g h"},
                       {"h", "g^-1 i g"},
                       {"i", "f h f^-1"}}};

    inline constexpr std::string_view link_stems = "abcdefghi";
  }  // namespace detail

  inline Presentation trefoil_presentation() {
    Presentation p("trefoil", {GenSym("a"), GenSym("b")});
    p.add_relator(parse_word("b^-1 a^-1 b^-1 a b a"), "trefoil");
    return p;
  }

  struct LinkBlock {
    std::vector<GenSym>      generators;
    std::vector<Word>        relators;  // R_{l,1} .. R_{l,9}
    std::vector<std::string> names;
  };

  inline LinkBlock link_block(StageIndex stage) {
    unsigned  l = stage.l();
    LinkBlock b;
    for (char c : detail::link_stems) {
      b.generators.emplace_back(std::string(1, c), l);
    }
    for (std::size_t k = 0; k < detail::link_relators.size(); ++k) {
      auto [lhs, rhs] = detail::link_relators[k];
      b.relators.push_back(detail::stage_word(lhs, l)
                           * detail::stage_word(rhs, l).inverse());
      b.names.push_back(detail::stage_name("R", l, static_cast<unsigned>(k + 1)));
    }
    return b;
  }

  // Words for the boundary curves alpha, beta, gamma, delta of stage l.
  struct BoundaryWords {
    Word alpha;
    Word beta;
    Word gamma;
    Word delta;
  };

  inline BoundaryWords boundary_words(StageIndex stage) {
    unsigned l = stage.l();
    return BoundaryWords{detail::stage_word("h", l),
                         detail::stage_word("f^-1 g", l),
                         detail::stage_word("a", l),
                         detail::stage_word("c a b g^-1 h^-1 e^-1 h", l)};
  }

  // Generators a_l..i_l for 1 <= l <= j; relators R_{l,k} for every stage,
  // the sewing relators S_{l,1}: alpha_{l-1} = delta_l and
  // S_{l,2}: beta_{l-1} = gamma_l for l >= 2, and h_j.
  inline Presentation kj_presentation(unsigned j) {
    if (j < 1) {
      throw DomainError("kj_presentation requires j >= 1");
    }
    std::vector<GenSym> gens;
    for (unsigned l = 1; l <= j; ++l) {
      for (char c : detail::link_stems) {
        gens.emplace_back(std::string(1, c), l);
      }
    }
    Presentation p("K_" + std::to_string(j), std::move(gens));
    for (unsigned l = 1; l <= j; ++l) {
      LinkBlock b = link_block(StageIndex(l, j));
      for (std::size_t k = 0; k < b.relators.size(); ++k) {
        p.add_relator(b.relators[k], b.names[k]);
      }
    }
    for (unsigned l = 2; l <= j; ++l) {
      BoundaryWords prev = boundary_words(StageIndex(l - 1, j));
      BoundaryWords cur  = boundary_words(StageIndex(l, j));
      p.add_equality(prev.alpha, cur.delta, detail::stage_name("S", l, 1));
      p.add_equality(prev.beta, cur.gamma, detail::stage_name("S", l, 2));
    }
    p.add_relator(detail::stage_word("h", j), "h_{" + std::to_string(j) + "}");
    return p;
  }

  // kj_presentation(j) plus a_l = b_l, b_l = c_l, c_l = d_l for every stage.
  inline Presentation kjss_presentation(unsigned j) {
    Presentation p = kj_presentation(j);
    p.set_label("K_" + std::to_string(j) + "**");
    for (unsigned l = 1; l <= j; ++l) {
      for (auto [x, y] : {std::pair{"a", "b"}, std::pair{"b", "c"}, std::pair{"c", "d"}}) {
        p.add_equality(detail::stage_word(x, l), detail::stage_word(y, l),
                       std::string(x) + "_{" + std::to_string(l) + "}=" + y + "_{"
                           + std::to_string(l) + "}");
      }
    }
    return p;
  }

  // Sternfeld's letters v, w, x, y, z are the points 1..5.
  struct SternfeldFragment {
    GenAssignment values;  // on o, h, f, q (stage l-1) and a, r (stage l)
    Word          target;  // o^-1 h f^-1 q
  };

  inline SternfeldFragment sternfeld_fragment() {
    GenAssignment a("Sternfeld fragment");
    a.set("o", parse_cycles("(1,4)(2,5)"));  // (vy)(wz)
    a.set("h", parse_cycles("(1,4)(3,5)"));  // (vy)(xz)
    a.set("f", parse_cycles("(2,3)(4,5)"));  // (wx)(yz)
    a.set("q", parse_cycles("(1,2)(4,5)"));  // (vw)(yz)
    a.set("r", parse_cycles("(1,2)(3,5)"));  // (vw)(xz)
    a.set("a", parse_cycles("(1,2)(3,4)"));  // (vw)(xy)
    return SternfeldFragment{std::move(a), parse_word("o^-1 h f^-1 q")};
  }

  namespace detail {
    inline constexpr std::string_view sternfeld_stems = "abcdefghijklmnopqrstu";

    inline constexpr std::array<std::array<char const*, 21>, 3> sternfeld_data{{
        {"(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(4,5)",
         "(1,2)(4,5)", "(1,2)(4,5)", "(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(4,5)",
         "(1,2)(3,4)", "(1,2)(4,5)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)",
         "(1,2)(3,4)", "(1,2)(3,5)", "()", "()", "()", "()"},
        {"(1,2)(4,5)", "(1,2)(4,5)", "(1,2)(4,5)", "(1,2)(4,5)", "(1,3)(4,5)",
         "(2,5)(3,4)", "(1,5)(2,4)", "(1,4)(3,5)", "(2,4)(3,5)", "(1,3)(2,5)",
         "(2,3)(4,5)", "(1,3)(4,5)", "(1,3)(4,5)", "(1,5)(2,4)", "(1,4)(2,3)",
         "(1,5)(2,3)", "(1,2)(3,4)", "(1,2)(3,5)", "(1,2)(4,5)", "(1,5)(2,3)",
         "(2,5)(3,4)"},
        {"(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(3,5)", "(1,2)(3,5)", "(1,4)(3,5)",
         "(2,5)(3,4)", "(1,5)(2,3)", "(1,3)(4,5)", "(2,3)(4,5)", "(1,4)(2,5)",
         "(2,4)(3,5)", "(1,4)(3,5)", "(1,4)(3,5)", "(1,5)(2,3)", "(1,3)(2,4)",
         "(1,5)(2,4)", "(1,2)(3,4)", "(1,2)(4,5)", "(1,2)(3,5)", "(1,5)(2,4)",
         "(2,5)(3,4)"},
    }};
  }  // namespace detail

  // The three corrected tables for Sternfeld's generators a..u, as data: the
  // first for l = i, the second for l = i - 1 - 2T, the third for
  // l = i - 2 - 2T.
  inline std::array<GenAssignment, 3> sternfeld_tables() {
    std::array<char const*, 3>     labels{"l = i", "l = i-1-2T", "l = i-2-2T"};
    std::array<GenAssignment, 3>   out;
    for (std::size_t t = 0; t < 3; ++t) {
      out[t] = GenAssignment(labels[t]);
      for (std::size_t k = 0; k < detail::sternfeld_stems.size(); ++k) {
        out[t].set(GenSym(std::string(1, detail::sternfeld_stems[k])),
                   parse_cycles(detail::sternfeld_data[t][k]));
      }
    }
    return out;
  }

}  // namespace knotcover
