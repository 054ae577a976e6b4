#pragma once

// Relator verification of generator assignments, the periodic table
// assignment onto A5 for the knot spaces K_j, reproduction of the
// incompatibility in Sternfeld's table, and exhaustive search for
// surjections onto A5.

#include <array>    // for array
#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "assignment.hpp"
#include "error.hpp"
#include "fpgroup.hpp"
#include "perm.hpp"
#include "presentations.hpp"

namespace knotcover {

  struct RelatorViolation {
    std::size_t index;  // 0-based position in the presentation
    std::string name;
    Word        relator;
    Perm        value;
  };

  struct CheckReport {
    std::vector<RelatorViolation> violated;
    std::size_t                   image_order = 0;
    bool                          surjective_onto_A5 = false;

    bool ok() const noexcept {
      return violated.empty();
    }
  };

  // Images of p's generators under a, in generator order.
  inline std::vector<Perm> generator_images(Presentation const& p,
                                            GenAssignment const& a) {
    std::vector<Perm> out;
    out.reserve(p.generators().size());
    for (auto const& g : p.generators()) {
      out.push_back(a.at(g));
    }
    return out;
  }

  inline PermGroup image_group(Presentation const& p,
                               GenAssignment const& a,
                               std::size_t          cap = default_closure_cap) {
    return closure(generator_images(p, a), cap);
  }

  inline CheckReport check_relators(Presentation const&  p,
                                    GenAssignment const& a,
                                    std::size_t          cap = default_closure_cap) {
    CheckReport r;
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      Perm v = eval_word(a, p.relators()[i]);
      if (!v.is_identity()) {
        r.violated.push_back(RelatorViolation{i, p.relator_name(i), p.relators()[i], v});
      }
    }
    auto images   = generator_images(p, a);
    r.image_order = closure(images, cap).order();
    bool on_five  = true;
    for (auto const& x : images) {
      on_five = on_five && x.is_even() && x.degree() <= 5;
    }
    r.surjective_onto_A5 = on_five && r.image_order == 60;
    return r;
  }

  namespace detail {
    // Five tables, rows a..i. The first is used at the last stage l = j;
    // for l < j, (j - l) mod 4 = 1, 2, 3, 0 selects the second to fifth.
    inline constexpr std::array<std::array<char const*, 9>, 5> phi_table_data{{
        {"(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)",
         "(1,2)(3,4)", "(1,2)(3,4)", "()", "()"},
        {"(1,2,3)", "(1,2,3)", "(1,2,3)", "(1,2,3)", "(2,4,3)", "(1,3,4)",
         "(1,4,2)", "(1,2)(3,4)", "(1,3)(2,4)"},
        {"(1,3)(4,5)", "(1,3)(4,5)", "(1,3)(4,5)", "(1,3)(4,5)", "(1,2)(4,5)",
         "(1,3)(4,5)", "(2,3)(4,5)", "(1,2,3)", "(1,3,2)"},
        {"(3,4,5)", "(3,4,5)", "(3,4,5)", "(3,4,5)", "(1,3,5)", "(1,4,3)",
         "(1,5,4)", "(1,3)(4,5)", "(1,5)(3,4)"},
        {"(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(4,5)",
         "(1,2)(3,4)", "(1,2)(3,5)", "(3,4,5)", "(3,5,4)"},
    }};
  }  // namespace detail

  // 1-based table number used for stage l of j.
  inline unsigned phi_table_number(StageIndex stage) {
    unsigned d = stage.j() - stage.l();
    if (d == 0) {
      return 1;
    }
    constexpr std::array<unsigned, 4> by_residue{5, 2, 3, 4};
    return by_residue[d % 4];
  }

  // The table assignment on the generators of kjss_presentation(j).
  inline GenAssignment phi_tables(unsigned j) {
    if (j < 1) {
      throw DomainError("phi_tables requires j >= 1");
    }
    GenAssignment a("phi_" + std::to_string(j));
    for (unsigned l = 1; l <= j; ++l) {
      auto const& row = detail::phi_table_data[phi_table_number(StageIndex(l, j)) - 1];
      for (std::size_t k = 0; k < detail::link_stems.size(); ++k) {
        a.set(GenSym(std::string(1, detail::link_stems[k]), l), parse_cycles(row[k]));
      }
    }
    return a;
  }

  // The quotient map from K_j onto K_j**: a_l, b_l, c_l, d_l go to a_l and
  // every other generator to itself.
  inline Word psi(GenSym const& g) {
    if (g.stem.size() == 1 && g.stem[0] >= 'a' && g.stem[0] <= 'd') {
      return Word::generator(GenSym("a", g.subscript));
    }
    return Word::generator(g);
  }

  // Phi_j = phi_j o psi_j as an assignment on kj_presentation(j).
  inline GenAssignment phi_tables_on_kj(unsigned j) {
    GenAssignment phi = phi_tables(j);
    GenAssignment out("Phi_" + std::to_string(j));
    Presentation  kj = kj_presentation(j);
    for (auto const& g : kj.generators()) {
      out.set(g, eval_word(phi, psi(g)));
    }
    return out;
  }

  struct SternfeldErrorRepro {
    Perm got;       // image of o^-1 h f^-1 q
    Perm expected;  // image of a_l, required by the sewing relator
    Perm r_value;   // image of r_l, which got coincides with
    bool mismatch;
  };

  inline SternfeldErrorRepro sternfeld_error_repro() {
    SternfeldFragment f        = sternfeld_fragment();
    Perm              got      = eval_word(f.values, f.target);
    Perm              expected = f.values.at("a");
    return SternfeldErrorRepro{got, expected, f.values.at("r"), got != expected};
  }

  // A5 in breadth-first order from the generators (1,2,3) and (1,2,3,4,5).
  inline std::vector<Perm> a5_elements() {
    return closure(std::vector<Perm>{parse_cycles("(1,2,3)"),
                                     parse_cycles("(1,2,3,4,5)")})
        .elements();
  }

  inline constexpr std::size_t max_search_generators = 3;

  // All assignments of p's generators into A5 (tuples in lexicographic order
  // over a5_elements(), first generator slowest) that satisfy every relator
  // and generate all of A5, up to limit results.
  inline std::vector<GenAssignment> search_surjections(Presentation const& p,
                                                       std::size_t         limit) {
    if (limit < 1) {
      throw DomainError("search limit must be at least 1");
    }
    std::size_t n = p.generators().size();
    if (n > max_search_generators) {
      throw CapacityError("surjection search supports at most "
                          + std::to_string(max_search_generators)
                          + " generators, presentation has " + std::to_string(n));
    }
    std::vector<GenAssignment> found;
    if (n == 0) {
      return found;
    }
    auto const               elts = a5_elements();
    auto const               rels = p.encoded_relators();
    std::vector<std::size_t> idx(n, 0);
    std::vector<Perm>        img(2 * n);
    while (true) {
      for (std::size_t g = 0; g < n; ++g) {
        img[2 * g]     = elts[idx[g]];
        img[2 * g + 1] = elts[idx[g]].inverse();
      }
      bool ok = true;
      for (auto const& r : rels) {
        Perm v;
        for (auto x : r) {
          v = v * img[x];
        }
        if (!v.is_identity()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<Perm> gens;
        for (std::size_t g = 0; g < n; ++g) {
          gens.push_back(img[2 * g]);
        }
        if (closure(gens).order() == 60) {
          GenAssignment a("surjection " + std::to_string(found.size() + 1));
          for (std::size_t g = 0; g < n; ++g) {
            a.set(p.generators()[g], gens[g]);
          }
          found.push_back(std::move(a));
          if (found.size() == limit) {
            return found;
          }
        }
      }
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == elts.size()) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        return found;
      }
    }
  }

}  // namespace knotcover
