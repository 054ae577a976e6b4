#pragma once

// Presentations of finite-index subgroups by Reidemeister-Schreier
// rewriting, abelianization, quotients of cyclic covers of a knot group by
// their boundary subgroup, the Schreier rank bound, and the homology of the
// kernels of the table homomorphisms of K_j.

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <numeric>  // for gcd
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "cosets.hpp"
#include "error.hpp"
#include "fpgroup.hpp"
#include "homcheck.hpp"
#include "presentations.hpp"
#include "smith.hpp"

namespace knotcover {

  // Exponent-sum matrix (relators x generators) reduced over the integers.
  inline AbelianInvariants abelianize(Presentation const& p) {
    SparseIntMatrix m(p.relators().size(), p.generators().size());
    for (std::size_t r = 0; r < p.relators().size(); ++r) {
      for (auto const& s : p.relators()[r].syllables()) {
        m.add(r, p.generator_index(s.gen), s.exp);
      }
    }
    return cokernel_invariants(std::move(m));
  }

  class SubgroupPresentation {
   public:
    Presentation const& base() const noexcept {
      return base_;
    }
    CosetTable const& table() const noexcept {
      return table_;
    }
    // (coset, generator index) of each non-tree edge; Schreier generator k
    // (named s<k+1>) is schreier_gens()[k].
    std::vector<std::pair<coset_type, std::size_t>> const& schreier_gens() const noexcept {
      return sgens_;
    }
    // Over the Schreier generators; one relator per (base relator, coset).
    Presentation const& presentation() const noexcept {
      return pres_;
    }
    // Word in the base generators leading from coset 0 to coset c along the
    // spanning tree.
    Word const& representative(coset_type c) const {
      return reps_.at(c);
    }

    // Rewrites an encoded base word read from coset c; returns the word over
    // the Schreier generators and the coset it ends at.
    std::pair<Word, coset_type> rewrite(std::vector<std::size_t> const& word,
                                        coset_type                      c) const {
      std::vector<Syllable> raw;
      for (auto x : word) {
        std::size_t g = x / 2;
        if (x % 2 == 0) {
          if (auto id = edge_id_[c * ngens_ + g]; id != no_edge) {
            raw.push_back(Syllable{pres_.generators()[id], 1});
          }
          c = table_(c, g);
        } else {
          coset_type prev = inverse_[g][c];
          if (auto id = edge_id_[prev * ngens_ + g]; id != no_edge) {
            raw.push_back(Syllable{pres_.generators()[id], -1});
          }
          c = prev;
        }
      }
      return {Word(raw), c};
    }

    friend SubgroupPresentation reidemeister_schreier(Presentation const&,
                                                      CosetTable const&);

   private:
    static constexpr std::size_t no_edge = static_cast<std::size_t>(-1);

    SubgroupPresentation(Presentation base, CosetTable table)
        : base_(std::move(base)),
          table_(std::move(table)),
          ngens_(base_.generators().size()) {}

    Presentation                                    base_;
    CosetTable                                      table_;
    std::size_t                                     ngens_;
    std::vector<std::vector<coset_type>>            inverse_;
    std::vector<std::size_t>                        edge_id_;
    std::vector<std::pair<coset_type, std::size_t>> sgens_;
    std::vector<Word>                               reps_;
    Presentation                                    pres_;
  };

  // Spanning tree by breadth-first search from coset 0 using generators in
  // presentation order; every other edge (c, g) is a Schreier generator.
  inline SubgroupPresentation reidemeister_schreier(Presentation const& p,
                                                    CosetTable const&   t) {
    verify_table(p, t);
    SubgroupPresentation sp(p, t);
    std::size_t          n = t.index(), ng = p.generators().size();
    sp.inverse_ = t.inverse_action();

    std::vector<bool>       is_tree(n * ng, false);
    std::vector<bool>       seen(n, false);
    std::vector<coset_type> queue{0};
    sp.reps_.assign(n, Word());
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      coset_type x = queue[k];
      for (std::size_t g = 0; g < ng; ++g) {
        coset_type y = t(x, g);
        if (!seen[y]) {
          seen[y]             = true;
          is_tree[x * ng + g] = true;
          sp.reps_[y]         = sp.reps_[x] * Word::generator(p.generators()[g]);
          queue.push_back(y);
        }
      }
    }

    sp.edge_id_.assign(n * ng, SubgroupPresentation::no_edge);
    std::vector<GenSym> names;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < ng; ++g) {
        if (!is_tree[x * ng + g]) {
          sp.edge_id_[x * ng + g] = sp.sgens_.size();
          sp.sgens_.emplace_back(static_cast<coset_type>(x), g);
          names.emplace_back("s", static_cast<unsigned>(sp.sgens_.size()));
        }
      }
    }
    sp.pres_ = Presentation(p.label() + " subgroup of index " + std::to_string(n),
                            std::move(names));
    auto rels = p.encoded_relators();
    for (std::size_t r = 0; r < rels.size(); ++r) {
      for (coset_type c = 0; c < n; ++c) {
        auto [w, end] = sp.rewrite(rels[r], c);
        if (end != c) {
          throw IntegrityError("relator " + p.relator_name(r) + " does not close");
        }
        sp.pres_.add_relator(std::move(w),
                             p.relator_name(r) + "@" + std::to_string(c + 1));
      }
    }
    return sp;
  }

  // A longitude of the trefoil for the presentation <a, b | b^-1 a^-1 b^-1 a b a>
  // with meridian a: the product b a (b^-1 a b) of the over-arcs met along
  // the knot, corrected by a^-3 for writhe 3.
  inline Word trefoil_longitude() {
    return parse_word("b a b^-1 a b a^-1 a^-1 a^-1");
  }

  // pi_1 of the k-fold cyclic cover modulo the normal closure of its boundary
  // subgroup <meridian^k, longitude>: the subgroup presentation of the cover
  // with meridian^k and the longitude, read from every coset, added as
  // relators. The meridian is the first generator of p.
  inline Presentation boundary_quotient(Presentation const& p,
                                        std::size_t         k,
                                        Word const&         longitude) {
    if (total_exponent(longitude) != 0) {
      throw DomainError("longitude must have total exponent 0");
    }
    if (p.generators().empty()) {
      throw DomainError("presentation has no meridian generator");
    }
    SubgroupPresentation sp = reidemeister_schreier(p, cyclic_cover_table(p, k));
    Presentation         q  = sp.presentation();
    q.set_label(p.label() + " " + std::to_string(k) + "-fold cover mod boundary");
    auto mu_k = p.encode(Word::generator(p.generators().front()).pow(static_cast<unsigned>(k)));
    auto lam  = p.encode(longitude);
    for (coset_type c = 0; c < k; ++c) {
      q.add_relator(sp.rewrite(mu_k, c).first, "mu^k@" + std::to_string(c + 1));
      q.add_relator(sp.rewrite(lam, c).first, "lambda@" + std::to_string(c + 1));
    }
    return q;
  }

  // H_1 of the k-fold cyclic cover of p.
  inline AbelianInvariants cyclic_cover_homology(Presentation const& p, std::size_t k) {
    return abelianize(reidemeister_schreier(p, cyclic_cover_table(p, k)).presentation());
  }

  // If a subgroup of index i needs at least m generators, the group needs at
  // least (m - 1) / i + 1.
  struct RankBound {
    std::int64_t numerator;    // of the reduced fraction
    std::int64_t denominator;  // > 0
    std::int64_t ceiling;

    std::string to_string() const {
      return denominator == 1 ? std::to_string(numerator)
                              : std::to_string(numerator) + "/" + std::to_string(denominator);
    }
  };

  inline RankBound schreier_rank_bound(std::int64_t m, std::int64_t i) {
    if (i <= 0) {
      throw DomainError("index must be at least 1");
    }
    if (m < 0) {
      throw DomainError("rank lower bound must be non-negative");
    }
    std::int64_t num = m - 1 + i;
    std::int64_t g   = std::gcd(num < 0 ? -num : num, i);
    num /= g;
    std::int64_t den = i / g;
    std::int64_t ceil = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    return RankBound{num, den, ceil};
  }

  inline constexpr unsigned kernel_homology_max_j = 6;

  struct KernelHomology {
    unsigned          j;
    std::size_t       index;               // order of the image of Phi_j
    std::size_t       schreier_generators;
    std::size_t       relators;
    AbelianInvariants invariants;          // H_1(ker Phi_j)
    RankBound         rank_bound;          // for pi_1(K_j), from the bound above

    std::size_t minimal_generators() const noexcept {
      return invariants.minimal_generators();
    }
  };

  // H_1 of the kernel of the table homomorphism on K_j. The number of
  // generators of H_1 bounds the rank of the kernel from below, and the
  // Schreier bound turns that into a lower bound for the rank of pi_1(K_j).
  inline KernelHomology kernel_homology(unsigned j, bool force = false) {
    Presentation  p = kj_presentation(j);
    GenAssignment a = phi_tables_on_kj(j);
    if (j > kernel_homology_max_j && !force) {
      std::size_t index = image_group(p, a).order();
      std::size_t rows  = index * p.relators().size();
      std::size_t cols  = index * p.generators().size() - index + 1;
      throw CapacityError("kernel homology for j = " + std::to_string(j)
                          + " needs a " + std::to_string(rows) + " x "
                          + std::to_string(cols) + " matrix; the limit is j = "
                          + std::to_string(kernel_homology_max_j)
                          + " unless forced");
    }
    SubgroupPresentation sp = reidemeister_schreier(p, kernel_coset_table(p, a));
    KernelHomology       kh{j,
                            sp.table().index(),
                            sp.schreier_gens().size(),
                            sp.presentation().relators().size(),
                            abelianize(sp.presentation()),
                            {}};
    kh.rank_bound = schreier_rank_bound(static_cast<std::int64_t>(kh.minimal_generators()),
                                        static_cast<std::int64_t>(kh.index));
    return kh;
  }

}  // namespace knotcover
