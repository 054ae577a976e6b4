#pragma once

// Coset tables of finite-index subgroups: kernels of finite permutation
// images, cyclic covers from exponent sums, and Todd-Coxeter enumeration.
//
// Cosets are numbered from 0 internally and coset 0 is the subgroup itself.
// Serialized forms are 1-based.

#include <algorithm>  // for all_of, fill
#include <cstddef>    // for size_t, ptrdiff_t
#include <cstdint>    // for uint32_t
#include <deque>      // for deque
#include <limits>     // for numeric_limits
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "assignment.hpp"
#include "error.hpp"
#include "fpgroup.hpp"
#include "homcheck.hpp"
#include "perm.hpp"

namespace knotcover {

  enum class CosetOrigin { kernel, cyclic, subgroup };

  inline char const* to_string(CosetOrigin o) {
    switch (o) {
      case CosetOrigin::kernel:
        return "kernel";
      case CosetOrigin::cyclic:
        return "cyclic";
      case CosetOrigin::subgroup:
        return "subgroup";
    }
    return "?";
  }

  using coset_type = std::uint32_t;

  // The right action of each generator on the cosets of a subgroup.
  class CosetTable {
   public:
    CosetTable(std::vector<std::vector<coset_type>> action, CosetOrigin origin)
        : action_(std::move(action)), origin_(origin) {
      index_ = action_.empty() ? 1 : action_.front().size();
      for (auto const& row : action_) {
        if (row.size() != index_) {
          throw IntegrityError("generator actions have different lengths");
        }
      }
    }

    std::size_t index() const noexcept {
      return index_;
    }
    std::size_t generator_count() const noexcept {
      return action_.size();
    }
    CosetOrigin origin() const noexcept {
      return origin_;
    }

    // Image of coset c under generator g.
    coset_type operator()(coset_type c, std::size_t g) const {
      return action_[g][c];
    }

    std::vector<std::vector<coset_type>> const& action() const noexcept {
      return action_;
    }

    // Inverse actions, computed on demand.
    std::vector<std::vector<coset_type>> inverse_action() const {
      std::vector<std::vector<coset_type>> inv(action_.size(),
                                               std::vector<coset_type>(index_));
      for (std::size_t g = 0; g < action_.size(); ++g) {
        for (std::size_t c = 0; c < index_; ++c) {
          inv[g][action_[g][c]] = static_cast<coset_type>(c);
        }
      }
      return inv;
    }

    friend bool operator==(CosetTable const& x, CosetTable const& y) {
      return x.action_ == y.action_;
    }

   private:
    std::vector<std::vector<coset_type>> action_;
    std::size_t                          index_;
    CosetOrigin                          origin_;
  };

  // Follows an encoded word (see Presentation::encode) from coset c.
  inline coset_type trace(CosetTable const&                           t,
                          std::vector<std::vector<coset_type>> const& inv,
                          coset_type                                  c,
                          std::vector<std::size_t> const&             word) {
    for (auto x : word) {
      c = (x % 2 == 0) ? t.action()[x / 2][c] : inv[x / 2][c];
    }
    return c;
  }

  // Throws IntegrityError unless every generator acts as a permutation, every
  // relator of p closes up from every coset, and the action is transitive.
  inline void verify_table(Presentation const& p, CosetTable const& t) {
    if (t.generator_count() != p.generators().size()) {
      throw IntegrityError("table has " + std::to_string(t.generator_count())
                           + " generator columns, presentation has "
                           + std::to_string(p.generators().size()));
    }
    std::size_t n = t.index();
    for (auto const& row : t.action()) {
      std::vector<bool> hit(n, false);
      for (auto y : row) {
        if (y >= n || hit[y]) {
          throw IntegrityError("a generator does not act as a permutation");
        }
        hit[y] = true;
      }
    }
    auto inv  = t.inverse_action();
    auto rels = p.encoded_relators();
    for (std::size_t r = 0; r < rels.size(); ++r) {
      for (coset_type c = 0; c < n; ++c) {
        if (trace(t, inv, c, rels[r]) != c) {
          throw IntegrityError("relator " + p.relator_name(r)
                               + " does not close at coset " + std::to_string(c + 1));
        }
      }
    }
    std::vector<bool>       seen(n, false);
    std::vector<coset_type> queue{0};
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const& row : t.action()) {
        if (!seen[row[queue[k]]]) {
          seen[row[queue[k]]] = true;
          queue.push_back(row[queue[k]]);
        }
      }
    }
    if (queue.size() != n) {
      throw IntegrityError("coset action is not transitive");
    }
  }

  // Cosets of the kernel are the elements of the image group in closure
  // order; generator g sends x to x * a(g).
  inline CosetTable kernel_coset_table(Presentation const&  p,
                                       GenAssignment const& a,
                                       std::size_t          cap = default_closure_cap) {
    CheckReport report = check_relators(p, a, cap);
    if (!report.ok()) {
      throw InvalidHomomorphismError("assignment '" + a.label() + "' violates relator "
                                     + report.violated.front().name);
    }
    auto      images = generator_images(p, a);
    PermGroup image  = closure(images, cap);
    std::vector<std::vector<coset_type>> action(images.size());
    for (std::size_t g = 0; g < images.size(); ++g) {
      action[g].reserve(image.order());
      for (auto const& x : image.elements()) {
        action[g].push_back(static_cast<coset_type>(*image.index_of(x * images[g])));
      }
    }
    return CosetTable(std::move(action), CosetOrigin::kernel);
  }

  // The k-fold cyclic cover: the kernel of the map to Z/k sending every
  // generator to 1. Every relator must have total exponent 0.
  inline CosetTable cyclic_cover_table(Presentation const& p, std::size_t k) {
    if (k < 1) {
      throw DomainError("cyclic cover requires k >= 1");
    }
    for (std::size_t r = 0; r < p.relators().size(); ++r) {
      if (total_exponent(p.relators()[r]) != 0) {
        throw InconsistencyError("relator " + p.relator_name(r)
                                 + " has nonzero total exponent "
                                 + std::to_string(total_exponent(p.relators()[r])));
      }
    }
    std::vector<coset_type> shift(k);
    for (std::size_t c = 0; c < k; ++c) {
      shift[c] = static_cast<coset_type>((c + 1) % k);
    }
    CosetTable t(std::vector<std::vector<coset_type>>(p.generators().size(), shift),
                 CosetOrigin::cyclic);
    verify_table(p, t);
    return t;
  }

  inline constexpr std::size_t default_coset_cap = 100'000;

  namespace detail {

    // HLT coset enumeration: relators are scanned and filled from each live
    // coset in order, undefined entries get the next free coset number, and
    // coincidences are merged with a union-find forest.
    class ToddCoxeter {
      static constexpr coset_type undef = std::numeric_limits<coset_type>::max();

     public:
      ToddCoxeter(std::size_t ngens, std::size_t cap) : ngens_(ngens), cap_(cap) {
        new_coset();
      }

      void run(std::vector<std::vector<std::size_t>> const& rels,
               std::vector<std::vector<std::size_t>> const& subgroup) {
        for (auto const& w : subgroup) {
          scan_and_fill(0, w);
        }
        // Later coincidences can reopen rows that were already complete, so
        // sweep until a pass changes nothing.
        do {
          changes_ = 0;
          for (coset_type c = 0; c < parent_.size(); ++c) {
            if (!alive(c)) {
              continue;
            }
            for (auto const& r : rels) {
              if (!alive(c)) {
                break;
              }
              scan_and_fill(c, r);
            }
            for (std::size_t x = 0; x < 2 * ngens_ && alive(c); ++x) {
              if (entry(c, x) == undef) {
                define(c, x);
              }
            }
          }
        } while (changes_ != 0);
      }

      // Live cosets renumbered in breadth-first order from the subgroup.
      std::vector<std::vector<coset_type>> standardized_action() const {
        std::size_t             total = parent_.size();
        std::vector<coset_type> number(total, undef);
        std::vector<coset_type> order{0};
        number[0] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
          for (std::size_t g = 0; g < ngens_; ++g) {
            coset_type y = entry(order[k], 2 * g);
            if (number[y] == undef) {
              number[y] = static_cast<coset_type>(order.size());
              order.push_back(y);
            }
          }
        }
        std::vector<std::vector<coset_type>> action(ngens_,
                                                    std::vector<coset_type>(order.size()));
        for (std::size_t k = 0; k < order.size(); ++k) {
          for (std::size_t g = 0; g < ngens_; ++g) {
            action[g][k] = number[entry(order[k], 2 * g)];
          }
        }
        return action;
      }

     private:
      coset_type& entry(coset_type c, std::size_t x) {
        return table_[c * 2 * ngens_ + x];
      }
      coset_type entry(coset_type c, std::size_t x) const {
        return table_[c * 2 * ngens_ + x];
      }
      bool alive(coset_type c) const {
        return parent_[c] == c;
      }
      static std::size_t inv(std::size_t x) {
        return x ^ 1u;
      }

      coset_type new_coset() {
        if (live_ == cap_) {
          throw CapacityError("coset enumeration exceeded cap of " + std::to_string(cap_)
                              + " cosets");
        }
        if (parent_.size() >= std::numeric_limits<coset_type>::max() - 1) {
          throw CapacityError("coset enumeration exhausted coset numbering");
        }
        auto c = static_cast<coset_type>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + 2 * ngens_, undef);
        ++live_;
        return c;
      }

      void define(coset_type c, std::size_t x) {
        coset_type d = new_coset();
        entry(c, x)      = d;
        entry(d, inv(x)) = c;
        ++changes_;
      }

      void scan_and_fill(coset_type c, std::vector<std::size_t> const& w) {
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        coset_type     f = c, b = c;
        while (true) {
          while (i <= j && entry(f, w[i]) != undef) {
            f = entry(f, w[i]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && entry(b, inv(w[j])) != undef) {
            b = entry(b, inv(w[j]));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            entry(f, w[i])      = b;
            entry(b, inv(w[i])) = f;
            ++changes_;
            return;
          }
          define(f, w[i]);
        }
      }

      coset_type find(coset_type c) {
        coset_type root = c;
        while (parent_[root] != root) {
          root = parent_[root];
        }
        while (parent_[c] != root) {
          coset_type next = parent_[c];
          parent_[c]      = root;
          c               = next;
        }
        return root;
      }

      void merge(coset_type a, coset_type b, std::deque<coset_type>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent_[b] = a;
        --live_;
        ++changes_;
        queue.push_back(b);
      }

      void coincidence(coset_type a, coset_type b) {
        std::deque<coset_type> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
          coset_type e = queue.front();
          queue.pop_front();
          for (std::size_t x = 0; x < 2 * ngens_; ++x) {
            coset_type f = entry(e, x);
            if (f == undef) {
              continue;
            }
            entry(f, inv(x)) = undef;
            coset_type e1 = find(e), f1 = find(f);
            if (entry(e1, x) != undef) {
              merge(f1, entry(e1, x), queue);
            } else if (entry(f1, inv(x)) != undef) {
              merge(e1, entry(f1, inv(x)), queue);
            } else {
              entry(e1, x)      = f1;
              entry(f1, inv(x)) = e1;
            }
          }
        }
      }

      std::size_t             ngens_;
      std::size_t             cap_;
      std::size_t             live_    = 0;
      std::size_t             changes_ = 0;
      std::vector<coset_type> parent_;
      std::vector<coset_type> table_;
    };

  }  // namespace detail

  // Enumerates the cosets of the subgroup generated by subgroup_gens. Throws
  // CapacityError when more than cap cosets are live at once.
  inline CosetTable todd_coxeter(Presentation const&      p,
                                 std::vector<Word> const& subgroup_gens,
                                 std::size_t              cap = default_coset_cap) {
    if (cap < 1) {
      throw DomainError("coset cap must be at least 1");
    }
    std::vector<std::vector<std::size_t>> sub;
    for (auto const& w : subgroup_gens) {
      sub.push_back(p.encode(w));
    }
    if (p.generators().empty()) {
      return CosetTable({}, CosetOrigin::subgroup);
    }
    detail::ToddCoxeter tc(p.generators().size(), cap);
    tc.run(p.encoded_relators(), sub);
    CosetTable t(tc.standardized_action(), CosetOrigin::subgroup);
    verify_table(p, t);
    return t;
  }

  // Permutation of the cosets induced by a word.
  inline std::vector<coset_type> word_action(Presentation const& p,
                                             CosetTable const&   t,
                                             Word const&         w) {
    auto                    inv = t.inverse_action();
    auto                    e   = p.encode(w);
    std::vector<coset_type> out(t.index());
    for (coset_type c = 0; c < t.index(); ++c) {
      out[c] = trace(t, inv, c, e);
    }
    return out;
  }

  // True iff the subgroup generated by the given words acts transitively on
  // the cosets.
  inline bool orbit_transitive(Presentation const&      p,
                               CosetTable const&        t,
                               std::vector<Word> const& gens_subset) {
    std::vector<std::vector<coset_type>> perms;
    for (auto const& w : gens_subset) {
      perms.push_back(word_action(p, t, w));
    }
    std::vector<bool>       seen(t.index(), false);
    std::vector<coset_type> queue{0};
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const& perm : perms) {
        coset_type y = perm[queue[k]];
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return queue.size() == t.index();
  }

}  // namespace knotcover
