#pragma once

// Smith normal form of sparse integer matrices with exact arithmetic, and
// the abelian invariants it yields.

#include <algorithm>  // for sort, unique, lower_bound
#include <cstddef>    // for size_t
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace knotcover {

  using Integer = boost::multiprecision::cpp_int;

  // Row-wise sparse integer matrix; each row is sorted by column.
  class SparseIntMatrix {
   public:
    struct Entry {
      std::size_t col;
      Integer     val;
    };
    using row_type = std::vector<Entry>;

    SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    static SparseIntMatrix from_dense(std::vector<std::vector<Integer>> const& m) {
      std::size_t     cols = m.empty() ? 0 : m.front().size();
      SparseIntMatrix out(m.size(), cols);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != cols) {
          throw DomainError("ragged dense matrix");
        }
        for (std::size_t c = 0; c < cols; ++c) {
          out.add(r, c, m[r][c]);
        }
      }
      return out;
    }

    std::size_t rows() const noexcept {
      return data_.size();
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    // m[r][c] += v
    void add(std::size_t r, std::size_t c, Integer const& v) {
      if (r >= data_.size() || c >= cols_) {
        throw DomainError("matrix index out of range");
      }
      if (v == 0) {
        return;
      }
      auto& row = data_[r];
      auto  it  = std::lower_bound(row.begin(), row.end(), c,
                                 [](Entry const& e, std::size_t x) { return e.col < x; });
      if (it != row.end() && it->col == c) {
        it->val += v;
        if (it->val == 0) {
          row.erase(it);
        }
      } else {
        row.insert(it, Entry{c, v});
      }
    }

    Integer at(std::size_t r, std::size_t c) const {
      auto const& row = data_.at(r);
      auto        it  = std::lower_bound(row.begin(), row.end(), c,
                                 [](Entry const& e, std::size_t x) { return e.col < x; });
      return (it != row.end() && it->col == c) ? it->val : Integer(0);
    }

    std::vector<row_type> const& data() const noexcept {
      return data_;
    }
    std::vector<row_type>& data() noexcept {
      return data_;
    }

    std::size_t nonzeros() const noexcept {
      std::size_t n = 0;
      for (auto const& r : data_) {
        n += r.size();
      }
      return n;
    }

   private:
    std::size_t           cols_;
    std::vector<row_type> data_;
  };

  struct SmithForm {
    // Nonzero invariant factors d1 | d2 | ... | d_rank, units included.
    std::vector<Integer> factors;
    std::size_t          rank = 0;
  };

  namespace detail {

    inline Integer abs(Integer const& x) {
      return x < 0 ? Integer(-x) : x;
    }

    // target -= q * source, both sorted; fill-in columns are reported.
    inline void axpy(SparseIntMatrix::row_type&       target,
                     SparseIntMatrix::row_type const& source,
                     Integer const&                   q,
                     std::vector<std::size_t>&        new_cols) {
      SparseIntMatrix::row_type out;
      out.reserve(target.size() + source.size());
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].col < source[j].col)) {
          out.push_back(std::move(target[i++]));
        } else if (i == target.size() || source[j].col < target[i].col) {
          out.push_back({source[j].col, Integer(-q * source[j].val)});
          new_cols.push_back(source[j].col);
          ++j;
        } else {
          Integer v = target[i].val - q * source[j].val;
          if (v != 0) {
            out.push_back({target[i].col, std::move(v)});
          }
          ++i;
          ++j;
        }
      }
      target = std::move(out);
    }

    inline SparseIntMatrix::Entry* find_entry(SparseIntMatrix::row_type& row,
                                              std::size_t                c) {
      auto it = std::lower_bound(
          row.begin(), row.end(), c,
          [](SparseIntMatrix::Entry const& e, std::size_t x) { return e.col < x; });
      return (it != row.end() && it->col == c) ? &*it : nullptr;
    }

    // Turns a list of nonzero diagonal entries into invariant factors.
    inline std::vector<Integer> invariant_factors(std::vector<Integer> diag) {
      std::size_t          ones = 0;
      std::vector<Integer> rest;
      for (auto& d : diag) {
        d = abs(d);
        if (d == 1) {
          ++ones;
        } else {
          rest.push_back(std::move(d));
        }
      }
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (rest[j] % rest[i] == 0) {
            continue;
          }
          Integer g = boost::multiprecision::gcd(rest[i], rest[j]);
          Integer l = rest[i] / g * rest[j];
          rest[i]   = std::move(g);
          rest[j]   = std::move(l);
        }
      }
      std::vector<Integer> out(ones, Integer(1));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }

  }  // namespace detail

  // Pivot on the entry of least absolute value (ties go to the first entry in
  // row-major order), clear its column with row operations and its row with
  // column operations, and repeat; a pivot whose row and column are clear is
  // moved to the diagonal. The diagonal is then put into divisibility order.
  inline SmithForm smith_normal_form(SparseIntMatrix m) {
    auto&                                 rows = m.data();
    std::size_t                           nrows = rows.size();
    std::vector<std::vector<std::size_t>> col_rows(m.cols());
    for (std::size_t r = 0; r < nrows; ++r) {
      for (auto const& e : rows[r]) {
        col_rows[e.col].push_back(r);
      }
    }
    std::vector<Integer>     diag;
    std::vector<std::size_t> live;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (!rows[r].empty()) {
        live.push_back(r);
      }
    }
    std::vector<std::size_t> fill;

    while (true) {
      // pivot search
      std::size_t pr = nrows, pc = 0;
      Integer     best;
      bool        unit = false;
      std::size_t write = 0;
      for (std::size_t k = 0; k < live.size(); ++k) {
        std::size_t r = live[k];
        if (rows[r].empty()) {
          continue;
        }
        live[write++] = r;
        if (unit) {
          continue;
        }
        for (auto const& e : rows[r]) {
          Integer a = detail::abs(e.val);
          if (pr == nrows || a < best) {
            best = a;
            pr   = r;
            pc   = e.col;
            if (best == 1) {
              unit = true;
              break;
            }
          }
        }
      }
      live.resize(write);
      if (pr == nrows) {
        break;
      }
      Integer const pivot = detail::find_entry(rows[pr], pc)->val;

      // clear column pc below and above the pivot
      auto& users = col_rows[pc];
      std::sort(users.begin(), users.end());
      users.erase(std::unique(users.begin(), users.end()), users.end());
      bool                     column_clear = true;
      std::vector<std::size_t> still;
      for (std::size_t r : users) {
        if (r == pr) {
          continue;
        }
        auto* e = detail::find_entry(rows[r], pc);
        if (e == nullptr) {
          continue;
        }
        Integer q = e->val / pivot;
        if (q != 0) {
          fill.clear();
          detail::axpy(rows[r], rows[pr], q, fill);
          for (auto c : fill) {
            col_rows[c].push_back(r);
          }
        }
        if (detail::find_entry(rows[r], pc) != nullptr) {
          column_clear = false;
          still.push_back(r);
        }
      }
      still.push_back(pr);
      users = std::move(still);
      if (!column_clear) {
        continue;
      }

      // column operations only touch the pivot row now
      auto& prow      = rows[pr];
      bool  row_clear = true;
      SparseIntMatrix::row_type kept;
      for (auto& e : prow) {
        if (e.col == pc) {
          kept.push_back(std::move(e));
          continue;
        }
        Integer rem = e.val % pivot;
        if (rem != 0) {
          row_clear = false;
          kept.push_back({e.col, std::move(rem)});
        }
      }
      prow = std::move(kept);
      if (row_clear) {
        diag.push_back(pivot);
        prow.clear();
        users.clear();
      }
    }
    SmithForm out;
    out.rank    = diag.size();
    out.factors = detail::invariant_factors(std::move(diag));
    return out;
  }

  inline SmithForm smith_normal_form(std::vector<std::vector<Integer>> const& m) {
    return smith_normal_form(SparseIntMatrix::from_dense(m));
  }

  // A finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
  // d1 | d2 | ... | dk and every di >= 2.
  struct AbelianInvariants {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;

    // Least number of generators of the group.
    std::size_t minimal_generators() const noexcept {
      return free_rank + torsion.size();
    }

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }

    // "Z^2 + Z/2 + Z/6", "0" for the trivial group.
    std::string to_string() const {
      std::string out;
      if (free_rank == 1) {
        out = "Z";
      } else if (free_rank > 1) {
        out = "Z^" + std::to_string(free_rank);
      }
      for (auto const& d : torsion) {
        out += (out.empty() ? "" : " + ") + std::string("Z/") + d.str();
      }
      return out.empty() ? "0" : out;
    }

    friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
  };

  // Abelian invariants of Z^cols / (row space of m).
  inline AbelianInvariants cokernel_invariants(SparseIntMatrix m) {
    std::size_t       cols = m.cols();
    SmithForm         snf  = smith_normal_form(std::move(m));
    AbelianInvariants out;
    out.free_rank = cols - snf.rank;
    for (auto& d : snf.factors) {
      if (d != 1) {
        out.torsion.push_back(std::move(d));
      }
    }
    return out;
  }

}  // namespace knotcover
