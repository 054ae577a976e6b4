#include <algorithm>  // for next_permutation
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "knotcover/homcheck.hpp"

namespace knotcover {

  namespace {
    // A5 as the even permutations of {1..5}, listed by next_permutation and
    // an inversion count; shares nothing with closure().
    std::vector<Perm> a5_by_inversions() {
      std::vector<unsigned> img{1, 2, 3, 4, 5};
      std::vector<Perm>     out;
      do {
        unsigned inv = 0;
        for (unsigned i = 0; i < 5; ++i) {
          for (unsigned j = i + 1; j < 5; ++j) {
            inv += img[i] > img[j];
          }
        }
        if (inv % 2 == 0) {
          out.push_back(Perm::from_images(std::span<unsigned const>(img)));
        }
      } while (std::next_permutation(img.begin(), img.end()));
      return out;
    }

    // Size of the subgroup generated by x and y, by naive saturation under
    // products of known elements.
    std::size_t generated_order(Perm const& x, Perm const& y) {
      std::vector<Perm> elts{Perm::identity(), x, y};
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < elts.size(); ++i) {
          for (std::size_t j = 0; j < elts.size(); ++j) {
            Perm z = elts[i] * elts[j];
            if (std::find(elts.begin(), elts.end(), z) == elts.end()) {
              elts.push_back(z);
              grew = true;
            }
          }
        }
      }
      return elts.size();
    }
  }  // namespace

  TEST_CASE("Homcheck 001: table numbering", "[homcheck][quick]") {
    REQUIRE(phi_table_number(StageIndex(5, 5)) == 1);
    REQUIRE(phi_table_number(StageIndex(4, 5)) == 2);
    REQUIRE(phi_table_number(StageIndex(3, 5)) == 3);
    REQUIRE(phi_table_number(StageIndex(2, 5)) == 4);
    REQUIRE(phi_table_number(StageIndex(1, 5)) == 5);
    REQUIRE(phi_table_number(StageIndex(1, 6)) == 2);
    REQUIRE(phi_tables(3).size() == 27);
    REQUIRE(phi_tables(1).at(GenSym("h", 1)).is_identity());
    REQUIRE(phi_tables(2).at(GenSym("e", 1)) == parse_cycles("(2,4,3)"));
    REQUIRE_THROWS_AS(phi_tables(0), DomainError);
  }

  TEST_CASE("Homcheck 002: tables respect every relator", "[homcheck][quick]") {
    for (unsigned j = 1; j <= 12; ++j) {
      CAPTURE(j);
      auto quotient = check_relators(kjss_presentation(j), phi_tables(j));
      REQUIRE(quotient.ok());
      auto full = check_relators(kj_presentation(j), phi_tables_on_kj(j));
      REQUIRE(full.ok());
      REQUIRE(full.image_order == quotient.image_order);
    }
  }

  TEST_CASE("Homcheck 003: image orders", "[homcheck][quick]") {
    std::vector<std::size_t> orders;
    for (unsigned j = 1; j <= 12; ++j) {
      auto r = check_relators(kjss_presentation(j), phi_tables(j));
      orders.push_back(r.image_order);
      REQUIRE(r.surjective_onto_A5 == (r.image_order == 60));
    }
    REQUIRE(orders
            == std::vector<std::size_t>{2, 12, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60});
  }

  TEST_CASE("Homcheck 004: psi", "[homcheck][quick]") {
    REQUIRE(psi(GenSym("c", 4)) == Word::generator(GenSym("a", 4)));
    REQUIRE(psi(GenSym("e", 4)) == Word::generator(GenSym("e", 4)));
    auto phi = phi_tables_on_kj(3);
    REQUIRE(phi.at(GenSym("d", 2)) == phi.at(GenSym("a", 2)));
  }

  TEST_CASE("Homcheck 005: a corrupted table is caught", "[homcheck][quick]") {
    GenAssignment bad = phi_tables(1);
    bad.set(GenSym("a", 1), parse_cycles("(1,2,3)"));
    auto r = check_relators(kjss_presentation(1), bad);
    REQUIRE(!r.ok());
    REQUIRE(r.violated.front().index == 0);
    REQUIRE(r.violated.front().name == "R_{1,1}");
    REQUIRE(!r.violated.front().value.is_identity());
  }

  TEST_CASE("Homcheck 006: Sternfeld fragment", "[homcheck][quick]") {
    auto s = sternfeld_error_repro();
    REQUIRE(s.got == parse_cycles("(1,2)(3,5)"));
    REQUIRE(s.expected == parse_cycles("(1,2)(3,4)"));
    REQUIRE(s.got == s.r_value);
    REQUIRE(s.mismatch);
  }

  TEST_CASE("Homcheck 007: relator order does not matter", "[homcheck][quick]") {
    auto         p = kjss_presentation(3);
    Presentation q(p.label(), p.generators());
    for (std::size_t i = p.relators().size(); i-- > 0;) {
      q.add_relator(p.relators()[i], p.relator_name(i));
    }
    GenAssignment bad = phi_tables(3);
    bad.set(GenSym("f", 2), parse_cycles("(1,2)"));
    auto x = check_relators(p, bad);
    auto y = check_relators(q, bad);
    REQUIRE(!x.ok());
    REQUIRE(x.violated.size() == y.violated.size());
    REQUIRE(x.image_order == y.image_order);
  }

  TEST_CASE("Homcheck 008: trefoil onto A5", "[homcheck][quick]") {
    auto          t = trefoil_presentation();
    GenAssignment a;
    a.set("a", parse_cycles("(1,3,5,4,2)"));
    a.set("b", parse_cycles("(1,2,3,4,5)"));
    auto r = check_relators(t, a);
    REQUIRE(r.ok());
    REQUIRE(r.image_order == 60);
    REQUIRE(r.surjective_onto_A5);

    auto found = search_surjections(t, 1000);
    REQUIRE(std::find(found.begin(), found.end(), a) != found.end());

    // brute force over all 3600 pairs
    auto        a5    = a5_by_inversions();
    std::size_t count = 0;
    REQUIRE(a5.size() == 60);
    for (auto const& x : a5) {
      for (auto const& y : a5) {
        // b^-1 a^-1 b^-1 a b a = 1, i.e. a b a = b a b
        if (x * y * x == y * x * y && generated_order(x, y) == 60) {
          ++count;
        }
      }
    }
    REQUIRE(count == 120);
    REQUIRE(found.size() == count);
  }

  TEST_CASE("Homcheck 009: search limits", "[homcheck][quick]") {
    auto t = trefoil_presentation();
    REQUIRE(search_surjections(t, 3).size() == 3);
    REQUIRE_THROWS_AS(search_surjections(t, 0), DomainError);
    REQUIRE_THROWS_AS(search_surjections(kj_presentation(1), 1), CapacityError);
    // Z/2 has no surjection onto A5
    auto z2 = parse_presentation("gens: x\nrel: x x\n");
    REQUIRE(search_surjections(z2, 5).empty());
  }

  TEST_CASE("Homcheck 010: missing generator", "[homcheck][quick]") {
    GenAssignment a;
    a.set("a", parse_cycles("(1,2,3)"));
    REQUIRE_THROWS_AS(check_relators(trefoil_presentation(), a), MissingAssignmentError);
  }

}  // namespace knotcover
