#include <vector>  // for vector

#include "catch_amalgamated.hpp"

#include "knotcover/cosets.hpp"

namespace knotcover {

  namespace {
    Presentation triangle(unsigned p, unsigned q, unsigned r) {
      Presentation t("triangle", {"x", "y"});
      t.add_relator(parse_word("x").pow(p));
      t.add_relator(parse_word("y").pow(q));
      t.add_relator(parse_word("x y").pow(r));
      return t;
    }

    // Number of cosets c with c * w = c for every w; for a kernel table
    // these are the elements of the image fixed by right multiplication.
    std::size_t fixed_by_all(Presentation const& p, CosetTable const& t,
                             std::vector<Word> const& ws) {
      std::vector<std::vector<coset_type>> acts;
      for (auto const& w : ws) {
        acts.push_back(word_action(p, t, w));
      }
      std::size_t n = 0;
      for (coset_type c = 0; c < t.index(); ++c) {
        bool all = true;
        for (auto const& a : acts) {
          all = all && a[c] == c;
        }
        n += all;
      }
      return n;
    }
  }  // namespace

  TEST_CASE("Cosets 001: finite groups from their presentations", "[cosets][quick]") {
    // orders of the spherical triangle groups, checked against permutation
    // representations
    REQUIRE(todd_coxeter(triangle(2, 3, 3), {}).index() == 12);
    REQUIRE(todd_coxeter(triangle(2, 3, 4), {}).index() == 24);
    REQUIRE(todd_coxeter(triangle(2, 3, 5), {}).index() == 60);
    REQUIRE(closure(std::vector<Perm>{parse_cycles("(1,2)(3,4)"), parse_cycles("(2,3,4)")})
                .order()
            == 12);
    REQUIRE(closure(std::vector<Perm>{parse_cycles("(1,2)"), parse_cycles("(2,3,4)")})
                .order()
            == 24);
    // the image of the relators in S_n matches the presentation
    GenAssignment a;
    a.set("x", parse_cycles("(1,2)(3,4)"));
    a.set("y", parse_cycles("(1,3,5)"));
    REQUIRE(check_relators(triangle(2, 3, 5), a).ok());
    REQUIRE(check_relators(triangle(2, 3, 5), a).image_order == 60);
  }

  TEST_CASE("Cosets 002: subgroup index", "[cosets][quick]") {
    auto s3 = triangle(2, 3, 2);
    REQUIRE(todd_coxeter(s3, {}).index() == 6);
    REQUIRE(todd_coxeter(s3, {parse_word("x")}).index() == 3);
    REQUIRE(todd_coxeter(s3, {parse_word("y")}).index() == 2);
    REQUIRE(todd_coxeter(s3, {parse_word("x"), parse_word("y")}).index() == 1);
    auto a5 = triangle(2, 3, 5);
    REQUIRE(todd_coxeter(a5, {parse_word("y")}).index() == 20);
    REQUIRE(todd_coxeter(a5, {parse_word("x y")}).index() == 12);
  }

  TEST_CASE("Cosets 003: truncated braid groups", "[cosets][quick]") {
    // <a, b | a b a = b a b, a^k> has order 24 (k / (6 - k))^2 for k < 6
    auto t = trefoil_presentation();
    for (unsigned k = 2; k <= 5; ++k) {
      Presentation q("q", t.generators());
      q.add_relator(t.relators()[0]);
      q.add_relator(parse_word("a").pow(k));
      auto table = todd_coxeter(q, {});
      REQUIRE(table.index() == 24 * k * k / ((6 - k) * (6 - k)));
      if (k == 5) {
        // (a b)^3 generates the centre, cyclic of order 10
        REQUIRE(fixed_by_all(q, table, {parse_word("a b").pow(15)}) == 0);
        REQUIRE(fixed_by_all(q, table, {parse_word("a b").pow(30)}) == 600);
      }
    }
  }

  TEST_CASE("Cosets 004: standardized tables are canonical", "[cosets][quick]") {
    auto s3 = triangle(2, 3, 2);
    Presentation swapped("s3", {"x", "y"});
    for (std::size_t i = s3.relators().size(); i-- > 0;) {
      swapped.add_relator(s3.relators()[i]);
    }
    REQUIRE(todd_coxeter(s3, {}) == todd_coxeter(swapped, {}));
    auto t = todd_coxeter(s3, {parse_word("x")});
    // coset 0 is the subgroup
    REQUIRE(t(0, 0) == 0);
    REQUIRE_NOTHROW(verify_table(s3, t));
  }

  TEST_CASE("Cosets 005: capacity", "[cosets][quick]") {
    Presentation free2("free", {"a", "b"});
    REQUIRE_THROWS_AS(todd_coxeter(free2, {}, 1000), CapacityError);
    REQUIRE_THROWS_AS(todd_coxeter(triangle(2, 3, 5), {}, 30), CapacityError);
    REQUIRE_THROWS_AS(todd_coxeter(triangle(2, 3, 5), {}, 0), DomainError);
    REQUIRE(todd_coxeter(Presentation("empty", {}), {}).index() == 1);
  }

  TEST_CASE("Cosets 006: kernel tables", "[cosets][quick]") {
    for (unsigned j = 1; j <= 4; ++j) {
      auto p = kj_presentation(j);
      auto a = phi_tables_on_kj(j);
      auto t = kernel_coset_table(p, a);
      REQUIRE(t.origin() == CosetOrigin::kernel);
      REQUIRE(t.index() == image_group(p, a).order());
      REQUIRE_NOTHROW(verify_table(p, t));
    }
    GenAssignment bad = phi_tables_on_kj(1);
    bad.set(GenSym("a", 1), parse_cycles("(1,2,3)"));
    REQUIRE_THROWS_AS(kernel_coset_table(kj_presentation(1), bad), InvalidHomomorphismError);
  }

  TEST_CASE("Cosets 007: kernel words fix every coset", "[cosets][quick]") {
    auto          t = trefoil_presentation();
    GenAssignment a;
    a.set("a", parse_cycles("(1,3,5,4,2)"));
    a.set("b", parse_cycles("(1,2,3,4,5)"));
    auto k = kernel_coset_table(t, a);
    REQUIRE(k.index() == 60);
    REQUIRE(fixed_by_all(t, k, {parse_word("a").pow(5)}) == 60);
    REQUIRE(fixed_by_all(t, k, {parse_word("a")}) == 0);
    // the kernel has index 60 by enumeration as well
    Presentation q("q", t.generators());
    q.add_relator(t.relators()[0]);
    q.add_relator(parse_word("a").pow(5));
    q.add_relator(parse_word("a b").pow(3));
    REQUIRE(todd_coxeter(q, {}).index() == 60);
  }

  TEST_CASE("Cosets 008: cyclic covers", "[cosets][quick]") {
    auto t = trefoil_presentation();
    for (std::size_t k = 1; k <= 8; ++k) {
      auto c = cyclic_cover_table(t, k);
      REQUIRE(c.index() == k);
      REQUIRE(c.origin() == CosetOrigin::cyclic);
      REQUIRE(orbit_transitive(t, c, {parse_word("a"), parse_word("b a b^-1 a b a^-1 a^-1 a^-1")}));
      // the longitude alone does not move any coset
      REQUIRE(orbit_transitive(t, c, {parse_word("b a b^-1 a b a^-1 a^-1 a^-1")}) == (k == 1));
    }
    REQUIRE_THROWS_AS(cyclic_cover_table(t, 0), DomainError);
    REQUIRE_THROWS_AS(cyclic_cover_table(kj_presentation(2), 2), InconsistencyError);
    // Todd-Coxeter on the Schreier generators of the kernel of the map to
    // Z/3 finds the same table
    std::vector<Word> kernel{parse_word("a a a"), parse_word("b a^-1"),
                             parse_word("a b a^-1 a^-1"), parse_word("a a b a^-1 a^-1 a^-1")};
    REQUIRE(todd_coxeter(t, kernel).action() == cyclic_cover_table(t, 3).action());
  }

  TEST_CASE("Cosets 009: integrity checks", "[cosets][quick]") {
    auto s3 = triangle(2, 3, 2);
    // not a permutation
    REQUIRE_THROWS_AS(verify_table(s3, CosetTable({{0, 0}, {1, 0}}, CosetOrigin::subgroup)),
                      IntegrityError);
    // relator x^2 fails
    REQUIRE_THROWS_AS(verify_table(s3, CosetTable({{1, 2, 0}, {0, 1, 2}}, CosetOrigin::subgroup)),
                      IntegrityError);
    // intransitive
    REQUIRE_THROWS_AS(verify_table(s3, CosetTable({{0, 1}, {0, 1}}, CosetOrigin::subgroup)),
                      IntegrityError);
    REQUIRE_THROWS_AS(CosetTable({{0, 1}, {0}}, CosetOrigin::subgroup), IntegrityError);
    REQUIRE(to_string(CosetOrigin::cyclic) == std::string("cyclic"));
  }

}  // namespace knotcover
