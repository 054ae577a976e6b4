#include <set>     // for set
#include <string>  // for string

#include "catch_amalgamated.hpp"

#include "knotcover/assignment.hpp"
#include "knotcover/presentations.hpp"

namespace knotcover {

  TEST_CASE("StageIndex 001: bounds", "[presentations][quick]") {
    REQUIRE(StageIndex(1, 1).l() == 1);
    REQUIRE(StageIndex(2, 5).j() == 5);
    REQUIRE_THROWS_AS(StageIndex(0, 3), DomainError);
    REQUIRE_THROWS_AS(StageIndex(4, 3), DomainError);
  }

  TEST_CASE("Presentations 001: trefoil", "[presentations][quick]") {
    auto p = trefoil_presentation();
    REQUIRE(p.generators().size() == 2);
    REQUIRE(p.relators().size() == 1);
    REQUIRE(p.relators()[0] == parse_word("b^-1 a^-1 b^-1 a b a"));
  }

  TEST_CASE("Presentations 002: link block", "[presentations][quick]") {
    LinkBlock b = link_block(StageIndex(2, 3));
    REQUIRE(b.generators.size() == 9);
    REQUIRE(b.generators.front() == GenSym("a", 2));
    REQUIRE(b.relators.size() == 9);
    REQUIRE(b.names.front() == "R_{2,1}");
    REQUIRE(b.names.back() == "R_{2,9}");
    // b = c^-1 a c
    REQUIRE(b.relators[0] == parse_word("b2 c2^-1 a2^-1 c2"));
    // i = f h f^-1
    REQUIRE(b.relators[8] == parse_word("i2 f2 h2^-1 f2^-1"));
    // Wirtinger relators: every one has total exponent 0
    for (auto const& r : b.relators) {
      REQUIRE(total_exponent(r) == 0);
    }
  }

  TEST_CASE("Presentations 003: boundary words", "[presentations][quick]") {
    BoundaryWords w = boundary_words(StageIndex(1, 2));
    REQUIRE(w.alpha == parse_word("h1"));
    REQUIRE(w.beta == parse_word("f1^-1 g1"));
    REQUIRE(w.gamma == parse_word("a1"));
    REQUIRE(w.delta == parse_word("c1 a1 b1 g1^-1 h1^-1 e1^-1 h1"));
  }

  TEST_CASE("Presentations 004: K_j counts and names", "[presentations][quick]") {
    for (unsigned j = 1; j <= 8; ++j) {
      auto p = kj_presentation(j);
      REQUIRE(p.generators().size() == 9 * j);
      REQUIRE(p.relators().size() == 11 * j - 1);
      REQUIRE(p.label() == "K_" + std::to_string(j));
      REQUIRE(p.relator_name(p.relators().size() - 1) == "h_{" + std::to_string(j) + "}");
      auto q = kjss_presentation(j);
      REQUIRE(q.generators() == p.generators());
      REQUIRE(q.relators().size() == 14 * j - 1);
      // the first 11j - 1 relators are those of K_j
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        REQUIRE(q.relators()[i] == p.relators()[i]);
      }
      std::set<std::string> names;
      for (std::size_t i = 0; i < q.relators().size(); ++i) {
        names.insert(q.relator_name(i));
      }
      REQUIRE(names.size() == q.relators().size());
    }
    REQUIRE_THROWS_AS(kj_presentation(0), DomainError);
  }

  TEST_CASE("Presentations 005: sewing relators", "[presentations][quick]") {
    auto p = kj_presentation(2);
    // 18 link relators, then S_{2,1}, S_{2,2}, then h_{2}
    REQUIRE(p.relator_name(18) == "S_{2,1}");
    REQUIRE(p.relators()[18]
            == parse_word("h1") * parse_word("c2 a2 b2 g2^-1 h2^-1 e2^-1 h2").inverse());
    REQUIRE(p.relator_name(19) == "S_{2,2}");
    REQUIRE(p.relators()[19] == parse_word("f1^-1 g1 a2^-1"));
    REQUIRE(p.relators()[20] == parse_word("h2"));
  }

  TEST_CASE("Presentations 006: printed form round trips", "[presentations][quick]") {
    for (unsigned j = 1; j <= 4; ++j) {
      for (auto const& p : {kj_presentation(j), kjss_presentation(j)}) {
        auto q = parse_presentation(print_presentation(p));
        REQUIRE(q == p);
        REQUIRE(q.label() == p.label());
        REQUIRE(q.relator_names() == p.relator_names());
      }
    }
    auto t = trefoil_presentation();
    REQUIRE(parse_presentation(print_presentation(t)) == t);
  }

  TEST_CASE("Presentations 007: Sternfeld data", "[presentations][quick]") {
    auto f = sternfeld_fragment();
    REQUIRE(f.values.size() == 6);
    REQUIRE(f.target == parse_word("o^-1 h f^-1 q"));
    auto tables = sternfeld_tables();
    for (auto const& t : tables) {
      REQUIRE(t.size() == 21);
      for (auto const& [g, x] : t.mapping()) {
        // every entry is the identity or a double transposition of 1..5
        REQUIRE(x.is_even());
        REQUIRE(x.degree() <= 5);
        REQUIRE((x * x).is_identity());
      }
    }
    // spot checks against the printed tables
    REQUIRE(tables[0].at("a") == parse_cycles("(1,2)(3,5)"));
    REQUIRE(tables[1].at("a") == parse_cycles("(1,2)(4,5)"));
    REQUIRE(tables[2].at("u") == parse_cycles("(2,5)(3,4)"));
  }

  TEST_CASE("Assignment 001: parsing", "[presentations][quick]") {
    auto a = parse_assignment("a = (1,2,3)  # first\n\nb=(1,2)(3,4)\n");
    REQUIRE(a.size() == 2);
    REQUIRE(a.at("a") == parse_cycles("(1,2,3)"));
    REQUIRE(parse_assignment(print_assignment(a)) == a);
    REQUIRE_THROWS_AS(a.at("c"), MissingAssignmentError);
    REQUIRE_THROWS_AS(parse_assignment("a = (1,2)\na = (1,3)\n"), ParseError);
    REQUIRE_THROWS_AS(parse_assignment("a (1,2)\n"), ParseError);
    REQUIRE_THROWS_AS(parse_assignment("a = (1,2\n"), ParseError);
    REQUIRE(eval_word(a, parse_word("a b^-1")) == parse_cycles("(1,2,3)") * parse_cycles("(1,2)(3,4)"));
    REQUIRE_THROWS_AS(eval_word(a, parse_word("c")), MissingAssignmentError);
  }

}  // namespace knotcover
