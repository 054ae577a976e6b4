#include <algorithm>  // for next_permutation
#include <array>      // for array
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "knotcover/perm.hpp"

namespace knotcover {

  namespace {
    // Every permutation of {1..n}, from std::next_permutation.
    std::vector<Perm> symmetric_group(unsigned n) {
      std::vector<unsigned> img(n);
      for (unsigned i = 0; i < n; ++i) {
        img[i] = i + 1;
      }
      std::vector<Perm> out;
      do {
        out.push_back(Perm::from_images(std::span<unsigned const>(img)));
      } while (std::next_permutation(img.begin(), img.end()));
      return out;
    }

    // Parity by counting inversions.
    bool even_by_inversions(Perm const& p, unsigned n) {
      unsigned inv = 0;
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          inv += p(i) > p(j);
        }
      }
      return inv % 2 == 0;
    }
  }  // namespace

  TEST_CASE("Perm 001: composition is left to right", "[perm][quick]") {
    Perm p = parse_cycles("(1,2)");
    Perm q = parse_cycles("(2,3)");
    // (p * q)(x) = q(p(x))
    REQUIRE((p * q)(1) == 3);
    REQUIRE((p * q)(2) == 1);
    REQUIRE((p * q)(3) == 2);
    REQUIRE((p * q).to_string() == "(1,3,2)");
    REQUIRE(compose(p, q) == p * q);
  }

  TEST_CASE("Perm 002: inverse", "[perm][quick]") {
    Perm p = parse_cycles("(1,2,3)");
    REQUIRE(p.inverse().to_string() == "(1,3,2)");
    REQUIRE(inverse(parse_cycles("(1,2)(3,4)")) == parse_cycles("(1,2)(3,4)"));
    REQUIRE(p * p.inverse() == Perm::identity());
  }

  TEST_CASE("Perm 003: parity", "[perm][quick]") {
    REQUIRE(parse_cycles("(1,2)(3,4)").is_even());
    REQUIRE(!parse_cycles("(1,2)").is_even());
    REQUIRE(is_even(parse_cycles("(1,2,3,4,5)")));
    REQUIRE(!is_even(parse_cycles("(1,2,3,4)")));
  }

  TEST_CASE("Perm 004: parsing and printing", "[perm][quick]") {
    REQUIRE(parse_cycles("()") == Perm::identity());
    REQUIRE(Perm::identity().to_string() == "()");
    REQUIRE(parse_cycles(" ( 3 , 1 , 2 ) ").to_string() == "(1,2,3)");
    REQUIRE(parse_cycles("(1,2)(3,5)")(5) == 3);
    REQUIRE(parse_cycles("(4)") == Perm::identity());
    REQUIRE_THROWS_AS(parse_cycles("(1,2"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,(2))"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,x)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,,2)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,13)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(0,1)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,2,1)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles("(1,2)(2,3)"), ParseError);
    REQUIRE_THROWS_AS(parse_cycles(""), ParseError);
  }

  TEST_CASE("Perm 005: from_images", "[perm][quick]") {
    Perm p = Perm::from_images({2, 3, 1});
    REQUIRE(p == parse_cycles("(1,2,3)"));
    REQUIRE(p.degree() == 3);
    REQUIRE(Perm::identity().degree() == 0);
    REQUIRE_THROWS_AS(Perm::from_images({1, 1}), DomainError);
    REQUIRE_THROWS_AS(Perm::from_images({0, 1}), DomainError);
    std::vector<unsigned> big(13);
    for (unsigned i = 0; i < 13; ++i) {
      big[i] = i + 1;
    }
    REQUIRE_THROWS_AS(Perm::from_images(std::span<unsigned const>(big)), DomainError);
  }

  TEST_CASE("Perm 006: order", "[perm][quick]") {
    REQUIRE(Perm::identity().order() == 1);
    REQUIRE(parse_cycles("(1,2)(3,4,5)").order() == 6);
    REQUIRE(parse_cycles("(1,2,3,4,5)").order() == 5);
  }

  TEST_CASE("Perm 007: group axioms over S4", "[perm][quick]") {
    auto s4 = symmetric_group(4);
    REQUIRE(s4.size() == 24);
    for (auto const& x : s4) {
      REQUIRE(x * x.inverse() == Perm::identity());
      REQUIRE(x.inverse() * x == Perm::identity());
      REQUIRE(x.is_even() == even_by_inversions(x, 4));
      REQUIRE(parse_cycles(x.to_string()) == x);
      for (auto const& y : s4) {
        REQUIRE((x * y).is_even() == (x.is_even() == y.is_even()));
        REQUIRE((x * y).inverse() == y.inverse() * x.inverse());
        for (auto const& z : s4) {
          REQUIRE((x * y) * z == x * (y * z));
        }
      }
    }
  }

  TEST_CASE("Perm 008: closure orders", "[perm][quick]") {
    auto a5 = closure(std::vector<Perm>{parse_cycles("(1,2,3)"), parse_cycles("(1,2,3,4,5)")});
    REQUIRE(a5.order() == 60);
    REQUIRE(a5.elements().front() == Perm::identity());
    auto s5 = closure(std::vector<Perm>{parse_cycles("(1,2)"), parse_cycles("(1,2,3,4,5)")});
    REQUIRE(s5.order() == 120);
    REQUIRE(closure(std::vector<Perm>{}).order() == 1);
    REQUIRE(closure(std::vector<Perm>{parse_cycles("(1,2)(3,4)")}).order() == 2);

    // Every A5 element is even, and the closure contains exactly the even
    // permutations of S5.
    std::size_t evens = 0;
    for (auto const& x : symmetric_group(5)) {
      evens += x.is_even();
      REQUIRE(a5.contains(x) == x.is_even());
    }
    REQUIRE(evens == 60);
    REQUIRE(a5.index_of(parse_cycles("(1,2)")) == std::nullopt);
    REQUIRE(a5.index_of(Perm::identity()) == 0);
  }

  TEST_CASE("Perm 009: Lagrange", "[perm][quick]") {
    auto s5 = closure(std::vector<Perm>{parse_cycles("(1,2)"), parse_cycles("(1,2,3,4,5)")});
    for (auto const& x : s5.elements()) {
      auto h = closure(std::vector<Perm>{x});
      REQUIRE(120 % h.order() == 0);
      REQUIRE(h.order() == x.order());
    }
    auto v4 = closure(std::vector<Perm>{parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")});
    REQUIRE(v4.order() == 4);
  }

  TEST_CASE("Perm 010: closure cap", "[perm][quick]") {
    std::vector<Perm> s6{parse_cycles("(1,2)"), parse_cycles("(1,2,3,4,5,6)")};
    REQUIRE_THROWS_AS(closure(s6, 100), CapacityError);
    REQUIRE(closure(s6, 720).order() == 720);
    REQUIRE_THROWS_AS(closure(s6, 0), DomainError);
  }

  TEST_CASE("Perm 011: points beyond the degree are fixed", "[perm][quick]") {
    Perm p = parse_cycles("(1,2)");
    REQUIRE(p(7) == 7);
    REQUIRE(p(100) == 100);
    REQUIRE(std::hash<Perm>{}(p) == std::hash<Perm>{}(parse_cycles("(2,1)")));
  }

}  // namespace knotcover
