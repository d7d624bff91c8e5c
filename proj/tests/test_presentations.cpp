#include <algorithm>
#include <cctype>
#include <set>

#include "doctest.h"
#include "lrw/error.hpp"
#include "lrw/presentations.hpp"
#include "support/oracles.hpp"
#include "support/systems.hpp"

using fixtures::s;
using fixtures::w;

namespace {
  std::set<std::string> rule_strings(lrw::RewritingSystem const& sys) {
    std::set<std::string> out;
    for (auto const& r : sys.rules()) {
      out.insert(s(sys, r.lhs) + " -> " + s(sys, r.rhs));
    }
    return out;
  }

  // Dihedral group of order 6: rotations r^k at 0..2, reflections s r^k at 3..5.
  lrw::FiniteGroupTable d3() {
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        std::size_t fi = i / 3, ki = i % 3, fj = j / 3, kj = j % 3;
        std::size_t k = fj == 0 ? (ki + kj) % 3 : (3 + kj - ki) % 3;
        t[i][j]       = 3 * (fi ^ fj) + k;
      }
    }
    return {{"e", "r", "r2", "s", "sr", "sr2"}, t};
  }
}  // namespace

TEST_SUITE("tables") {
  TEST_CASE("cyclic tables") {
    auto c5 = lrw::FiniteGroupTable::cyclic(5);
    CHECK(c5.order() == 5);
    CHECK(c5.multiply(3, 4) == 2);
    CHECK(c5.inverse(2) == 3);
  }

  TEST_CASE("CSV input") {
    auto t = lrw::FiniteGroupTable::from_csv("*,e,x,y\n"
                                             "e,e,x,y\n"
                                             "x,x,y,e\n"
                                             "y,y,e,x\n");
    CHECK(t.order() == 3);
    CHECK(t.names()[1] == "x");
    CHECK(t.multiply(1, 1) == 2);
    CHECK(t.inverse(1) == 2);
  }

  TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS_AS((void) lrw::FiniteGroupTable::from_csv("*,e,x\n"
                                                           "e,e,x\n"
                                                           "x,x,x\n"),
                    lrw::Error);
    CHECK_THROWS_AS((void) lrw::FiniteGroupTable::from_csv("*,e,x\n"
                                                           "e,x,e\n"
                                                           "x,e,x\n"),
                    lrw::Error);
    CHECK_THROWS_AS((void) lrw::FiniteGroupTable::from_csv("*,e,x\n"
                                                           "e,e,q\n"
                                                           "x,x,e\n"),
                    lrw::Error);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("infinite cyclic") {
    auto sys = lrw::gen_infinite_cyclic("a", "A");
    CHECK(rule_strings(sys) == std::set<std::string>{"a A -> λ", "A a -> λ"});
    auto x = lrw::gen_infinite_cyclic("x", "X");
    CHECK(rule_strings(x) == std::set<std::string>{"x X -> λ", "X x -> λ"});
    CHECK_THROWS_AS((void) lrw::gen_infinite_cyclic("a", "a"), lrw::Error);
  }

  TEST_CASE("C2 and C3") {
    auto c2 = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(2), {"a"});
    CHECK(rule_strings(c2) == std::set<std::string>{"a a -> λ"});
    auto c3 = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(3), {"b", "B"});
    CHECK(rule_strings(c3)
          == std::set<std::string>{"b b -> B", "B B -> b", "b B -> λ",
                                   "B b -> λ"});
  }

  TEST_CASE("rule count, lhs length and products match the table") {
    for (auto const& table : {lrw::FiniteGroupTable::cyclic(2),
                              lrw::FiniteGroupTable::cyclic(4),
                              lrw::FiniteGroupTable::cyclic(7),
                              d3()}) {
      auto       sys = lrw::gen_finite_group(table);
      auto const n   = table.order();
      CHECK(sys.rules().size() == (n - 1) * (n - 1));
      CHECK(sys.max_lhs_length() == 2);
      for (auto const& r : sys.rules()) {
        CHECK(r.lhs.size() == 2);
      }
      // Letter i stands for element i + 1.
      for (std::size_t g = 1; g < n; ++g) {
        for (std::size_t h = 1; h < n; ++h) {
          lrw::Word gh{lrw::Letter{static_cast<std::uint32_t>(g - 1)},
                       lrw::Letter{static_cast<std::uint32_t>(h - 1)}};
          auto      k = table.multiply(g, h);
          lrw::Word expected;
          if (k != 0) {
            expected.push_back(lrw::Letter{static_cast<std::uint32_t>(k - 1)});
          }
          CHECK(lrw::normalize(sys, gh) == expected);
        }
        CHECK(sys.alphabet().inverse(lrw::Letter{static_cast<std::uint32_t>(g - 1)})
              == lrw::Letter{static_cast<std::uint32_t>(table.inverse(g) - 1)});
      }
      auto report = lrw::check_convergent(sys);
      CHECK(report.convergent());
      CHECK(report.presents_group);
    }
  }

  TEST_CASE("non-abelian table from CSV") {
    auto t = d3();
    std::string csv = "*";
    for (auto const& n : t.names()) {
      csv += "," + n;
    }
    csv += "\n";
    for (std::size_t i = 0; i < 6; ++i) {
      csv += t.names()[i];
      for (std::size_t j = 0; j < 6; ++j) {
        csv += "," + t.names()[t.multiply(i, j)];
      }
      csv += "\n";
    }
    auto parsed = lrw::FiniteGroupTable::from_csv(csv);
    CHECK(lrw::gen_finite_group(parsed) == lrw::gen_finite_group(t));
    CHECK(lrw::check_convergent(lrw::gen_finite_group(parsed)).convergent());
  }
}

TEST_SUITE("free products") {
  TEST_CASE("C2 * C3") {
    auto c2  = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(2), {"a"});
    auto c3  = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(3), {"b", "B"});
    auto sys = lrw::free_product({c2, c3});
    CHECK(sys.alphabet().names() == std::vector<std::string>{"a", "b", "B"});
    CHECK(sys.rules().size() == 5);
    CHECK(sys == fixtures::plain("C2,C3"));
  }

  TEST_CASE("single factor is unchanged") {
    auto z = fixtures::z();
    CHECK(lrw::free_product({z}) == z);
  }

  TEST_CASE("infinite dihedral") {
    auto a   = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(2), {"a"});
    auto b   = lrw::gen_finite_group(lrw::FiniteGroupTable::cyclic(2), {"b"});
    auto sys = lrw::free_product({a, b});
    CHECK(rule_strings(sys) == std::set<std::string>{"a a -> λ", "b b -> λ"});
    CHECK(lrw::check_convergent(sys).convergent());
  }

  TEST_CASE("letter collisions are rejected") {
    auto z = fixtures::z();
    CHECK_THROWS_AS((void) lrw::free_product({z, z}), lrw::PreconditionError);
  }

  TEST_CASE("no critical pair mixes letters of two factors") {
    auto sys = fixtures::plain("C3,C4,Z");
    // Factor of each letter, read from the generated names.
    auto factor = [&](lrw::Letter x) {
      return std::tolower(static_cast<unsigned char>(sys.alphabet().name(x)[0]));
    };
    for (auto const& p : lrw::critical_pairs(sys)) {
      for (auto x : p.superposition) {
        CHECK(factor(x) == factor(p.superposition.front()));
      }
    }
  }
}

TEST_SUITE("gen_plain") {
  TEST_CASE("letter names") {
    CHECK(fixtures::plain("C2,C3").alphabet().names()
          == std::vector<std::string>{"a", "b", "B"});
    CHECK(fixtures::plain("C2,C2,Z").alphabet().names()
          == std::vector<std::string>{"a", "b", "c", "C"});
    CHECK(fixtures::plain("C2,C2,Z").rules().size() == 4);
    CHECK(fixtures::plain("Z") == lrw::gen_infinite_cyclic("a", "A"));
    CHECK(fixtures::plain("C4").alphabet().names()
          == std::vector<std::string>{"a", "a2", "A"});
  }

  TEST_CASE("specs") {
    auto spec = lrw::PlainSpec::parse("C2, Z ,C5,Z");
    CHECK(spec.factors.size() == 4);
    CHECK(spec.finite_count() == 2);
    CHECK(spec.infinite_cyclic_count() == 2);
    CHECK_THROWS_AS((void) lrw::PlainSpec::parse(""), lrw::ParseError);
    CHECK_THROWS_AS((void) lrw::PlainSpec::parse("C2,D4"), lrw::ParseError);
    CHECK_THROWS_AS((void) lrw::PlainSpec::parse("C1"), lrw::ParseError);
  }

  TEST_CASE("every output is convergent with lhs length two") {
    for (char const* f : {"C2", "C3", "Z", "C2,C3", "C2,C2", "C2,C3,Z",
                          "C4,Z", "C5,C5", "Z,Z,Z", "C6,C2,Z,C3"}) {
      CAPTURE(f);
      auto sys    = fixtures::plain(f);
      auto report = lrw::check_convergent(sys);
      CHECK(report.convergent());
      CHECK(report.presents_group);
      CHECK(sys.alphabet().has_involution());
      CHECK(sys.max_lhs_length() == 2);
      for (auto const& r : sys.rules()) {
        CHECK(r.lhs.size() == 2);
      }
    }
  }

  TEST_CASE("more than 26 factors use indexed names") {
    std::string f = "C2";
    for (int i = 1; i < 27; ++i) {
      f += i % 2 ? ",Z" : ",C3";
    }
    auto sys = fixtures::plain(f);
    CHECK(sys.alphabet().find("g1_1").has_value());
    CHECK(sys.alphabet().find("z2").has_value());
    CHECK(sys.alphabet().find("z2'").has_value());
    CHECK(lrw::check_convergent(sys).convergent());
  }
}
