#include <doctest.h>

#include "ctoda/cyclic.hpp"
#include "ctoda/root_system.hpp"

using namespace ctoda;

TEST_SUITE("root_system") {
  TEST_CASE("A2 counts and longest root") {
    const auto rs = RootSystemData::build(named_cartan("A2"));
    CHECK(rs.roots.size() == 6);
    CHECK(rs.positive.size() == 3);
    CHECK(rs.dim_g == 8);
    CHECK(rs.roots[rs.longest].degree == 2);
  }

  TEST_CASE("C2 counts") {
    const auto rs = RootSystemData::build(named_cartan("C2"));
    CHECK(rs.roots.size() == 8);
    CHECK(rs.dim_g == 10);
    CHECK(rs.roots[rs.longest].degree == 3);
  }

  TEST_CASE("G2 counts") {
    const auto rs = RootSystemData::build(named_cartan("G2"));
    CHECK(rs.roots.size() == 12);
    CHECK(rs.dim_g == 14);
    CHECK(rs.roots[rs.longest].degree == 5);
  }

  TEST_CASE("A3 smoke") {
    const auto rs = RootSystemData::build(named_cartan("A3"));
    CHECK(rs.roots.size() == 12);
    CHECK(rs.dim_g == 15);
    CHECK(rs.roots[rs.longest].degree == 3);
    CHECK(rs.g1_roots.size() == 4);
  }

  TEST_CASE("cyclic sets") {
    SUBCASE("A2: no g1 roots") {
      const auto rs = RootSystemData::build(named_cartan("A2"));
      CHECK(rs.Zdag.size() == 3);
      CHECK(rs.Z.size() == 3);
      CHECK(rs.g1_roots.empty());
      // Zdag = simple roots plus -eta; Z = -Zdag.
      for (int i = 0; i < rs.rank; ++i) CHECK(rs.in_Zdag(rs.simple[i]));
      CHECK(rs.in_Zdag(rs.negative_of[rs.longest]));
      CHECK(rs.in_Z(rs.longest));
    }
    SUBCASE("C2 and G2: derived g1 sizes from the degree filter") {
      // Oracle: g1 consists of the roots whose |degree| differs from 1 and
      // from deg(eta); count them directly from the enumerated roots.
      for (const auto& [name, expect] : {std::pair<std::string, int>{"C2", 2}, {"G2", 6}}) {
        const auto rs = RootSystemData::build(named_cartan(name));
        int oracle = 0;
        const int de = rs.roots[rs.longest].degree;
        for (const auto& r : rs.roots)
          if (std::abs(r.degree) != 1 && std::abs(r.degree) != de) ++oracle;
        CHECK(oracle == expect);
        CHECK(static_cast<int>(rs.g1_roots.size()) == oracle);
        for (int k : rs.g1_roots) CHECK(rs.in_g1(k));
      }
    }
  }

  TEST_CASE("degree bound and bracket-free facts") {
    for (const char* name : {"A2", "C2", "G2", "A3"}) {
      const auto rs = RootSystemData::build(named_cartan(name));
      const int de = rs.roots[rs.longest].degree;
      for (int k : rs.positive) {
        CHECK(rs.roots[k].degree <= de);
        if (rs.roots[k].degree == de) CHECK(k == rs.longest);
        // alpha + eta is never a root for positive alpha.
        std::vector<int> s(rs.rank);
        for (int i = 0; i < rs.rank; ++i)
          s[i] = rs.roots[k].coords[i] + rs.roots[rs.longest].coords[i];
        CHECK_FALSE(rs.is_root(s));
      }
      // alpha - beta is not a root for distinct simple roots.
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
          if (i == j) continue;
          std::vector<int> d(rs.rank);
          for (int k2 = 0; k2 < rs.rank; ++k2)
            d[k2] = rs.roots[rs.simple[i]].coords[k2] - rs.roots[rs.simple[j]].coords[k2];
          CHECK_FALSE(rs.is_root(d));
        }
    }
  }

  TEST_CASE("killing dual form is positive definite") {
    for (const char* name : {"A2", "C2", "G2", "A3"}) {
      const auto rs = RootSystemData::build(named_cartan(name));
      for (const auto& minor : rs.killing_hstar.leading_principal_minors()) CHECK(minor > 0);
      for (const auto& minor : rs.killing_h.leading_principal_minors()) CHECK(minor > 0);
    }
  }

  TEST_CASE("A2 Killing values from the root-sum oracle") {
    const auto rs = RootSystemData::build(named_cartan("A2"));
    // Oracle: Kill(h_1, h_1) = sum over the 6 roots of gamma(h_1)^2.
    Rat acc(0);
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      const Rat v{rs.pairing(static_cast<int>(k), 0)};
      acc += v * v;
    }
    CHECK(acc == 12);
    CHECK(rs.killing_h(0, 0) == 12);
    CHECK(rs.killing_h(0, 1) == -6);
  }

  TEST_CASE("cyclic sum property is exhaustive and clean") {
    for (const char* name : {"A2", "C2", "G2"}) {
      const auto rs = RootSystemData::build(named_cartan(name));
      const auto entries = verify_cyclic_sum_property(rs);
      for (const auto& e : entries) {
        CHECK(e.pass);
        CHECK(e.pairs_checked > 0);
      }
      // |Z|^4 quadruples scanned.
      CHECK(entries[0].pairs_checked == 81);
    }
  }

  TEST_CASE("bad Cartan matrices are rejected with diagnostics") {
    CHECK_THROWS_WITH_AS(RootSystemData::build({{2, -1}, {0, 2}}),
                         doctest::Contains("zero pattern"), EngineError);
    CHECK_THROWS_WITH_AS(RootSystemData::build({{1, 0}, {0, 2}}), doctest::Contains("diagonal"),
                         EngineError);
    // Affine A1: positive semidefinite, not definite.
    CHECK_THROWS_WITH_AS(RootSystemData::build({{2, -2}, {-2, 2}}),
                         doctest::Contains("finite type"), EngineError);
    // Disconnected diagram.
    CHECK_THROWS_WITH_AS(RootSystemData::build({{2, 0}, {0, 2}}), doctest::Contains("reducible"),
                         EngineError);
    CHECK_THROWS_AS(RootSystemData::build({{2, 1}, {1, 2}}), EngineError);
  }

  TEST_CASE("unknown group name") {
    CHECK_THROWS_WITH_AS(named_cartan("E8"), doctest::Contains("unknown group"), EngineError);
  }
}
