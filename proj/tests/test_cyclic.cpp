#include <doctest.h>

#include "ctoda/context.hpp"

using namespace ctoda;

TEST_SUITE("cyclic") {
  TEST_CASE("wedge evaluation basics") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("A2")));
    const auto frames = random_frames(*cd, 12, 31);
    for (std::size_t t = 0; t + 1 < frames.size(); t += 2) {
      const CyclicFrame &a = frames[t], &b = frames[t + 1];
      // (alpha ^ alpha)(e1, e2) = 2 [a1, a2].
      CHECK(wedge11(*cd, a, a) == cd->bracket(a.u, a.v) * ExactScalar(Rat(2)));
      // 1-forms commute under the graded wedge.
      CHECK(wedge11(*cd, a, b) == wedge11(*cd, b, a));
    }
  }

  TEST_CASE("bracket table: nine inclusions for the three rank-2 groups") {
    for (const char* name : {"A2", "C2", "G2"}) {
      auto cd = ChevalleyData::build(RootSystemData::build(named_cartan(name)));
      const auto entries = verify_bracket_table(*cd);
      CHECK(entries.size() == 9);
      for (const auto& e : entries) {
        INFO(name << ": " << e.proposition_id << " " << e.counterexample.dump());
        CHECK(e.pass);
      }
      // A2 has no g_1 roots, so its g_1 rows are vacuous; elsewhere every
      // inclusion must actually scan pairs.
      if (std::string(name) != "A2")
        for (const auto& e : entries) CHECK(e.pairs_checked > 0);
    }
  }

  TEST_CASE("G2 pidec counts") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("G2")));
    const auto entries = verify_bracket_table(*cd);
    // [g_Z, g_1]: 3 x 6 = 18 root pairs.
    for (const auto& e : entries)
      if (std::string(e.proposition_id) == "brackets.z_g1") CHECK(e.pairs_checked == 18);
  }

  TEST_CASE("A2 instance of [g_Z, g_Zdag] in h") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("A2")));
    const auto& R = cd->rs();
    const int a = R.simple[0];
    const LieElement br = cd->bracket(cd->basis_vector(cd->x_index(R.negative_of[a])),
                                      cd->basis_vector(cd->x_index(a)));
    CHECK(br == cd->coroot_element(a));
    CHECK(cd->project(br, Subspace::H) == br);
  }

  TEST_CASE("cyclic decomposition identities, basis pairs plus 100 random frames") {
    for (const char* name : {"A2", "C2", "G2"}) {
      auto cd = ChevalleyData::build(RootSystemData::build(named_cartan(name)));
      for (const auto& e : verify_cyclic_dec_identities(*cd, 100, 2024)) {
        INFO(name << ": " << e.proposition_id << " " << e.counterexample.dump());
        CHECK(e.pass);
      }
    }
  }

  TEST_CASE("explicit frame instance of the pi0 identity") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("A2")));
    const auto& R = cd->rs();
    const int a = R.simple[0];
    // frame (x_a, x_-a): both sides evaluate to the same h-valued element.
    const CyclicFrame f{cd->basis_vector(cd->x_index(a)),
                        cd->basis_vector(cd->x_index(R.negative_of[a]))};
    const LieElement lhs = cd->project(wedge11(*cd, f, f), Subspace::H);
    const CyclicFrame phi = project_frame(*cd, f, Subspace::Z);
    const CyclicFrame phid = project_frame(*cd, f, Subspace::Zdag);
    const CyclicFrame w1 = project_frame(*cd, f, Subspace::G1);
    const LieElement rhs = wedge11(*cd, phi, phid) * ExactScalar(Rat(2)) +
                           cd->project(wedge11(*cd, w1, w1), Subspace::H);
    CHECK(lhs == rhs);
    CHECK(lhs == cd->coroot_element(a) * ExactScalar(Rat(-2)));
  }

  TEST_CASE("rigidity kernels per group") {
    for (const char* name : {"A2", "C2", "G2", "A3"}) {
      auto cd = ChevalleyData::build(RootSystemData::build(named_cartan(name)));
      const auto entries = verify_rigidity_kernels(*cd);
      for (const auto& e : entries) {
        INFO(name << ": " << e.proposition_id << " " << e.counterexample.dump());
        CHECK(e.pass);
      }
      const bool is_a2 = std::string(name) == "A2";
      bool has_k2 = false, has_k4 = false;
      for (const auto& e : entries) {
        if (std::string(e.proposition_id) == "kernels.K2") has_k2 = true;
        if (std::string(e.proposition_id) == "kernels.K4") has_k4 = true;
      }
      CHECK(has_k2 == is_a2);
      CHECK(has_k4 == !is_a2);
    }
  }

  TEST_CASE("A2 K2 value is a multiple of x_{-eta}") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("A2")));
    const auto& R = cd->rs();
    const int a = R.simple[0];
    const LieElement xmeta = cd->basis_vector(cd->x_index(R.negative_of[R.longest]));
    const LieElement val = cd->bracket(cd->basis_vector(cd->x_index(R.negative_of[a])),
                                       cd->bracket(xmeta, cd->basis_vector(cd->x_index(a))));
    CHECK_FALSE(val.is_zero());
    CHECK(cd->project_root(val, R.negative_of[R.longest]) == val);
  }

  TEST_CASE("G2 K1 triple count") {
    auto cd = ChevalleyData::build(RootSystemData::build(named_cartan("G2")));
    for (const auto& e : verify_rigidity_kernels(*cd))
      if (std::string(e.proposition_id) == "kernels.K1") CHECK(e.pairs_checked == 27);
  }
}
