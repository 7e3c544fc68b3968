#include <doctest.h>

#include "ctoda/context.hpp"

using namespace ctoda;

TEST_SUITE("hitchin") {
  TEST_CASE("Higgs field assembly") {
    auto ctx = GroupContext::build("A2");
    const auto& cd = *ctx.chev;
    SUBCASE("q = 0 is the Fuchsian point") {
      const HiggsField phi =
          build_higgs_field(cd, ctx.triple, ctx.dec, {ExactScalar(Rat(0)), ExactScalar(Rat(0))});
      CHECK(phi.value == ctx.triple.Y);
      CHECK(phi.cyclic());
    }
    SUBCASE("A2 cyclic field is Y + q x_eta") {
      const HiggsField phi =
          build_higgs_field(cd, ctx.triple, ctx.dec, {ExactScalar(Rat(0)), ExactScalar(Rat(1))});
      const LieElement expect =
          ctx.triple.Y + cd.basis_vector(cd.x_index(cd.rs().longest));
      CHECK(phi.value == expect);
      CHECK(phi.cyclic());
    }
    SUBCASE("wrong differential count is rejected") {
      CHECK_THROWS_AS(build_higgs_field(cd, ctx.triple, ctx.dec, {ExactScalar(Rat(1))}),
                      EngineError);
    }
  }

  TEST_CASE("higgs verification suite per group") {
    for (const char* name : {"A2", "C2", "G2"}) {
      auto ctx = GroupContext::build(name);
      for (const auto& e :
           verify_higgs_section(*ctx.chev, ctx.triple, ctx.dec, ctx.sigma, ctx.rho, 20, 2024)) {
        INFO(name << ": " << e.proposition_id << " " << e.counterexample.dump());
        CHECK(e.pass);
      }
    }
  }

  TEST_CASE("invariants separate and the quadratic one matches the Killing pairing") {
    auto ctx = GroupContext::build("A2");
    const auto& cd = *ctx.chev;
    const int n = cd.basis_size();
    const HiggsField phi =
        build_higgs_field(cd, ctx.triple, ctx.dec, {ExactScalar(Rat(3)), ExactScalar(Rat(0))});
    const auto inv = higgs_invariants(cd, phi);
    // c_{n-2} = -Kill(Phi, Phi)/2, an independent route to the same value.
    const ExactScalar hopf = cd.killing(phi.value, phi.value);
    CHECK(inv[n - 2] == -hopf / ExactScalar(Rat(2)));
    CHECK_FALSE(inv[n - 2].is_zero());
  }

  TEST_CASE("area constants: A2 frozen values") {
    auto ctx = GroupContext::build("A2");
    // Derived by the exact solve: Kill(u0, h_i) = 6 for both simple coroots
    // gives u0_sharp = h_eta = h_1 + h_2, and k0 = -12 / -6 = 2.
    CHECK(ctx.area.u0_sharp_coords == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(ctx.area.k0 == Rat(2));
    // Diagram symmetry: the two defining values agree.
    CHECK(ctx.chev->killing_pair(ctx.chev->rs().simple[0]) ==
          ctx.chev->killing_pair(ctx.chev->rs().simple[1]));
  }

  TEST_CASE("area constants suite per group") {
    for (const char* name : {"A2", "C2", "G2"}) {
      auto ctx = GroupContext::build(name);
      CHECK(ctx.area.k0 > 0);
      for (const auto& e : verify_area_constants(*ctx.chev, ctx.rho, ctx.area, 100, 2024)) {
        INFO(name << ": " << e.proposition_id << " " << e.counterexample.dump());
        CHECK(e.pass);
      }
    }
  }

  TEST_CASE("area form identity on hand-built frames") {
    auto ctx = GroupContext::build("A2");
    const auto& cd = *ctx.chev;
    const auto& R = cd.rs();
    SUBCASE("frame supported on one simple root pair reduces to the u0 relation") {
      const int a = R.simple[0];
      const CyclicFrame f{cd.basis_vector(cd.x_index(a)),
                          cd.basis_vector(cd.x_index(R.negative_of[a]))};
      const ExactScalar o1 = omega_1(cd, f);
      CHECK(o1.is_zero());
      CHECK(omega_v0(cd, ctx.area, f) == omega_0(cd, f));
    }
    SUBCASE("zero frame") {
      const CyclicFrame f{cd.zero(), cd.zero()};
      CHECK(omega_v0(cd, ctx.area, f).is_zero());
      CHECK(omega_0(cd, f).is_zero());
      CHECK(omega_1(cd, f).is_zero());
    }
    SUBCASE("Higgs frame") {
      const HiggsField phi =
          build_higgs_field(cd, ctx.triple, ctx.dec, {ExactScalar(Rat(0)), ExactScalar(Rat(1))});
      const CyclicFrame f{phi.value, -ctx.rho.apply(phi.value)};
      const ExactScalar lhs = omega_v0(cd, ctx.area, f);
      const ExactScalar rhs =
          omega_0(cd, f) - ExactScalar(ctx.area.k0) * omega_1(cd, f);
      CHECK(lhs == rhs);
    }
  }
}
