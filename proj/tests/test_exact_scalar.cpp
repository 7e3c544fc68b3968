#include <doctest.h>

#include <random>

#include "ctoda/exact_scalar.hpp"

using namespace ctoda;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, const std::shared_ptr<RadicalTower>& tower) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> mask(0, (1 << (tower->size() + 1)) - 1);
  std::vector<ExactScalar::Term> terms;
  for (int t = 0; t < 3; ++t)
    terms.push_back({static_cast<std::uint32_t>(mask(rng)), Rat(num(rng), den(rng))});
  return ExactScalar(tower, std::move(terms));
}

}  // namespace

TEST_SUITE("exact_scalar") {
  TEST_CASE("squarefree split") {
    auto [s, m] = squarefree_split(Int(72));
    CHECK(s == 6);
    CHECK(m == 2);
    CHECK(squarefree_split(Int(1)) == std::pair<Int, Int>{1, 1});
    CHECK_THROWS_AS(squarefree_split(Int(0)), EngineError);
  }

  TEST_CASE("adjoin perfect squares stays rational") {
    RadicalTower tower;
    auto [c1, m1] = tower.adjoin_sqrt(Rat(1));
    CHECK(c1 == 1);
    CHECK(m1 == 0);
    auto [c2, m2] = tower.adjoin_sqrt(Rat(9, 4));
    CHECK(c2 == Rat(3, 2));
    CHECK(m2 == 0);
    CHECK(tower.size() == 0);
  }

  TEST_CASE("adjoin sqrt(3/2) then sqrt(6) reuses the radicand") {
    auto tower = std::make_shared<RadicalTower>();
    auto [c1, m1] = tower->adjoin_sqrt(Rat(3, 2));  // sqrt(3/2) = sqrt(6)/2
    CHECK(tower->size() == 1);
    CHECK(tower->radicands()[0] == 6);
    auto [c2, m2] = tower->adjoin_sqrt(Rat(6));
    CHECK(tower->size() == 1);
    CHECK(m2 == m1);
    // Oracle: (2 * sqrt(3/2))^2 must equal 6 by exact multiplication.
    const ExactScalar r32 = ExactScalar::monomial(tower, m1, c1);
    const ExactScalar twice = r32 * ExactScalar(Rat(2));
    CHECK(twice * twice == ExactScalar(Rat(6)));
    // And sqrt(6) = 2 * sqrt(3/2).
    CHECK(ExactScalar::monomial(tower, m2, c2) == twice);
  }

  TEST_CASE("adjoin rejects nonpositive radicands") {
    RadicalTower tower;
    CHECK_THROWS_AS(tower.adjoin_sqrt(Rat(0)), EngineError);
    CHECK_THROWS_AS(tower.adjoin_sqrt(Rat(-3)), EngineError);
  }

  TEST_CASE("conjugation fixes radicals and flips i") {
    auto tower = std::make_shared<RadicalTower>();
    auto [c, m] = tower->adjoin_sqrt(Rat(2));
    const ExactScalar r2 = ExactScalar::monomial(tower, m, c);
    const ExactScalar z = ExactScalar(Rat(3)) + ExactScalar::i() * ExactScalar(Rat(2));
    CHECK(z.conj() == ExactScalar(Rat(3)) - ExactScalar::i() * ExactScalar(Rat(2)));
    CHECK(r2.conj() == r2);
    const ExactScalar ir32 = ExactScalar::i() * r2;
    CHECK(ir32.conj() == -ir32);
    CHECK(ir32.conj().conj() == ir32);
  }

  TEST_CASE("field axioms on random triples") {
    auto tower = std::make_shared<RadicalTower>();
    tower->adjoin_sqrt(Rat(2));
    tower->adjoin_sqrt(Rat(6));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
      const ExactScalar a = random_scalar(rng, tower);
      const ExactScalar b = random_scalar(rng, tower);
      const ExactScalar c = random_scalar(rng, tower);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == ExactScalar(Rat(1)));
        CHECK((b / a) * a == b);
      }
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
    }
  }

  TEST_CASE("numeric evaluation is consistent") {
    auto tower = std::make_shared<RadicalTower>();
    auto [c2, m2] = tower->adjoin_sqrt(Rat(2));
    const ExactScalar r2 = ExactScalar::monomial(tower, m2, c2);
    CHECK(ExactScalar(Rat(1, 2)).to_complex().real() == doctest::Approx(0.5));
    CHECK(r2.to_complex().real() == doctest::Approx(1.4142135623730951));
    CHECK(ExactScalar::i().to_complex().imag() == doctest::Approx(1.0));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const ExactScalar a = random_scalar(rng, tower);
      const ExactScalar b = random_scalar(rng, tower);
      const auto lhs = (a * b).to_complex();
      const auto rhs = a.to_complex() * b.to_complex();
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }

  TEST_CASE("string rendering") {
    auto tower = std::make_shared<RadicalTower>();
    auto [c, m] = tower->adjoin_sqrt(Rat(3, 2));
    const ExactScalar v = ExactScalar::monomial(tower, m, c);
    CHECK(v.str() == "(1/2)*sqrt(6)");
    CHECK(ExactScalar().str() == "0");
  }
}
