#include "doctest.h"
#include "oracles.hpp"
#include "wittcenter/random.hpp"
#include "wittcenter/weyl.hpp"

using namespace wittcenter;

namespace {

WeylElement E(const char* text, unsigned p, unsigned level, unsigned d = 1) {
  return parse_weyl(text, WeylParams{p, level, d});
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("normal ordering") {
  CHECK(E("d1*x1", 5, 2) == E("x1*d1 + 1", 5, 2));
  CHECK((E("d1^2", 5, 2) * E("x1^2", 5, 2)) == E("x1^2*d1^2 + 4*x1*d1 + 2", 5, 2));
  CHECK(weyl_pow(E("x1*d1", 5, 2), 2) == E("x1^2*d1^2 + x1*d1", 5, 2));
  CHECK(E("d1*x1", 5, 2).to_string() == "x1*d1 + 1");
  CHECK(E("d2*x1*x2", 3, 0, 2) == E("x1*x2*d2 + x1", 3, 0, 2));
}

TEST_CASE("commutators") {
  CHECK(commutator(E("d1^3", 3, 2), E("x1^3", 3, 2)).to_string() == "9*x1^2*d1^2 + 18*x1*d1 + 6");
  CHECK(commutator(E("d1^2", 2, 2), E("x1^2", 2, 2)) == E("4*x1*d1 + 2", 2, 2));
  const auto u = E("3*x1^2*d1 + d1^4 + 7", 3, 2);
  CHECK(commutator(u, u).is_zero());
  CHECK(commutator(E("d1", 3, 1, 2), E("x2", 3, 1, 2)).is_zero());
}

TEST_CASE("powers") {
  CHECK(weyl_pow(E("x1^3", 3, 1), 3) == E("x1^9", 3, 1));
  CHECK(weyl_pow(E("x1^2*d1^2", 2, 1), 2) == E("x1^4*d1^4 + 2*x1^2*d1^2", 2, 1));
  CHECK(weyl_pow(E("x1 + d1", 3, 1), 0) == E("1", 3, 1));
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const auto u = random_weyl(rng, {3, 1, 1}, 3, 3);
    CHECK(weyl_pow(u, 5) == u * u * u * u * u);
  }
}

TEST_CASE("level changes") {
  const auto c = commutator(E("d1^3", 3, 2), E("x1^3", 3, 2));
  const auto q = weyl_pdiv(c, 1);
  CHECK(q == E("3*x1^2*d1^2 + 6*x1*d1 + 2", 3, 1));
  CHECK(q.params().level == 1);
  CHECK(weyl_reduce(q, 0) == E("2", 3, 0));
  CHECK(weyl_reduce(q, 1) == q);
  CHECK_THROWS_AS(weyl_pdiv(E("x1 + 3", 3, 1), 1), DivisibilityError);
  CHECK_THROWS_AS(weyl_reduce(q, 2), RangeError);
  CHECK(E("2*x1", 3, 0).lifted(2) == E("2*x1", 3, 2));
}

TEST_CASE("centrality") {
  CHECK(is_central(E("x1^3", 3, 0)));
  CHECK_FALSE(is_central(E("x1", 3, 0)));
  CHECK(is_central(E("x1^9", 3, 1)));
  CHECK_FALSE(is_central(E("x1^3", 3, 1)));
  CHECK(is_central(E("3*x1^3 + x1^9", 3, 1)));
  CHECK(is_central(E("x1^2*d2^2", 2, 0, 2)));
  CHECK_FALSE(is_central(E("x1^2*d2", 2, 0, 2)));
}

TEST_CASE("degree filtration") {
  const auto one = monomials_up_to(1, 1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].to_string() == "1");
  CHECK(one[1].to_string() == "x1");
  CHECK(one[2].to_string() == "d1");
  std::vector<std::string> two;
  for (const auto& m : monomials_up_to(1, 2)) two.push_back(m.to_string());
  CHECK(two == std::vector<std::string>{"1", "x1", "d1", "x1^2", "x1*d1", "d1^2"});
  CHECK(E("x1^2*d1^3", 3, 0).total_degree() == 5);
  CHECK(E("0", 3, 0).total_degree() == -1);
  CHECK(monomials_up_to(2, 3).size() == 35);
}

TEST_CASE("parameters are checked") {
  CHECK_THROWS_AS(E("x1", 3, 0) + E("x1", 3, 1), StructuralError);
  CHECK_THROWS_AS(E("x1", 3, 0) * E("x1", 5, 0), StructuralError);
  CHECK_THROWS_AS(E("x1", 3, 0, 1) * E("x1", 3, 0, 2), StructuralError);
  CHECK_THROWS(E("x1", 3, 0, 5));
  CHECK_THROWS_AS(E("x2", 3, 0, 1), ParseError);
  CHECK_THROWS_AS(E("x1 +", 3, 0, 1), ParseError);
}

TEST_CASE("print and parse round-trip") {
  Rng rng(52);
  for (unsigned p : {2U, 3U, 5U}) {
    for (unsigned d = 1; d <= 3; ++d) {
      for (int t = 0; t < 10; ++t) {
        const WeylParams params{p, uniform(rng, 0, 2), d};
        const auto u = random_weyl(rng, params, 6, 5);
        CHECK(parse_weyl(u.to_string(), params) == u);
      }
    }
  }
}

TEST_CASE("product agrees with the action oracle") {
  Rng rng(53);
  for (unsigned p : {2U, 3U}) {
    for (unsigned d = 1; d <= 2; ++d) {
      for (int t = 0; t < 25; ++t) {
        const WeylParams params{p, uniform(rng, 0, 2), d};
        const auto u = random_weyl(rng, params, 4, 4);
        const auto v = random_weyl(rng, params, 4, 4);
        const auto uv = u * v;
        CHECK(uv == oracle::multiply(u, v));
        CHECK(oracle::same_action(u, v, uv, 10));
      }
    }
  }
}

TEST_CASE("associativity and distributivity") {
  Rng rng(54);
  for (int t = 0; t < 30; ++t) {
    const WeylParams params{t % 2 ? 2U : 3U, 1, 1 + static_cast<unsigned>(t % 3)};
    const auto a = random_weyl(rng, params, 3, 3);
    const auto b = random_weyl(rng, params, 3, 3);
    const auto c = random_weyl(rng, params, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

}
