#include "stsig/kurosh.hpp"

#include "doctest.h"
#include "stsig/constructions.hpp"
#include "stsig/sweep.hpp"

using namespace stsig;

TEST_CASE("oracle fixtures") {
  // construction A patterns
  const ThetaSpec a_theta = theta_of({Family::A, {2, 0, 0}, 3, {}, {}});
  CHECK(stabilizer_signature({2, 0, 0}, a_theta, 3) == Signature{4, 0, 0});

  const ThetaSpec b_theta = theta_of({Family::B, {0, 2, 0}, 2, {1}, {}});
  CHECK(stabilizer_signature({0, 2, 0}, b_theta, 2) == Signature{1, 2, 0});

  // not a construction pattern: all three images the same 3-cycle
  const Permutation sigma = perm_cycle(3);
  const ThetaSpec weird(3, {1, 0, 1}, {sigma}, {}, {{sigma, sigma}});
  const Signature child = stabilizer_signature({1, 0, 1}, weird, 3);
  CHECK(child == Signature{3, 0, 1});
  CHECK(euler_characteristic(child) == 3 * euler_characteristic({1, 0, 1}));

  // trivial cover
  const ThetaSpec trivial = theta_of({Family::A, {1, 1, 0}, 1, {0}, {}});
  CHECK(stabilizer_signature({1, 1, 0}, trivial, 1) == Signature{1, 1, 0});
}

TEST_CASE("oracle rejects bad inputs") {
  const Permutation id2 = Permutation::identity(2);
  const ThetaSpec intransitive(2, {2, 0, 0}, {id2, id2}, {}, {});
  CHECK_THROWS_AS(stabilizer_signature({2, 0, 0}, intransitive, 2),
                  std::invalid_argument);

  const ThetaSpec ok = theta_of({Family::A, {2, 0, 0}, 2, {}, {}});
  CHECK_THROWS_AS(stabilizer_signature({2, 0, 0}, ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_signature({2, 0, 0}, ok, 3), std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_signature({1, 1, 0}, ok, 2), std::invalid_argument);
}

TEST_CASE("oracle equals the closed form over a small exhaustive sweep") {
  for (const ConstructionInstance& inst : enumerate_instances(3, 4)) {
    const Signature formula = child_signature(inst);
    const Signature oracle =
        stabilizer_signature(inst.parent, theta_of(inst), static_cast<int>(inst.n));
    CHECK(oracle == formula);
  }
}

TEST_CASE("basepoint independence") {
  const std::vector<ConstructionInstance> cases = {
      {Family::A, {1, 1, 1}, 4, {1}, {2}},
      {Family::B, {1, 2, 1}, 5, {1}, {2}},
      {Family::C, {0, 1, 2}, 6, {3}, {2}},
  };
  for (const ConstructionInstance& inst : cases) {
    const ThetaSpec theta = theta_of(inst);
    const Signature at_n =
        stabilizer_signature(inst.parent, theta, static_cast<int>(inst.n));
    for (int basepoint = 1; basepoint <= inst.n; ++basepoint)
      CHECK(stabilizer_signature(inst.parent, theta, basepoint) == at_n);
  }
}

TEST_CASE("free rank is zero exactly when only the sigma carrier moves points") {
  // every non-sigma image identity => alpha' = 1 + n(alpha-1) via L alone
  const ThetaSpec theta = theta_of({Family::A, {3, 1, 1}, 4, {0}, {0}});
  const Signature child = stabilizer_signature({3, 1, 1}, theta, 4);
  CHECK(child == Signature{9, 4, 4});  // rho == 0: alpha' = L = 1 + 4*2

  // arbitrary transitive theta keeps euler multiplicativity and rho >= 0
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Signature parent{1, 1, 1};
    const std::int64_t n = 1 + static_cast<std::int64_t>(seed % 6);
    const ThetaSpec theta_r = random_theta(parent, n, seed);
    const Signature child_r = stabilizer_signature(parent, theta_r, static_cast<int>(n));
    CHECK(euler_characteristic(child_r) == n * euler_characteristic(parent));
  }
}
