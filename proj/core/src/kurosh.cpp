#include "stsig/kurosh.hpp"

#include <array>
#include <stdexcept>

#include "stsig/checked.hpp"
#include "stsig/permutation.hpp"

namespace stsig {

Signature stabilizer_signature(const Signature& parent, const ThetaSpec& theta,
                               int basepoint) {
  if (theta.parent() != parent)
    throw std::invalid_argument("theta was built for a different parent signature");
  if (is_elementary(parent))
    throw ElementarySignatureError("oracle parent " + to_string(parent) +
                                   " is elementary");
  if (basepoint < 1 || basepoint > theta.degree())
    throw std::invalid_argument("basepoint out of range 1..n");
  if (!is_transitive(theta))
    throw std::invalid_argument(
        "theta image is not transitive: the stabilizer preimage has index > n");

  const int n = static_cast<int>(theta.degree());
  std::int64_t lox_orbits = 0, beta_child = 0, gamma_child = 0;
  for (const Permutation& p : theta.lox_images()) {
    const std::array<Permutation, 1> gens{p};
    lox_orbits = checked_add(lox_orbits,
                             static_cast<std::int64_t>(orbit_count(gens, n)));
  }
  for (const Permutation& p : theta.p1_images()) {
    const std::array<Permutation, 1> gens{p};
    beta_child = checked_add(beta_child,
                             static_cast<std::int64_t>(orbit_count(gens, n)));
  }
  for (const auto& [c, d] : theta.p2_images()) {
    const std::array<Permutation, 2> gens{c, d};
    gamma_child = checked_add(gamma_child,
                              static_cast<std::int64_t>(orbit_count(gens, n)));
  }

  const std::int64_t k = parent.sum();
  const std::int64_t m = checked_add(lox_orbits, checked_add(beta_child, gamma_child));
  const std::int64_t rho =
      checked_sub(checked_add(1, checked_mul(theta.degree(), k - 1)), m);
  if (rho < 0)
    throw std::logic_error("negative free rank in Kurosh count (internal error)");
  return {checked_add(rho, lox_orbits), beta_child, gamma_child};
}

}  // namespace stsig
