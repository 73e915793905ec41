#pragma once

#include "stsig/signature.hpp"
#include "stsig/theta.hpp"

namespace stsig {

// Signature of Theta^{-1}(Stab(basepoint)), computed from permutation orbits
// alone via the Kurosh decomposition of a finite-index subgroup of a free
// product:
//   beta'  = sum over rank-1 factors of #orbits(Theta(B_j))
//   gamma' = sum over rank-2 factors of #orbits(<Theta(C_t), Theta(D_t)>)
//   L      = sum over loxodromic factors of #orbits(Theta(A_i))
//   rho    = 1 + n(k-1) - (L + beta' + gamma'),  k = alpha+beta+gamma
//   alpha' = rho + L
// Each factor-orbit of size d contributes one conjugate of the d-th power
// subgroup, preserving the factor's type; the free part of rank rho can be
// generated by loxodromic elements (no free-part generator is conjugate into
// a parabolic factor), so it counts toward alpha'.
//
// Works for arbitrary commuting-valid transitive theta, not only the sigma/tau
// patterns of the constructions. Throws on a non-transitive theta (the
// subgroup would have index > n), an elementary parent, or a basepoint
// outside 1..n. The result does not depend on the basepoint: the action is
// transitive, so all point stabilizers are conjugate.
Signature stabilizer_signature(const Signature& parent, const ThetaSpec& theta,
                               int basepoint);

}  // namespace stsig
