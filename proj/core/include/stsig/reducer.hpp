#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsig/constructions.hpp"
#include "stsig/signature.hpp"

namespace stsig {

// One finite-index edge of a certificate. Down: `from` is the instance's
// parent and `to` its child; Up: the reverse. Either orientation witnesses
// the same quasiconformal equivalence, since parent and finite-index subgroup
// share their region of discontinuity.
enum class StepDirection { Down, Up };

struct CertificateStep {
  ConstructionInstance instance;
  StepDirection direction = StepDirection::Down;
  Signature from;
  Signature to;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

// A machine-checkable chain of construction edges from `input` to the
// representative of its canonical class. Empty chain iff the input already is
// the representative.
struct Certificate {
  Signature input;
  CanonicalClass canonical = CanonicalClass::Schottky;
  std::vector<CertificateStep> steps;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Deterministic reduction of any non-elementary signature to its class
// representative. Throws ElementarySignatureError below the hypothesis and
// std::invalid_argument above 1e6 per component (instances carry one twist
// per cusp factor, so larger certificates stop being practical artifacts).
// Every produced chain satisfies chain_length_bound for inputs with
// components <= 20.
Certificate reduce_to_canonical(const Signature& sig);

// Iterated n=2 family-A steps raising the smaller cusp count until
// beta == gamma == max(beta, gamma); needs alpha, beta, gamma >= 1. Returns
// the partial chain (empty when already balanced).
std::vector<CertificateStep> balance_cusps(const Signature& sig);

struct VerifyReport {
  bool ok = true;
  std::string message = "ok";
  std::optional<std::size_t> failed_step;
};

// Re-validates every instance, recomputes each step's child via the closed
// form AND the orbit oracle, and checks chaining, class invariance and the
// canonical endpoint. The first failure is reported, never thrown.
VerifyReport verify_certificate(const Certificate& cert);

// |beta-gamma| + 2*ceil(log2(alpha+2)) + 12; the termination oracle enforced
// by the reduction sweep.
std::int64_t chain_length_bound(const Signature& sig);

}  // namespace stsig
