#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stsig {

// Raised when an operation that needs alpha+beta+gamma >= 2 is handed an
// elementary signature. Elementary signatures are representable (the groups
// exist) but the four-class classification does not apply to them.
class ElementarySignatureError : public std::domain_error {
 public:
  explicit ElementarySignatureError(const std::string& what)
      : std::domain_error(what) {}
};

// (alpha, beta, gamma): counts of loxodromic cyclic factors, rank-1 parabolic
// cyclic factors and rank-2 parabolic factors of a Schottky-type free product.
struct Signature {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;

  Signature() = default;
  Signature(std::int64_t a, std::int64_t b, std::int64_t g);

  std::int64_t sum() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

// The four quasiconformal classes of non-elementary signatures.
enum class CanonicalClass { Schottky, RankOneCusp, RankTwoCusp, MixedCusp };

bool is_elementary(const Signature& sig);

// Total on non-elementary signatures; throws ElementarySignatureError below
// the hypothesis. Schottky iff beta=gamma=0; rank-one cusp iff beta>=1,
// gamma=0; rank-two cusp iff beta=0, gamma>=1; mixed otherwise.
CanonicalClass classify(const Signature& sig);

bool qc_equivalent(const Signature& s1, const Signature& s2);

// chi of the quotient surface: 2 - 2(alpha+gamma) - 2 beta.
std::int64_t euler_characteristic(const Signature& sig);

struct QuotientSurface {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  friend bool operator==(const QuotientSurface&, const QuotientSurface&) = default;
};

// genus alpha+gamma, 2*beta punctures.
QuotientSurface quotient_surface(const Signature& sig);

// (2,0,0), (0,2,0), (0,0,2) or (0,1,1).
Signature representative(CanonicalClass cls);

// Token form used by the CLI and certificate files.
std::string to_string(CanonicalClass cls);
CanonicalClass canonical_class_from_string(std::string_view token);

// Text form "a,b,g", three base-10 integers, no spaces.
std::string to_string(const Signature& sig);
Signature parse_signature(std::string_view text);

}  // namespace stsig
