#include "stsig/signature.hpp"

#include <charconv>

#include "stsig/checked.hpp"

namespace stsig {

Signature::Signature(std::int64_t a, std::int64_t b, std::int64_t g)
    : alpha(a), beta(b), gamma(g) {
  if (a < 0 || b < 0 || g < 0)
    throw std::invalid_argument("signature components must be non-negative");
}

std::int64_t Signature::sum() const {
  return checked_add(checked_add(alpha, beta), gamma);
}

bool is_elementary(const Signature& sig) { return sig.sum() <= 1; }

CanonicalClass classify(const Signature& sig) {
  if (is_elementary(sig))
    throw ElementarySignatureError(
        "signature " + to_string(sig) +
        " is elementary (alpha+beta+gamma <= 1), outside the classification hypothesis");
  if (sig.beta == 0 && sig.gamma == 0) return CanonicalClass::Schottky;
  if (sig.gamma == 0) return CanonicalClass::RankOneCusp;
  if (sig.beta == 0) return CanonicalClass::RankTwoCusp;
  return CanonicalClass::MixedCusp;
}

bool qc_equivalent(const Signature& s1, const Signature& s2) {
  return classify(s1) == classify(s2);
}

std::int64_t euler_characteristic(const Signature& sig) {
  const std::int64_t handles = checked_add(sig.alpha, sig.gamma);
  return checked_sub(2, checked_mul(2, checked_add(handles, sig.beta)));
}

QuotientSurface quotient_surface(const Signature& sig) {
  return {checked_add(sig.alpha, sig.gamma), checked_mul(2, sig.beta)};
}

Signature representative(CanonicalClass cls) {
  switch (cls) {
    case CanonicalClass::Schottky: return {2, 0, 0};
    case CanonicalClass::RankOneCusp: return {0, 2, 0};
    case CanonicalClass::RankTwoCusp: return {0, 0, 2};
    case CanonicalClass::MixedCusp: return {0, 1, 1};
  }
  throw std::invalid_argument("bad CanonicalClass value");
}

std::string to_string(CanonicalClass cls) {
  switch (cls) {
    case CanonicalClass::Schottky: return "SCHOTTKY";
    case CanonicalClass::RankOneCusp: return "RANK_ONE_CUSP";
    case CanonicalClass::RankTwoCusp: return "RANK_TWO_CUSP";
    case CanonicalClass::MixedCusp: return "MIXED_CUSP";
  }
  throw std::invalid_argument("bad CanonicalClass value");
}

CanonicalClass canonical_class_from_string(std::string_view token) {
  if (token == "SCHOTTKY") return CanonicalClass::Schottky;
  if (token == "RANK_ONE_CUSP") return CanonicalClass::RankOneCusp;
  if (token == "RANK_TWO_CUSP") return CanonicalClass::RankTwoCusp;
  if (token == "MIXED_CUSP") return CanonicalClass::MixedCusp;
  throw std::invalid_argument("unknown canonical class token: " + std::string(token));
}

std::string to_string(const Signature& sig) {
  return std::to_string(sig.alpha) + "," + std::to_string(sig.beta) + "," +
         std::to_string(sig.gamma);
}

namespace {

std::int64_t parse_component(std::string_view part) {
  std::int64_t value = 0;
  const char* first = part.data();
  const char* last = part.data() + part.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || part.empty())
    throw std::invalid_argument("malformed signature component: '" + std::string(part) + "'");
  return value;
}

}  // namespace

Signature parse_signature(std::string_view text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
      text.find(',', c2 + 1) != std::string_view::npos)
    throw std::invalid_argument("signature must have the form a,b,g: '" + std::string(text) + "'");
  const std::int64_t a = parse_component(text.substr(0, c1));
  const std::int64_t b = parse_component(text.substr(c1 + 1, c2 - c1 - 1));
  const std::int64_t g = parse_component(text.substr(c2 + 1));
  return {a, b, g};
}

}  // namespace stsig
