#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsig/signature.hpp"
#include "stsig/theta.hpp"
#include "stsig/words.hpp"

namespace stsig {

// The three index-n subgroup constructions. Each one sends a designated
// generator of the parent to the n-cycle sigma and the remaining generators
// to identity or to an involution tau_r:
//   A: designated A_1 (needs alpha >= 1), twists r_1..r_beta, s_1..s_gamma
//   B: designated B_1 (needs beta >= 1),  twists r_2..r_beta, s_1..s_gamma
//   C: designated D_1 (needs gamma >= 1), twists r_1..r_beta, s_2..s_gamma
enum class Family { A, B, C };

char to_char(Family f);
Family family_from_char(char c);

struct ConstructionInstance {
  Family family = Family::A;
  Signature parent;
  std::int64_t n = 1;
  std::vector<std::int64_t> r;  // one entry per twisted rank-1 factor
  std::vector<std::int64_t> s;  // one entry per twisted rank-2 factor

  friend bool operator==(const ConstructionInstance&, const ConstructionInstance&) = default;
};

// Expected twist-list lengths for a family/parent combination.
std::size_t r_slots(Family f, const Signature& parent);
std::size_t s_slots(Family f, const Signature& parent);

// Throws std::invalid_argument (or ElementarySignatureError for an elementary
// parent) when the instance breaks a family precondition, a list length or a
// twist bound 0 <= 2*r <= n.
void validate(const ConstructionInstance& inst);

// Closed-form signature of the index-n subgroup.
Signature child_signature(const ConstructionInstance& inst);

// The sigma/tau generator-image assignment of the instance. Always transitive.
ThetaSpec theta_of(const ConstructionInstance& inst);

// The printed generator list of the construction, as reduced words,
// parameterized by the printed exponent ranges. The family-B list as printed
// omits the head entry B_1^n even though the subgroup needs it; it is included
// unless `verbatim_paper_list` asks for the printed list as-is.
std::vector<Word> expected_generator_words(const ConstructionInstance& inst,
                                           bool verbatim_paper_list = false);

// The letter carrying sigma (A_1, B_1 or D_1).
GeneratorLetter designated_letter(Family f);

std::string to_string(const ConstructionInstance& inst);

}  // namespace stsig
