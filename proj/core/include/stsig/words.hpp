#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stsig/signature.hpp"

namespace stsig {

enum class FactorKind { Loxodromic, RankOneParabolic, RankTwoParabolic };

// One free factor of the product: <A_i>, <B_j> or <C_t, D_t>. Indices are
// 1-based within each kind.
struct FactorId {
  FactorKind kind = FactorKind::Loxodromic;
  std::int64_t index = 1;

  friend bool operator==(const FactorId&, const FactorId&) = default;
  friend auto operator<=>(const FactorId&, const FactorId&) = default;
};

// A maximal run of letters from one factor. For loxodromic and rank-1 factors
// the entry is A_i^a / B_j^a (b unused, kept 0). A rank-2 syllable is
// C_t^a D_t^b as a single pair; C_t and D_t commute, so the pair is a normal
// form. Zero syllables (a=b=0) are forbidden in reduced words.
struct Syllable {
  FactorId factor;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

Syllable syllable_a(std::int64_t index, std::int64_t exp);
Syllable syllable_b(std::int64_t index, std::int64_t exp);
Syllable syllable_cd(std::int64_t index, std::int64_t c_exp, std::int64_t d_exp);

struct Word {
  std::vector<Syllable> syllables;

  bool empty() const { return syllables.empty(); }
  std::size_t size() const { return syllables.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

enum class ElementType { Identity, Parabolic, Loxodromic };

// Merges adjacent same-factor syllables (component-wise for rank-2 pairs) and
// drops zero syllables. Idempotent, never lengthens a word.
Word reduce_word(const Word& w);

Word word_product(const Word& u, const Word& v);
Word word_inverse(const Word& u);

// Strips conjugating first/last syllable pairs until the ends lie in distinct
// factors or at most one syllable remains. Output is conjugate to the input.
Word cyclic_reduce(const Word& w);

// Identity / parabolic / loxodromic, by the free-product criterion: an
// element is conjugate into a factor iff its cyclic reduction is a single
// syllable, and parabolic elements are exactly those conjugate to powers of
// B_j, C_t, D_t. A single loxodromic-factor syllable or any cyclically
// reduced word of length >= 2 is loxodromic.
ElementType element_type(const Word& w);

// Grammar (whitespace-separated syllables): A<i>^<e>, B<j>^<e>,
// C<t>^<a>*D<t>^<b>; '^1' may be omitted; a rank-2 half with exponent 0 is
// omitted (but not both). "1" denotes the empty word. Parsed words are
// returned reduced.
Word parse_word(std::string_view text);
Word parse_word(std::string_view text, const Signature& ambient);
std::string format_word(const Word& w);

// Throws if any syllable index is out of range for the given signature.
void validate_indices(const Word& w, const Signature& ambient);

// A positive generator letter. `second` selects D_t over C_t for rank-2
// factors. Letter order used everywhere enumeration matters: A_1..A_alpha,
// B_1..B_beta, C_1..C_gamma, D_1..D_gamma.
struct GeneratorLetter {
  FactorKind kind = FactorKind::Loxodromic;
  std::int64_t index = 1;
  bool second = false;

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

Syllable to_syllable(const GeneratorLetter& g);
std::vector<GeneratorLetter> generator_letters(const Signature& sig);
std::string to_string(const GeneratorLetter& g);

}  // namespace stsig
