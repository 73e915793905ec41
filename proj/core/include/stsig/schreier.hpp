#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stsig/theta.hpp"
#include "stsig/words.hpp"

namespace stsig {

// Coset representatives, one word per point; the basepoint's word is empty
// and every t_p carries the basepoint to p under the point action.
//
// Point action convention: a word w moves p to Theta(w)^{-1}(p). This is a
// right action (p.(uv) = (p.u).v) and with basepoint n it makes the
// designated transversal come out as t_p = g^{(n-p) mod n}, which is exactly
// the exponent bookkeeping of the printed generator lists.
struct Transversal {
  std::vector<Word> words;  // words[p-1] represents point p
  int basepoint = 1;
};

int point_action(const Permutation& image, int p);

// Designated form: t_p = designated^e with the unique e in {0..n-1} carrying
// the basepoint to p; requires the designated letter's image to be an
// n-cycle. Without a designated letter: breadth-first search from the
// basepoint over generator edges, letters in fixed order (A, B, C, D,
// ascending index), positive letter before its inverse.
Transversal schreier_transversal(const ThetaSpec& theta,
                                 const std::optional<GeneratorLetter>& designated);

// Schreier's lemma: t_p * g * t_{p.g}^{-1} over all points and letters,
// reduced, identity words dropped. Exactly n-1 drops (the tree edges) occur
// for a designated-power transversal. Enumeration order: letters in fixed
// order, points from the basepoint's exponent 0 upward (p = n down to 1).
std::vector<Word> schreier_generators(const ThetaSpec& theta, const Transversal& t);

// Multiset comparison where u matches v iff reduce(u) == reduce(v) or
// reduce(u) == reduce(inverse(v)).
struct GeneratingSetDiff {
  std::size_t matched = 0;
  std::vector<Word> only_left;
  std::vector<Word> only_right;

  bool full_match() const { return only_left.empty() && only_right.empty(); }
};

GeneratingSetDiff compare_generating_sets(const std::vector<Word>& xs,
                                          const std::vector<Word>& ys);

struct TypeCensus {
  std::int64_t identity = 0;
  std::int64_t parabolic = 0;
  std::int64_t loxodromic = 0;

  friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

TypeCensus generator_type_census(const std::vector<Word>& ws);

}  // namespace stsig
