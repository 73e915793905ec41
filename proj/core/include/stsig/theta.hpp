#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stsig/permutation.hpp"
#include "stsig/signature.hpp"
#include "stsig/words.hpp"

namespace stsig {

// Generator-image assignment for a homomorphism Theta into S_n: one
// permutation per loxodromic and rank-1 factor, a commuting pair per rank-2
// factor. Construction checks degrees, counts against the parent signature
// and commutation of every rank-2 pair; transitivity is NOT an invariant and
// is queried separately, so non-transitive assignments can be built and then
// rejected with a diagnostic where they are illegal.
class ThetaSpec {
 public:
  ThetaSpec(std::int64_t n, Signature parent, std::vector<Permutation> lox,
            std::vector<Permutation> p1,
            std::vector<std::pair<Permutation, Permutation>> p2);

  std::int64_t degree() const { return n_; }
  const Signature& parent() const { return parent_; }
  const std::vector<Permutation>& lox_images() const { return lox_; }
  const std::vector<Permutation>& p1_images() const { return p1_; }
  const std::vector<std::pair<Permutation, Permutation>>& p2_images() const {
    return p2_;
  }

  const Permutation& image(const GeneratorLetter& g) const;

  // All generator images in letter order (C images before D images).
  std::vector<Permutation> all_images() const;

 private:
  std::int64_t n_ = 1;
  Signature parent_;
  std::vector<Permutation> lox_;
  std::vector<Permutation> p1_;
  std::vector<std::pair<Permutation, Permutation>> p2_;
};

bool is_transitive(const ThetaSpec& theta);

// Theta extended to words: evaluate_word(uv) == perm_compose(evaluate_word(u),
// evaluate_word(v)). Indices must be in range for theta's parent.
Permutation evaluate_word(const ThetaSpec& theta, const Word& w);

// JSON wire format:
//   { "n": int, "parent": [a,b,g], "lox": [[img...],...],
//     "p1": [[img...],...], "p2": [[[imgC...],[imgD...]],...] }
// with image arrays listing the images of points 1..n in order.
std::string theta_to_json(const ThetaSpec& theta);
ThetaSpec theta_from_json(const std::string& text);

}  // namespace stsig
