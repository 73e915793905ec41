#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stsig/words.hpp"

namespace stsig {

// Permutation of {1..n}, stored as the image array: images()[k-1] is the
// image of point k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int p) const { return images_[static_cast<std::size_t>(p) - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// p followed after q: (p o q)(x) = p(q(x)). Word evaluation composes
// left-to-right word order into this, see evaluate_word.
Permutation perm_compose(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);

// Cycle-based, O(n) for any exponent.
Permutation perm_power(const Permutation& p, std::int64_t e);

// sigma = (1,2,...,n): k -> k+1, n -> 1.
Permutation perm_cycle(int n);

// tau_r = (1,2)(3,4)...(2r-1,2r); requires 0 <= 2r <= n.
Permutation perm_tau(int n, std::int64_t r);

// Partition of {1..n} into orbits of the group generated by `perms`
// (connected components of the union of the functional graphs). Blocks and
// their contents come out sorted. All permutations must have degree n.
std::vector<std::vector<int>> orbits(std::span<const Permutation> perms, int degree);
std::vector<std::vector<int>> orbits(std::span<const Permutation> perms);

std::size_t orbit_count(std::span<const Permutation> perms, int degree);

}  // namespace stsig
