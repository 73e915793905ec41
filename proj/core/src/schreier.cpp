#include "stsig/schreier.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

namespace stsig {

int point_action(const Permutation& image, int p) {
  for (int k = 1; k <= image.degree(); ++k)
    if (image.image(k) == p) return k;
  throw std::invalid_argument("point out of range in point_action");
}

namespace {

// Per-letter image and preimage tables so the BFS and the generator scan
// act in O(1).
struct ActionTable {
  std::vector<GeneratorLetter> letters;
  std::vector<Permutation> fwd;  // Theta(g)
  std::vector<Permutation> inv;  // Theta(g)^{-1}

  ActionTable(const ThetaSpec& theta) : letters(generator_letters(theta.parent())) {
    fwd.reserve(letters.size());
    inv.reserve(letters.size());
    for (const GeneratorLetter& g : letters) {
      fwd.push_back(theta.image(g));
      inv.push_back(perm_inverse(fwd.back()));
    }
  }

  // p . g = Theta(g)^{-1}(p); p . g^{-1} = Theta(g)(p)
  int act(std::size_t letter_idx, int p) const { return inv[letter_idx].image(p); }
  int act_inverse_letter(std::size_t letter_idx, int p) const {
    return fwd[letter_idx].image(p);
  }
};

}  // namespace

Transversal schreier_transversal(const ThetaSpec& theta,
                                 const std::optional<GeneratorLetter>& designated) {
  const int n = static_cast<int>(theta.degree());
  const int basepoint = n;
  Transversal t;
  t.basepoint = basepoint;
  t.words.assign(static_cast<std::size_t>(n), Word{});

  if (designated.has_value()) {
    const Permutation& img = theta.image(*designated);
    const std::array<Permutation, 1> gens{img};
    if (orbit_count(gens, n) != 1)
      throw std::invalid_argument("designated generator image is not an n-cycle");
    const Permutation inv = perm_inverse(img);
    const Syllable unit = to_syllable(*designated);
    int p = basepoint;
    for (std::int64_t e = 1; e < n; ++e) {
      p = inv.image(p);
      t.words[static_cast<std::size_t>(p) - 1] =
          Word{{Syllable{unit.factor, unit.a * e, unit.b * e}}};
    }
    return t;
  }

  const ActionTable table(theta);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[static_cast<std::size_t>(basepoint) - 1] = true;
  std::deque<int> queue{basepoint};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (std::size_t li = 0; li < table.letters.size(); ++li) {
      for (int sign : {+1, -1}) {
        const int q = sign > 0 ? table.act(li, p) : table.act_inverse_letter(li, p);
        if (seen[static_cast<std::size_t>(q) - 1]) continue;
        seen[static_cast<std::size_t>(q) - 1] = true;
        ++reached;
        Syllable step = to_syllable(table.letters[li]);
        step.a *= sign;
        step.b *= sign;
        t.words[static_cast<std::size_t>(q) - 1] = word_product(
            t.words[static_cast<std::size_t>(p) - 1], Word{{step}});
        queue.push_back(q);
      }
    }
  }
  if (reached != static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "theta image is not transitive: transversal cannot reach every point");
  return t;
}

std::vector<Word> schreier_generators(const ThetaSpec& theta, const Transversal& t) {
  const int n = static_cast<int>(theta.degree());
  if (static_cast<int>(t.words.size()) != n)
    throw std::invalid_argument("transversal size does not match theta degree");
  // transversal words must carry the basepoint where they claim
  for (int p = 1; p <= n; ++p) {
    const Permutation img = evaluate_word(theta, t.words[static_cast<std::size_t>(p) - 1]);
    if (point_action(img, t.basepoint) != p)
      throw std::invalid_argument("transversal word for point " + std::to_string(p) +
                                  " does not carry the basepoint there");
  }
  const ActionTable table(theta);
  std::vector<Word> out;
  for (std::size_t li = 0; li < table.letters.size(); ++li) {
    const Word letter_word{{to_syllable(table.letters[li])}};
    for (int p = n; p >= 1; --p) {
      const int q = table.act(li, p);
      const Word w = word_product(
          word_product(t.words[static_cast<std::size_t>(p) - 1], letter_word),
          word_inverse(t.words[static_cast<std::size_t>(q) - 1]));
      if (!w.empty()) out.push_back(w);
    }
  }
  return out;
}

namespace {

// Orders a word against its inverse: by factor sequence, then positive
// exponents before negative at equal magnitude, so the stored representative
// of an {w, w^-1} pair reads naturally (B1^2 rather than B1^-2).
bool display_less(const Word& x, const Word& y) {
  const std::size_t len = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Syllable& sx = x.syllables[i];
    const Syllable& sy = y.syllables[i];
    if (sx.factor != sy.factor) return sx.factor < sy.factor;
    const auto rank = [](std::int64_t v) {
      return std::pair{v < 0 ? std::int64_t{1} : std::int64_t{0},
                       v < 0 ? -v : v};
    };
    if (sx.a != sy.a) return rank(sx.a) < rank(sy.a);
    if (sx.b != sy.b) return rank(sx.b) < rank(sy.b);
  }
  return x.size() < y.size();
}

Word canonical_key(const Word& w) {
  Word a = reduce_word(w);
  Word b = word_inverse(a);
  return display_less(a, b) ? a : b;
}

}  // namespace

GeneratingSetDiff compare_generating_sets(const std::vector<Word>& xs,
                                          const std::vector<Word>& ys) {
  std::map<Word, std::int64_t> balance;
  for (const Word& x : xs) balance[canonical_key(x)] += 1;
  for (const Word& y : ys) balance[canonical_key(y)] -= 1;
  GeneratingSetDiff diff;
  std::size_t total_left = 0;
  for (const auto& [key, count] : balance) {
    for (std::int64_t i = 0; i < count; ++i) diff.only_left.push_back(key);
    for (std::int64_t i = 0; i < -count; ++i) diff.only_right.push_back(key);
  }
  total_left = xs.size();
  diff.matched = total_left - diff.only_left.size();
  return diff;
}

TypeCensus generator_type_census(const std::vector<Word>& ws) {
  TypeCensus census;
  for (const Word& w : ws) {
    switch (element_type(w)) {
      case ElementType::Identity: ++census.identity; break;
      case ElementType::Parabolic: ++census.parabolic; break;
      case ElementType::Loxodromic: ++census.loxodromic; break;
    }
  }
  return census;
}

}  // namespace stsig
