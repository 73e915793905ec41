#include "stsig/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "stsig/checked.hpp"

namespace stsig {

char to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  throw std::invalid_argument("bad Family value");
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
  }
}

std::size_t r_slots(Family f, const Signature& parent) {
  if (f == Family::B) return parent.beta > 0 ? static_cast<std::size_t>(parent.beta - 1) : 0;
  return static_cast<std::size_t>(parent.beta);
}

std::size_t s_slots(Family f, const Signature& parent) {
  if (f == Family::C) return parent.gamma > 0 ? static_cast<std::size_t>(parent.gamma - 1) : 0;
  return static_cast<std::size_t>(parent.gamma);
}

void validate(const ConstructionInstance& inst) {
  const Signature& p = inst.parent;
  if (is_elementary(p))
    throw ElementarySignatureError("construction parent " + to_string(p) +
                                   " is elementary");
  if (inst.n < 1) throw std::invalid_argument("construction degree n must be >= 1");
  switch (inst.family) {
    case Family::A:
      if (p.alpha < 1) throw std::invalid_argument("family A needs alpha >= 1");
      break;
    case Family::B:
      if (p.beta < 1) throw std::invalid_argument("family B needs beta >= 1");
      break;
    case Family::C:
      if (p.gamma < 1) throw std::invalid_argument("family C needs gamma >= 1");
      break;
  }
  if (inst.r.size() != r_slots(inst.family, p))
    throw std::invalid_argument("twist list r has the wrong length");
  if (inst.s.size() != s_slots(inst.family, p))
    throw std::invalid_argument("twist list s has the wrong length");
  for (std::int64_t x : inst.r)
    if (x < 0 || checked_mul(2, x) > inst.n)
      throw std::invalid_argument("twist r out of range: 0 <= 2r <= n required");
  for (std::int64_t x : inst.s)
    if (x < 0 || checked_mul(2, x) > inst.n)
      throw std::invalid_argument("twist s out of range: 0 <= 2s <= n required");
}

namespace {

std::int64_t checked_sum(const std::vector<std::int64_t>& xs) {
  std::int64_t acc = 0;
  for (std::int64_t x : xs) acc = checked_add(acc, x);
  return acc;
}

}  // namespace

Signature child_signature(const ConstructionInstance& inst) {
  validate(inst);
  const auto [pa, pb, pg] = inst.parent;
  const std::int64_t n = inst.n;
  const std::int64_t R = checked_sum(inst.r);
  const std::int64_t S = checked_sum(inst.s);
  switch (inst.family) {
    case Family::A:
      return {checked_add(checked_add(1, checked_mul(n, pa - 1)), checked_add(R, S)),
              checked_sub(checked_mul(n, pb), R),
              checked_sub(checked_mul(n, pg), S)};
    case Family::B:
      return {checked_add(checked_mul(n, pa), checked_add(R, S)),
              checked_sub(checked_add(1, checked_mul(n, pb - 1)), R),
              checked_sub(checked_mul(n, pg), S)};
    case Family::C:
      return {checked_add(checked_mul(n, pa), checked_add(R, S)),
              checked_sub(checked_mul(n, pb), R),
              checked_sub(checked_add(1, checked_mul(n, pg - 1)), S)};
  }
  throw std::invalid_argument("bad Family value");
}

GeneratorLetter designated_letter(Family f) {
  switch (f) {
    case Family::A: return {FactorKind::Loxodromic, 1, false};
    case Family::B: return {FactorKind::RankOneParabolic, 1, false};
    case Family::C: return {FactorKind::RankTwoParabolic, 1, true};  // D_1
  }
  throw std::invalid_argument("bad Family value");
}

ThetaSpec theta_of(const ConstructionInstance& inst) {
  validate(inst);
  const auto [pa, pb, pg] = inst.parent;
  // the image table holds one degree-n array per generator letter
  if (checked_mul(inst.n, pa + pb + 2 * pg) > 200'000'000)
    throw std::invalid_argument("instance image table too large: " + to_string(inst));
  const int n = static_cast<int>(inst.n);
  const Permutation id = Permutation::identity(n);
  const Permutation sigma = perm_cycle(n);

  std::vector<Permutation> lox(static_cast<std::size_t>(pa), id);
  std::vector<Permutation> p1(static_cast<std::size_t>(pb), id);
  std::vector<std::pair<Permutation, Permutation>> p2(static_cast<std::size_t>(pg),
                                                      {id, id});
  switch (inst.family) {
    case Family::A:
      lox[0] = sigma;
      for (std::size_t j = 0; j < inst.r.size(); ++j) p1[j] = perm_tau(n, inst.r[j]);
      for (std::size_t t = 0; t < inst.s.size(); ++t)
        p2[t].second = perm_tau(n, inst.s[t]);
      break;
    case Family::B:
      p1[0] = sigma;
      for (std::size_t j = 0; j < inst.r.size(); ++j)
        p1[j + 1] = perm_tau(n, inst.r[j]);
      for (std::size_t t = 0; t < inst.s.size(); ++t)
        p2[t].second = perm_tau(n, inst.s[t]);
      break;
    case Family::C:
      for (std::size_t j = 0; j < inst.r.size(); ++j) p1[j] = perm_tau(n, inst.r[j]);
      p2[0].second = sigma;
      for (std::size_t t = 0; t < inst.s.size(); ++t)
        p2[t + 1].second = perm_tau(n, inst.s[t]);
      break;
  }
  return ThetaSpec(inst.n, inst.parent, std::move(lox), std::move(p1), std::move(p2));
}

namespace {

// conj_pow(e) * letter^sign * conj_pow(-l): the conjugated entries of the
// printed lists, already reduced.
class ListBuilder {
 public:
  ListBuilder(const GeneratorLetter& conj) : conj_(to_syllable(conj)) {}

  Word head(std::int64_t n) const {
    return reduce_word(Word{{scaled(n)}});
  }

  Word conjugate(std::int64_t l, const GeneratorLetter& g, bool invert,
                 std::int64_t left_extra = 0) const {
    Syllable mid = to_syllable(g);
    if (invert) {
      mid.a = -mid.a;
      mid.b = -mid.b;
    }
    return reduce_word(Word{{scaled(l + left_extra), mid, scaled(-l)}});
  }

 private:
  Syllable scaled(std::int64_t e) const {
    return {conj_.factor, checked_mul(conj_.a, e), checked_mul(conj_.b, e)};
  }
  Syllable conj_;
};

}  // namespace

std::vector<Word> expected_generator_words(const ConstructionInstance& inst,
                                           bool verbatim_paper_list) {
  validate(inst);
  const auto [pa, pb, pg] = inst.parent;
  const std::int64_t n = inst.n;
  const ListBuilder lb(designated_letter(inst.family));
  std::vector<Word> out;

  const bool head_printed = inst.family != Family::B;
  if (head_printed || !verbatim_paper_list) out.push_back(lb.head(n));

  for (std::int64_t i = 1; i <= pa; ++i) {
    if (inst.family == Family::A && i == 1) continue;
    for (std::int64_t l = 0; l < n; ++l)
      out.push_back(lb.conjugate(l, {FactorKind::Loxodromic, i, false}, false));
  }
  // rank-1 letters: a full conjugate for every l fixed by tau_{r_j}, then the
  // paired entries over the printed even-step range
  for (std::int64_t j = 1; j <= pb; ++j) {
    if (inst.family == Family::B && j == 1) continue;
    const std::int64_t rj =
        inst.family == Family::B ? inst.r[static_cast<std::size_t>(j) - 2]
                                 : inst.r[static_cast<std::size_t>(j) - 1];
    const GeneratorLetter letter{FactorKind::RankOneParabolic, j, false};
    for (std::int64_t l = 0; l <= n - 2 * rj - 1; ++l)
      out.push_back(lb.conjugate(l, letter, false));
    for (std::int64_t l = n - 2 * rj; l <= n - 2; l += 2) {
      out.push_back(lb.conjugate(l, letter, false, 1));
      out.push_back(lb.conjugate(l, letter, true, 1));
    }
  }
  for (std::int64_t t = 1; t <= pg; ++t) {
    for (std::int64_t l = 0; l < n; ++l)
      out.push_back(lb.conjugate(l, {FactorKind::RankTwoParabolic, t, false}, false));
  }
  for (std::int64_t t = 1; t <= pg; ++t) {
    if (inst.family == Family::C && t == 1) continue;
    const std::int64_t st =
        inst.family == Family::C ? inst.s[static_cast<std::size_t>(t) - 2]
                                 : inst.s[static_cast<std::size_t>(t) - 1];
    const GeneratorLetter letter{FactorKind::RankTwoParabolic, t, true};
    for (std::int64_t l = 0; l <= n - 2 * st - 1; ++l)
      out.push_back(lb.conjugate(l, letter, false));
    for (std::int64_t l = n - 2 * st; l <= n - 2; l += 2) {
      out.push_back(lb.conjugate(l, letter, false, 1));
      out.push_back(lb.conjugate(l, letter, true, 1));
    }
  }
  return out;
}

std::string to_string(const ConstructionInstance& inst) {
  std::string out;
  out += to_char(inst.family);
  out += " n=" + std::to_string(inst.n) + " parent=" + to_string(inst.parent);
  auto append_list = [&out](const char* name, const std::vector<std::int64_t>& xs) {
    out += std::string(" ") + name + "=[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    out += ']';
  };
  append_list("r", inst.r);
  append_list("s", inst.s);
  return out;
}

}  // namespace stsig
