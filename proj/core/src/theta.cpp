#include "stsig/theta.hpp"

#include <stdexcept>

#include "json.hpp"

namespace stsig {

namespace {

// Keeps a hostile certificate or spec file from requesting multi-GB image
// arrays before validation has a chance to run.
constexpr std::int64_t kMaxDegree = 10'000'000;

void check_degree(const Permutation& p, std::int64_t n, const char* role) {
  if (p.degree() != n)
    throw std::invalid_argument(std::string(role) +
                                " image degree does not match n");
}

}  // namespace

ThetaSpec::ThetaSpec(std::int64_t n, Signature parent, std::vector<Permutation> lox,
                     std::vector<Permutation> p1,
                     std::vector<std::pair<Permutation, Permutation>> p2)
    : n_(n),
      parent_(parent),
      lox_(std::move(lox)),
      p1_(std::move(p1)),
      p2_(std::move(p2)) {
  if (n_ < 1) throw std::invalid_argument("theta degree n must be >= 1");
  if (n_ > kMaxDegree) throw std::invalid_argument("theta degree n too large");
  if (static_cast<std::int64_t>(lox_.size()) != parent_.alpha ||
      static_cast<std::int64_t>(p1_.size()) != parent_.beta ||
      static_cast<std::int64_t>(p2_.size()) != parent_.gamma)
    throw std::invalid_argument("image counts do not match the parent signature");
  for (const Permutation& p : lox_) check_degree(p, n_, "loxodromic");
  for (const Permutation& p : p1_) check_degree(p, n_, "rank-1");
  for (const auto& [c, d] : p2_) {
    check_degree(c, n_, "rank-2 C");
    check_degree(d, n_, "rank-2 D");
    if (perm_compose(c, d) != perm_compose(d, c))
      throw std::invalid_argument(
          "rank-2 images must commute (Theta must be a homomorphism on Z^2)");
  }
}

const Permutation& ThetaSpec::image(const GeneratorLetter& g) const {
  const auto idx = static_cast<std::size_t>(g.index) - 1;
  switch (g.kind) {
    case FactorKind::Loxodromic:
      if (g.index < 1 || g.index > parent_.alpha)
        throw std::invalid_argument("loxodromic letter index out of range");
      return lox_[idx];
    case FactorKind::RankOneParabolic:
      if (g.index < 1 || g.index > parent_.beta)
        throw std::invalid_argument("rank-1 letter index out of range");
      return p1_[idx];
    case FactorKind::RankTwoParabolic:
      if (g.index < 1 || g.index > parent_.gamma)
        throw std::invalid_argument("rank-2 letter index out of range");
      return g.second ? p2_[idx].second : p2_[idx].first;
  }
  throw std::invalid_argument("bad FactorKind value");
}

std::vector<Permutation> ThetaSpec::all_images() const {
  std::vector<Permutation> out;
  out.reserve(lox_.size() + p1_.size() + 2 * p2_.size());
  for (const auto& p : lox_) out.push_back(p);
  for (const auto& p : p1_) out.push_back(p);
  for (const auto& [c, d] : p2_) out.push_back(c);
  for (const auto& [c, d] : p2_) out.push_back(d);
  return out;
}

bool is_transitive(const ThetaSpec& theta) {
  const std::vector<Permutation> imgs = theta.all_images();
  return orbit_count(imgs, static_cast<int>(theta.degree())) == 1;
}

Permutation evaluate_word(const ThetaSpec& theta, const Word& w) {
  validate_indices(w, theta.parent());
  Permutation acc = Permutation::identity(static_cast<int>(theta.degree()));
  for (const Syllable& s : w.syllables) {
    Permutation part;
    switch (s.factor.kind) {
      case FactorKind::Loxodromic:
        part = perm_power(theta.lox_images()[static_cast<std::size_t>(s.factor.index) - 1], s.a);
        break;
      case FactorKind::RankOneParabolic:
        part = perm_power(theta.p1_images()[static_cast<std::size_t>(s.factor.index) - 1], s.a);
        break;
      case FactorKind::RankTwoParabolic: {
        const auto& [c, d] = theta.p2_images()[static_cast<std::size_t>(s.factor.index) - 1];
        part = perm_compose(perm_power(c, s.a), perm_power(d, s.b));
        break;
      }
    }
    acc = perm_compose(acc, part);
  }
  return acc;
}

namespace {

nlohmann::json perm_to_json(const Permutation& p) {
  return nlohmann::json(p.images());
}

Permutation perm_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("image array expected");
  return Permutation(j.get<std::vector<int>>());
}

}  // namespace

std::string theta_to_json(const ThetaSpec& theta) {
  nlohmann::json j;
  j["n"] = theta.degree();
  const Signature& p = theta.parent();
  j["parent"] = {p.alpha, p.beta, p.gamma};
  j["lox"] = nlohmann::json::array();
  for (const auto& q : theta.lox_images()) j["lox"].push_back(perm_to_json(q));
  j["p1"] = nlohmann::json::array();
  for (const auto& q : theta.p1_images()) j["p1"].push_back(perm_to_json(q));
  j["p2"] = nlohmann::json::array();
  for (const auto& [c, d] : theta.p2_images())
    j["p2"].push_back(nlohmann::json::array({perm_to_json(c), perm_to_json(d)}));
  return j.dump(2) + "\n";
}

ThetaSpec theta_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad theta JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("parent"))
    throw std::invalid_argument("theta JSON needs 'n' and 'parent'");
  const std::int64_t n = j.at("n").get<std::int64_t>();
  const auto pv = j.at("parent").get<std::vector<std::int64_t>>();
  if (pv.size() != 3) throw std::invalid_argument("parent must be [a,b,g]");
  const Signature parent(pv[0], pv[1], pv[2]);
  std::vector<Permutation> lox, p1;
  std::vector<std::pair<Permutation, Permutation>> p2;
  if (j.contains("lox"))
    for (const auto& e : j.at("lox")) lox.push_back(perm_from_json(e));
  if (j.contains("p1"))
    for (const auto& e : j.at("p1")) p1.push_back(perm_from_json(e));
  if (j.contains("p2"))
    for (const auto& e : j.at("p2")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("each p2 entry must be [[C images],[D images]]");
      p2.emplace_back(perm_from_json(e[0]), perm_from_json(e[1]));
    }
  return ThetaSpec(n, parent, std::move(lox), std::move(p1), std::move(p2));
}

}  // namespace stsig
