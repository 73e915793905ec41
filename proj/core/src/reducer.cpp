#include "stsig/reducer.hpp"

#include <bit>
#include <stdexcept>

#include "stsig/checked.hpp"
#include "stsig/kurosh.hpp"

namespace stsig {

namespace {

std::vector<std::int64_t> ones_first(std::int64_t total, std::int64_t slots) {
  if (total < 0 || total > slots)
    throw std::logic_error("reducer: twist total out of range");
  std::vector<std::int64_t> out(static_cast<std::size_t>(slots), 0);
  for (std::int64_t i = 0; i < total; ++i) out[static_cast<std::size_t>(i)] = 1;
  return out;
}

std::vector<std::int64_t> zeros(std::int64_t slots) { return ones_first(0, slots); }

struct ChainBuilder {
  Signature cur;
  std::vector<CertificateStep> steps;

  void down(Family f, std::int64_t n, std::vector<std::int64_t> r,
            std::vector<std::int64_t> s) {
    ConstructionInstance inst{f, cur, n, std::move(r), std::move(s)};
    const Signature c = child_signature(inst);
    steps.push_back({std::move(inst), StepDirection::Down, cur, c});
    cur = c;
  }

  void up(Family f, const Signature& parent, std::int64_t n,
          std::vector<std::int64_t> r, std::vector<std::int64_t> s) {
    ConstructionInstance inst{f, parent, n, std::move(r), std::move(s)};
    const Signature c = child_signature(inst);
    if (c != cur)
      throw std::logic_error("reducer: up edge child " + to_string(c) +
                             " does not match current signature " + to_string(cur));
    steps.push_back({std::move(inst), StepDirection::Up, cur, parent});
    cur = parent;
  }
};

// beta=gamma=0, alpha >= 3: one up edge to the rank-two Schottky group.
void reduce_schottky(ChainBuilder& cb) {
  cb.up(Family::A, {2, 0, 0}, cb.cur.alpha - 1, {}, {});
}

// gamma=0, beta >= 1. Anchor (1,1,0), bridge (1,2,0), representative (0,2,0).
// While alpha > beta+1, n=2 up edges through family B halve the scale; the
// parent splits its total (a+b+1)/2 between alpha and beta freely (the twist
// sum absorbs the difference), so beta is steered straight into the zone
// alpha <= beta+1 from which one family-A edge reaches the anchor.
void reduce_rank_one(ChainBuilder& cb) {
  std::int64_t a = cb.cur.alpha, b = cb.cur.beta;
  if (a == 0) {
    cb.up(Family::B, {0, 2, 0}, b - 1, zeros(1), {});
    return;
  }
  if (a == 1 && b == 2) {
    cb.up(Family::B, {0, 2, 0}, 2, {1}, {});
    return;
  }
  if (b == 1 && a >= 2) {
    cb.up(Family::B, {1, 1, 0}, a, {}, {});
    a = 1;
    b = 1;
  }
  while (!(a == 1 && b == 1)) {
    if (a <= b + 1) {
      cb.up(Family::A, {1, 1, 0}, a + b - 1, {a - 1}, {});
      a = 1;
      b = 1;
    } else if ((a + b) % 2 == 0) {
      cb.down(Family::A, 2, zeros(b), {});
      a = cb.cur.alpha;
      b = cb.cur.beta;
    } else {
      const std::int64_t parent_sum = (a + b + 1) / 2;
      const std::int64_t bh =
          std::min(b, std::max((b + 2) / 2, parent_sum / 2));
      const Signature parent{parent_sum - bh, bh, 0};
      cb.up(Family::B, parent, 2, ones_first(2 * bh - 1 - b, bh - 1), {});
      a = parent.alpha;
      b = parent.beta;
    }
  }
  cb.down(Family::A, 2, zeros(1), {});
  cb.up(Family::B, {0, 2, 0}, 2, {1}, {});
}

// beta=0, gamma >= 1: mirror of the rank-one case through family C with
// anchor (1,0,1) and bridge (1,0,2).
void reduce_rank_two(ChainBuilder& cb) {
  std::int64_t a = cb.cur.alpha, g = cb.cur.gamma;
  if (a == 0) {
    cb.up(Family::C, {0, 0, 2}, g - 1, {}, zeros(1));
    return;
  }
  if (a == 1 && g == 2) {
    cb.up(Family::C, {0, 0, 2}, 2, {}, {1});
    return;
  }
  if (g == 1 && a >= 2) {
    cb.up(Family::C, {1, 0, 1}, a, {}, {});
    a = 1;
    g = 1;
  }
  while (!(a == 1 && g == 1)) {
    if (a <= g + 1) {
      cb.up(Family::A, {1, 0, 1}, a + g - 1, {}, {a - 1});
      a = 1;
      g = 1;
    } else if ((a + g) % 2 == 0) {
      cb.down(Family::A, 2, {}, zeros(g));
      a = cb.cur.alpha;
      g = cb.cur.gamma;
    } else {
      const std::int64_t parent_sum = (a + g + 1) / 2;
      const std::int64_t gh =
          std::min(g, std::max((g + 2) / 2, parent_sum / 2));
      const Signature parent{parent_sum - gh, 0, gh};
      cb.up(Family::C, parent, 2, {}, ones_first(2 * gh - 1 - g, gh - 1));
      a = parent.alpha;
      g = parent.gamma;
    }
  }
  cb.down(Family::A, 2, {}, zeros(1));
  cb.up(Family::C, {0, 0, 2}, 2, {}, {1});
}

// beta,gamma >= 1: windowed halving descent. A state is "landable" when
// u = alpha+beta+gamma-1 is even and both cusp counts lie in [n/2, n] for
// n = u/2; such a state is one family-A edge below (1,1,1). Everywhere else,
// up edges at even u halve the scale (choosing parent cusp counts inside
// their feasible ranges, steered toward the window) and down edges at odd u
// double the scale while steering cusp counts into the next window.
void reduce_mixed(ChainBuilder& cb) {
  int guard = 0;
  while (!(cb.cur == Signature{0, 1, 1})) {
    if (++guard > 512)
      throw std::logic_error("reducer: mixed descent failed to terminate");
    if (cb.cur == Signature{1, 1, 1}) {
      cb.up(Family::B, {0, 1, 1}, 2, {}, {1});
      continue;
    }
    const std::int64_t a = cb.cur.alpha, b = cb.cur.beta, g = cb.cur.gamma;
    const std::int64_t u = a + b + g - 1;
    if (u % 2 == 0) {
      const std::int64_t n = u / 2;
      if (n >= 2 && 2 * b >= n && b <= n && 2 * g >= n && g <= n) {
        cb.up(Family::A, {1, 1, 1}, n, {n - b}, {n - g});
        continue;
      }
      // halving up edge; family chosen by twist-parity feasibility
      const std::int64_t cap = (u / 2) / 2;
      const std::int64_t min_b_twists = (b + 1) % 2 + g % 2;  // family B minimum
      const std::int64_t min_c_twists = b % 2 + (g + 1) % 2;  // family C minimum
      const bool fam_b =
          (min_b_twists <= a && min_b_twists <= min_c_twists) || min_c_twists > a;
      const std::int64_t blo = fam_b ? (b + 2) / 2 : (b + 1) / 2;
      const std::int64_t glo = fam_b ? (g + 1) / 2 : (g + 2) / 2;
      std::int64_t bh = std::max(blo, std::min(b, cap));
      std::int64_t gh = std::max(glo, std::min(g, cap));
      const auto twist_sum_r = [&] { return fam_b ? 2 * bh - 1 - b : 2 * bh - b; };
      const auto twist_sum_s = [&] { return fam_b ? 2 * gh - g : 2 * gh - 1 - g; };
      while (twist_sum_r() + twist_sum_s() > a) {
        if (bh > blo)
          --bh;
        else if (gh > glo)
          --gh;
        else
          throw std::logic_error("reducer: no feasible halving edge");
      }
      const std::int64_t ah = (a - twist_sum_r() - twist_sum_s()) / 2;
      if (fam_b)
        cb.up(Family::B, {ah, bh, gh}, 2, ones_first(twist_sum_r(), bh - 1),
              ones_first(twist_sum_s(), gh));
      else
        cb.up(Family::C, {ah, bh, gh}, 2, ones_first(twist_sum_r(), bh),
              ones_first(twist_sum_s(), gh - 1));
      continue;
    }
    // u odd: down edge, steering cusp counts into the child window [lo, hi]
    const std::int64_t lo = (u + 1) / 2, hi = u;
    if (a >= 1) {
      std::int64_t bt = std::min(2 * b, hi);
      if (bt < lo) bt = 2 * b;
      std::int64_t gt = std::min(2 * g, hi);
      if (gt < lo) gt = 2 * g;
      cb.down(Family::A, 2, ones_first(2 * b - bt, b), ones_first(2 * g - gt, g));
    } else {
      std::int64_t bt = std::min(2 * b - 1, hi);
      if (bt < lo) bt = 2 * b - 1;
      std::int64_t gt = std::min(2 * g, hi);
      if (gt < lo) gt = 2 * g;
      cb.down(Family::B, 2, ones_first(2 * b - 1 - bt, b - 1),
              ones_first(2 * g - gt, g));
    }
  }
}

}  // namespace

namespace {

// Certificates carry one twist entry per cusp factor of every intermediate
// signature, so their size is linear in the components; past this point the
// chain would not be a practical artifact.
constexpr std::int64_t kMaxReducibleComponent = 1'000'000;

void check_reducible_scale(const Signature& sig) {
  if (sig.alpha > kMaxReducibleComponent || sig.beta > kMaxReducibleComponent ||
      sig.gamma > kMaxReducibleComponent)
    throw std::invalid_argument("components beyond 1e6 give impractically large certificates: " +
                                to_string(sig));
}

}  // namespace

Certificate reduce_to_canonical(const Signature& sig) {
  const CanonicalClass cls = classify(sig);
  check_reducible_scale(sig);
  Certificate cert{sig, cls, {}};
  if (sig == representative(cls)) return cert;
  ChainBuilder cb{sig, {}};
  switch (cls) {
    case CanonicalClass::Schottky: reduce_schottky(cb); break;
    case CanonicalClass::RankOneCusp: reduce_rank_one(cb); break;
    case CanonicalClass::RankTwoCusp: reduce_rank_two(cb); break;
    case CanonicalClass::MixedCusp: reduce_mixed(cb); break;
  }
  cert.steps = std::move(cb.steps);
  return cert;
}

std::vector<CertificateStep> balance_cusps(const Signature& sig) {
  if (sig.alpha < 1 || sig.beta < 1 || sig.gamma < 1)
    throw std::invalid_argument(
        "balance_cusps needs alpha, beta, gamma all >= 1, got " + to_string(sig));
  check_reducible_scale(sig);
  ChainBuilder cb{sig, {}};
  while (cb.cur.beta != cb.cur.gamma) {
    const std::int64_t b = cb.cur.beta, g = cb.cur.gamma;
    if (b < g)
      cb.down(Family::A, 2, ones_first(b - 1, b), ones_first(g, g));
    else
      cb.down(Family::A, 2, ones_first(b, b), ones_first(g - 1, g));
  }
  return std::move(cb.steps);
}

namespace {

VerifyReport fail_report(std::string message, std::optional<std::size_t> step = {}) {
  return {false, std::move(message), step};
}

}  // namespace

VerifyReport verify_certificate(const Certificate& cert) {
  CanonicalClass cls;
  try {
    cls = classify(cert.input);
  } catch (const ElementarySignatureError&) {
    return fail_report("input signature is elementary");
  }
  if (cls != cert.canonical)
    return fail_report("declared canonical class does not match classify(input)");
  Signature cur = cert.input;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& step = cert.steps[i];
    Signature closed_form, oracle;
    try {
      validate(step.instance);
      closed_form = child_signature(step.instance);
      oracle = stabilizer_signature(step.instance.parent, theta_of(step.instance),
                                    static_cast<int>(step.instance.n));
    } catch (const std::exception& e) {
      return fail_report(std::string("invalid instance: ") + e.what(), i);
    }
    if (oracle != closed_form)
      return fail_report("orbit oracle disagrees with the closed-form child", i);
    if (step.direction == StepDirection::Down) {
      if (step.from != step.instance.parent || step.to != closed_form)
        return fail_report("down step endpoints do not match the instance", i);
    } else {
      if (step.from != closed_form || step.to != step.instance.parent)
        return fail_report("up step endpoints do not match the instance", i);
    }
    if (step.from != cur)
      return fail_report("chain break: step does not start at the previous signature", i);
    try {
      if (classify(step.from) != cls || classify(step.to) != cls)
        return fail_report("canonical class changes along the chain", i);
    } catch (const ElementarySignatureError&) {
      return fail_report("elementary signature inside the chain", i);
    }
    cur = step.to;
  }
  if (cur != representative(cls))
    return fail_report("chain does not end at the canonical representative");
  return {};
}

std::int64_t chain_length_bound(const Signature& sig) {
  const std::int64_t diff =
      sig.beta >= sig.gamma ? sig.beta - sig.gamma : sig.gamma - sig.beta;
  const auto x = static_cast<std::uint64_t>(checked_add(sig.alpha, 2));
  const std::int64_t ceil_log2 = std::bit_width(x - 1);
  return checked_add(diff, checked_add(2 * ceil_log2, 12));
}

}  // namespace stsig
