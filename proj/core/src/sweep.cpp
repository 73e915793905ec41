#include "stsig/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <thread>

#include "stsig/kurosh.hpp"
#include "stsig/reducer.hpp"
#include "stsig/schreier.hpp"

namespace stsig {

void validate(const SweepBounds& bounds) {
  if (bounds.max_parent_sum < 2)
    throw std::invalid_argument("sweep max_parent_sum must be >= 2");
  if (bounds.max_n < 1) throw std::invalid_argument("sweep max_n must be >= 1");
  if (bounds.random_theta_count < 0 || bounds.reducer_max_component < 0 ||
      bounds.schreier_max_parent_sum < 2 || bounds.schreier_max_n < 1)
    throw std::invalid_argument("bad sweep bounds");
}

namespace {

void append_twist_vectors(std::vector<std::vector<std::int64_t>>& out,
                          std::int64_t slots, std::int64_t max_twist) {
  std::vector<std::int64_t> cur(static_cast<std::size_t>(slots), 0);
  while (true) {
    out.push_back(cur);
    std::int64_t i = 0;
    for (; i < slots; ++i) {
      if (cur[static_cast<std::size_t>(i)] < max_twist) {
        ++cur[static_cast<std::size_t>(i)];
        for (std::int64_t j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = 0;
        break;
      }
    }
    if (i == slots) break;
  }
}

}  // namespace

std::vector<ConstructionInstance> enumerate_instances(std::int64_t max_sum,
                                                      std::int64_t max_n) {
  std::vector<ConstructionInstance> out;
  for (std::int64_t total = 2; total <= max_sum; ++total) {
    for (std::int64_t pa = 0; pa <= total; ++pa) {
      for (std::int64_t pb = 0; pb + pa <= total; ++pb) {
        const std::int64_t pg = total - pa - pb;
        const Signature parent{pa, pb, pg};
        for (std::int64_t n = 1; n <= max_n; ++n) {
          const std::int64_t max_twist = n / 2;
          for (Family fam : {Family::A, Family::B, Family::C}) {
            if (fam == Family::A && pa < 1) continue;
            if (fam == Family::B && pb < 1) continue;
            if (fam == Family::C && pg < 1) continue;
            std::vector<std::vector<std::int64_t>> rs, ss;
            append_twist_vectors(rs, static_cast<std::int64_t>(r_slots(fam, parent)),
                                 max_twist);
            append_twist_vectors(ss, static_cast<std::int64_t>(s_slots(fam, parent)),
                                 max_twist);
            for (const auto& r : rs)
              for (const auto& s : ss)
                out.push_back(ConstructionInstance{fam, parent, n, r, s});
          }
        }
      }
    }
  }
  return out;
}

std::vector<Signature> enumerate_signatures(std::int64_t max_component) {
  std::vector<Signature> out;
  for (std::int64_t a = 0; a <= max_component; ++a)
    for (std::int64_t b = 0; b <= max_component; ++b)
      for (std::int64_t g = 0; g <= max_component; ++g)
        if (a + b + g >= 2) out.push_back({a, b, g});
  return out;
}

ThetaSpec random_theta(const Signature& parent, std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int deg = static_cast<int>(n);
  auto random_perm = [&rng, deg] {
    std::vector<int> im(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) im[static_cast<std::size_t>(k)] = k + 1;
    for (int k = deg - 1; k > 0; --k) {
      std::uniform_int_distribution<int> pick(0, k);
      std::swap(im[static_cast<std::size_t>(k)],
                im[static_cast<std::size_t>(pick(rng))]);
    }
    return Permutation(std::move(im));
  };
  std::uniform_int_distribution<std::int64_t> exp_pick(0, 3);
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<Permutation> lox, p1;
    std::vector<std::pair<Permutation, Permutation>> p2;
    for (std::int64_t i = 0; i < parent.alpha; ++i) lox.push_back(random_perm());
    for (std::int64_t j = 0; j < parent.beta; ++j) p1.push_back(random_perm());
    for (std::int64_t t = 0; t < parent.gamma; ++t) {
      const Permutation q = random_perm();
      p2.emplace_back(perm_power(q, exp_pick(rng)), perm_power(q, exp_pick(rng)));
    }
    if (attempt == 399) {
      // plant sigma so the spec is transitive no matter what was drawn
      if (parent.alpha >= 1)
        lox[0] = perm_cycle(deg);
      else if (parent.beta >= 1)
        p1[0] = perm_cycle(deg);
      else
        p2[0] = {Permutation::identity(deg), perm_cycle(deg)};
    }
    ThetaSpec theta(n, parent, std::move(lox), std::move(p1), std::move(p2));
    if (is_transitive(theta)) return theta;
  }
  throw std::logic_error("random_theta failed to produce a transitive spec");
}

int sweep_thread_count() {
  int count = 0;
  if (const char* env = std::getenv("SCHOTTKY_SIG_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed >= 0 && parsed < 1024)
      count = static_cast<int>(parsed);
  }
  if (count == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    count = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return count;
}

namespace {

// Runs fn over [0, count) on the sweep worker pool; failures come back in
// index order so reports are deterministic regardless of thread count.
struct IndexedFailure {
  std::int64_t index;
  std::string message;
};

std::vector<IndexedFailure> parallel_check(
    std::int64_t count,
    const std::function<std::optional<std::string>(std::int64_t)>& fn) {
  const int threads =
      static_cast<int>(std::min<std::int64_t>(sweep_thread_count(), std::max<std::int64_t>(count, 1)));
  std::vector<std::vector<IndexedFailure>> collected(static_cast<std::size_t>(threads));
  std::atomic<std::int64_t> next{0};
  auto worker = [&](int tid) {
    for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      std::optional<std::string> failure;
      try {
        failure = fn(i);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure)
        collected[static_cast<std::size_t>(tid)].push_back({i, std::move(*failure)});
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<IndexedFailure> merged;
  for (auto& part : collected)
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  std::sort(merged.begin(), merged.end(),
            [](const IndexedFailure& x, const IndexedFailure& y) {
              return x.index < y.index;
            });
  return merged;
}

constexpr std::size_t kMaxFailureSamples = 8;

SuiteResult make_result(std::string name, std::int64_t checked,
                        std::vector<IndexedFailure> failures) {
  SuiteResult result;
  result.name = std::move(name);
  result.checked = checked;
  result.failure_count = static_cast<std::int64_t>(failures.size());
  for (std::size_t i = 0; i < failures.size() && i < kMaxFailureSamples; ++i)
    result.failure_samples.push_back(std::move(failures[i].message));
  return result;
}

}  // namespace

bool SweepReport::ok() const {
  for (const SuiteResult& suite : suites)
    if (suite.failure_count != 0) return false;
  return true;
}

SweepReport run_sweep(const SweepBounds& bounds) {
  validate(bounds);
  SweepReport report;

  const std::vector<ConstructionInstance> instances =
      enumerate_instances(bounds.max_parent_sum, bounds.max_n);
  const auto inst_count = static_cast<std::int64_t>(instances.size());

  // suite 1: oracle == closed form
  report.suites.push_back(make_result(
      "oracle-vs-formula", inst_count,
      parallel_check(inst_count, [&](std::int64_t i) -> std::optional<std::string> {
        const ConstructionInstance& inst = instances[static_cast<std::size_t>(i)];
        const Signature formula = child_signature(inst);
        const Signature oracle = stabilizer_signature(
            inst.parent, theta_of(inst), static_cast<int>(inst.n));
        if (oracle != formula)
          return to_string(inst) + ": oracle " + to_string(oracle) +
                 " != formula " + to_string(formula);
        return std::nullopt;
      })));

  // suite 2: euler multiplicativity on instances and on arbitrary thetas
  const std::int64_t random_count =
      bounds.include_arbitrary_theta ? bounds.random_theta_count : 0;
  std::vector<Signature> random_parents;
  for (const Signature& sig : enumerate_signatures(bounds.max_parent_sum))
    if (sig.sum() <= bounds.max_parent_sum) random_parents.push_back(sig);
  report.suites.push_back(make_result(
      "euler-multiplicativity", inst_count + random_count,
      parallel_check(inst_count + random_count,
                     [&](std::int64_t i) -> std::optional<std::string> {
                       Signature parent, child;
                       std::int64_t n = 0;
                       std::string label;
                       if (i < inst_count) {
                         const ConstructionInstance& inst =
                             instances[static_cast<std::size_t>(i)];
                         parent = inst.parent;
                         n = inst.n;
                         child = stabilizer_signature(parent, theta_of(inst),
                                                      static_cast<int>(n));
                         label = to_string(inst);
                       } else {
                         const std::int64_t k = i - inst_count;
                         std::mt19937_64 pick(bounds.seed * 0x9e3779b97f4a7c15ULL +
                                              static_cast<std::uint64_t>(k));
                         parent = random_parents[pick() % random_parents.size()];
                         n = 1 + static_cast<std::int64_t>(
                                     pick() % static_cast<std::uint64_t>(bounds.max_n));
                         const ThetaSpec theta = random_theta(
                             parent, n, bounds.seed + static_cast<std::uint64_t>(k) * 7919);
                         child = stabilizer_signature(parent, theta, static_cast<int>(n));
                         label = "random-theta parent=" + to_string(parent) +
                                 " n=" + std::to_string(n);
                       }
                       if (euler_characteristic(child) !=
                           n * euler_characteristic(parent))
                         return label + ": euler(child) != n*euler(parent)";
                       return std::nullopt;
                     })));

  // suite 3: class preservation
  report.suites.push_back(make_result(
      "class-preservation", inst_count,
      parallel_check(inst_count, [&](std::int64_t i) -> std::optional<std::string> {
        const ConstructionInstance& inst = instances[static_cast<std::size_t>(i)];
        if (classify(child_signature(inst)) != classify(inst.parent))
          return to_string(inst) + ": child class differs from parent class";
        return std::nullopt;
      })));

  // suite 4: schreier list reproduction
  const std::vector<ConstructionInstance> schreier_instances =
      enumerate_instances(bounds.schreier_max_parent_sum, bounds.schreier_max_n);
  const auto schreier_count = static_cast<std::int64_t>(schreier_instances.size());
  report.suites.push_back(make_result(
      "schreier-reproduction", schreier_count,
      parallel_check(schreier_count, [&](std::int64_t i) -> std::optional<std::string> {
        const ConstructionInstance& inst =
            schreier_instances[static_cast<std::size_t>(i)];
        const ThetaSpec theta = theta_of(inst);
        const Transversal trans =
            schreier_transversal(theta, designated_letter(inst.family));
        const std::vector<Word> gens = schreier_generators(theta, trans);
        const Signature p = inst.parent;
        const std::int64_t expected_count =
            inst.n * (p.alpha + p.beta + 2 * p.gamma) - (inst.n - 1);
        if (static_cast<std::int64_t>(gens.size()) != expected_count)
          return to_string(inst) + ": generator count " +
                 std::to_string(gens.size()) + " != " + std::to_string(expected_count);
        const GeneratingSetDiff diff =
            compare_generating_sets(gens, expected_generator_words(inst));
        if (!diff.full_match())
          return to_string(inst) + ": schreier output does not match the printed list";
        if (inst.family == Family::B) {
          const GeneratingSetDiff verbatim = compare_generating_sets(
              gens, expected_generator_words(inst, /*verbatim_paper_list=*/true));
          const Word b1n = reduce_word(Word{{syllable_b(1, inst.n)}});
          if (!verbatim.only_right.empty() || verbatim.only_left.size() != 1 ||
              !(verbatim.only_left[0] == b1n ||
                verbatim.only_left[0] == word_inverse(b1n)))
            return to_string(inst) + ": verbatim family-B diff is not exactly {B1^n}";
        }
        return std::nullopt;
      })));

  // suite 5: reducer totality, soundness and chain bound
  const std::vector<Signature> sigs =
      enumerate_signatures(bounds.reducer_max_component);
  const auto sig_count = static_cast<std::int64_t>(sigs.size());
  report.suites.push_back(make_result(
      "reducer-totality", sig_count,
      parallel_check(sig_count, [&](std::int64_t i) -> std::optional<std::string> {
        const Signature& sig = sigs[static_cast<std::size_t>(i)];
        const Certificate cert = reduce_to_canonical(sig);
        const VerifyReport verdict = verify_certificate(cert);
        if (!verdict.ok)
          return to_string(sig) + ": certificate rejected: " + verdict.message;
        if (cert.canonical != classify(sig))
          return to_string(sig) + ": endpoint class mismatch";
        if (static_cast<std::int64_t>(cert.steps.size()) > chain_length_bound(sig))
          return to_string(sig) + ": chain length " +
                 std::to_string(cert.steps.size()) + " exceeds bound " +
                 std::to_string(chain_length_bound(sig));
        return std::nullopt;
      })));

  return report;
}

std::string format_report(const SweepReport& report) {
  std::string out;
  for (const SuiteResult& suite : report.suites) {
    out += suite.name + ": " + std::to_string(suite.checked) + " checked, " +
           std::to_string(suite.failure_count) + " failures\n";
    for (const std::string& sample : suite.failure_samples)
      out += "  " + sample + "\n";
  }
  out += report.ok() ? "sweep: PASS\n" : "sweep: FAIL\n";
  return out;
}

}  // namespace stsig
