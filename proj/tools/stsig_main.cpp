// stsig: signature calculus for Schottky-type groups.
//
// Exit codes: 0 success, 1 verification/property failure, 2 malformed input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stsig/certificate_io.hpp"
#include "stsig/constructions.hpp"
#include "stsig/kurosh.hpp"
#include "stsig/reducer.hpp"
#include "stsig/schreier.hpp"
#include "stsig/signature.hpp"
#include "stsig/sweep.hpp"

namespace {

using namespace stsig;

std::vector<std::int64_t> parse_twist_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string part =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed twist list entry: '" + part + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ConstructionInstance make_instance(const std::string& family_text,
                                   const std::string& parent_text, std::int64_t n,
                                   const std::string& r_text,
                                   const std::string& s_text) {
  if (family_text.size() != 1)
    throw std::invalid_argument("family must be one of A, B, C");
  ConstructionInstance inst;
  inst.family = family_from_char(family_text[0]);
  inst.parent = parse_signature(parent_text);
  inst.n = n;
  inst.r = parse_twist_list(r_text);
  inst.s = parse_twist_list(s_text);
  // omitted lists mean all zeros of the required length
  if (inst.r.empty()) inst.r.assign(r_slots(inst.family, inst.parent), 0);
  if (inst.s.empty()) inst.s.assign(s_slots(inst.family, inst.parent), 0);
  validate(inst);
  return inst;
}

int run_certify(const std::string& sig_text, const std::string& out_path) {
  const Signature sig = parse_signature(sig_text);
  const Certificate cert = reduce_to_canonical(sig);
  const VerifyReport verdict = verify_certificate(cert);
  std::cout << "input: " << to_string(cert.input) << "\n";
  std::cout << "class: " << to_string(cert.canonical) << "\n";
  std::cout << "canonical: " << to_string(representative(cert.canonical)) << "\n";
  std::cout << "steps: " << cert.steps.size() << "\n";
  for (const CertificateStep& step : cert.steps) {
    std::cout << (step.direction == StepDirection::Down ? "down " : "up ")
              << to_string(step.instance) << " : " << to_string(step.from) << " -> "
              << to_string(step.to) << "\n";
  }
  if (!out_path.empty()) write_text_file(out_path, certificate_to_json(cert));
  if (!verdict.ok) {
    std::cerr << "internal error: produced certificate failed verification: "
              << verdict.message << "\n";
    return 1;
  }
  return 0;
}

int run_verify(const std::string& path) {
  const Certificate cert = certificate_from_json(read_text_file(path));
  const VerifyReport verdict = verify_certificate(cert);
  if (verdict.ok) {
    std::cout << "OK: " << to_string(cert.input) << " -> "
              << to_string(representative(cert.canonical)) << " ("
              << to_string(cert.canonical) << ") in " << cert.steps.size()
              << " steps\n";
    return 0;
  }
  std::cout << "FAIL";
  if (verdict.failed_step) std::cout << " step " << *verdict.failed_step;
  std::cout << ": " << verdict.message << "\n";
  return 1;
}

int run_schreier(const ConstructionInstance& inst, bool diff_paper, bool bfs) {
  const ThetaSpec theta = theta_of(inst);
  const std::optional<GeneratorLetter> designated =
      bfs ? std::nullopt : std::optional<GeneratorLetter>(designated_letter(inst.family));
  const Transversal trans = schreier_transversal(theta, designated);
  const std::vector<Word> gens = schreier_generators(theta, trans);
  std::cout << "generators: " << gens.size() << "\n";
  for (const Word& w : gens) std::cout << format_word(w) << "\n";
  const TypeCensus census = generator_type_census(gens);
  std::cout << "census: loxodromic=" << census.loxodromic
            << " parabolic=" << census.parabolic << " identity=" << census.identity
            << "\n";
  if (!diff_paper) return 0;

  const GeneratingSetDiff diff = compare_generating_sets(
      gens, expected_generator_words(inst, /*verbatim_paper_list=*/true));
  std::cout << "paper-diff: schreier-only=" << diff.only_left.size()
            << " paper-only=" << diff.only_right.size() << "\n";
  for (const Word& w : diff.only_left)
    std::cout << "  schreier-only: " << format_word(w) << "\n";
  for (const Word& w : diff.only_right)
    std::cout << "  paper-only: " << format_word(w) << "\n";
  if (diff.full_match()) {
    std::cout << "verdict: exact-match\n";
    return 0;
  }
  const Word b1n = reduce_word(Word{{syllable_b(1, inst.n)}});
  const bool only_correction =
      inst.family == Family::B && diff.only_right.empty() &&
      diff.only_left.size() == 1 &&
      (diff.only_left[0] == b1n || diff.only_left[0] == word_inverse(b1n));
  if (only_correction) {
    std::cout << "verdict: matches-up-to-B1^n-correction\n";
    return 0;
  }
  std::cout << "verdict: mismatch\n";
  return 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"signature calculus for Schottky-type groups"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "canonical class of a signature");
  std::string classify_sig;
  classify_cmd->add_option("signature", classify_sig, "signature a,b,g")->required();

  // equivalent
  auto* equiv_cmd =
      app.add_subcommand("equivalent", "quasiconformal equivalence of two signatures");
  std::string equiv_s1, equiv_s2;
  equiv_cmd->add_option("first", equiv_s1, "signature a,b,g")->required();
  equiv_cmd->add_option("second", equiv_s2, "signature a,b,g")->required();

  // certify
  auto* certify_cmd =
      app.add_subcommand("certify", "reduce a signature to its canonical class");
  std::string certify_sig, certify_out;
  certify_cmd->add_option("signature", certify_sig, "signature a,b,g")->required();
  certify_cmd->add_option("--out", certify_out, "write the certificate JSON here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  std::string verify_path;
  verify_cmd->add_option("file", verify_path, "certificate JSON file")->required();

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "child signature of a construction instance");
  std::string con_family, con_parent, con_r, con_s;
  std::int64_t con_n = 1;
  construct_cmd->add_option("--family", con_family, "A, B or C")->required();
  construct_cmd->add_option("--parent", con_parent, "parent signature a,b,g")->required();
  construct_cmd->add_option("--n", con_n, "subgroup index n >= 1")->required();
  construct_cmd->add_option("--r", con_r, "comma-separated rank-1 twists");
  construct_cmd->add_option("--s", con_s, "comma-separated rank-2 twists");

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "stabilizer signature from a theta spec");
  std::string oracle_spec;
  std::int64_t oracle_basepoint = 0;
  oracle_cmd->add_option("--spec", oracle_spec, "theta JSON file")->required();
  oracle_cmd->add_option("--basepoint", oracle_basepoint, "basepoint (default n)");

  // schreier
  auto* schreier_cmd =
      app.add_subcommand("schreier", "Reidemeister-Schreier generators of an instance");
  std::string sch_family, sch_parent, sch_r, sch_s;
  std::int64_t sch_n = 1;
  bool sch_diff = false, sch_bfs = false;
  schreier_cmd->add_option("--family", sch_family, "A, B or C")->required();
  schreier_cmd->add_option("--parent", sch_parent, "parent signature a,b,g")->required();
  schreier_cmd->add_option("--n", sch_n, "subgroup index n >= 1")->required();
  schreier_cmd->add_option("--r", sch_r, "comma-separated rank-1 twists");
  schreier_cmd->add_option("--s", sch_s, "comma-separated rank-2 twists");
  schreier_cmd->add_flag("--diff-paper", sch_diff,
                         "diff against the printed list (as printed, no B1^n)");
  schreier_cmd->add_flag("--bfs", sch_bfs, "use the breadth-first transversal");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run the exhaustive invariant suites");
  SweepBounds bounds;
  bool no_random = false;
  sweep_cmd->add_option("--max-parent-sum", bounds.max_parent_sum, "default 4");
  sweep_cmd->add_option("--max-n", bounds.max_n, "default 6");
  sweep_cmd->add_option("--seed", bounds.seed, "randomized-theta seed, default 1");
  sweep_cmd->add_option("--random-thetas", bounds.random_theta_count, "default 1000");
  sweep_cmd->add_option("--max-component", bounds.reducer_max_component,
                        "reduction sweep bound, default 20");
  sweep_cmd->add_option("--schreier-max-parent-sum", bounds.schreier_max_parent_sum,
                        "default 3");
  sweep_cmd->add_option("--schreier-max-n", bounds.schreier_max_n, "default 5");
  sweep_cmd->add_flag("--no-arbitrary-theta", no_random,
                      "skip the randomized theta checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (classify_cmd->parsed()) {
    const CanonicalClass cls = classify(parse_signature(classify_sig));
    std::cout << to_string(cls) << " " << to_string(representative(cls)) << "\n";
    return 0;
  }
  if (equiv_cmd->parsed()) {
    const bool eq = qc_equivalent(parse_signature(equiv_s1), parse_signature(equiv_s2));
    std::cout << (eq ? "true" : "false") << "\n";
    return 0;
  }
  if (certify_cmd->parsed()) return run_certify(certify_sig, certify_out);
  if (verify_cmd->parsed()) return run_verify(verify_path);
  if (construct_cmd->parsed()) {
    const ConstructionInstance inst =
        make_instance(con_family, con_parent, con_n, con_r, con_s);
    std::cout << to_string(child_signature(inst)) << "\n";
    return 0;
  }
  if (oracle_cmd->parsed()) {
    const ThetaSpec theta = theta_from_json(read_text_file(oracle_spec));
    const int basepoint = oracle_basepoint == 0 ? static_cast<int>(theta.degree())
                                                : static_cast<int>(oracle_basepoint);
    std::cout << to_string(stabilizer_signature(theta.parent(), theta, basepoint))
              << "\n";
    return 0;
  }
  if (schreier_cmd->parsed()) {
    const ConstructionInstance inst =
        make_instance(sch_family, sch_parent, sch_n, sch_r, sch_s);
    return run_schreier(inst, sch_diff, sch_bfs);
  }
  if (sweep_cmd->parsed()) {
    bounds.include_arbitrary_theta = !no_random;
    const SweepReport report = run_sweep(bounds);
    std::cout << format_report(report);
    return report.ok() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
