// Command-line front end: exact invariant integrals, Reynolds operators,
// semi-invariants and Omega-processes on finite monoids.
//
// Exit codes: 0 success, 1 semantic negative (nonexistence / failed
// property), 2 invalid input, 3 internal error (a verified theorem failed,
// which is always a bug).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reynolds/catalog.hpp"
#include "reynolds/io.hpp"
#include "reynolds/omega.hpp"
#include "reynolds/polyinv.hpp"
#include "reynolds/selftest.hpp"

using namespace reynolds;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

void print_input(const std::string& path, const std::string& hash) {
  std::cout << "input: " << path << " fnv1a64=" << hash << "\n";
}

void print_monoid_header(const MonoidDocument& doc) {
  print_input(doc.path, doc.hash);
  std::cout << "monoid: " << doc.name << " order=" << doc.monoid.order()
            << " ring=" << doc.ring.name() << " group=" << (doc.monoid.is_group() ? "yes" : "no");
  if (doc.monoid.zero()) std::cout << " zero=" << *doc.monoid.zero();
  std::cout << "\n";
}

std::string coeff_line(const DualElement& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w.coeff(i).to_string();
  }
  return s;
}

void print_subspace(const std::string& label, const Subspace& s) {
  std::cout << label << ": dim=" << s.dim() << "\n";
  for (std::size_t j = 0; j < s.dim(); ++j) {
    std::cout << label << "[" << j << "]:";
    for (std::size_t i = 0; i < s.ambient_dim(); ++i)
      std::cout << " " << s.basis().at(i, j).to_string();
    std::cout << "\n";
  }
}

const Character& find_character(const MonoidDocument& doc, const std::string& name) {
  auto it = doc.characters.find(name);
  if (it == doc.characters.end())
    throw io_error("monoid document " + doc.path + " has no character named '" + name + "'");
  return it->second;
}

/// Built-in catalog monoids, addressable by name instead of a file path.
std::optional<MonoidDocument> builtin_monoid(const std::string& name) {
  MonoidDocument doc;
  doc.name = name;
  doc.path = "(builtin) " + name;
  doc.hash = "builtin";
  BaseRing q = BaseRing::rationals();
  if (name == "trivial_q") {
    doc.ring = q;
    doc.monoid = make_cyclic(1);
  } else if (name.size() == 4 && name.rfind("c", 0) == 0 && name.substr(2) == "_q" &&
             name[1] >= '2' && name[1] <= '9') {
    std::size_t n = static_cast<std::size_t>(name[1] - '0');
    doc.ring = q;
    doc.monoid = make_cyclic(n);
    if (n % 2 == 0) doc.characters.emplace("sign", sign_character_cyclic(doc.monoid, q));
  } else if (name == "s3_q") {
    doc.ring = q;
    doc.monoid = make_symmetric_group(3);
    doc.characters.emplace("sign", sign_character_symmetric(doc.monoid, 3, q));
  } else if (name == "c2_f2") {
    doc.ring = BaseRing::prime_field(2);
    doc.monoid = make_cyclic(2);
  } else if (name == "c2_z") {
    doc.ring = BaseRing::integers();
    doc.monoid = make_cyclic(2);
  } else if (name == "c3_f3") {
    doc.ring = BaseRing::prime_field(3);
    doc.monoid = make_cyclic(3);
  } else if (name == "c3_f7") {
    doc.ring = BaseRing::prime_field(7);
    doc.monoid = make_cyclic(3);
    doc.characters.emplace("chi2",
                           power_character_cyclic(doc.monoid, Scalar::from_int(doc.ring, 2)));
  } else if (name == "m2_f2") {
    doc.ring = BaseRing::prime_field(2);
    doc.monoid = make_full_matrix_monoid(2, 2);
    doc.characters.emplace("det", det_character_matrix_monoid(doc.monoid, 2, 2));
  } else {
    return std::nullopt;
  }
  return doc;
}

/// The monoid argument is a path or a built-in catalog name.
MonoidDocument load_monoid_ref(const std::string& ref) {
  if (std::filesystem::exists(ref)) return load_monoid_document(ref);
  if (auto doc = builtin_monoid(ref)) return std::move(*doc);
  throw io_error("no such file or built-in monoid: " + ref);
}

Representation load_rep(const MonoidDocument& mdoc, const std::string& rep_path) {
  RepresentationDocument rdoc = load_representation_document(rep_path, mdoc.ring);
  print_input(rdoc.path, rdoc.hash);
  return Representation::validate(mdoc.monoid, std::move(rdoc.matrices));
}

int cmd_integral(const std::string& monoid_path) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  std::cout << "exists: " << (r.exists ? "yes" : "no") << "\n";
  std::cout << "left-invariant-space-dim: " << r.left_space_dim << "\n";
  if (!r.exists) {
    std::cout << "certificate: " << r.notes << "\n";
    return kNegative;
  }
  const DualElement& w = *r.integral;
  std::cout << "w_G: " << coeff_line(w) << "\n";
  std::cout << "check idempotent: " << (convolve(w, w) == w ? "pass" : "FAIL") << "\n";
  std::cout << "check left-invariant: " << (is_left_invariant(w) ? "pass" : "FAIL") << "\n";
  std::cout << "check right-invariant: " << (is_right_invariant(w) ? "pass" : "FAIL") << "\n";
  std::cout << "check theta(w)=1: " << (augmentation_theta(w).is_one() ? "pass" : "FAIL") << "\n";
  if (doc.monoid.is_group())
    std::cout << "check star-fixed: " << (star_involution(w) == w ? "pass" : "FAIL") << "\n";
  return kOk;
}

int cmd_semiintegral(const std::string& monoid_path, const std::string& character) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  const Character& chi = find_character(doc, character);
  std::cout << "character: " << character << "\n";
  IntegralReport r = semi_invariant_integral(doc.monoid, chi);
  std::cout << "exists: " << (r.exists ? "yes" : "no") << "\n";
  if (!r.exists) {
    std::cout << "certificate: " << r.notes << "\n";
    return kNegative;
  }
  std::cout << "w_chi: " << coeff_line(*r.integral) << "\n";
  std::cout << "check left-semi-invariant: "
            << (is_left_semi_invariant(*r.integral, chi) ? "pass" : "FAIL") << "\n";
  std::cout << "check right-semi-invariant: "
            << (is_right_semi_invariant(*r.integral, chi) ? "pass" : "FAIL") << "\n";
  std::cout << "check w(chi)=1: "
            << (pair(*r.integral, FunctionElement::from_character(doc.monoid, chi)).is_one()
                    ? "pass"
                    : "FAIL")
            << "\n";
  return kOk;
}

int cmd_decompose(const std::string& monoid_path) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  if (!r.exists) {
    std::cout << "exists: no\ncertificate: " << r.notes << "\n";
    return kNegative;
  }
  DecompositionReport d = decompose_dual_algebra(doc.monoid, *r.integral);
  std::cout << "idempotent: " << coeff_line(d.idempotent) << "\n";
  std::cout << "theta-is-first-projection: " << (d.theta_is_first_projection ? "yes" : "no") << "\n";
  std::cout << "complement-ideal-dim: " << d.complement_ideal_basis.size() << "\n";
  for (std::size_t i = 0; i < d.complement_ideal_basis.size(); ++i)
    std::cout << "complement[" << i << "]: " << coeff_line(d.complement_ideal_basis[i]) << "\n";
  return kOk;
}

int cmd_invariants(const std::string& monoid_path, const std::string& rep_path) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  Representation v = load_rep(doc, rep_path);
  std::cout << "representation-dim: " << v.dim() << "\n";
  print_subspace("fixed", fixed_space(v));
  return kOk;
}

int cmd_split(const std::string& monoid_path, const std::string& rep_path) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  Representation v = load_rep(doc, rep_path);
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  if (!r.exists) {
    std::cout << "exists: no\ncertificate: " << r.notes << "\n";
    return kNegative;
  }
  auto [inv, comp] = split_invariants(v, *r.integral);
  print_subspace("invariants", inv);
  print_subspace("complement", comp);
  return kOk;
}

int cmd_exactness(const std::string& monoid_path, std::size_t trials, std::uint64_t seed) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  std::cout << "trials: " << trials << "\nseed: " << seed << "\n";
  auto sampler = [&](Rng& rng) { return random_representation(doc.monoid, doc.ring, 3, rng); };
  ExactnessWitnessReport r = exactness_witness(doc.monoid, doc.ring, trials, seed, sampler);
  std::cout << "invariant-exact: " << (r.integral_exists ? "yes" : "no") << "\n";
  if (r.integral_exists) {
    std::cout << "trials-completed: " << r.trials_completed << "\n";
    std::cout << "all-surjective-on-invariants: "
              << (r.all_surjective_on_invariants ? "yes" : "NO") << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    return r.all_surjective_on_invariants && r.trials_completed == trials ? kOk : kInternal;
  }
  std::cout << "counterexample: " << r.counterexample << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  return kNegative;
}

int cmd_molien(const std::string& monoid_path, const std::string& rep_path, unsigned max_degree) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  Representation v = load_rep(doc, rep_path);
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  if (!r.exists || !doc.monoid.is_group()) {
    std::cout << "exists: no\ncertificate: "
              << (doc.monoid.is_group() ? r.notes : "polynomial actions require a group") << "\n";
    return kNegative;
  }
  std::cout << "degree dimension\n";
  for (unsigned d = 0; d <= max_degree; ++d)
    std::cout << d << " " << invariant_dimension(v, *r.integral, d) << "\n";
  return kOk;
}

int cmd_invariant_ring(const std::string& monoid_path, const std::string& rep_path,
                       unsigned max_degree, bool degree_given) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  Representation v = load_rep(doc, rep_path);
  if (!doc.monoid.is_group()) {
    std::cout << "error: invariant rings require a group action\n";
    return kNegative;
  }
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  if (!r.exists) {
    std::cout << "exists: no\ncertificate: " << r.notes << "\n";
    return kNegative;
  }
  unsigned depth = max_degree;
  if (!degree_given) {
    if (doc.ring.kind() == RingKind::rationals) {
      depth = static_cast<unsigned>(doc.monoid.order());  // Noether bound
      std::cout << "max-degree: " << depth << " (Noether bound |G|)\n";
    } else {
      std::cout << "error: --max-degree is required in positive characteristic\n";
      return kBadInput;
    }
  } else {
    std::cout << "max-degree: " << depth << "\n";
  }
  InvariantGenerators gens = invariant_ring_generators(v, *r.integral, depth);
  std::cout << "degree dimension\n";
  for (unsigned d = 0; d <= depth; ++d) {
    std::size_t oracle = invariant_dimension(v, *r.integral, d);
    std::cout << d << " " << gens.dims_by_degree[d] << " (oracle " << oracle << ")\n";
  }
  std::cout << "generators: " << gens.generators.size() << "\n";
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    std::cout << "generator[" << i << "] degree=" << gens.degrees[i] << ": "
              << gens.generators[i].to_string() << "\n";
    std::cout << "generator[" << i << "] terms:";
    for (const auto& [e, c] : gens.generators[i].terms()) {
      std::cout << " {";
      for (std::size_t j = 0; j < e.size(); ++j) std::cout << (j ? "," : "") << e[j];
      std::cout << "}=" << c.to_string();
    }
    std::cout << "\n";
  }
  if (doc.ring.kind() != RingKind::rationals)
    std::cout << "note: generators up to degree " << depth
              << " (completeness beyond this degree is not guaranteed in characteristic p)\n";
  return kOk;
}

int cmd_omega_verify(const std::string& monoid_path, const std::string& omega_path,
                     const std::string& character) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  const Character& chi = find_character(doc, character);
  OmegaDocument odoc = load_omega_document(omega_path, doc.ring);
  print_input(odoc.path, odoc.hash);
  OmegaOperator omega(doc.monoid, odoc.matrix);
  OmegaVerification v = verify_omega(omega, chi);
  std::cout << "character: " << character << "\n";
  std::cout << "valid: " << (v.valid ? "yes" : "no") << "\n";
  if (!v.valid) {
    std::cout << "violation: " << v.first_violation << "\n";
    return kNegative;
  }
  return kOk;
}

int cmd_omega_find(const std::string& monoid_path, const std::string& character, bool normalize) {
  MonoidDocument doc = load_monoid_ref(monoid_path);
  print_monoid_header(doc);
  const Character& chi = find_character(doc, character);
  std::cout << "character: " << character << "\n";
  OmegaSolution sol = find_omega(doc.monoid, chi, normalize);
  std::cout << "solution-space-dim: " << sol.basis.size() << "\n";
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    std::cout << "basis[" << i << "]:";
    const ExactMatrix& m = sol.basis[i].matrix();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) std::cout << " " << m.at(r, c).to_string();
    std::cout << "\n";
  }
  if (normalize) {
    std::cout << "normalized: " << (sol.normalized ? "yes" : "no") << "\n";
    if (sol.normalized) {
      std::cout << "omega:";
      const ExactMatrix& m = sol.normalized->matrix();
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) std::cout << " " << m.at(r, c).to_string();
      std::cout << "\n";
    }
  }
  if (!sol.notes.empty()) std::cout << "note: " << sol.notes << "\n";
  if (sol.basis.empty() || (normalize && !sol.normalized)) return kNegative;
  return kOk;
}

int cmd_selftest(std::uint64_t seed) {
  // stdout is byte-stable for a fixed seed; timings go to stderr
  std::cout << "selftest seed: " << seed << "\n";
  auto results = selftest::run_acceptance_suite(seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.index << ": " << (r.pass ? "PASS" : "FAIL") << " — " << r.name;
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << "\n";
    std::cerr << "criterion " << r.index << " time: " << r.millis << " ms\n";
    all = all && r.pass;
  }
  std::cout << "selftest: " << (all ? "all criteria passed" : "FAILURES PRESENT") << "\n";
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant integrals and Reynolds operators on finite monoids"};
  app.require_subcommand(1);

  std::string monoid_path, rep_path, omega_path, character;
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  unsigned max_degree = 0;
  bool normalize = false;

  auto* integral = app.add_subcommand("integral", "invariant integral w_G of a monoid");
  integral->add_option("monoid", monoid_path, "monoid document")->required();

  auto* semi = app.add_subcommand("semiintegral", "chi-semi-invariant integral w_chi");
  semi->add_option("monoid", monoid_path)->required();
  semi->add_option("--character", character, "character name from the monoid document")->required();

  auto* decompose = app.add_subcommand("decompose", "decomposition A* = k x B*");
  decompose->add_option("monoid", monoid_path)->required();

  auto* invariants = app.add_subcommand("invariants", "fixed space of a representation");
  invariants->add_option("monoid", monoid_path)->required();
  invariants->add_option("rep", rep_path, "representation document")->required();

  auto* split = app.add_subcommand("split", "splitting M = M^G (+) (1-w_G)M");
  split->add_option("monoid", monoid_path)->required();
  split->add_option("rep", rep_path)->required();

  auto* exactness = app.add_subcommand("exactness", "randomized exactness witness");
  exactness->add_option("monoid", monoid_path)->required();
  exactness->add_option("--trials", trials, "number of random surjections");
  exactness->add_option("--seed", seed, "random seed");

  auto* molien = app.add_subcommand("molien", "per-degree invariant dimensions");
  molien->add_option("monoid", monoid_path)->required();
  molien->add_option("rep", rep_path)->required();
  auto* molien_deg = molien->add_option("--max-degree", max_degree, "top degree");
  molien_deg->required();

  auto* ring = app.add_subcommand("invariant-ring", "generators of the polynomial invariant ring");
  ring->add_option("monoid", monoid_path)->required();
  ring->add_option("rep", rep_path)->required();
  auto* ring_deg = ring->add_option("--max-degree", max_degree, "degree cap (default: |G| over Q)");

  auto* overify = app.add_subcommand("omega-verify", "check the Omega-process axioms");
  overify->add_option("monoid", monoid_path)->required();
  overify->add_option("omega", omega_path, "omega document")->required();
  overify->add_option("--character", character)->required();

  auto* ofind = app.add_subcommand("omega-find", "solve for Omega-processes");
  ofind->add_option("monoid", monoid_path)->required();
  ofind->add_option("--character", character)->required();
  ofind->add_flag("--normalize", normalize, "impose Omega(chi) = 1");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (integral->parsed()) return cmd_integral(monoid_path);
    if (semi->parsed()) return cmd_semiintegral(monoid_path, character);
    if (decompose->parsed()) return cmd_decompose(monoid_path);
    if (invariants->parsed()) return cmd_invariants(monoid_path, rep_path);
    if (split->parsed()) return cmd_split(monoid_path, rep_path);
    if (exactness->parsed()) return cmd_exactness(monoid_path, trials, seed);
    if (molien->parsed()) return cmd_molien(monoid_path, rep_path, max_degree);
    if (ring->parsed())
      return cmd_invariant_ring(monoid_path, rep_path, max_degree, ring_deg->count() > 0);
    if (overify->parsed()) return cmd_omega_verify(monoid_path, omega_path, character);
    if (ofind->parsed()) return cmd_omega_find(monoid_path, character, normalize);
    if (selftest_cmd->parsed()) return cmd_selftest(seed);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const theorem_violation& e) {
    std::cerr << "internal error (theorem violated, this is a bug): " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}
