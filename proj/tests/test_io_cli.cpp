#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reynolds/catalog.hpp"
#include "reynolds/bgmodule.hpp"
#include "reynolds/integrals.hpp"
#include "reynolds/io.hpp"

using namespace reynolds;

namespace {

namespace fs = std::filesystem;

std::string data_path(const std::string& name) {
  return std::string(REYNOLDS_DATA_DIR) + "/" + name;
}

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("reynolds_cli_out_" + std::to_string(++counter));
  std::string cmd = std::string(REYNOLDS_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r{WEXITSTATUS(rc), slurp(out)};
  fs::remove(out);
  return r;
}

}  // namespace

TEST_CASE("monoid documents load with rings and characters") {
  MonoidDocument doc = load_monoid_document(data_path("c3_f7.json"));
  CHECK(doc.name == "c3_f7");
  CHECK(doc.ring == BaseRing::prime_field(7));
  CHECK(doc.monoid.order() == 3);
  REQUIRE(doc.characters.count("chi2") == 1);
  CHECK(doc.characters.at("chi2").value(1) == Scalar::from_int(doc.ring, 2));

  MonoidDocument m2 = load_monoid_document(data_path("m2_f2.json"));
  CHECK(m2.monoid.order() == 16);
  CHECK(m2.monoid.zero().has_value());
  CHECK(m2.characters.count("det") == 1);
}

TEST_CASE("representation documents load against their monoid") {
  MonoidDocument doc = load_monoid_document(data_path("c4_q.json"));
  RepresentationDocument rdoc =
      load_representation_document(data_path("c4_rotation_q.json"), doc.ring);
  CHECK(rdoc.dim == 2);
  Representation v = Representation::validate(doc.monoid, std::move(rdoc.matrices));
  CHECK(v.matrix(1) == ExactMatrix::from_ints(doc.ring, {{0, -1}, {1, 0}}));
}

TEST_CASE("malformed documents raise io errors") {
  fs::path bad = fs::temp_directory_path() / "reynolds_bad.json";
  {
    std::ofstream out(bad);
    out << "{\"name\": \"x\", \"base_ring\": {\"kind\": \"Q\"}, \"order\": 2}";
  }
  CHECK_THROWS_AS(load_monoid_document(bad.string()), io_error);
  {
    std::ofstream out(bad);
    out << "not json at all";
  }
  CHECK_THROWS_AS(load_monoid_document(bad.string()), io_error);
  fs::remove(bad);
  CHECK_THROWS_AS(load_monoid_document("/nonexistent/nowhere.json"), io_error);
}

TEST_CASE("scalar strings in documents match the text codec") {
  MonoidDocument doc = load_monoid_document(data_path("c2_q.json"));
  IntegralReport r = invariant_integral(doc.monoid, doc.ring);
  REQUIRE(r.exists);
  CHECK(r.integral->coeff(0).to_string() == "1/2");
}

TEST_CASE("cli: integral subcommand contract") {
  RunResult ok = run_cli("integral " + data_path("c2_q.json"));
  CHECK(ok.exit_code == 0);
  CHECK_THAT(ok.out, Catch::Matchers::ContainsSubstring("w_G: 1/2 1/2"));
  CHECK_THAT(ok.out, Catch::Matchers::ContainsSubstring("fnv1a64="));

  RunResult neg = run_cli("integral " + data_path("c2_f2.json"));
  CHECK(neg.exit_code == 1);
  CHECK_THAT(neg.out, Catch::Matchers::ContainsSubstring("exists: no"));

  RunResult m2 = run_cli("integral " + data_path("m2_f2.json"));
  CHECK(m2.exit_code == 0);
  // ev_0 is index 0: leading coefficient 1, all others 0
  CHECK_THAT(m2.out, Catch::Matchers::ContainsSubstring("w_G: 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0"));

  RunResult z = run_cli("integral " + data_path("c2_z.json"));
  CHECK(z.exit_code == 1);
  CHECK_THAT(z.out, Catch::Matchers::ContainsSubstring("invariant factor"));
}

TEST_CASE("cli: parse failures exit 2 and name the file") {
  fs::path bad = fs::temp_directory_path() / "reynolds_corrupt.json";
  {
    std::ofstream out(bad);
    out << "{\"order\": ";
  }
  RunResult r = run_cli("integral " + bad.string());
  CHECK(r.exit_code == 2);
  fs::remove(bad);
  RunResult missing = run_cli("integral /no/such/file.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("cli: semiintegral and decompose") {
  RunResult r = run_cli("semiintegral " + data_path("c3_f7.json") + " --character chi2");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("w_chi: 5 6 3"));

  RunResult missing = run_cli("semiintegral " + data_path("c3_f7.json") + " --character nope");
  CHECK(missing.exit_code == 2);

  RunResult d = run_cli("decompose " + data_path("c2_q.json"));
  CHECK(d.exit_code == 0);
  CHECK_THAT(d.out, Catch::Matchers::ContainsSubstring("complement-ideal-dim: 1"));
}

TEST_CASE("cli: invariant ring on the catalog representations") {
  RunResult s3 = run_cli("invariant-ring " + data_path("s3_q.json") + " " +
                         data_path("s3_permutation_q.json") + " --max-degree 3");
  CHECK(s3.exit_code == 0);
  CHECK_THAT(s3.out, Catch::Matchers::ContainsSubstring("generators: 3"));
  CHECK_THAT(s3.out, Catch::Matchers::ContainsSubstring("generator[0] degree=1"));
  CHECK_THAT(s3.out, Catch::Matchers::ContainsSubstring("generator[2] degree=3"));

  RunResult c4 = run_cli("invariant-ring " + data_path("c4_q.json") + " " +
                         data_path("c4_rotation_q.json") + " --max-degree 4");
  CHECK(c4.exit_code == 0);
  CHECK_THAT(c4.out, Catch::Matchers::ContainsSubstring("generator[0] degree=2"));
  CHECK_THAT(c4.out, Catch::Matchers::ContainsSubstring("generator[1] degree=4"));
  CHECK_THAT(c4.out, Catch::Matchers::ContainsSubstring("generator[2] degree=4"));

  // default Noether bound over Q
  RunResult c2 = run_cli("invariant-ring " + data_path("c2_q.json") + " " +
                         data_path("c2_sign_q.json"));
  CHECK(c2.exit_code == 0);
  CHECK_THAT(c2.out, Catch::Matchers::ContainsSubstring("max-degree: 2 (Noether bound |G|)"));
}

TEST_CASE("cli: exactness on a non invariant exact group exits 1 with a counterexample") {
  RunResult r = run_cli("exactness " + data_path("c3_f3.json") + " --trials 5 --seed 7");
  CHECK(r.exit_code == 1);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("counterexample"));

  RunResult pos = run_cli("exactness " + data_path("s3_q.json") + " --trials 5 --seed 7");
  CHECK(pos.exit_code == 0);
  CHECK_THAT(pos.out, Catch::Matchers::ContainsSubstring("all-surjective-on-invariants: yes"));
}

TEST_CASE("cli: omega commands") {
  RunResult v = run_cli("omega-verify " + data_path("c3_f7.json") + " " +
                        data_path("c3_f7_chi2_omega.json") + " --character chi2");
  CHECK(v.exit_code == 0);
  CHECK_THAT(v.out, Catch::Matchers::ContainsSubstring("valid: yes"));

  RunResult f = run_cli("omega-find " + data_path("c2_q.json") + " --character sign --normalize");
  CHECK(f.exit_code == 0);
  CHECK_THAT(f.out, Catch::Matchers::ContainsSubstring("normalized: yes"));
}

TEST_CASE("BG-module documents load and drive hom_B invariants") {
  MonoidDocument mdoc = load_monoid_document(data_path("c2_q.json"));
  BGModuleDocument doc = load_bgmodule_document(data_path("bg_regular_c2_q.json"), mdoc.ring);
  CHECK(doc.algebra_dim == 2);
  GAlgebra b = GAlgebra::validate(
      doc.structure_constants, doc.unit,
      Representation::validate(mdoc.monoid, doc.algebra_action));
  BGModule mod = BGModule::validate(
      b, Representation::validate(mdoc.monoid, doc.matrices), doc.b_action);
  DualElement w_g = *invariant_integral(mdoc.monoid, mdoc.ring).integral;
  Subspace inv = hom_b_invariants(mod, mod, w_g);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(ExactMatrix::identity(2, mdoc.ring).vec()));
}

TEST_CASE("cli: selftest byte-stability for a fixed seed") {
  RunResult a = run_cli("selftest --seed 42");
  RunResult b = run_cli("selftest --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring("selftest: all criteria passed"));
}
