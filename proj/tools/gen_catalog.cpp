// Regenerates the JSON catalog under data/.  Maintenance utility; the files
// in the repository are its committed output.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "reynolds/bgmodule.hpp"
#include "reynolds/catalog.hpp"
#include "reynolds/io.hpp"

using namespace reynolds;
using nlohmann::ordered_json;

namespace {

ordered_json monoid_json(const std::string& name, const FiniteMonoid& m, const BaseRing& ring,
                         const std::map<std::string, Character>& chars) {
  ordered_json j;
  j["name"] = name;
  j["base_ring"] = base_ring_to_json(ring);
  j["order"] = m.order();
  j["identity"] = m.identity();
  if (m.zero()) j["zero"] = *m.zero();
  j["table"] = m.table();
  if (!m.labels().empty()) j["labels"] = m.labels();
  if (!chars.empty()) {
    ordered_json cj;
    for (const auto& [cname, chi] : chars) {
      ordered_json values = ordered_json::array();
      for (const auto& v : chi.values()) values.push_back(v.to_string());
      cj[cname] = values;
    }
    j["characters"] = cj;
  }
  return j;
}

ordered_json matrix_rows(const ExactMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

ordered_json rep_json(const std::string& monoid_ref, const Representation& v) {
  ordered_json j;
  j["monoid"] = monoid_ref;
  j["dim"] = v.dim();
  ordered_json mats = ordered_json::array();
  for (std::size_t g = 0; g < v.monoid().order(); ++g) mats.push_back(matrix_rows(v.matrix(g)));
  j["matrices"] = mats;
  return j;
}

void write(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  BaseRing q = BaseRing::rationals();
  BaseRing z = BaseRing::integers();
  BaseRing f2 = BaseRing::prime_field(2);
  BaseRing f3 = BaseRing::prime_field(3);
  BaseRing f7 = BaseRing::prime_field(7);

  {
    FiniteMonoid t = make_cyclic(1);
    write(dir / "trivial_q.json", monoid_json("trivial_q", t, q, {}));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    FiniteMonoid cn = make_cyclic(n);
    std::map<std::string, Character> chars;
    if (n % 2 == 0) chars.emplace("sign", sign_character_cyclic(cn, q));
    write(dir / ("c" + std::to_string(n) + "_q.json"),
          monoid_json("c" + std::to_string(n) + "_q", cn, q, chars));
  }
  {
    FiniteMonoid c2 = make_cyclic(2);
    write(dir / "c2_f2.json", monoid_json("c2_f2", c2, f2, {}));
    write(dir / "c2_z.json", monoid_json("c2_z", c2, z, {}));
    FiniteMonoid c3 = make_cyclic(3);
    write(dir / "c3_f3.json", monoid_json("c3_f3", c3, f3, {}));
    std::map<std::string, Character> chars;
    chars.emplace("chi2", power_character_cyclic(c3, Scalar::from_int(f7, 2)));
    write(dir / "c3_f7.json", monoid_json("c3_f7", c3, f7, chars));
  }
  {
    FiniteMonoid s3 = make_symmetric_group(3);
    std::map<std::string, Character> chars;
    chars.emplace("sign", sign_character_symmetric(s3, 3, q));
    write(dir / "s3_q.json", monoid_json("s3_q", s3, q, chars));
  }
  {
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    std::map<std::string, Character> chars;
    chars.emplace("det", det_character_matrix_monoid(m2, 2, 2));
    write(dir / "m2_f2.json", monoid_json("m2_f2", m2, f2, chars));
  }

  // representations
  {
    FiniteMonoid c2 = make_cyclic(2);
    write(dir / "c2_regular_q.json", rep_json("c2_q.json", regular_representation(c2, q)));
    write(dir / "c2_sign_q.json",
          rep_json("c2_q.json", character_representation(c2, sign_character_cyclic(c2, q))));
    FiniteMonoid c3 = make_cyclic(3);
    write(dir / "c3_regular_q.json", rep_json("c3_q.json", regular_representation(c3, q)));
    FiniteMonoid c4 = make_cyclic(4);
    write(dir / "c4_rotation_q.json", rep_json("c4_q.json", rotation_representation_c4(c4, q)));
    FiniteMonoid s3 = make_symmetric_group(3);
    write(dir / "s3_permutation_q.json",
          rep_json("s3_q.json", permutation_representation_symmetric(s3, 3, q)));
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    write(dir / "m2_natural_f2.json", rep_json("m2_f2.json", natural_matrix_representation(m2, 2, 2)));
  }

  // BG-module: functions on C_2 as a module over themselves
  {
    FiniteMonoid c2 = make_cyclic(2);
    GAlgebra b = function_g_algebra(c2, q);
    BGModule reg = regular_bg_module(b);
    ordered_json j;
    j["monoid"] = "c2_q.json";
    j["dim"] = reg.dim();
    ordered_json mats = ordered_json::array();
    for (std::size_t g = 0; g < c2.order(); ++g)
      mats.push_back(matrix_rows(reg.underlying().matrix(g)));
    j["matrices"] = mats;
    ordered_json aj;
    aj["dim"] = b.dim();
    ordered_json sc = ordered_json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
      ordered_json plane = ordered_json::array();
      for (std::size_t jj = 0; jj < b.dim(); ++jj) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < b.dim(); ++k)
          row.push_back(b.structure_constant(i, jj, k).to_string());
        plane.push_back(row);
      }
      sc.push_back(plane);
    }
    aj["structure_constants"] = sc;
    ordered_json unit = ordered_json::array();
    for (const auto& u : b.unit()) unit.push_back(u.to_string());
    aj["unit"] = unit;
    ordered_json act = ordered_json::array();
    for (std::size_t g = 0; g < c2.order(); ++g) act.push_back(matrix_rows(b.action().matrix(g)));
    aj["action"] = act;
    j["algebra"] = aj;
    ordered_json ba = ordered_json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) ba.push_back(matrix_rows(reg.b_matrix(i)));
    j["b_action"] = ba;
    write(dir / "bg_regular_c2_q.json", j);
  }

  // omega operators (pointwise chi^-1 on groups)
  {
    FiniteMonoid c2 = make_cyclic(2);
    ordered_json j;
    j["monoid"] = "c2_q.json";
    j["matrix"] = matrix_rows(canonical_omega(c2, sign_character_cyclic(c2, q)).matrix());
    write(dir / "c2_sign_omega_q.json", j);
    FiniteMonoid c3 = make_cyclic(3);
    ordered_json j2;
    j2["monoid"] = "c3_f7.json";
    j2["matrix"] = matrix_rows(
        canonical_omega(c3, power_character_cyclic(c3, Scalar::from_int(f7, 2))).matrix());
    write(dir / "c3_f7_chi2_omega.json", j2);
  }
  return 0;
}
