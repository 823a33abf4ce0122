#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "reynolds/bialgebra.hpp"
#include "reynolds/omega.hpp"
#include "reynolds/repr.hpp"

namespace reynolds {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// FNV-1a 64-bit hash of raw file bytes; echoed in every report so runs are
/// attributable to exact inputs.
inline std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BaseRing parse_base_ring(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return BaseRing::rationals();
  if (kind == "Z") return BaseRing::integers();
  if (kind == "Fp") return BaseRing::prime_field(j.at("p").get<std::uint32_t>());
  throw io_error("base_ring.kind must be one of Q, Fp, Z (got '" + kind + "')");
}

inline nlohmann::json base_ring_to_json(const BaseRing& r) {
  nlohmann::json j;
  switch (r.kind()) {
    case RingKind::rationals: j["kind"] = "Q"; break;
    case RingKind::integers: j["kind"] = "Z"; break;
    case RingKind::prime_field:
      j["kind"] = "Fp";
      j["p"] = r.characteristic();
      break;
  }
  return j;
}

/// A fully parsed monoid document.  Owns the monoid (representations and dual
/// elements built from it reference this storage).
struct MonoidDocument {
  std::string name;
  std::string path;
  std::string hash;
  BaseRing ring = BaseRing::rationals();
  FiniteMonoid monoid = make_cyclic(1);
  std::map<std::string, Character> characters;
};

inline MonoidDocument load_monoid_document(const std::string& path) {
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("parse error in " + path + ": " + e.what());
  }
  MonoidDocument doc;
  doc.path = path;
  doc.hash = fnv1a64_hex(bytes);
  try {
    doc.name = j.value("name", std::filesystem::path(path).stem().string());
    doc.ring = parse_base_ring(j.at("base_ring"));
    std::size_t order = j.at("order").get<std::size_t>();
    auto table_json = j.at("table");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : table_json) table.push_back(row.get<std::vector<std::size_t>>());
    if (table.size() != order) throw io_error("table size does not match order in " + path);
    std::optional<std::size_t> zero;
    if (j.contains("zero")) zero = j.at("zero").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    doc.monoid = FiniteMonoid::validate(std::move(table), j.at("identity").get<std::size_t>(), zero,
                                        std::move(labels));
    if (j.contains("characters"))
      for (const auto& [cname, values] : j.at("characters").items()) {
        std::vector<Scalar> v;
        for (const auto& s : values) v.push_back(Scalar::parse(doc.ring, s.get<std::string>()));
        doc.characters.emplace(cname, Character::validate(doc.monoid, std::move(v)));
      }
  } catch (const nlohmann::json::exception& e) {
    throw io_error("invalid monoid document " + path + ": " + e.what());
  }
  return doc;
}

inline ExactMatrix parse_matrix(const nlohmann::json& j, const BaseRing& ring) {
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  ExactMatrix m(rows, cols, ring);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw io_error("ragged matrix in document");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(i, c, Scalar::parse(ring, j.at(i).at(c).get<std::string>()));
  }
  return m;
}

inline nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Resolves the "monoid" field of a dependent document: a path relative to
/// the referencing file.
inline std::string resolve_monoid_ref(const std::string& ref, const std::string& from_path) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return p.string();
  std::filesystem::path base = std::filesystem::path(from_path).parent_path();
  return (base / p).string();
}

struct RepresentationDocument {
  std::string path;
  std::string hash;
  std::string monoid_ref;
  std::vector<ExactMatrix> matrices;
  std::size_t dim = 0;
};

inline RepresentationDocument load_representation_document(const std::string& path,
                                                           const BaseRing& ring) {
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("parse error in " + path + ": " + e.what());
  }
  RepresentationDocument doc;
  doc.path = path;
  doc.hash = fnv1a64_hex(bytes);
  try {
    doc.monoid_ref = j.at("monoid").get<std::string>();
    doc.dim = j.at("dim").get<std::size_t>();
    for (const auto& mj : j.at("matrices")) {
      ExactMatrix m = parse_matrix(mj, ring);
      if (m.rows() != doc.dim || m.cols() != doc.dim)
        throw io_error("matrix dimension mismatch in " + path);
      doc.matrices.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw io_error("invalid representation document " + path + ": " + e.what());
  }
  return doc;
}

/// Parsed pieces of a BG-module document: the representation fields plus the
/// algebra data (structure constants, unit, G-action on the algebra) and the
/// module structure b_action.  The caller assembles GAlgebra / BGModule so
/// the algebra's storage outlives the module that references it.
struct BGModuleDocument {
  std::string path;
  std::string hash;
  std::string monoid_ref;
  std::size_t dim = 0;
  std::vector<ExactMatrix> matrices;  // underlying G-action on M
  std::size_t algebra_dim = 0;
  std::vector<std::vector<std::vector<Scalar>>> structure_constants;
  std::vector<Scalar> unit;
  std::vector<ExactMatrix> algebra_action;  // G-action on B, one per element
  std::vector<ExactMatrix> b_action;        // B acting on M, one per basis element
};

inline BGModuleDocument load_bgmodule_document(const std::string& path, const BaseRing& ring) {
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("parse error in " + path + ": " + e.what());
  }
  BGModuleDocument doc;
  doc.path = path;
  doc.hash = fnv1a64_hex(bytes);
  try {
    doc.monoid_ref = j.at("monoid").get<std::string>();
    doc.dim = j.at("dim").get<std::size_t>();
    for (const auto& mj : j.at("matrices")) doc.matrices.push_back(parse_matrix(mj, ring));
    const auto& aj = j.at("algebra");
    doc.algebra_dim = aj.at("dim").get<std::size_t>();
    for (const auto& plane : aj.at("structure_constants")) {
      std::vector<std::vector<Scalar>> rows;
      for (const auto& row : plane) {
        std::vector<Scalar> r;
        for (const auto& s : row) r.push_back(Scalar::parse(ring, s.get<std::string>()));
        rows.push_back(std::move(r));
      }
      doc.structure_constants.push_back(std::move(rows));
    }
    for (const auto& s : aj.at("unit")) doc.unit.push_back(Scalar::parse(ring, s.get<std::string>()));
    for (const auto& mj : aj.at("action")) doc.algebra_action.push_back(parse_matrix(mj, ring));
    for (const auto& mj : j.at("b_action")) doc.b_action.push_back(parse_matrix(mj, ring));
  } catch (const nlohmann::json::exception& e) {
    throw io_error("invalid BG-module document " + path + ": " + e.what());
  }
  return doc;
}

struct OmegaDocument {
  std::string path;
  std::string hash;
  std::string monoid_ref;
  ExactMatrix matrix = ExactMatrix(0, 0, BaseRing::rationals());
};

inline OmegaDocument load_omega_document(const std::string& path, const BaseRing& ring) {
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("parse error in " + path + ": " + e.what());
  }
  OmegaDocument doc;
  doc.path = path;
  doc.hash = fnv1a64_hex(bytes);
  try {
    doc.monoid_ref = j.at("monoid").get<std::string>();
    doc.matrix = parse_matrix(j.at("matrix"), ring);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("invalid omega document " + path + ": " + e.what());
  }
  return doc;
}

}  // namespace reynolds
