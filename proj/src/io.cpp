#include "lics/io.hpp"

#include "lics/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lics::io {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const GaussScalar& z) { return z.to_string(); }

GaussScalar scalar_from_json(const json& j) {
  if (j.is_string()) return GaussScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussScalar(j.get<long>());
  throw Error(Errc::Parse, "scalar must be a gauss-string, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t cols) {
  if (!j.is_array()) throw Error(Errc::Parse, "matrix must be an array of rows");
  Matrix m(0, cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw Error(Errc::DimensionMismatch, "matrix row must have " + std::to_string(cols) + " entries");
    }
    Vector v;
    for (const auto& x : row) v.push_back(scalar_from_json(x));
    m.append_row(v);
  }
  return m;
}

json to_json(const Subspace& s) {
  return json{{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis")) {
    throw Error(Errc::Parse, "subspace needs \"ambient_dim\" and \"basis\"");
  }
  if (!j["ambient_dim"].is_number_unsigned()) throw Error(Errc::Parse, "ambient_dim must be a non-negative integer");
  const auto n = j["ambient_dim"].get<std::size_t>();
  return span(matrix_from_json(j["basis"], n), n);
}

json to_json(const LieAlgebra& g) {
  json brackets = json::array();
  for (const auto& b : g.brackets()) {
    json c = json::object();
    for (const auto& [k, v] : b.terms) c[std::to_string(k + 1)] = v.to_string();
    brackets.push_back(json{{"i", b.i + 1}, {"j", b.j + 1}, {"c", c}});
  }
  return json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const json& j, JacobiCheck check) {
  try {
    if (!j.is_object() || !j.contains("dim")) throw Error(Errc::Parse, "algebra needs \"dim\"");
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) {
      names = j.at("basis").get<std::vector<std::string>>();
      if (names.size() != dim) throw Error(Errc::Parse, "basis names must number dim");
    } else {
      for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
      for (const auto& b : j.at("brackets")) {
        const auto i = b.at("i").get<std::size_t>();
        const auto jj = b.at("j").get<std::size_t>();
        if (i == 0 || jj == 0) throw Error(Errc::Parse, "bracket indices are 1-based");
        BracketEntry e{i - 1, jj - 1, {}};
        for (const auto& [key, value] : b.at("c").items()) {
          std::size_t k = 0;
          try {
            k = std::stoul(key);
          } catch (const std::exception&) {
            throw Error(Errc::Parse, "bracket target '" + key + "' is not an index");
          }
          if (k == 0) throw Error(Errc::Parse, "bracket targets are 1-based");
          const GaussScalar c = scalar_from_json(value);
          if (!c.is_real()) throw Error(Errc::Parse, "structure constants must be rational");
          e.terms.emplace_back(k - 1, c.re());
        }
        entries.push_back(std::move(e));
      }
    }
    return LieAlgebra(std::move(names), entries, check);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed algebra: ") + e.what());
  }
}

json to_json(const PluckerVector& p) {
  json out = json::array();
  for (const auto& x : p.coordinates) out.push_back(to_json(x));
  return out;
}

json to_json(const CRDecomposition& d) {
  return json{{"n", d.n},
              {"k", d.k},
              {"e_real", to_json(d.e_real)},
              {"e_plus_ebar_dim", d.e_plus_ebar_dim},
              {"normal_dim", d.normal_dim},
              {"direct_sum", d.direct_sum},
              {"strict", d.strict},
              {"e_involutive", d.e_involutive},
              {"leaf_involutive", d.leaf_involutive}};
}

json classification_report(const LieAlgebra& g, const Subspace& t) {
  json out;
  out["subspace"] = to_json(t);
  out["n"] = t.dim();
  out["k"] = stratum(g, t);
  out["plucker"] = to_json(plucker(t));
  if (!involutive(g, t)) {
    out["in_V"] = false;
    out["reason"] = "not involutive";
    return out;
  }
  const Classification c = classify(g, t);
  out["in_V"] = true;
  out["holomorphic_foliation_dim"] = holomorphic_foliation_dim(VPoint(g, t));
  out["cr_bundle"] = to_json(c.cr_bundle);
  out["cr_real_rank"] = c.cr_real_rank;
  if (c.kind == StructureKind::Complex) {
    out["kind"] = "complex";
    out["J"] = to_json(c.j->matrix());
  } else {
    out["kind"] = "cr_foliation";
    out["leaf_tangent"] = to_json(*c.leaf_tangent);
    out["cr"] = to_json(cr_decomposition(g, t, c));
  }
  return out;
}

namespace {

json optional_double(const std::optional<double>& d) { return d ? json(*d) : json(nullptr); }

std::string kind_name(StructureKind k) { return k == StructureKind::Complex ? "complex" : "cr_foliation"; }

}  // namespace

json to_json(const PathReport& r) {
  json points = json::array();
  for (const auto& pt : r.points) {
    json p;
    json params = json::array();
    for (const auto& x : pt.params) params.push_back(x.to_string());
    p["params"] = params;
    if (pt.error) {
      p["status"] = "degenerate";
      p["error"] = *pt.error;
    } else {
      p["status"] = "ok";
      p["in_V"] = pt.in_V;
      p["k"] = *pt.k;
      p["kind"] = pt.kind ? json(kind_name(*pt.kind)) : json(nullptr);
      p["plucker"] = to_json(*pt.plucker);
      p["subspace"] = to_json(*pt.subspace);
    }
    points.push_back(std::move(p));
  }
  json steps = json::array();
  for (const auto& d : r.step_distances) steps.push_back(optional_double(d));
  json targets = json::array();
  for (const auto& t : r.targets) {
    json ds = json::array();
    for (const auto& d : t.distances) ds.push_back(optional_double(d));
    targets.push_back(json{{"label", t.label},
                           {"distances", ds},
                           {"strictly_decreasing", t.strictly_decreasing},
                           {"final_distance", optional_double(t.final_distance)},
                           {"converged", t.converged}});
  }
  return json{{"family", r.family},
              {"tolerance", r.tolerance},
              {"points", points},
              {"step_distances", steps},
              {"targets", targets},
              {"attained_target", r.attained ? json(*r.attained) : json(nullptr)},
              {"nearest_target", r.nearest ? json(*r.nearest) : json(nullptr)}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lics::io
