#include "gcut/io.hpp"

#include <fstream>
#include <sstream>

#include "gcut/errors.hpp"

namespace gcut {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return parse_rational(os.str());
  }
  throw Error(ErrorKind::InvalidInput, "expected a number or a rational string, got " + j.dump());
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["ground_set"] = c.ground_set();
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(f.elements());
  j["facets"] = facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("facets")) {
      throw Error(ErrorKind::InvalidInput, "complex JSON needs a \"facets\" list");
    }
    auto facets = j.at("facets").get<std::vector<std::vector<Label>>>();
    std::vector<Label> ground;
    if (j.contains("ground_set")) {
      ground = j.at("ground_set").get<std::vector<Label>>();
    } else {
      for (const auto& f : facets) ground.insert(ground.end(), f.begin(), f.end());
    }
    return SimplicialComplex::from_facets(ground, facets);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed complex JSON: ") + e.what());
  }
}

Json inequality_to_json(const LinearInequality& q, const std::vector<std::string>& keys) {
  if (q.coeffs.size() != keys.size()) throw Error(ErrorKind::AmbientMismatch, "coefficient count does not match keys");
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (sgn(q.coeffs[i]) != 0) coeffs[keys[i]] = rational_to_json(q.coeffs[i]);
  }
  Json j;
  j["coeffs"] = coeffs;
  j["rhs"] = rational_to_json(q.rhs);
  return j;
}

LinearInequality inequality_from_json(const Json& j, const std::vector<std::string>& keys) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("rhs")) {
    throw Error(ErrorKind::InvalidInput, "inequality JSON needs \"coeffs\" and \"rhs\"");
  }
  LinearInequality q{RationalVector(keys.size()), rational_from_json(j.at("rhs"))};
  const Json& coeffs = j.at("coeffs");
  if (coeffs.is_array()) {
    if (coeffs.size() != keys.size()) throw Error(ErrorKind::AmbientMismatch, "coefficient array has the wrong length");
    for (std::size_t i = 0; i < keys.size(); ++i) q.coeffs[i] = rational_from_json(coeffs[i]);
    return q;
  }
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    auto pos = std::find(keys.begin(), keys.end(), it.key());
    if (pos == keys.end()) throw Error(ErrorKind::AmbientMismatch, "unknown coordinate '" + it.key() + "'");
    q.coeffs[static_cast<std::size_t>(pos - keys.begin())] = rational_from_json(it.value());
  }
  return q;
}

Json hrep_to_json(const HRepresentation& h, const SimplicialComplex* c) {
  Json j;
  if (c) j["complex"] = complex_to_json(*c);
  j["family"] = h.family;
  j["complete"] = h.complete;
  j["keys"] = h.keys;
  Json eqs = Json::array(), ineqs = Json::array();
  for (const auto& e : h.equalities) eqs.push_back(inequality_to_json(e, h.keys));
  for (const auto& q : h.inequalities) ineqs.push_back(inequality_to_json(q, h.keys));
  j["equalities"] = eqs;
  j["inequalities"] = ineqs;
  return j;
}

HRepresentation hrep_from_json(const Json& j) {
  HRepresentation h;
  if (j.contains("keys")) {
    h.keys = j.at("keys").get<std::vector<std::string>>();
  } else if (j.contains("complex")) {
    h.keys = complex_from_json(j.at("complex")).face_keys();
  } else {
    throw Error(ErrorKind::InvalidInput, "H-representation JSON needs \"keys\" or \"complex\"");
  }
  h.family = j.value("family", std::string("input"));
  h.complete = j.value("complete", true);
  if (j.contains("equalities")) {
    for (const auto& e : j.at("equalities")) h.equalities.push_back(inequality_from_json(e, h.keys));
  }
  if (j.contains("inequalities")) {
    for (const auto& q : j.at("inequalities")) h.inequalities.push_back(inequality_from_json(q, h.keys));
  }
  return h;
}

Json matrix_to_json(const LinearMapMatrix& m) {
  Json j;
  j["rows"] = m.row_keys;
  j["cols"] = m.col_keys;
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    for (std::size_t c = 0; c < m.entries.cols(); ++c) {
      if (sgn(m.entries(r, c)) != 0) entries.push_back(Json::array({r, c, rational_to_json(m.entries(r, c))}));
    }
  }
  j["entries"] = entries;
  return j;
}

Json affine_map_to_json(const AffineMap& m) {
  Json j = matrix_to_json(m.linear);
  if (!is_zero(m.offset)) {
    Json offset = Json::array();
    for (const auto& x : m.offset) offset.push_back(rational_to_json(x));
    j["offset"] = offset;
  }
  return j;
}

Json hull_to_json(const HullResult& r, const std::vector<std::string>& keys) {
  HRepresentation h = to_hrep(r, keys);
  Json j = hrep_to_json(h);
  j["normalized_volume"] = r.normalized_volume.get_str();
  j["affine_dim"] = r.affine_dim;
  j["degenerate"] = r.degenerate;
  j["triangulation"] = r.triangulation;
  return j;
}

Json degree_to_json(const DegreeResult& d) {
  Json j;
  j["value"] = d.value.get_str();
  j["formula"] = d.formula;
  j["conjectural"] = d.conjectural;
  j["volume_checked"] = d.verified_by_volume.has_value() ? Json(*d.verified_by_volume) : Json(nullptr);
  return j;
}

Json gale_to_json(const GaleTransform& g) {
  Json j;
  j["labels"] = g.labels;
  j["rank"] = g.rank();
  j["free_columns"] = g.free_columns;
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.rank(); ++c) row.push_back(rational_to_json(g.vectors(i, c)));
    rows.push_back(row);
  }
  j["vectors"] = rows;
  return j;
}

Json cofacets_to_json(const GaleTransform& g, const std::vector<CoFace>& cofaces) {
  Json list = Json::array();
  for (const auto& c : cofaces) {
    Json labels = Json::array();
    for (auto i : c.off_face) labels.push_back(g.labels[i]);
    list.push_back(labels);
  }
  Json j;
  j["count"] = cofaces.size();
  j["cofacets"] = list;
  return j;
}

RationalVector point_from_json(const Json& j, const std::vector<std::string>& keys) {
  const Json& body = (j.is_object() && j.contains("point")) ? j.at("point") : j;
  RationalVector p(keys.size());
  if (body.is_array()) {
    if (body.size() != keys.size()) {
      throw Error(ErrorKind::AmbientMismatch, "point has " + std::to_string(body.size()) + " coordinates, expected " +
                                                  std::to_string(keys.size()));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) p[i] = rational_from_json(body[i]);
    return p;
  }
  if (!body.is_object()) throw Error(ErrorKind::InvalidInput, "point must be an array or an object");
  for (auto it = body.begin(); it != body.end(); ++it) {
    auto pos = std::find(keys.begin(), keys.end(), it.key());
    if (pos == keys.end()) throw Error(ErrorKind::AmbientMismatch, "unknown coordinate '" + it.key() + "'");
    p[static_cast<std::size_t>(pos - keys.begin())] = rational_from_json(it.value());
  }
  return p;
}

namespace {

std::string csv_field(const std::string& s) {
  bool quote = s.empty() || s.find_first_of(",\"|") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorKind::InvalidInput, "unterminated quote in CSV");
  fields.push_back(cur);
  return fields;
}

}  // namespace

void write_vertex_csv(std::ostream& out, const VertexMatrix& v) {
  out << "subset";
  for (const auto& k : v.row_keys) out << ',' << csv_field(k);
  out << '\n';
  for (std::size_t j = 0; j < v.count(); ++j) {
    out << csv_field(v.col_keys[j]);
    for (std::size_t i = 0; i < v.dimension(); ++i) out << ',' << to_string(v.entries(i, j));
    out << '\n';
  }
}

VertexMatrix read_vertex_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "empty CSV");
  const auto& header = rows.front();
  bool labelled = !header.empty() && header.front() == "subset";
  std::size_t skip = labelled ? 1 : 0;
  VertexMatrix v;
  v.row_keys.assign(header.begin() + static_cast<std::ptrdiff_t>(skip), header.end());
  const std::size_t d = v.row_keys.size();
  v.entries = Matrix(d, rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != d + skip) {
      throw Error(ErrorKind::AmbientMismatch, "CSV line " + std::to_string(r + 1) + " has " +
                                                  std::to_string(rows[r].size()) + " fields, expected " +
                                                  std::to_string(d + skip));
    }
    v.col_keys.push_back(labelled ? rows[r][0] : std::to_string(r - 1));
    for (std::size_t i = 0; i < d; ++i) v.entries(i, r - 1) = parse_rational(rows[r][i + skip]);
  }
  return v;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace gcut
