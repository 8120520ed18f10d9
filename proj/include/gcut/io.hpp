#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcut/complex.hpp"
#include "gcut/degree.hpp"
#include "gcut/gale.hpp"
#include "gcut/hull.hpp"
#include "gcut/polytope.hpp"
#include "gcut/transform.hpp"

namespace gcut {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// {"coeffs":{"2":"1","2,4":"1"},"rhs":"2"}; zero coefficients are omitted.
Json inequality_to_json(const LinearInequality& q, const std::vector<std::string>& keys);
/// Unknown keys raise AmbientMismatch; absent keys read as zero.
LinearInequality inequality_from_json(const Json& j, const std::vector<std::string>& keys);

Json hrep_to_json(const HRepresentation& h, const SimplicialComplex* c = nullptr);
HRepresentation hrep_from_json(const Json& j);

Json matrix_to_json(const LinearMapMatrix& m);
Json affine_map_to_json(const AffineMap& m);

Json hull_to_json(const HullResult& r, const std::vector<std::string>& keys);
Json degree_to_json(const DegreeResult& d);
Json gale_to_json(const GaleTransform& g);
Json cofacets_to_json(const GaleTransform& g, const std::vector<CoFace>& cofaces);

/// Point as a JSON array in key order, or as an object keyed by coordinate name.
RationalVector point_from_json(const Json& j, const std::vector<std::string>& keys);

/// Header "subset,<row keys>", then one line per vertex.
void write_vertex_csv(std::ostream& out, const VertexMatrix& v);
VertexMatrix read_vertex_csv(std::istream& in);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace gcut
