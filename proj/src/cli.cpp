#include "gcut/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcut/degree.hpp"
#include "gcut/errors.hpp"
#include "gcut/gale.hpp"
#include "gcut/hrep.hpp"
#include "gcut/hull.hpp"
#include "gcut/io.hpp"
#include "gcut/switching.hpp"
#include "gcut/transform.hpp"

namespace gcut {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "expected integers in '" + text + "'");
    }
  }
  return out;
}

SimplicialComplex family_complex(const std::string& name, const std::vector<int>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw Error(ErrorKind::InvalidInput, "'" + name + "' takes " + std::to_string(k) + " argument(s)");
  };
  if (name == "simplex") return need(1), simplex(args[0]);
  if (name == "boundary") return need(1), boundary(args[0]);
  if (name == "turtle") return need(2), turtle(args[0], args[1]);
  if (name == "dmn") return need(2), d_mn(args[0], args[1]);
  if (name == "disjoint") return need(2), disjoint_simplices(args[0], args[1]);
  if (name == "lawrence") {
    need(2);
    return lawrence_lifting(disjoint_simplices(args[0], args[1]), args[0] + args[1] + 1);
  }
  throw Error(ErrorKind::InvalidInput, "unknown complex family '" + name + "'");
}

HullOptions caps_from_environment() {
  HullOptions o;
  auto read = [](const char* name, std::size_t& target) {
    if (const char* v = std::getenv(name)) {
      try {
        long x = std::stol(v);
        if (x > 0) target = static_cast<std::size_t>(x);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, std::string(name) + " must be a positive integer");
      }
    }
  };
  read("GCUT_MAX_VERTICES", o.max_points);
  read("GCUT_MAX_DIM", o.max_dim);
  return o;
}

Json load_json(const std::string& spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
    try {
      return Json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidInput, std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(spec);
}

Face parse_switch_set(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '[') {
    Json j = Json::parse(t, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw Error(ErrorKind::InvalidInput, "malformed switch set '" + text + "'");
    return Face(j.get<std::vector<Label>>());
  }
  return Face::parse(t);
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

SimplicialComplex load_complex(const std::string& spec) {
  if (auto colon = spec.find(':'); colon != std::string::npos && spec.front() != '{') {
    std::string name = spec.substr(0, colon);
    bool is_family = !name.empty() && name.find('/') == std::string::npos && name.find('.') == std::string::npos;
    if (is_family) return family_complex(name, parse_int_list(spec.substr(colon + 1)));
  }
  return complex_from_json(load_json(spec));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marginal, correlation and generalized cut polytopes of simplicial complexes"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string complex_spec, polytope = "gcut", format = "csv", method = "auto", ineq_path, set_text, space = "gcut";
  std::string from_space, to_space, points_path, point_path, hrep_path, mode = "closure", family, transform_ineq,
      transform_point;
  bool lift = false, no_volume_check = false;

  auto* vertices = app.add_subcommand("vertices", "Vertex matrix of Marg, Corr, GCut or Cut");
  vertices->add_option("--complex", complex_spec, "Complex (JSON file, inline JSON, or family spec)")->required();
  vertices->add_option("--polytope", polytope)->check(CLI::IsMember({"marg", "corr", "gcut", "cut"}));
  vertices->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* hrep_cmd = app.add_subcommand("hrep", "H-representation of GCut");
  hrep_cmd->add_option("--complex", complex_spec)->required();
  hrep_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "oracle"}));

  auto* switch_cmd = app.add_subcommand("switch", "Switch an inequality by a subset");
  switch_cmd->add_option("--ineq", ineq_path, "Inequality JSON")->required();
  switch_cmd->add_option("--set", set_text, "Switch set, e.g. 1,3 or [1,3]");
  switch_cmd->add_option("--complex", complex_spec)->required();
  switch_cmd->add_option("--space", space)->check(CLI::IsMember({"gcut", "corr", "marg"}));
  switch_cmd->add_flag("--lift", lift, "Lift a Marg functional into the row space of Omega first");

  auto* transform_cmd = app.add_subcommand("transform", "Maps between Marg, Corr and GCut");
  transform_cmd->add_option("--from", from_space)->required()->check(CLI::IsMember({"gcut", "corr", "marg"}));
  transform_cmd->add_option("--to", to_space)->required()->check(CLI::IsMember({"gcut", "corr", "marg"}));
  transform_cmd->add_option("--complex", complex_spec)->required();
  transform_cmd->add_option("--ineq", transform_ineq, "Rewrite this inequality instead of printing the map");
  transform_cmd->add_option("--point", transform_point, "Map this point instead of printing the map");

  auto* gale_cmd = app.add_subcommand("gale", "Gale transform of GCut");
  gale_cmd->add_option("--complex", complex_spec)->required();
  gale_cmd->add_option("--polytope", polytope)->check(CLI::IsMember({"corr", "gcut"}));

  auto* cofacets_cmd = app.add_subcommand("cofacets", "Co-facets of GCut via the Gale transform");
  cofacets_cmd->add_option("--complex", complex_spec)->required();

  auto* hull_cmd = app.add_subcommand("hull", "Exact convex hull of a vertex CSV");
  hull_cmd->add_option("--points", points_path)->required();

  auto* volume_cmd = app.add_subcommand("volume", "Normalized volume");
  volume_cmd->add_option("--complex", complex_spec)->required();
  volume_cmd->add_option("--polytope", polytope)->check(CLI::IsMember({"marg", "corr", "gcut"}));

  auto* degree_cmd = app.add_subcommand("degree", "Degree of the toric ideal");
  degree_cmd->add_option("--complex", complex_spec)->required();
  degree_cmd->add_option("--family", family, "Expected formula tag");
  degree_cmd->add_flag("--no-volume-check", no_volume_check);

  auto* member_cmd = app.add_subcommand("member", "Membership test against an H-representation");
  member_cmd->add_option("--point", point_path)->required();
  member_cmd->add_option("--hrep", hrep_path)->required();
  member_cmd->add_option("--mode", mode)->check(CLI::IsMember({"closure", "relint"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form with the hull oracle");
  verify_cmd->add_option("--complex", complex_spec)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  try {
    const HullOptions caps = caps_from_environment();
    if (*vertices) {
      SimplicialComplex c = load_complex(complex_spec);
      VertexMatrix v = polytope == "marg"   ? marg_vertices(c)
                       : polytope == "corr" ? corr_vertices(c)
                       : polytope == "cut"  ? cut_vertices(c)
                                            : gcut_vertices(c);
      if (format == "csv") {
        write_vertex_csv(buffer, v);
      } else {
        Json j;
        j["rows"] = v.row_keys;
        j["cols"] = v.col_keys;
        Json m = Json::array();
        for (std::size_t i = 0; i < v.dimension(); ++i) {
          Json row = Json::array();
          for (std::size_t k = 0; k < v.count(); ++k) row.push_back(rational_to_json(v.entries(i, k)));
          m.push_back(row);
        }
        j["matrix"] = m;
        emit(j, buffer);
      }
    } else if (*hrep_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      HrepOptions o;
      o.method = method == "oracle" ? HrepMethod::Oracle : HrepMethod::Auto;
      o.oracle = caps;
      emit(hrep_to_json(hrep(c, o), &c), buffer);
    } else if (*switch_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      Json ij = load_json(ineq_path);
      Space s = parse_space(space);
      std::vector<std::string> keys = s == Space::Marg ? margin_keys(c) : c.face_keys();
      LinearInequality q = inequality_from_json(ij, keys);
      Face set;
      if (!set_text.empty()) {
        set = parse_switch_set(set_text);
      } else if (ij.contains("switch_set")) {
        set = Face(ij.at("switch_set").get<std::vector<Label>>());
      } else {
        throw Error(ErrorKind::InvalidInput, "no switch set given (--set or \"switch_set\")");
      }
      for (Label x : set.elements()) {
        if (!std::binary_search(c.ground_set().begin(), c.ground_set().end(), x)) {
          throw Error(ErrorKind::InvalidInput, "switch set label " + std::to_string(x) + " is not in the ground set");
        }
      }
      LinearInequality r;
      if (s == Space::GCut) {
        r = switch_gcut(q, set, c);
      } else if (s == Space::Corr) {
        r = switch_corr(q, set, c);
      } else {
        if (lift) q = lift_to_rowspace(q, c);
        r = switch_marg(q, set, c);
      }
      Json j = inequality_to_json(r, keys);
      j["switch_set"] = set.elements();
      emit(j, buffer);
    } else if (*transform_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      Space from = parse_space(from_space), to = parse_space(to_space);
      if (!transform_ineq.empty()) {
        std::vector<std::string> from_keys = from == Space::Marg ? margin_keys(c) : c.face_keys();
        std::vector<std::string> to_keys = to == Space::Marg ? margin_keys(c) : c.face_keys();
        LinearInequality q = inequality_from_json(load_json(transform_ineq), from_keys);
        emit(inequality_to_json(transport_inequality(c, q, from, to), to_keys), buffer);
      } else if (!transform_point.empty()) {
        AffineMap m = transform_map(c, from, to);
        RationalVector p = point_from_json(load_json(transform_point), m.linear.col_keys);
        RationalVector image = m(p);
        Json j = Json::object();
        for (std::size_t i = 0; i < image.size(); ++i) j[m.linear.row_keys[i]] = rational_to_json(image[i]);
        emit(j, buffer);
      } else {
        emit(affine_map_to_json(transform_map(c, from, to)), buffer);
      }
    } else if (*gale_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      emit(gale_to_json(gale(polytope == "corr" ? corr_vertices(c) : gcut_vertices(c))), buffer);
    } else if (*cofacets_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      GaleTransform g = gale(gcut_vertices(c));
      emit(cofacets_to_json(g, cofacets(g, caps.max_points)), buffer);
    } else if (*hull_cmd) {
      std::ifstream in(points_path);
      if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + points_path + "'");
      VertexMatrix v = read_vertex_csv(in);
      emit(hull_to_json(hull(v.points(), caps), v.row_keys), buffer);
    } else if (*volume_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      VertexMatrix v = polytope == "marg" ? marg_vertices(c) : polytope == "corr" ? corr_vertices(c) : gcut_vertices(c);
      HullResult r = hull(v.points(), caps);
      Json j;
      j["polytope"] = polytope;
      j["normalized_volume"] = r.normalized_volume.get_str();
      j["affine_dim"] = r.affine_dim;
      emit(j, buffer);
    } else if (*degree_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      DegreeOptions o;
      o.oracle = caps;
      o.check_volume = !no_volume_check;
      if (!family.empty()) o.family = family;
      emit(degree_to_json(degree(c, o)), buffer);
    } else if (*member_cmd) {
      HRepresentation h = hrep_from_json(load_json(hrep_path));
      RationalVector p = point_from_json(load_json(point_path), h.keys);
      MembershipMode m = mode == "relint" ? MembershipMode::RelativeInterior : MembershipMode::Closure;
      Json j;
      j["mode"] = mode;
      j["member"] = membership(p, h, m);
      emit(j, buffer);
    } else if (*verify_cmd) {
      SimplicialComplex c = load_complex(complex_spec);
      HrepOptions o;
      o.oracle = caps;
      HRepresentation closed = hrep(c, o);
      HullResult oracle = hull(gcut_vertices(c).points(), caps);
      FacetDiff diff = facets_equal(closed, to_hrep(oracle, c.face_keys()));
      Json j;
      j["complex"] = complex_to_json(c);
      j["family"] = closed.family;
      j["complete"] = closed.complete;
      j["equal"] = diff.equal;
      j["closed_form_count"] = canonical_set(closed.inequalities).size();
      j["oracle_count"] = oracle.facets.size();
      Json missing = Json::array(), extra = Json::array();
      for (const auto& q : diff.missing) missing.push_back(inequality_to_json(q, c.face_keys()));
      for (const auto& q : diff.extra) extra.push_back(inequality_to_json(q, c.face_keys()));
      j["only_closed_form"] = missing;
      j["only_oracle"] = extra;
      emit(j, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::TooLarge) return 3;
    if (e.kind() == ErrorKind::Internal) return 1;
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return 0;
}

}  // namespace gcut
