#include "gcut/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gcut/errors.hpp"

namespace gcut {

Face::Face(std::vector<Label> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Face::contains(Label x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::string Face::key() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

Face Face::parse(const std::string& key) {
  std::vector<Label> labels;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(static_cast<Label>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "malformed face key '" + key + "'");
    }
  }
  return Face(std::move(labels));
}

std::strong_ordering Face::operator<=>(const Face& other) const {
  if (auto c = elements_.size() <=> other.elements_.size(); c != 0) return c;
  return elements_ <=> other.elements_;
}

Face face_union(const Face& a, const Face& b) {
  std::vector<Label> u;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                 std::back_inserter(u));
  return Face(std::move(u));
}

Face face_intersection(const Face& a, const Face& b) {
  std::vector<Label> u;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(u));
  return Face(std::move(u));
}

bool graded_lex_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  Mask diff = a ^ b;
  if (diff == 0) return false;
  Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<Mask> graded_lex_subsets(std::size_t n) {
  if (n > 24) throw Error(ErrorKind::TooLarge, "subset enumeration over " + std::to_string(n) + " labels");
  std::vector<Mask> all(Mask{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  std::sort(all.begin(), all.end(), graded_lex_less);
  return all;
}

namespace {

std::vector<Label> normalized_ground(std::vector<Label> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.size() > 62) throw Error(ErrorKind::TooLarge, "ground sets are limited to 62 labels");
  return g;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Label> ground, const std::vector<std::vector<Label>>& facets)
    : ground_(normalized_ground(std::move(ground))) {
  std::vector<Mask> masks;
  for (const auto& f : facets) {
    Mask m = 0;
    for (Label x : f) {
      auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
      if (it == ground_.end() || *it != x) {
        throw Error(ErrorKind::InvalidFacet, "label " + std::to_string(x) + " is not in the ground set");
      }
      m |= Mask{1} << (it - ground_.begin());
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (Mask m : masks) {
    bool dominated = false;
    for (Mask other : masks) {
      if (other != m && (m & other) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) facet_masks_.push_back(m);
  }
  if (facet_masks_.empty()) facet_masks_.push_back(0);
  std::sort(facet_masks_.begin(), facet_masks_.end(), graded_lex_less);
  for (Mask m : facet_masks_) facets_.push_back(face_of(m));

  std::set<Mask> all;
  for (Mask f : facet_masks_) {
    for (Mask s = f;; s = (s - 1) & f) {
      if (s != 0) all.insert(s);
      if (s == 0) break;
    }
  }
  face_masks_.assign(all.begin(), all.end());
  std::sort(face_masks_.begin(), face_masks_.end(), graded_lex_less);
  for (std::size_t i = 0; i < face_masks_.size(); ++i) {
    faces_.push_back(face_of(face_masks_[i]));
    index_of_mask_[face_masks_[i]] = i;
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Label> ground_set,
                                                 const std::vector<std::vector<Label>>& facets) {
  return SimplicialComplex(std::move(ground_set), facets);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Label> ground_set, const std::vector<Face>& facets) {
  std::vector<std::vector<Label>> lists;
  for (const auto& f : facets) lists.push_back(f.elements());
  return SimplicialComplex(std::move(ground_set), lists);
}

std::vector<std::string> SimplicialComplex::face_keys() const {
  std::vector<std::string> keys;
  for (const auto& f : faces_) keys.push_back(f.key());
  return keys;
}

Mask SimplicialComplex::mask_of(const Face& f) const {
  Mask m = 0;
  for (Label x : f.elements()) {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
    if (it == ground_.end() || *it != x) {
      throw Error(ErrorKind::InvalidFacet, "label " + std::to_string(x) + " is not in the ground set");
    }
    m |= Mask{1} << (it - ground_.begin());
  }
  return m;
}

Face SimplicialComplex::face_of(Mask m) const {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (m & (Mask{1} << i)) labels.push_back(ground_[i]);
  }
  return Face(std::move(labels));
}

std::optional<std::size_t> SimplicialComplex::face_index(const Face& f) const {
  for (Label x : f.elements()) {
    if (!std::binary_search(ground_.begin(), ground_.end(), x)) return std::nullopt;
  }
  auto it = index_of_mask_.find(mask_of(f));
  if (it == index_of_mask_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::contains(const Face& f) const {
  for (Label x : f.elements()) {
    if (!std::binary_search(ground_.begin(), ground_.end(), x)) return false;
  }
  Mask m = mask_of(f);
  for (Mask facet : facet_masks_) {
    if ((m & facet) == m) return true;
  }
  return false;
}

std::vector<Label> SimplicialComplex::vertices() const {
  Mask all = 0;
  for (Mask f : facet_masks_) all |= f;
  return face_of(all).elements();
}

std::vector<Mask> SimplicialComplex::subsets() const { return graded_lex_subsets(ground_.size()); }

SimplicialComplex SimplicialComplex::relabel(const std::map<Label, Label>& map) const {
  auto image = [&](Label x) {
    auto it = map.find(x);
    return it == map.end() ? x : it->second;
  };
  std::vector<Label> ground;
  for (Label x : ground_) ground.push_back(image(x));
  std::set<Label> distinct(ground.begin(), ground.end());
  if (distinct.size() != ground.size()) throw Error(ErrorKind::GroundSetClash, "relabeling is not injective");
  std::vector<std::vector<Label>> facets;
  for (const auto& f : facets_) {
    std::vector<Label> g;
    for (Label x : f.elements()) g.push_back(image(x));
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(ground), facets);
}

namespace {

std::vector<Label> range_labels(int lo, int hi) {
  std::vector<Label> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void require_fresh(const SimplicialComplex& c, Label l) {
  if (std::binary_search(c.ground_set().begin(), c.ground_set().end(), l)) {
    throw Error(ErrorKind::GroundSetClash, "label " + std::to_string(l) + " already in the ground set");
  }
}

std::vector<std::vector<Label>> facet_lists(const SimplicialComplex& c) {
  std::vector<std::vector<Label>> out;
  for (const auto& f : c.facets()) out.push_back(f.elements());
  return out;
}

}  // namespace

SimplicialComplex simplex(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "simplex needs n >= 1");
  return SimplicialComplex::from_facets(range_labels(1, n), {range_labels(1, n)});
}

SimplicialComplex boundary(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "boundary needs n >= 1");
  return turtle(n, n);
}

SimplicialComplex turtle(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidInput, "turtle needs 1 <= k <= n");
  std::vector<std::vector<Label>> facets;
  for (int i = 1; i <= k; ++i) {
    std::vector<Label> f;
    for (int j = 1; j <= n; ++j) {
      if (j != i) f.push_back(j);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(range_labels(1, n), facets);
}

Face turtle_core(int n, int k) { return Face(range_labels(k + 1, n)); }

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Label> ground = a.ground_set();
  for (Label x : b.ground_set()) {
    if (std::binary_search(a.ground_set().begin(), a.ground_set().end(), x)) {
      throw Error(ErrorKind::GroundSetClash, "label " + std::to_string(x) + " appears in both ground sets");
    }
    ground.push_back(x);
  }
  auto facets = facet_lists(a);
  for (auto& f : facet_lists(b)) facets.push_back(std::move(f));
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

SimplicialComplex cone(const SimplicialComplex& base, Label apex) {
  require_fresh(base, apex);
  std::vector<Label> ground = base.ground_set();
  ground.push_back(apex);
  auto facets = facet_lists(base);
  for (auto& f : facets) f.push_back(apex);
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

SimplicialComplex k_cone(const SimplicialComplex& base, const std::vector<Label>& apexes) {
  SimplicialComplex c = base;
  for (Label l : apexes) c = cone(c, l);
  return c;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  if (n > 24) throw Error(ErrorKind::TooLarge, "Alexander dual over more than 24 labels");
  const Mask full = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  auto in_c = [&](Mask s) {
    for (Mask f : c.facet_masks()) {
      if ((s & f) == s) return true;
    }
    return false;
  };
  std::vector<Mask> dual_faces;
  std::set<Mask> dual_set;
  for (Mask s = 0; s <= full; ++s) {
    if (!in_c(full & ~s)) {
      dual_faces.push_back(s);
      dual_set.insert(s);
    }
  }
  if (dual_faces.empty()) {
    throw Error(ErrorKind::InvalidInput, "the Alexander dual of the full simplex is the void complex");
  }
  std::vector<std::vector<Label>> facets;
  for (Mask s : dual_faces) {
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      Mask bit = Mask{1} << i;
      if (!(s & bit) && dual_set.count(s | bit)) maximal = false;
    }
    if (maximal) facets.push_back(c.face_of(s).elements());
  }
  return SimplicialComplex::from_facets(c.ground_set(), facets);
}

SimplicialComplex d_mn(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidInput, "d_mn needs m, n >= 1");
  std::vector<std::vector<Label>> facets;
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= m + n; ++j) {
      std::vector<Label> f;
      for (int x = 1; x <= m + n; ++x) {
        if (x != i && x != j) f.push_back(x);
      }
      facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_facets(range_labels(1, m + n), facets);
}

SimplicialComplex lawrence_lifting(const SimplicialComplex& c, Label apex) {
  require_fresh(c, apex);
  std::vector<Label> ground = c.ground_set();
  auto facets = facet_lists(c);
  for (auto& f : facets) f.push_back(apex);
  facets.push_back(ground);
  ground.push_back(apex);
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

SimplicialComplex suspension(const SimplicialComplex& graph) {
  if (!is_graph(graph)) throw Error(ErrorKind::NotAGraph, "suspension needs facets of cardinality at most 2");
  Label apex = graph.ground_set().empty() ? 1 : graph.ground_set().back() + 1;
  std::vector<Label> ground = graph.ground_set();
  auto facets = facet_lists(graph);
  for (Label v : graph.ground_set()) facets.push_back({v, apex});
  ground.push_back(apex);
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

SimplicialComplex disjoint_simplices(int m, int n) {
  return SimplicialComplex::from_facets(range_labels(1, m + n), {range_labels(1, m), range_labels(m + 1, m + n)});
}

bool is_graph(const SimplicialComplex& c) {
  for (const auto& f : c.facets()) {
    if (f.size() > 2) return false;
  }
  return true;
}

std::vector<SimplicialComplex> components(const SimplicialComplex& c) {
  std::vector<Mask> groups;
  for (Mask f : c.facet_masks()) {
    if (f == 0) continue;
    Mask merged = f;
    std::vector<Mask> rest;
    for (Mask g : groups) {
      if (g & merged) {
        merged |= g;
      } else {
        rest.push_back(g);
      }
    }
    rest.push_back(merged);
    groups = std::move(rest);
  }
  std::sort(groups.begin(), groups.end(), [](Mask a, Mask b) { return (a & (~a + 1)) < (b & (~b + 1)); });
  std::vector<SimplicialComplex> out;
  for (Mask g : groups) {
    std::vector<std::vector<Label>> facets;
    for (Mask f : c.facet_masks()) {
      if (f != 0 && (f & g) == f) facets.push_back(c.face_of(f).elements());
    }
    out.push_back(SimplicialComplex::from_facets(c.face_of(g).elements(), facets));
  }
  return out;
}

}  // namespace gcut
