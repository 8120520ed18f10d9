#include <doctest.h>

#include "gcut/errors.hpp"
#include "gcut/hrep.hpp"
#include "gcut/hull.hpp"
#include "gcut/transform.hpp"
#include "support.hpp"

using namespace gcut;
using namespace gcut::testing;

namespace {

std::vector<RationalVector> to_rational(const std::vector<std::vector<std::int64_t>>& pts) {
  std::vector<RationalVector> out;
  for (const auto& p : pts) {
    RationalVector r;
    for (auto x : p) r.push_back(Rational(static_cast<long>(x)));
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> random_01(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
  std::bernoulli_distribution bit(0.5);
  std::vector<std::vector<std::int64_t>> out(count, std::vector<std::int64_t>(dim));
  for (auto& p : out) {
    for (auto& x : p) x = bit(rng);
  }
  return out;
}

}  // namespace

TEST_CASE("unit square") {
  auto r = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(r.facets.size() == 4);
  CHECK(r.normalized_volume == 2);
  CHECK(r.affine_dim == 2);
  CHECK(r.equalities.empty());
}

TEST_CASE("GCut([12][23]) facets are the reference Corr inequalities pulled through phi") {
  auto c = cx({1, 2, 3}, {{1, 2}, {2, 3}});
  auto keys = c.face_keys();
  std::vector<LinearInequality> corr{
      ineq(keys, {{"2", "1"}, {"3", "1"}, {"2,3", "-1"}}, "1"),  ineq(keys, {{"1", "1"}, {"2", "1"}, {"1,2", "-1"}}, "1"),
      ineq(keys, {{"1,2", "1"}, {"1", "-1"}}, "0"),             ineq(keys, {{"1,2", "1"}, {"2", "-1"}}, "0"),
      ineq(keys, {{"2,3", "1"}, {"2", "-1"}}, "0"),             ineq(keys, {{"2,3", "1"}, {"3", "-1"}}, "0"),
      ineq(keys, {{"1,2", "-1"}}, "0"),                         ineq(keys, {{"2,3", "-1"}}, "0")};
  auto v = corr_vertices(c);
  for (const auto& f : corr) CHECK(is_valid(f, v));
  std::vector<LinearInequality> pushed;
  for (const auto& f : corr) pushed.push_back(transport_inequality(c, f, Space::Corr, Space::GCut));
  auto r = hull(gcut_vertices(c).points());
  CHECK(r.facets.size() == 8);
  CHECK(facets_equal(pushed, r.facets).equal);
  CHECK(facets_equal(corr, hull(v.points()).facets).equal);
}

TEST_CASE("turtle(4,2) has 16 facets and volume 16") {
  auto r = hull(gcut_vertices(turtle(4, 2)).points());
  CHECK(r.affine_dim == 11);
  CHECK(r.facets.size() == 16);
  CHECK(r.normalized_volume == 16);
}

TEST_CASE("normalized volumes of small GCut polytopes") {
  CHECK(normalized_volume(gcut_vertices(disjoint_simplices(1, 1)).points()) == 2);
  CHECK(normalized_volume(gcut_vertices(boundary(3)).points()) == 4);
  CHECK(normalized_volume(gcut_vertices(cone(disjoint_simplices(1, 1), 3)).points()) == 4);
}

TEST_CASE("facet set comparison") {
  auto t = turtle(3, 2);
  auto oracle = to_hrep(hull(gcut_vertices(t).points()), t.face_keys());
  CHECK(facets_equal(hrep_turtle(3, 2), oracle).equal);
  auto s = simplex(3);
  CHECK(facets_equal(hrep_simplex(3), to_hrep(hull(gcut_vertices(s).points()), s.face_keys())).equal);
  auto dropped = hrep_turtle(3, 2);
  dropped.inequalities.pop_back();
  auto diff = facets_equal(dropped, oracle);
  CHECK_FALSE(diff.equal);
  CHECK(diff.missing.empty());
  CHECK(diff.extra.size() == 1);
}

TEST_CASE("lower-dimensional hull: Marg([12][23])") {
  auto c = cx({1, 2, 3}, {{1, 2}, {2, 3}});
  auto u = marg_vertices(c);
  auto r = hull(u.points());
  CHECK(r.affine_dim == 5);
  CHECK(r.equalities.size() == 3);
  CHECK(r.facets.size() == 8);
  CHECK(r.normalized_volume == normalized_volume(gcut_vertices(c).points()));
  auto h = to_hrep(r, margin_keys(c));
  for (std::size_t j = 0; j < u.count(); ++j) {
    CHECK(membership(u.vertex(j), h, MembershipMode::Closure));
    CHECK_FALSE(membership(u.vertex(j), h, MembershipMode::RelativeInterior));
  }
  CHECK(membership(centroid(u), h, MembershipMode::RelativeInterior));
  RationalVector off = centroid(u);
  off[0] += 1;
  CHECK_FALSE(membership(off, h, MembershipMode::Closure));
}

TEST_CASE("degenerate inputs") {
  auto one = hull({{1, 0, 1}, {1, 0, 1}});
  CHECK(one.degenerate);
  CHECK(one.affine_dim == 0);
  CHECK(one.facets.empty());
  CHECK(one.normalized_volume == 1);
  CHECK(one.distinct_points == std::vector<std::size_t>{0});
  auto seg = hull({{0, 0}, {2, 2}, {1, 1}, {0, 0}});
  CHECK(seg.affine_dim == 1);
  CHECK(seg.facets.size() == 2);
  CHECK(seg.normalized_volume == 2);
  CHECK_THROWS_AS(hull({}), Error);
  CHECK_THROWS_AS(hull({{q("1/2")}}), Error);
}

TEST_CASE("caps raise TooLarge") {
  HullOptions small{4, 14};
  try {
    hull(gcut_vertices(simplex(3)).points(), small);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  HullOptions flat{64, 2};
  CHECK_THROWS_AS(hull(gcut_vertices(simplex(2)).points(), flat), Error);
}

TEST_CASE("facets are valid and supported by enough points") {
  for (const auto& c : complexes_up_to(3)) {
    auto pts = gcut_vertices(c).points();
    auto r = hull(pts);
    for (const auto& f : r.facets) {
      std::vector<RationalVector> rows;
      for (const auto& p : pts) {
        CHECK(evaluate(f, p) <= f.rhs);
        if (evaluate(f, p) == f.rhs) {
          RationalVector h = p;
          h.push_back(1);
          rows.push_back(h);
        }
      }
      CHECK(rank(Matrix::from_rows(rows, pts.front().size() + 1)) == r.affine_dim);
    }
  }
}

TEST_CASE("hull matches hyperplane enumeration on random 0/1 point sets") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t dim = dim_dist(rng);
    std::size_t max_count = std::min<std::size_t>(20, std::size_t{1} << dim);
    std::size_t count = std::uniform_int_distribution<std::size_t>(2, max_count)(rng);
    auto pts = random_01(rng, count, dim);
    auto r = hull(to_rational(pts));
    if (r.degenerate) continue;
    auto expected = slow_facet_tight_sets(pts);
    auto actual = tight_sets(r.facets, to_rational(pts));
    CHECK(expected == actual);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("normalized volume does not depend on insertion order") {
  std::mt19937_64 rng(99);
  std::vector<std::vector<RationalVector>> instances;
  for (const auto* name : {"turtle32", "boundary3", "disjoint12", "path"}) {
    std::string s(name);
    if (s == "turtle32") instances.push_back(gcut_vertices(turtle(3, 2)).points());
    if (s == "boundary3") instances.push_back(gcut_vertices(boundary(3)).points());
    if (s == "disjoint12") instances.push_back(gcut_vertices(disjoint_simplices(1, 2)).points());
    if (s == "path") instances.push_back(marg_vertices(cx({1, 2, 3}, {{1, 2}, {2, 3}})).points());
  }
  for (int t = 0; t < 16; ++t) {
    auto pts = to_rational(random_01(rng, 14, 6));
    if (!hull(pts).degenerate) instances.push_back(pts);
  }
  int runs = 0;
  for (auto pts : instances) {
    const Integer base = normalized_volume(pts);
    for (int k = 0; k < 50; ++k) {
      std::shuffle(pts.begin(), pts.end(), rng);
      CHECK(normalized_volume(pts) == base);
      ++runs;
    }
  }
  CHECK(runs >= 1000);
}

TEST_CASE("unimodular families triangulate into unit simplices") {
  std::vector<SimplicialComplex> family{simplex(2),         simplex(3),          disjoint_simplices(1, 1),
                                        disjoint_simplices(2, 2), turtle(3, 2), turtle(4, 2),
                                        boundary(3),        cone(disjoint_simplices(1, 1), 3), d_mn(2, 2)};
  for (const auto& c : family) {
    auto r = hull(gcut_vertices(c).points());
    for (const auto& v : r.simplex_volumes) CHECK(v == 1);
    CHECK(r.normalized_volume == Integer(r.triangulation.size()));
  }
}

TEST_CASE("affine dimension of GCut equals the number of nonempty faces") {
  HullOptions wide{64, 15};
  for (const auto& c : complexes_up_to(4)) {
    auto r = hull(gcut_vertices(c).points(), wide);
    CHECK(r.affine_dim == c.faces().size());
  }
}
