#include <doctest.h>

#include "k3twist/catalog.hpp"
#include "k3twist/errors.hpp"
#include "k3twist/reflection_group.hpp"
#include "oracles.hpp"

using namespace k3twist;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::vector<MoebiusMap> reflections(const MukaiForm& form, const std::vector<MukaiVector>& roots) {
  std::vector<MoebiusMap> out;
  for (const auto& v : roots) out.push_back(reflection_moebius(form, v));
  return out;
}

const MukaiForm f2(2L);
const std::vector<MukaiVector> p3_roots{{1, 0, 1}, {1, 1, 3}, {1, 2, 9}, {1, 3, 19}};
const MoebiusMap t1{1, 1, 0, 1};

}  // namespace

TEST_CASE("root orbits") {
  std::vector<Isometry3> gens;
  for (const auto& v : p3_roots) gens.push_back(reflection_matrix(f2, v));
  CHECK(root_orbit_connected(f2, {1, 0, 1}, {1, 0, 1}, gens, 0));
  CHECK_FALSE(root_orbit_connected(f2, {1, 0, 1}, {1, 1, 3}, gens, 6));
  const auto far = oracle::reflect(2, {1, 1, 3}, oracle::reflect(2, {1, 2, 9}, {1, 0, 1}));
  CHECK(root_orbit_connected(f2, {1, 0, 1}, {far[0], far[1], far[2]}, gens, 2));
  CHECK_FALSE(root_orbit_connected(f2, {1, 0, 1}, {far[0], far[1], far[2]}, gens, 1));
  CHECK(root_orbit_connected(f2, {1, 0, 1}, {-1, 0, -1}, gens, 0));
  CHECK_THROWS_AS(root_orbit_connected(f2, {1, 0, 0}, {1, 0, 1}, gens, 1), NotARoot);
}

TEST_CASE("Ford domains") {
  const auto gens = reflections(f2, p3_roots);
  const auto l1 = ford_domain(gens, {2, 2, 2, 2}, 1);
  REQUIRE(l1.circles.size() == 4);
  for (long k = 0; k < 4; ++k) {
    CHECK(l1.circles[static_cast<std::size_t>(k)].center == k);
    CHECK(l1.circles[static_cast<std::size_t>(k)].radius_sq == q(1, 2));
  }
  const auto one = ford_domain({MoebiusMap(0, -1, 4, 0)}, {2}, 3);
  REQUIRE(one.circles.size() == 1);
  CHECK(one.circles[0].center == 0);
  CHECK(one.circles[0].radius_sq == q(1, 4));
  CHECK(ford_domain({}, {}, 3).circles.empty());

  const auto l4 = ford_domain(gens, {2, 2, 2, 2}, 4);
  for (std::size_t i = 0; i < l4.circles.size(); ++i) {
    for (std::size_t j = 0; j < l4.circles.size(); ++j) {
      if (i != j) CHECK_FALSE(disk_contained(l4.circles[i], l4.circles[j]));
    }
  }
}

TEST_CASE("disk containment") {
  const IsometricCircle big(0, 4), small(q(1, 2), q(1, 4)), edge(1, 1), outside(5, 1);
  CHECK(disk_contained(small, big));
  CHECK(disk_contained(edge, big));
  CHECK_FALSE(disk_contained(big, small));
  CHECK_FALSE(disk_contained(outside, big));
  CHECK(disk_contained(big, big));
}

TEST_CASE("membership") {
  const auto dom = ford_domain(reflections(f2, p3_roots), {2, 2, 2, 2}, 1);
  CHECK(domain_membership(dom, HPoint(0, q(1, 2))) == Membership::Boundary);
  CHECK(domain_membership(dom, HPoint(q(1, 2), 4)) == Membership::Interior);
  CHECK(domain_membership(dom, HPoint(0, q(1, 8))) == Membership::Exterior);
  FordDomain strip = dom;
  strip.strip = Strip{q(-1, 2), 4};
  CHECK(domain_membership(strip, HPoint(q(-1, 2), 4)) == Membership::Boundary);
  CHECK(domain_membership(strip, HPoint(-1, 4)) == Membership::Exterior);
  CHECK(domain_membership(strip, HPoint(q(7, 2), 9)) == Membership::Boundary);
}

TEST_CASE("translates of root points leave the domain") {
  const auto gens = reflections(f2, p3_roots);
  FordDomain dom = ford_domain(gens, {2, 2, 2, 2}, 4);
  dom.strip = Strip{q(-1, 2), 4};
  std::vector<HPoint> points;
  for (const auto& v : p3_roots) points.push_back(h_point_of_vector(f2, v));
  enumerate_reduced_products(gens, {2, 2, 2, 2}, 3, [&](const std::vector<Letter>&, const MoebiusMap& g) {
    for (const auto& p : points) {
      const HPoint gp = apply(g, p);
      if (gp == p) continue;
      CHECK(domain_membership(dom, gp) == Membership::Exterior);
      CHECK(std::find(points.begin(), points.end(), gp) == points.end());
    }
    return true;
  });
}

TEST_CASE("generator roots from a domain") {
  const auto dom = ford_domain(reflections(f2, p3_roots), {2, 2, 2, 2}, 4);
  FordDomain with_strip = dom;
  with_strip.strip = Strip{q(-1, 2), 4};
  CHECK(extract_generator_roots(f2, with_strip, enumerate_roots(f2, 1, 3)) == p3_roots);
  CHECK(extract_generator_roots(f2, dom, {}).empty());

  const MukaiForm f4(4L);
  std::vector<MukaiVector> d8;
  for (long k = -3; k <= 3; ++k) d8.emplace_back(1, k, 4 * k * k + 1);
  const auto single = ford_domain({reflection_moebius(f4, {1, 0, 1})}, {2}, 2);
  CHECK(extract_generator_roots(f4, single, d8) == d8);
  const auto all = ford_domain(reflections(f4, d8), std::vector<long>(7, 2), 3);
  CHECK(extract_generator_roots(f4, all, d8) == d8);
}

TEST_CASE("finite generation") {
  CHECK(finitely_generated({2, 0, 1, {{2, true}, {4, false}}}));
  CHECK_FALSE(finitely_generated({4, 0, 2, {{2, true}}}));
  CHECK(finitely_generated({7, 0, 1, {{2, true}, {2, true}, {3, false}}}));
  CHECK_FALSE(finitely_generated({7, 0, 1, {{3, false}, {3, false}}}));
  CHECK_FALSE(finitely_generated({7, 1, 1, {}}));
  CHECK(signature_index({2, 0, 1, {{2, true}, {4, false}}}) == 4);
  CHECK(signature_index({3, 0, 1, {{2, true}, {6, true}}}) == 3);
  CHECK(signature_index({11, 0, 1, {{2, true}, {2, true}, {2, true}, {2, true}}}) == 1);
  CHECK_FALSE(signature_index({4, 0, 2, {{2, true}}}).has_value());
  CHECK_THROWS(SignatureData{2, 0, 1, {{1, true}}}.check());
}

TEST_CASE("same group within a bound") {
  const MoebiusMap s0(0, -1, 2, 0);
  CHECK(same_group_within_bound({s0}, {s0.inverse()}, 1));
  CHECK_FALSE(same_group_within_bound({s0}, {t1}, 10));
  std::vector<MoebiusMap> printed, schreier;
  const MoebiusMap w = s0 * t1;
  for (long j = 0; j < 4; ++j) {
    printed.push_back(t1.pow(j) * s0 * t1.pow(-j));
    schreier.push_back(w.pow(j) * s0 * w.pow(-j));
  }
  CHECK(same_group_within_bound(printed, schreier, 9));
  CHECK_FALSE(same_group_within_bound(printed, {s0}, 9));
}

TEST_CASE("degree eight kernel truncation") {
  const MukaiForm f4(4L);
  const MoebiusMap s0 = reflection_moebius(f4, {1, 0, 1});
  const auto& e = find_entry(default_catalog(), "Deg8CI");
  for (int K = 1; K <= 4; ++K) {
    std::vector<Word> section;
    for (int k = -K; k <= K; ++k) section.push_back(e.presentation.group.letter(1, k));
    const auto gens = kernel_generators(e.presentation.group, e.presentation.hom, section);
    CHECK(gens.size() == static_cast<std::size_t>(2 * K + 1));
    std::vector<HPoint> points;
    for (const auto& g : gens) {
      const MoebiusMap m = evaluate(e.presentation.group, g, e.presentation.assignment);
      CHECK((m * m).is_identity());
      points.push_back(fixed_point(m));
    }
    std::sort(points.begin(), points.end());
    for (int k = -K; k <= K; ++k) CHECK(points[static_cast<std::size_t>(k + K)] == HPoint(k, q(1, 4)));
  }
  CHECK(fixed_point(s0) == HPoint(0, q(1, 4)));
}
