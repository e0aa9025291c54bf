#include <doctest.h>

#include "oracles.hpp"
#include "pircon/error.hpp"
#include "pircon/signed_perm.hpp"
#include "pircon/topology.hpp"

using namespace pircon;

namespace {

Poset chain(std::size_t k) {
  std::vector<std::string> names;
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return Poset::build(names, pairs);
}

SimplicialComplex hollow_triangle() { return SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex fb_proper_part(int n) {
  return order_complex(build_bruhat_poset(generate_signed_family(Family::FpfSignedInvolutions, n), OrderDirection::Bruhat)
                           .proper_part()
                           .poset);
}

std::vector<std::vector<std::size_t>> as_oracle(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

}  // namespace

TEST_CASE("order complexes") {
  const Poset antichain = Poset::build({"a", "b", "c"}, {});
  const SimplicialComplex a = order_complex(antichain);
  CHECK(a.facets().size() == 3);
  CHECK(a.dimension() == 0);

  const SimplicialComplex c = order_complex(chain(3));
  REQUIRE(c.facets().size() == 1);
  CHECK(c.facets()[0] == Simplex{0, 1, 2});
  CHECK(c.dimension() == 2);

  CHECK(fb_proper_part(3).dimension() == 2);
  CHECK(SimplicialComplex().dimension() == -1);
  CHECK(SimplicialComplex(3, {{0, 1, 2}, {1, 2}}).facets().size() == 1);
}

TEST_CASE("face lattice counts") {
  const auto faces = SimplicialComplex(3, {{0, 1, 2}}).faces();
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].size() == 3);
  CHECK(faces[1].size() == 3);
  CHECK(faces[2].size() == 1);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(SimplicialComplex(1, {{0}})) == 1);
  CHECK(euler_characteristic(hollow_triangle()) == 0);
  CHECK(euler_characteristic(fb_proper_part(2)) == 1);
}

TEST_CASE("reduced homology over Z/2") {
  const HomologySignature point = homology_z2(SimplicialComplex(1, {{0}}));
  CHECK(point.dimension == 0);
  CHECK(point.betti(-1) == 0);
  CHECK(point.betti(0) == 0);

  const HomologySignature circle = homology_z2(hollow_triangle());
  CHECK(circle.betti(0) == 0);
  CHECK(circle.betti(1) == 1);

  const HomologySignature two_points = homology_z2(SimplicialComplex(2, {{0}, {1}}));
  CHECK(two_points.betti(0) == 1);

  CHECK(homology_z2(SimplicialComplex()).betti(-1) == 1);

  // Octahedron boundary: a 2-sphere.
  std::vector<Simplex> octa;
  for (Index a : {0, 1})
    for (Index b : {2, 3})
      for (Index c : {4, 5}) octa.push_back({a, b, c});
  const HomologySignature sphere = homology_z2(SimplicialComplex(6, octa));
  CHECK(sphere.reduced_betti == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("sparse reduction agrees with dense elimination") {
  std::vector<SimplicialComplex> cases{hollow_triangle(), SimplicialComplex(2, {{0}, {1}}), SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}}),
                                       SimplicialComplex(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})};
  for (int n : {2, 3, 4}) cases.push_back(fb_proper_part(n));
  for (const auto& k : cases) {
    const HomologySignature h = homology_z2(k);
    CHECK(h.reduced_betti == oracle::reduced_betti(as_oracle(k)));
    CHECK(h.alternating_sum() == euler_characteristic(k) - 1);
  }
}

TEST_CASE("ball and sphere signatures") {
  CHECK(ball_sphere_signature(homology_z2(SimplicialComplex(3, {{0, 1, 2}})), 2) == Signature::BallConsistent);
  CHECK(ball_sphere_signature(homology_z2(hollow_triangle()), 1) == Signature::SphereConsistent);
  CHECK(ball_sphere_signature(homology_z2(hollow_triangle()), 2) == Signature::Neither);
  CHECK(ball_sphere_signature(homology_z2(SimplicialComplex(2, {{0}, {1}})), 0) == Signature::SphereConsistent);

  const HomologySignature f4 = homology_z2(fb_proper_part(4));
  CHECK(f4.dimension == 6);
  CHECK(ball_sphere_signature(f4, expected_dimension(4)) == Signature::BallConsistent);
  CHECK(std::string(to_string(Signature::BallConsistent)) == "ball-consistent");
}

TEST_CASE("expected dimension") {
  CHECK(expected_dimension(2) == 0);
  CHECK(expected_dimension(3) == 2);
  CHECK(expected_dimension(4) == 6);
  for (int n : {2, 3, 4}) CHECK(fb_proper_part(n).dimension() == expected_dimension(n));
  CHECK_THROWS_AS(expected_dimension(1), Error);
}

TEST_CASE("shelling verification") {
  const SimplicialComplex two(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(verify_shelling(two, {0, 1}).shelling);
  CHECK(verify_shelling(two, {1, 0}).shelling);

  // Two triangles meeting in a vertex cannot be shelled.
  const SimplicialComplex bowtie(5, {{0, 1, 2}, {2, 3, 4}});
  const ShellingVerdict v = verify_shelling(bowtie, {0, 1});
  CHECK_FALSE(v.shelling);
  REQUIRE(v.witness);
  CHECK(*v.witness == 1);

  // Path a-b-c-d shells in path order but not if the ends come first.
  const SimplicialComplex path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(verify_shelling(path, {0, 1, 2}).shelling);
  CHECK_FALSE(verify_shelling(path, {0, 2, 1}).shelling);

  CHECK_THROWS_AS(verify_shelling(SimplicialComplex(3, {{0, 1}, {2}}), {0, 1}), Error);
  CHECK_THROWS_AS(verify_shelling(two, {0}), Error);
}

TEST_CASE("dual order complex") {
  const Poset p = build_bruhat_poset(generate_signed_family(Family::FpfSignedInvolutions, 3), OrderDirection::Bruhat);
  CHECK(order_complex(p).facets() == order_complex(p.dual()).facets());
  const auto j = to_json(order_complex(chain(2)));
  CHECK(j.at("dimension") == 1);
}
