#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "starbundle/catalog.hpp"

using namespace starbundle;

namespace {

StarElement random_subgroup_element(const HomogeneousSpace& space,
                                    std::uint64_t seed) {
  return random_star_element(space.subgroup(), seed);
}

}  // namespace

TEST_CASE("catalog entries validate and expose the expected dimensions") {
  CHECK(catalog_names() == std::vector<std::string>{"circle", "euclidean", "sphere"});

  const auto& sphere = catalog_entry("sphere");
  CHECK(sphere.space->big_group()->algebra_dim() == 3);
  CHECK(sphere.space->subgroup()->algebra_dim() == 1);
  CHECK(sphere.rep.fiber_dim() == 2);
  // fiber of E* over a coset has dimension 2m = 4
  CHECK(2 * sphere.rep.fiber_dim() == 4);

  const auto& circle = catalog_entry("circle");
  CHECK(circle.space->subgroup()->algebra_dim() == 0);
  CHECK(circle.rep.fiber_dim() == 2);

  CHECK_THROWS_AS(catalog_entry("torus"), UsageError);
  CHECK_THROWS_AS(catalog_representation(catalog_entry("sphere"), "no-such"),
                  UsageError);
  CHECK(catalog_representation(catalog_entry("circle"), "identity-character")
            .fiber_dim() == 1);
}

TEST_CASE("prolonged_action: identity element of H* fixes every point") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    auto p = random_bundle_point(*entry.space, entry.rep, 11);
    auto k = StarElement::identity(entry.space->subgroup());
    auto moved = prolonged_action(*entry.space, entry.rep, p, k);
    CHECK(moved.star.distance(p.star) == 0.0);
    CHECK(moved.fiber.distance(p.fiber) <= 1e-12);
  }
}

TEST_CASE("prolonged_action: worked sphere example") {
  const auto& entry = catalog_entry("sphere");
  auto so3 = entry.space->big_group();
  auto hz = entry.space->subgroup();

  BundlePoint p{
      StarElement(AlgebraElement::from_coords(so3, Vector::Unit(3, 0)),
                  GroupElement::identity(so3)),
      TangentFiberVector((Vector(2) << 1, 0).finished(),
                         (Vector(2) << 0, 0).finished())};
  StarElement k(AlgebraElement::from_coords(hz, Vector::Constant(1, 1.0)),
                GroupElement::identity(hz));

  auto moved = prolonged_action(*entry.space, entry.rep, p, k);
  CHECK((moved.star.a.coords() - (Vector(3) << 1, 0, 1).finished()).norm() <=
        1e-15);
  CHECK((moved.star.g.matrix() - Matrix::Identity(3, 3)).norm() == 0.0);
  CHECK((moved.fiber.xi - (Vector(2) << 1, 0).finished()).norm() == 0.0);
  CHECK((moved.fiber.u - (Vector(2) << 0, -1).finished()).norm() <= 1e-15);

  // oracle: the same fiber through the assembled 4x4 inverse matrix
  auto k_inv = star_inverse(k);
  const Matrix full = prolong(entry.rep, k_inv.a, k_inv.g).full();
  Vector stacked(4);
  stacked << p.fiber.xi, p.fiber.u;
  const Vector expected = full * stacked;
  CHECK((moved.fiber.xi - expected.head(2)).norm() <= 1e-15);
  CHECK((moved.fiber.u - expected.tail(2)).norm() <= 1e-15);

  // the same k given over G* is accepted after subgroup screening
  StarElement k_in_g(AlgebraElement::from_coords(so3, Vector::Unit(3, 2)),
                     GroupElement::identity(so3));
  auto moved2 = prolonged_action(*entry.space, entry.rep, p, k_in_g);
  CHECK(moved2.distance(moved) <= 1e-15);

  // an element outside H* is rejected
  StarElement not_in_h(AlgebraElement::from_coords(so3, Vector::Unit(3, 0)),
                       GroupElement::identity(so3));
  CHECK_THROWS_AS(prolonged_action(*entry.space, entry.rep, p, not_in_h),
                  SubgroupViolation);
}

TEST_CASE("prolonged_action is a right action") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 3 * seed);
      auto k1 = random_subgroup_element(*entry.space, 3 * seed + 1);
      auto k2 = random_subgroup_element(*entry.space, 3 * seed + 2);

      auto lhs = prolonged_action(*entry.space, entry.rep,
                                  prolonged_action(*entry.space, entry.rep, p, k1),
                                  k2);
      auto rhs =
          prolonged_action(*entry.space, entry.rep, p, star_multiply(k1, k2));
      CHECK(lhs.distance(rhs) <= 1e-9);
    }
  }
}

TEST_CASE("are_equivalent: reflexivity yields the identity witness") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    auto p = random_bundle_point(*entry.space, entry.rep, 21);
    auto witness = are_equivalent(*entry.space, entry.rep, p, p);
    REQUIRE(witness.has_value());
    CHECK(witness->a.coords().norm() <= 1e-12);
    CHECK((witness->g.matrix() -
           Matrix::Identity(witness->g.matrix().rows(), witness->g.matrix().cols()))
              .norm() <= 1e-12);
  }
}

TEST_CASE("are_equivalent: constructive round trip recovers the witness") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 2 * seed);
      auto k = random_subgroup_element(*entry.space, 2 * seed + 1);
      auto q = prolonged_action(*entry.space, entry.rep, p, k);

      auto witness = are_equivalent(*entry.space, entry.rep, p, q);
      REQUIRE(witness.has_value());
      CHECK((witness->a.coords() - k.a.coords()).norm() <= 1e-9);
      CHECK((witness->g.matrix() - k.g.matrix()).norm() <= 1e-9);

      // a returned witness reproduces q
      auto reproduced = prolonged_action(*entry.space, entry.rep, p, *witness);
      CHECK(reproduced.distance(q) <= 1e-8);
    }
  }
}

TEST_CASE("are_equivalent: symmetry and transitivity via witness algebra") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 3 * seed);
      auto k1 = random_subgroup_element(*entry.space, 3 * seed + 1);
      auto k2 = random_subgroup_element(*entry.space, 3 * seed + 2);
      auto q = prolonged_action(*entry.space, entry.rep, p, k1);
      auto r = prolonged_action(*entry.space, entry.rep, q, k2);

      // symmetry: the inverse witness relates q back to p
      auto back = prolonged_action(*entry.space, entry.rep, q, star_inverse(k1));
      CHECK(back.distance(p) <= 1e-8);

      // transitivity: the composed witness relates p to r
      auto composed = prolonged_action(*entry.space, entry.rep, p,
                                       star_multiply(k1, k2));
      CHECK(composed.distance(r) <= 1e-8);

      auto witness_pr = are_equivalent(*entry.space, entry.rep, p, r);
      REQUIRE(witness_pr.has_value());
      CHECK(witness_pr->distance(star_multiply(k1, k2)) <= 1e-8);
    }
  }
}

TEST_CASE("are_equivalent: negative controls return no witness") {
  const auto& sphere = catalog_entry("sphere");
  auto so3 = sphere.space->big_group();
  const double half_pi = std::acos(0.0);

  auto p = random_bundle_point(*sphere.space, sphere.rep, 5);
  // coset-breaking group part: R_x(pi/2) is not a z-axis rotation
  BundlePoint q{
      StarElement(p.star.a,
                  multiply(p.star.g,
                           exp(AlgebraElement::from_coords(
                               so3, half_pi * Vector::Unit(3, 0))))),
      p.fiber};
  CHECK(!are_equivalent(*sphere.space, sphere.rep, p, q).has_value());

  // algebra part off Lie(H): a' - a = L_x
  BundlePoint q2{StarElement(p.star.a + AlgebraElement::from_coords(
                                            so3, Vector::Unit(3, 0)),
                             p.star.g),
                 p.fiber};
  CHECK(!are_equivalent(*sphere.space, sphere.rep, p, q2).has_value());

  // right coset, wrong fiber
  auto k = random_subgroup_element(*sphere.space, 6);
  auto q3 = prolonged_action(*sphere.space, sphere.rep, p, k);
  q3.fiber.xi[0] += 0.5;
  CHECK(!are_equivalent(*sphere.space, sphere.rep, p, q3).has_value());

  // circle: distinct algebra parts are distinct classes (H* is trivial)
  const auto& circle = catalog_entry("circle");
  auto pc = random_bundle_point(*circle.space, circle.rep, 7);
  BundlePoint qc{StarElement(pc.star.a + AlgebraElement::from_coords(
                                             circle.space->big_group(),
                                             Vector::Constant(1, 0.3)),
                             pc.star.g),
                 pc.fiber};
  CHECK(!are_equivalent(*circle.space, circle.rep, pc, qc).has_value());
}

TEST_CASE("canonicalize: idempotent, class-invariant, section-pinned") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 2 * seed);
      auto canonical = canonicalize(*entry.space, entry.rep, p);

      // equivalent to the input
      CHECK(are_equivalent(*entry.space, entry.rep, p, canonical).has_value());

      // idempotent
      auto twice = canonicalize(*entry.space, entry.rep, canonical);
      CHECK(twice.distance(canonical) <= 1e-10);

      // invariant across the class
      auto k = random_subgroup_element(*entry.space, 2 * seed + 1);
      auto q = prolonged_action(*entry.space, entry.rep, p, k);
      auto canonical_q = canonicalize(*entry.space, entry.rep, q);
      CHECK(canonical_q.distance(canonical) <= 1e-8);
    }
  }
}

TEST_CASE("canonicalize on the sphere: star part maps p0 to the label base") {
  const auto& entry = catalog_entry("sphere");
  const Vector p0 = entry.space->manifold()->base_point();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_bundle_point(*entry.space, entry.rep, seed);
    auto label = bundle_projection(*entry.space, p);
    auto canonical = canonicalize(*entry.space, entry.rep, p);
    CHECK((canonical.star.g.matrix() * p0 - label.base().coords()).norm() <=
          1e-9);
  }
}

TEST_CASE("canonicalize already-canonical points is a no-op") {
  const auto& entry = catalog_entry("sphere");
  auto p = random_bundle_point(*entry.space, entry.rep, 3);
  auto canonical = canonicalize(*entry.space, entry.rep, p);
  auto again = canonicalize(*entry.space, entry.rep, canonical);
  CHECK(again.distance(canonical) <= 1e-10);
}

TEST_CASE("bundle_projection is constant on classes") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 2 * seed);
      auto k = random_subgroup_element(*entry.space, 2 * seed + 1);
      auto q = prolonged_action(*entry.space, entry.rep, p, k);
      CHECK(bundle_projection(*entry.space, p)
                .distance(bundle_projection(*entry.space, q)) <= 1e-8);
      // canonicalize preserves the class, hence the label
      auto canonical = canonicalize(*entry.space, entry.rep, p);
      CHECK(bundle_projection(*entry.space, canonical)
                .distance(bundle_projection(*entry.space, p)) <= 1e-8);
    }
  }

  // the identity star element projects to the identity coset
  const auto& sphere = catalog_entry("sphere");
  BundlePoint at_identity{StarElement::identity(sphere.space->big_group()),
                          TangentFiberVector::zero(2)};
  auto label = bundle_projection(*sphere.space, at_identity);
  CHECK((label.base().coords() - sphere.space->manifold()->base_point()).norm() ==
        0.0);
  CHECK(label.vec().norm() == 0.0);
}

TEST_CASE("local_trivialization: section points pass through unchanged") {
  const auto& entry = catalog_entry("sphere");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_bundle_point(*entry.space, entry.rep, seed);
    auto canonical = canonicalize(*entry.space, entry.rep, p);
    auto [label, fiber] = local_trivialization(*entry.space, entry.rep, canonical);
    CHECK(label.distance(bundle_projection(*entry.space, canonical)) <= 1e-10);
    CHECK(fiber.distance(canonical.fiber) <= 1e-9);
  }
}

TEST_CASE("local_trivialization is well-defined on classes and linear") {
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto p = random_bundle_point(*entry.space, entry.rep, 3 * seed);
      auto k = random_subgroup_element(*entry.space, 3 * seed + 1);
      auto q = prolonged_action(*entry.space, entry.rep, p, k);

      auto [label_p, fiber_p] = local_trivialization(*entry.space, entry.rep, p);
      auto [label_q, fiber_q] = local_trivialization(*entry.space, entry.rep, q);
      CHECK(label_p.distance(label_q) <= 1e-8);
      CHECK(fiber_p.distance(fiber_q) <= 1e-8);

      // linearity in the fiber for a fixed star part
      auto v1 = random_tangent_fiber(entry.rep.fiber_dim(), 3 * seed + 2);
      auto v2 = random_tangent_fiber(entry.rep.fiber_dim(), 3 * seed + 5);
      BundlePoint p1{p.star, v1};
      BundlePoint p2{p.star, v2};
      BundlePoint sum{p.star, TangentFiberVector(v1.xi + v2.xi, v1.u + v2.u)};
      auto f1 = local_trivialization(*entry.space, entry.rep, p1).second;
      auto f2 = local_trivialization(*entry.space, entry.rep, p2).second;
      auto fs = local_trivialization(*entry.space, entry.rep, sum).second;
      CHECK((fs.xi - f1.xi - f2.xi).norm() + (fs.u - f1.u - f2.u).norm() <=
            1e-10);
    }
  }
}

TEST_CASE("sphere chart excludes the antipode") {
  const auto& entry = catalog_entry("sphere");
  auto so3 = entry.space->big_group();
  const double pi = std::acos(-1.0);
  // g p0 = -p0
  auto g = exp(AlgebraElement::from_coords(so3, pi * Vector::Unit(3, 0)));
  BundlePoint p{StarElement(AlgebraElement::zero(so3), g),
                TangentFiberVector::zero(2)};
  CHECK_THROWS_AS(canonicalize(*entry.space, entry.rep, p), ChartViolation);
  CHECK_THROWS_AS(local_trivialization(*entry.space, entry.rep, p),
                  ChartViolation);
}

TEST_CASE("a broken section is reported as SectionFailure") {
  // same sphere data but a section that ignores its argument
  auto so3 = catalog_entry("sphere").space->big_group();
  auto hz = catalog_entry("sphere").space->subgroup();
  Matrix inclusion = Matrix::Zero(3, 1);
  inclusion(2, 0) = 1.0;
  HomogeneousSpace broken(
      "sphere-broken", so3, hz, inclusion, make_unit_sphere(),
      [so3](const EmbeddedTangentVector&) { return StarElement::identity(so3); });
  auto rep = make_so2_standard_rep(hz);

  auto p = random_bundle_point(broken, rep, 9);
  CHECK_THROWS_AS(canonicalize(broken, rep, p), SectionFailure);
}
