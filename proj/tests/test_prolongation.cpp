#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "starbundle/catalog.hpp"
#include "starbundle/prolongation.hpp"
#include "starbundle/star_group.hpp"

using namespace starbundle;

namespace {

// Hand-assembled oracle: build the full 2m x 2m matrix from sigma(h) and
// a finite-difference d sigma_e, independent of ProlongedMatrix.
Matrix block_oracle(const Representation& rep, const AlgebraElement& b,
                    const GroupElement& h) {
  const int m = rep.fiber_dim();
  const Matrix sigma = rep.evaluate(h);
  const double step = 1e-6;
  const Matrix dsigma =
      (rep.evaluate(exp(b.scaled(step))) - rep.evaluate(exp(b.scaled(-step)))) /
      (2.0 * step);
  Matrix full = Matrix::Zero(2 * m, 2 * m);
  full.topLeftCorner(m, m) = sigma;
  full.bottomRightCorner(m, m) = sigma;
  full.bottomLeftCorner(m, m) = dsigma * sigma;
  return full;
}

Vector stack(const TangentFiberVector& v) {
  Vector out(2 * v.dim());
  out.head(v.dim()) = v.xi;
  out.tail(v.dim()) = v.u;
  return out;
}

}  // namespace

TEST_CASE("prolong: identity pair gives the 2m identity") {
  auto so2 = make_so2();
  auto rep = make_so2_standard_rep(so2);
  auto p = prolong(rep, AlgebraElement::zero(so2), GroupElement::identity(so2));
  CHECK((p.full() - Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("prolong: trivial representation prolongs to the identity") {
  auto hz = make_so2_about_z();
  auto trivial = make_trivial_rep(hz, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto b = random_algebra_element(hz, 2 * seed);
    auto h = random_group_element(hz, 2 * seed + 1);
    CHECK((prolong(trivial, b, h).full() - Matrix::Identity(6, 6)).norm() == 0.0);
  }
}

TEST_CASE("prolong: SO(2) standard at b = J, h = R(pi/2)") {
  auto so2 = make_so2();
  auto rep = make_so2_standard_rep(so2);
  const double half_pi = std::acos(0.0);
  auto b = AlgebraElement::from_coords(so2, Vector::Constant(1, 1.0));
  auto h = exp(AlgebraElement::from_coords(so2, Vector::Constant(1, half_pi)));

  auto p = prolong(rep, b, h);

  Matrix rot(2, 2), lower(2, 2);
  rot << 0, -1, 1, 0;
  lower << -1, 0, 0, -1;  // J * R(pi/2)
  CHECK((p.top_left() - rot).norm() <= 1e-15);
  CHECK((p.bottom_right() - rot).norm() <= 1e-15);
  CHECK((p.bottom_left() - lower).norm() <= 1e-15);
  CHECK((p.full() - block_oracle(rep, b, h)).norm() <= 1e-9);
}

TEST_CASE("block invariants hold bit-for-bit") {
  auto hz = make_so2_about_z();
  auto rep = make_so2_standard_rep(hz);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto b = random_algebra_element(hz, 2 * seed);
    auto h = random_group_element(hz, 2 * seed + 1);
    const Matrix full = prolong(rep, b, h).full();
    const int m = rep.fiber_dim();
    CHECK(full.topRightCorner(m, m).isZero(0.0));
    CHECK(full.topLeftCorner(m, m) == full.bottomRightCorner(m, m));

    bool valid = false;
    ProlongedMatrix::from_full(full, &valid);
    CHECK(valid);
  }
}

TEST_CASE("apply: identity, diagonal block action, worked SO(2) example") {
  auto so2 = make_so2();
  auto rep = make_so2_standard_rep(so2);

  TangentFiberVector v{(Vector(2) << 1, 0).finished(),
                       (Vector(2) << 0, 0).finished()};

  auto id = prolong(rep, AlgebraElement::zero(so2), GroupElement::identity(so2));
  CHECK(apply(id, v).distance(v) == 0.0);

  // zero lower-left block acts diagonally
  const double theta = 0.8;
  auto h = exp(AlgebraElement::from_coords(so2, Vector::Constant(1, theta)));
  auto diag = prolong(rep, AlgebraElement::zero(so2), h);
  TangentFiberVector w{(Vector(2) << 0.3, -0.4).finished(),
                       (Vector(2) << 1.1, 0.2).finished()};
  auto dw = apply(diag, w);
  CHECK((dw.xi - rep.evaluate(h) * w.xi).norm() == 0.0);
  CHECK((dw.u - rep.evaluate(h) * w.u).norm() <= 1e-15);

  // frozen worked example, plus the explicit 4x4 multiplication oracle
  const double half_pi = std::acos(0.0);
  auto b = AlgebraElement::from_coords(so2, Vector::Constant(1, 1.0));
  auto hq = exp(AlgebraElement::from_coords(so2, Vector::Constant(1, half_pi)));
  auto p = prolong(rep, b, hq);
  auto out = apply(p, v);
  CHECK((out.xi - (Vector(2) << 0, 1).finished()).norm() <= 1e-15);
  CHECK((out.u - (Vector(2) << -1, 0).finished()).norm() <= 1e-15);
  CHECK((stack(out) - p.full() * stack(v)).norm() <= 1e-15);
}

TEST_CASE("apply_inverse_action: identity pair, frozen example, round trip") {
  auto so2 = make_so2();
  auto rep = make_so2_standard_rep(so2);
  TangentFiberVector v{(Vector(2) << 1, 0).finished(),
                       (Vector(2) << 0, 0).finished()};

  auto unchanged = apply_inverse_action(rep, AlgebraElement::zero(so2),
                                        GroupElement::identity(so2), v);
  CHECK(unchanged.distance(v) == 0.0);

  const double half_pi = std::acos(0.0);
  auto b = AlgebraElement::from_coords(so2, Vector::Constant(1, 1.0));
  auto h = exp(AlgebraElement::from_coords(so2, Vector::Constant(1, half_pi)));

  // oracle: assemble sigma*((b,h)^-1) as a full matrix and multiply
  auto b_inv = adjoint(h.inverse(), -b);
  const Matrix inverse_full = block_oracle(rep, b_inv, h.inverse());
  const Vector expected = inverse_full * stack(v);

  auto out = apply_inverse_action(rep, b, h, v);
  CHECK((stack(out) - expected).norm() <= 1e-9);
  CHECK((out.xi - (Vector(2) << 0, -1).finished()).norm() <= 1e-15);
  CHECK((out.u - (Vector(2) << -1, 0).finished()).norm() <= 1e-15);

  // round trip: sigma*(b,h) after sigma*((b,h)^-1) restores v
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto br = random_algebra_element(so2, 3 * seed);
    auto hr = random_group_element(so2, 3 * seed + 1);
    TangentFiberVector vr{(Vector(2) << 0.3, -1.2).finished(),
                          (Vector(2) << 0.9, 0.5).finished()};
    auto round = apply(prolong(rep, br, hr),
                       apply_inverse_action(rep, br, hr, vr));
    CHECK(round.distance(vr) <= 1e-9);
  }
}

TEST_CASE("prolong is a homomorphism from the star group of H") {
  auto domains = {make_so2(), make_so2_about_z(), make_so2_in_se2()};
  for (const auto& domain : domains) {
    auto rep = make_so2_standard_rep(domain);
    auto numeric = rep.without_analytic_differential();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto k1 = random_star_element(domain, 2 * seed);
      auto k2 = random_star_element(domain, 2 * seed + 1);
      auto k12 = star_multiply(k1, k2);

      const Matrix lhs = prolong(rep, k12.a, k12.g).full();
      const Matrix rhs =
          (prolong(rep, k1.a, k1.g) * prolong(rep, k2.a, k2.g)).full();
      CHECK((lhs - rhs).norm() <= 1e-10);

      const Matrix lhs_fd = prolong(numeric, k12.a, k12.g).full();
      const Matrix rhs_fd =
          (prolong(numeric, k1.a, k1.g) * prolong(numeric, k2.a, k2.g)).full();
      CHECK((lhs_fd - rhs_fd).norm() <= 1e-6);
    }
  }
}

TEST_CASE("determinant and inverse compatibility") {
  auto hz = make_so2_about_z();
  auto rep = make_so2_standard_rep(hz);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto k = random_star_element(hz, seed);
    const Matrix full = prolong(rep, k.a, k.g).full();
    const double det_sigma = rep.evaluate(k.g).determinant();
    CHECK(std::abs(full.determinant() - det_sigma * det_sigma) <=
          1e-9 * std::abs(det_sigma * det_sigma));

    auto k_inv = star_inverse(k);
    const Matrix lhs = full.inverse();
    const Matrix rhs = prolong(rep, k_inv.a, k_inv.g).full();
    CHECK((lhs - rhs).norm() <= 1e-9);
  }
}

TEST_CASE("component-variant diagnostic: zero at h = e, nonzero generically") {
  auto hz = make_so2_about_z();
  auto rep = make_so2_standard_rep(hz);
  TangentFiberVector v{(Vector(2) << 1.0, -0.5).finished(),
                       (Vector(2) << 0.2, 0.7).finished()};

  auto b = random_algebra_element(hz, 4);
  CHECK(inverse_action_variant_discrepancy(rep, b, GroupElement::identity(hz),
                                           v) == 0.0);

  auto h = exp(AlgebraElement::from_coords(hz, Vector::Constant(1, 1.3)));
  CHECK(inverse_action_variant_discrepancy(rep, b, h, v) > 1e-3);
}

TEST_CASE("dimension mismatches are rejected") {
  auto so2 = make_so2();
  auto rep = make_so2_standard_rep(so2);
  auto p = prolong(rep, AlgebraElement::zero(so2), GroupElement::identity(so2));
  CHECK_THROWS_AS(apply(p, TangentFiberVector::zero(3)), DimensionMismatch);
  CHECK_THROWS_AS(
      TangentFiberVector((Vector(2) << 1, 0).finished(), Vector::Zero(3)),
      DimensionMismatch);
}
