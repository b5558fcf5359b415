#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "starbundle/groups.hpp"
#include "starbundle/lie_core.hpp"

using namespace starbundle;

namespace {

// Independent oracle: plain truncated power series, no scaling. Only
// valid for moderate norms; inputs below keep ||X|| <= 5.
Matrix series_exp_oracle(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = Matrix::Identity(n, n);
  for (int k = 1; k <= 120; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-20 * sum.norm()) break;
  }
  return sum;
}

// Independent Rodrigues oracle written directly from axis and angle.
Matrix rodrigues_oracle(const Eigen::Vector3d& axis_unit, double angle) {
  const Matrix k = so3_hat(axis_unit);
  return Matrix::Identity(3, 3) + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * k * k;
}

}  // namespace

TEST_CASE("descriptor invariants are validated at construction") {
  auto so3 = make_so3();
  CHECK(so3->algebra_dim() == 3);
  CHECK(so3->matrix_size() == 3);
  CHECK(so3->membership_residual(Matrix::Identity(3, 3)) <= so3->tolerance());

  // dependent basis rejected
  CHECK_THROWS_AS(make_group_descriptor(
                      "bad", 3, {so3_generator(0), 2.0 * so3_generator(0)},
                      1e-9, [](const Matrix&) { return 0.0; }),
                  SpanViolation);

  // basis not closed under commutator rejected ({Lx, Ly} alone)
  CHECK_THROWS_AS(make_group_descriptor(
                      "bad", 3, {so3_generator(0), so3_generator(1)}, 1e-9,
                      [](const Matrix&) { return 0.0; }),
                  SpanViolation);

  // identity failing membership rejected
  CHECK_THROWS_AS(make_group_descriptor("bad", 2, {so2_generator()}, 1e-9,
                                        [](const Matrix&) { return 1.0; }),
                  MembershipViolation);
}

TEST_CASE("exp: zero element maps to the identity") {
  auto so3 = make_so3();
  auto g = exp(AlgebraElement::zero(so3));
  CHECK((g.matrix() - Matrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("exp in so(2): quarter turn") {
  auto so2 = make_so2();
  const double half_pi = std::acos(0.0);
  auto x = AlgebraElement::from_coords(so2, Vector::Constant(1, half_pi));

  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;

  // closed form against frozen value and against the series oracle
  auto g = exp(x);
  CHECK((g.matrix() - expected).norm() <= 1e-15);
  CHECK((g.matrix() - series_exp_oracle(x.matrix())).norm() <= 1e-14);
  // general kernel agrees with the closed form
  CHECK((expm(x.matrix()) - g.matrix()).norm() <= 1e-14);
}

TEST_CASE("exp in so(3): half turn about z against Rodrigues oracle") {
  auto so3 = make_so3();
  const double pi = std::acos(-1.0);
  auto x = AlgebraElement::from_coords(so3, pi * Vector::Unit(3, 2));

  const Matrix expected = rodrigues_oracle(Eigen::Vector3d(0, 0, 1), pi);
  auto g = exp(x);
  CHECK((g.matrix() - expected).norm() <= 1e-13);

  Matrix frozen(3, 3);
  frozen << -1, 0, 0, 0, -1, 0, 0, 0, 1;
  CHECK((g.matrix() - frozen).norm() <= 1e-13);
}

TEST_CASE("exp: closed forms cross-checked against the series kernel") {
  for (auto descriptor : {make_so2(), make_so3(), make_se2()}) {
    REQUIRE(descriptor->has_closed_form_exp());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto x = random_algebra_element(descriptor, seed);
      const Matrix closed = descriptor->closed_form_exp(x.matrix());
      CHECK((closed - expm(x.matrix())).norm() <= 1e-12);
      CHECK((closed - series_exp_oracle(x.matrix())).norm() <= 1e-12);
    }
  }
}

TEST_CASE("exp(X) exp(-X) = identity for coords bounded by 5") {
  auto so3 = make_so3();
  auto se2 = make_se2();
  for (auto descriptor : {so3, se2}) {
    const Matrix id = Matrix::Identity(3, 3);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto x = random_algebra_element(descriptor, seed).scaled(2.5);
      CHECK(x.coords().lpNorm<Eigen::Infinity>() <= 5.0);
      auto g = exp(x);
      auto ginv = exp(-x);
      CHECK((g.matrix() * ginv.matrix() - id).norm() <= 1e-10);
    }
  }
}

TEST_CASE("adjoint: identity conjugation is a no-op") {
  auto so3 = make_so3();
  auto e = GroupElement::identity(so3);
  auto x = random_algebra_element(so3, 7);
  auto ad = adjoint(e, x);
  CHECK((ad.coords() - x.coords()).norm() <= 1e-14);
}

TEST_CASE("adjoint in SO(3): R_z(pi/2) takes L_x to L_y") {
  auto so3 = make_so3();
  const double half_pi = std::acos(0.0);
  auto rz = exp(AlgebraElement::from_coords(so3, half_pi * Vector::Unit(3, 2)));
  auto lx = AlgebraElement::from_coords(so3, Vector::Unit(3, 0));

  // oracle: explicit 3x3 conjugation
  const Matrix oracle = rz.matrix() * so3_generator(0) * rz.matrix().transpose();
  CHECK((oracle - so3_generator(1)).norm() <= 1e-14);

  auto ad = adjoint(rz, lx);
  CHECK((ad.matrix() - so3_generator(1)).norm() <= 1e-13);
  CHECK((ad.coords() - Vector::Unit(3, 1)).norm() <= 1e-13);
}

TEST_CASE("adjoint is a homomorphism and preserves the bracket") {
  for (auto descriptor : {make_so3(), make_se2()}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto g1 = random_group_element(descriptor, 3 * seed);
      auto g2 = random_group_element(descriptor, 3 * seed + 1);
      auto x = random_algebra_element(descriptor, 3 * seed + 2);
      auto y = random_algebra_element(descriptor, 3 * seed + 7);

      auto lhs = adjoint(multiply(g1, g2), x);
      auto rhs = adjoint(g1, adjoint(g2, x));
      CHECK((lhs.coords() - rhs.coords()).norm() <= 1e-9);

      auto ad_bracket = adjoint(g1, bracket(x, y));
      auto bracket_ad = bracket(adjoint(g1, x), adjoint(g1, y));
      CHECK((ad_bracket.coords() - bracket_ad.coords()).norm() <= 1e-9);
    }
  }
}

TEST_CASE("bracket: antisymmetry, bilinearity edge cases, so(3) table") {
  auto so3 = make_so3();
  auto x = random_algebra_element(so3, 11);
  CHECK(bracket(x, x).coords().norm() == 0.0);
  CHECK(bracket(x, AlgebraElement::zero(so3)).coords().norm() == 0.0);

  auto lx = AlgebraElement::from_coords(so3, Vector::Unit(3, 0));
  auto ly = AlgebraElement::from_coords(so3, Vector::Unit(3, 1));
  // oracle: explicit matrix arithmetic
  const Matrix oracle =
      so3_generator(0) * so3_generator(1) - so3_generator(1) * so3_generator(0);
  CHECK((oracle - so3_generator(2)).norm() == 0.0);
  CHECK((bracket(lx, ly).matrix() - so3_generator(2)).norm() <= 1e-15);
}

TEST_CASE("to_coords: basis elements, zero, and the symmetric split") {
  auto so3 = make_so3();

  auto [c0, r0] = to_coords(so3_generator(0), *so3);
  CHECK((c0 - Vector::Unit(3, 0)).norm() <= 1e-14);
  CHECK(r0 <= 1e-14);

  auto [cz, rz] = to_coords(Matrix::Zero(3, 3), *so3);
  CHECK(cz.norm() == 0.0);
  CHECK(rz == 0.0);

  // symmetric matrices project to their antisymmetric part (zero here),
  // residual equal to the norm of the symmetric part
  Matrix sym(3, 3);
  sym << 1, 2, 3, 2, 5, 6, 3, 6, 9;
  auto [cs, rs] = to_coords(sym, *so3);
  CHECK(cs.norm() <= 1e-14);
  CHECK(rs == doctest::Approx(sym.norm()).epsilon(1e-12));

  Matrix mixed = sym + 0.5 * so3_generator(1);
  auto [cm, rm] = to_coords(mixed, *so3);
  CHECK((cm - 0.5 * Vector::Unit(3, 1)).norm() <= 1e-13);
  CHECK(rm == doctest::Approx(sym.norm()).epsilon(1e-12));
}

TEST_CASE("to_coords round-trips the span") {
  for (auto descriptor : {make_so2(), make_so3(), make_se2()}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto x = random_algebra_element(descriptor, seed);
      auto [c, r] = to_coords(x.matrix(), *descriptor);
      CHECK((c - x.coords()).norm() <= 1e-12);
      CHECK(r <= 1e-12);
    }
  }
}

TEST_CASE("random_group_element: deterministic in the seed, members") {
  auto so3 = make_so3();
  auto a = random_group_element(so3, 42);
  auto b = random_group_element(so3, 42);
  CHECK((a.matrix() - b.matrix()).norm() == 0.0);

  auto c = random_group_element(so3, 43);
  CHECK((a.matrix() - c.matrix()).norm() > 1e-3);

  const Matrix id = Matrix::Identity(3, 3);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = random_group_element(so3, seed);
    CHECK((g.matrix().transpose() * g.matrix() - id).norm() <= 1e-9);
  }
}

TEST_CASE("trivial group: empty basis, identity-only sampling") {
  auto trivial = make_trivial_group();
  CHECK(trivial->algebra_dim() == 0);
  auto g = random_group_element(trivial, 5);
  CHECK((g.matrix() - Matrix::Identity(2, 2)).norm() == 0.0);
  auto [c, r] = to_coords(so2_generator(), *trivial);
  CHECK(c.size() == 0);
  CHECK(r == doctest::Approx(so2_generator().norm()));
}

TEST_CASE("subgroup descriptors accept their members and reject others") {
  auto hz = make_so2_about_z();
  CHECK(hz->algebra_dim() == 1);
  auto h = random_group_element(hz, 3);
  CHECK(hz->membership_residual(h.matrix()) <= hz->tolerance());

  auto so3 = make_so3();
  const double half_pi = std::acos(0.0);
  auto rx = exp(AlgebraElement::from_coords(so3, half_pi * Vector::Unit(3, 0)));
  CHECK(hz->membership_residual(rx.matrix()) > 1.0);

  auto hr = make_so2_in_se2();
  auto se2 = make_se2();
  auto translation =
      exp(AlgebraElement::from_coords(se2, Vector::Unit(3, 1)));
  CHECK(hr->membership_residual(translation.matrix()) > 0.5);
  CHECK(hr->membership_residual(random_group_element(hr, 9).matrix()) <=
        hr->tolerance());
}

TEST_CASE("domain mismatch is detected") {
  auto so2 = make_so2();
  auto so3 = make_so3();
  auto g = random_group_element(so3, 1);
  auto x = random_algebra_element(so2, 1);
  CHECK_THROWS_AS(adjoint(g, x), DomainMismatch);

  // two separately built SO(3) descriptors are distinct domains
  auto so3b = make_so3();
  CHECK_THROWS_AS(
      bracket(random_algebra_element(so3, 1), random_algebra_element(so3b, 1)),
      DomainMismatch);
}

TEST_CASE("exp flags inconsistent descriptors via MembershipViolation") {
  // a "group" whose membership predicate no exponential can satisfy
  auto bogus = make_group_descriptor(
      "bogus", 2, {so2_generator()}, 1e-9, [](const Matrix& g) {
        return (g - Matrix::Identity(2, 2)).norm() <= 1e-9
                   ? 0.0
                   : (g - Matrix::Identity(2, 2)).norm();
      });
  auto x = AlgebraElement::from_coords(bogus, Vector::Constant(1, 1.0));
  CHECK_THROWS_AS(exp(x), MembershipViolation);
}
