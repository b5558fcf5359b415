#include "starbundle/star_group.hpp"

#include <cmath>

#include "starbundle/rng.hpp"

namespace starbundle {

StarElement star_multiply(const StarElement& p, const StarElement& q) {
  require_same_descriptor(p.descriptor(), q.descriptor(), "star_multiply");
  return StarElement(p.a + adjoint(p.g, q.a), multiply(p.g, q.g));
}

StarElement star_inverse(const StarElement& p) {
  GroupElement g_inv = p.g.inverse();
  AlgebraElement a_inv = adjoint(g_inv, -p.a);
  return StarElement(std::move(a_inv), std::move(g_inv));
}

TangentOfGroup theta(const StarElement& p) {
  return TangentOfGroup{p.g, p.a.matrix() * p.g.matrix()};
}

StarElement theta_inverse(const TangentOfGroup& t) {
  const Matrix x = t.vector * t.base.matrix().inverse();
  // from_matrix throws SpanViolation when x leaves the algebra span
  return StarElement(AlgebraElement::from_matrix(t.base.descriptor(), x, 1e-9),
                     t.base);
}

StarElement random_star_element(const DescriptorPtr& descriptor,
                                std::uint64_t seed) {
  return StarElement(random_algebra_element(descriptor, mix_seed(seed) ^ 0xA11CE),
                     random_group_element(descriptor, mix_seed(seed) ^ 0xB0B));
}

EmbeddedTangentVector act_on_tangent(const StarElement& p,
                                     const EmbeddedTangentVector& v) {
  const auto& manifold = v.base().manifold();
  if (p.descriptor()->matrix_size() != manifold->ambient_dim())
    throw DimensionMismatch("act_on_tangent: group does not act on the ambient space");
  const Vector new_base = p.g.matrix() * v.base().coords();
  const Vector new_vec = p.g.matrix() * v.vec() + p.a.matrix() * new_base;
  // EmbeddedTangentVector construction enforces constraint and tangency.
  return EmbeddedTangentVector(EmbeddedManifoldPoint(manifold, new_base),
                               new_vec);
}

double fundamental_field_fd_residual(const AlgebraElement& a,
                                     const EmbeddedTangentVector& v,
                                     double fd_step) {
  const Vector x = v.base().coords();
  const Vector analytic = a.matrix() * x;
  const Vector plus = expm(fd_step * a.matrix()) * x;
  const Vector minus = expm(-fd_step * a.matrix()) * x;
  const Vector fd = (plus - minus) / (2.0 * fd_step);
  return (analytic - fd).norm();
}

int infinitesimal_rank(const EmbeddedTangentVector& v,
                       const DescriptorPtr& descriptor, double fd_step) {
  const int d = descriptor->algebra_dim();
  if (d == 0) return 0;
  const int ambient = v.base().manifold()->ambient_dim();

  auto stacked_action = [&](const StarElement& p) -> Vector {
    const EmbeddedTangentVector moved = act_on_tangent(p, v);
    Vector out(2 * ambient);
    out.head(ambient) = moved.base().coords();
    out.tail(ambient) = moved.vec();
    return out;
  };

  // Curves through the identity of G* along the two algebra summands:
  // (t b_i, e) and (0, exp(t b_i)).
  Matrix jacobian(2 * ambient, 2 * d);
  const GroupElement e = GroupElement::identity(descriptor);
  for (int i = 0; i < d; ++i) {
    const auto basis_coords = Vector::Unit(d, i);
    auto algebra_dir = [&](double t) {
      return StarElement(
          AlgebraElement::from_coords(descriptor, t * basis_coords), e);
    };
    auto group_dir = [&](double t) {
      return StarElement(
          AlgebraElement::zero(descriptor),
          exp(AlgebraElement::from_coords(descriptor, t * basis_coords)));
    };
    jacobian.col(i) = (stacked_action(algebra_dir(fd_step)) -
                       stacked_action(algebra_dir(-fd_step))) /
                      (2.0 * fd_step);
    jacobian.col(d + i) = (stacked_action(group_dir(fd_step)) -
                           stacked_action(group_dir(-fd_step))) /
                          (2.0 * fd_step);
  }

  Eigen::JacobiSVD<Matrix> svd(jacobian);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-6) ++rank;
  return rank;
}

}  // namespace starbundle
