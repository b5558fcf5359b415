#include "starbundle/manifolds.hpp"

#include <cmath>

namespace starbundle {

namespace {
constexpr double kManifoldTol = 1e-9;
}

ManifoldPtr make_unit_circle() {
  Vector base(2);
  base << 1, 0;
  return std::make_shared<ManifoldDescriptor>(
      "S1", 2, base, [](const Vector& x) { return std::abs(x.norm() - 1.0); },
      [](const Vector& x, const Vector& v) { return std::abs(x.dot(v)); });
}

ManifoldPtr make_unit_sphere() {
  Vector base(3);
  base << 0, 0, 1;
  return std::make_shared<ManifoldDescriptor>(
      "S2", 3, base, [](const Vector& x) { return std::abs(x.norm() - 1.0); },
      [](const Vector& x, const Vector& v) { return std::abs(x.dot(v)); });
}

ManifoldPtr make_euclidean_plane() {
  Vector base(3);
  base << 0, 0, 1;
  return std::make_shared<ManifoldDescriptor>(
      "E2", 3, base, [](const Vector& x) { return std::abs(x[2] - 1.0); },
      [](const Vector&, const Vector& v) { return std::abs(v[2]); });
}

EmbeddedManifoldPoint::EmbeddedManifoldPoint(ManifoldPtr manifold, Vector coords)
    : manifold_(std::move(manifold)), coords_(std::move(coords)) {
  if (coords_.size() != manifold_->ambient_dim())
    throw DimensionMismatch(manifold_->name() + ": point has wrong ambient dimension");
  const double residual = manifold_->constraint_residual(coords_);
  if (residual > kManifoldTol)
    throw TangencyViolation(manifold_->name() + ": point off the manifold, residual " +
                            std::to_string(residual));
}

EmbeddedTangentVector::EmbeddedTangentVector(EmbeddedManifoldPoint base,
                                             Vector vec)
    : base_(std::move(base)), vec_(std::move(vec)) {
  if (vec_.size() != base_.manifold()->ambient_dim())
    throw DimensionMismatch(base_.manifold()->name() +
                            ": tangent vector has wrong ambient dimension");
  const double residual =
      base_.manifold()->tangency_residual(base_.coords(), vec_);
  if (residual > kManifoldTol)
    throw TangencyViolation(base_.manifold()->name() +
                            ": vector is not tangent, residual " +
                            std::to_string(residual));
}

EmbeddedTangentVector EmbeddedTangentVector::zero(const ManifoldPtr& manifold,
                                                  const Vector& at) {
  return EmbeddedTangentVector(EmbeddedManifoldPoint(manifold, at),
                               Vector::Zero(manifold->ambient_dim()));
}

}  // namespace starbundle
