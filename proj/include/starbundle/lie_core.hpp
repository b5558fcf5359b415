#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "starbundle/errors.hpp"

namespace starbundle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Residual-valued membership test: 0 means "in the group", anything up
/// to the descriptor tolerance is accepted.
using MembershipFn = std::function<double(const Matrix&)>;

/// Optional closed-form exponential (planar rotation, Rodrigues, ...).
using ClosedFormExpFn = std::function<Matrix(const Matrix&)>;

/// A matrix Lie group together with a basis of its Lie algebra.
///
/// Descriptors are immutable and shared by reference; construct them
/// through make_group_descriptor, which validates basis independence,
/// closure under the commutator, and identity membership, and
/// precomputes the least-squares projector onto the algebra span.
class GroupDescriptor {
public:
  GroupDescriptor(std::string name, int matrix_size,
                  std::vector<Matrix> algebra_basis, double tolerance,
                  MembershipFn membership, ClosedFormExpFn closed_form_exp);

  const std::string& name() const { return name_; }
  int matrix_size() const { return n_; }
  int algebra_dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& algebra_basis() const { return basis_; }
  double tolerance() const { return tolerance_; }
  bool has_closed_form_exp() const { return static_cast<bool>(closed_form_exp_); }

  double membership_residual(const Matrix& m) const { return membership_(m); }
  Matrix closed_form_exp(const Matrix& x) const { return closed_form_exp_(x); }

  /// Least-squares coordinates of `m` in the algebra basis plus the
  /// off-span residual norm.
  std::pair<Vector, double> project_to_algebra(const Matrix& m) const;

  /// Linear combination of basis matrices.
  Matrix combine(const Vector& coords) const;

private:
  std::string name_;
  int n_;
  std::vector<Matrix> basis_;
  double tolerance_;
  MembershipFn membership_;
  ClosedFormExpFn closed_form_exp_;
  Matrix basis_stacked_;  // n^2 x d, column j = vec(basis[j])
  Eigen::CompleteOrthogonalDecomposition<Matrix> basis_cod_;
};

using DescriptorPtr = std::shared_ptr<const GroupDescriptor>;

/// Validates the descriptor invariants and returns a shared handle.
/// Throws SpanViolation if the basis is dependent or not closed under the
/// commutator, MembershipViolation if the identity fails the predicate.
DescriptorPtr make_group_descriptor(std::string name, int matrix_size,
                                    std::vector<Matrix> algebra_basis,
                                    double tolerance, MembershipFn membership,
                                    ClosedFormExpFn closed_form_exp = nullptr);

/// Group element: an invertible matrix passing the descriptor's
/// membership predicate.
class GroupElement {
public:
  GroupElement(DescriptorPtr descriptor, Matrix matrix);

  static GroupElement identity(const DescriptorPtr& descriptor);

  const DescriptorPtr& descriptor() const { return descriptor_; }
  const Matrix& matrix() const { return matrix_; }

  GroupElement inverse() const;

private:
  DescriptorPtr descriptor_;
  Matrix matrix_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);

/// Lie algebra element held both as a matrix and as coordinates in the
/// descriptor basis. The stored matrix is always the exact basis
/// combination of the coordinates; construction from a raw matrix
/// projects first and rejects matrices that stray from the span.
class AlgebraElement {
public:
  static AlgebraElement from_coords(DescriptorPtr descriptor, Vector coords);
  /// Throws SpanViolation when the projection residual exceeds span_tol.
  static AlgebraElement from_matrix(const DescriptorPtr& descriptor,
                                    const Matrix& matrix,
                                    double span_tol = 1e-9);
  static AlgebraElement zero(const DescriptorPtr& descriptor);

  const DescriptorPtr& descriptor() const { return descriptor_; }
  const Matrix& matrix() const { return matrix_; }
  const Vector& coords() const { return coords_; }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement scaled(double factor) const;

private:
  AlgebraElement(DescriptorPtr descriptor, Vector coords, Matrix matrix)
      : descriptor_(std::move(descriptor)),
        coords_(std::move(coords)),
        matrix_(std::move(matrix)) {}

  DescriptorPtr descriptor_;
  Vector coords_;
  Matrix matrix_;
};

/// Matrix exponential of an algebra element. Uses the descriptor's
/// closed form when available, otherwise a scaling-and-squaring series
/// kernel. Throws MembershipViolation if the result fails the
/// descriptor's predicate (an inconsistent descriptor).
GroupElement exp(const AlgebraElement& x);

/// Scaling-and-squaring series kernel, exposed so the closed forms can
/// be cross-checked against it.
Matrix expm(const Matrix& a);

/// Adjoint action Ad(g)X = g X g^-1, projected back onto the basis.
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);

/// Commutator [X, Y] = XY - YX.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Least-squares coordinates plus off-span residual (never throws).
std::pair<Vector, double> to_coords(const Matrix& m,
                                    const GroupDescriptor& descriptor);

/// Deterministic sampling: algebra coordinates uniform in [-2, 2].
AlgebraElement random_algebra_element(const DescriptorPtr& descriptor,
                                      std::uint64_t seed);
GroupElement random_group_element(const DescriptorPtr& descriptor,
                                  std::uint64_t seed);

inline void require_same_descriptor(const DescriptorPtr& a,
                                    const DescriptorPtr& b,
                                    const char* where) {
  if (a.get() != b.get())
    throw DomainMismatch(std::string(where) + ": elements belong to different groups");
}

}  // namespace starbundle
