#include "starbundle/lie_core.hpp"

#include <cmath>
#include <utility>

#include "starbundle/rng.hpp"

namespace starbundle {

namespace {

Matrix vec_stack(const std::vector<Matrix>& basis, int n) {
  Matrix stacked(n * n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    stacked.col(static_cast<Eigen::Index>(j)) =
        Eigen::Map<const Vector>(basis[j].data(), n * n);
  return stacked;
}

}  // namespace

GroupDescriptor::GroupDescriptor(std::string name, int matrix_size,
                                 std::vector<Matrix> algebra_basis,
                                 double tolerance, MembershipFn membership,
                                 ClosedFormExpFn closed_form_exp)
    : name_(std::move(name)),
      n_(matrix_size),
      basis_(std::move(algebra_basis)),
      tolerance_(tolerance),
      membership_(std::move(membership)),
      closed_form_exp_(std::move(closed_form_exp)) {
  basis_stacked_ = vec_stack(basis_, n_);
  if (algebra_dim() > 0) basis_cod_.compute(basis_stacked_);
}

std::pair<Vector, double> GroupDescriptor::project_to_algebra(
    const Matrix& m) const {
  if (algebra_dim() == 0) return {Vector(0), m.norm()};
  const Eigen::Map<const Vector> rhs(m.data(), n_ * n_);
  Vector coords = basis_cod_.solve(rhs);
  const double residual = (basis_stacked_ * coords - rhs).norm();
  return {std::move(coords), residual};
}

Matrix GroupDescriptor::combine(const Vector& coords) const {
  Matrix out = Matrix::Zero(n_, n_);
  for (int j = 0; j < algebra_dim(); ++j) out += coords[j] * basis_[j];
  return out;
}

DescriptorPtr make_group_descriptor(std::string name, int matrix_size,
                                    std::vector<Matrix> algebra_basis,
                                    double tolerance, MembershipFn membership,
                                    ClosedFormExpFn closed_form_exp) {
  auto descriptor = std::make_shared<GroupDescriptor>(
      std::move(name), matrix_size, std::move(algebra_basis), tolerance,
      std::move(membership), std::move(closed_form_exp));

  const int d = descriptor->algebra_dim();
  const auto& basis = descriptor->algebra_basis();

  // Basis independence: the Gram matrix of the vectorized basis must be
  // nonsingular.
  if (d > 0) {
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        gram(i, j) = (basis[i].array() * basis[j].array()).sum();
    Eigen::JacobiSVD<Matrix> svd(gram);
    const double smin = svd.singularValues()(d - 1);
    if (!(smin > 1e-12))
      throw SpanViolation(descriptor->name() +
                          ": algebra basis is linearly dependent");
  }

  // Closure under the commutator: structure constants must exist.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      const auto [coords, residual] = descriptor->project_to_algebra(comm);
      (void)coords;
      if (residual > 1e-9)
        throw SpanViolation(descriptor->name() +
                            ": basis is not closed under the commutator");
    }
  }

  const Matrix id = Matrix::Identity(matrix_size, matrix_size);
  if (descriptor->membership_residual(id) > descriptor->tolerance())
    throw MembershipViolation(descriptor->name() +
                              ": identity fails the membership predicate");

  return descriptor;
}

GroupElement::GroupElement(DescriptorPtr descriptor, Matrix matrix)
    : descriptor_(std::move(descriptor)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != descriptor_->matrix_size() ||
      matrix_.cols() != descriptor_->matrix_size())
    throw DimensionMismatch(descriptor_->name() + ": group element has wrong size");
  const double residual = descriptor_->membership_residual(matrix_);
  if (residual > descriptor_->tolerance())
    throw MembershipViolation(descriptor_->name() +
                              ": membership residual " + std::to_string(residual));
  if (std::abs(matrix_.determinant()) <= 1e-12)
    throw MembershipViolation(descriptor_->name() + ": matrix is singular");
}

GroupElement GroupElement::identity(const DescriptorPtr& descriptor) {
  return GroupElement(descriptor, Matrix::Identity(descriptor->matrix_size(),
                                                   descriptor->matrix_size()));
}

GroupElement GroupElement::inverse() const {
  return GroupElement(descriptor_, matrix_.inverse());
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_descriptor(g.descriptor(), h.descriptor(), "multiply");
  return GroupElement(g.descriptor(), g.matrix() * h.matrix());
}

AlgebraElement AlgebraElement::from_coords(DescriptorPtr descriptor,
                                           Vector coords) {
  if (coords.size() != descriptor->algebra_dim())
    throw DimensionMismatch(descriptor->name() + ": coordinate vector has wrong length");
  Matrix matrix = descriptor->combine(coords);
  return AlgebraElement(std::move(descriptor), std::move(coords),
                        std::move(matrix));
}

AlgebraElement AlgebraElement::from_matrix(const DescriptorPtr& descriptor,
                                           const Matrix& matrix,
                                           double span_tol) {
  auto [coords, residual] = descriptor->project_to_algebra(matrix);
  if (residual > span_tol)
    throw SpanViolation(descriptor->name() + ": matrix lies off the algebra span, residual " +
                        std::to_string(residual));
  return from_coords(descriptor, std::move(coords));
}

AlgebraElement AlgebraElement::zero(const DescriptorPtr& descriptor) {
  return from_coords(descriptor, Vector::Zero(descriptor->algebra_dim()));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  require_same_descriptor(descriptor_, other.descriptor_, "AlgebraElement::operator+");
  return AlgebraElement(descriptor_, coords_ + other.coords_,
                        matrix_ + other.matrix_);
}

AlgebraElement AlgebraElement::operator-() const {
  return AlgebraElement(descriptor_, -coords_, -matrix_);
}

AlgebraElement AlgebraElement::scaled(double factor) const {
  return AlgebraElement(descriptor_, factor * coords_, factor * matrix_);
}

Matrix expm(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  const Matrix id = Matrix::Identity(n, n);

  // Scale so the series converges fast, then square back.
  int squarings = 0;
  double scale = a.norm();
  while (scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix x = a / std::ldexp(1.0, squarings);

  Matrix term = id;
  Matrix sum = id;
  for (int k = 1; k <= 40; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-18 * sum.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

GroupElement exp(const AlgebraElement& x) {
  const auto& descriptor = x.descriptor();
  const Matrix result = descriptor->has_closed_form_exp()
                            ? descriptor->closed_form_exp(x.matrix())
                            : expm(x.matrix());
  // GroupElement construction enforces the membership predicate.
  return GroupElement(descriptor, result);
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  require_same_descriptor(g.descriptor(), x.descriptor(), "adjoint");
  const Matrix conjugated = g.matrix() * x.matrix() * g.matrix().inverse();
  return AlgebraElement::from_matrix(g.descriptor(), conjugated, 1e-9);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_descriptor(x.descriptor(), y.descriptor(), "bracket");
  const Matrix comm = x.matrix() * y.matrix() - y.matrix() * x.matrix();
  return AlgebraElement::from_matrix(x.descriptor(), comm, 1e-9);
}

std::pair<Vector, double> to_coords(const Matrix& m,
                                    const GroupDescriptor& descriptor) {
  return descriptor.project_to_algebra(m);
}

AlgebraElement random_algebra_element(const DescriptorPtr& descriptor,
                                      std::uint64_t seed) {
  SeededRng rng(mix_seed(seed));
  Vector coords(descriptor->algebra_dim());
  for (int i = 0; i < descriptor->algebra_dim(); ++i)
    coords[i] = rng.uniform(-2.0, 2.0);
  return AlgebraElement::from_coords(descriptor, std::move(coords));
}

GroupElement random_group_element(const DescriptorPtr& descriptor,
                                  std::uint64_t seed) {
  return exp(random_algebra_element(descriptor, seed));
}

}  // namespace starbundle
