#include "starbundle/prolongation.hpp"

namespace starbundle {

ProlongedMatrix::ProlongedMatrix(Matrix diagonal, Matrix lower_left)
    : diagonal_(std::move(diagonal)), lower_left_(std::move(lower_left)) {
  if (diagonal_.rows() != diagonal_.cols() ||
      lower_left_.rows() != lower_left_.cols() ||
      diagonal_.rows() != lower_left_.rows())
    throw DimensionMismatch("ProlongedMatrix: blocks must be square and equal-sized");
}

Matrix ProlongedMatrix::full() const {
  const int m = block_dim();
  Matrix out = Matrix::Zero(2 * m, 2 * m);
  out.topLeftCorner(m, m) = diagonal_;
  out.bottomRightCorner(m, m) = diagonal_;
  out.bottomLeftCorner(m, m) = lower_left_;
  return out;
}

ProlongedMatrix ProlongedMatrix::from_full(const Matrix& full,
                                           bool* blocks_valid) {
  if (full.rows() != full.cols() || full.rows() % 2 != 0)
    throw DimensionMismatch("ProlongedMatrix::from_full: matrix must be 2m x 2m");
  const int m = static_cast<int>(full.rows()) / 2;
  ProlongedMatrix out(full.topLeftCorner(m, m), full.bottomLeftCorner(m, m));
  if (blocks_valid) {
    *blocks_valid = full.topRightCorner(m, m).isZero(0.0) &&
                    full.topLeftCorner(m, m) == full.bottomRightCorner(m, m);
  }
  return out;
}

ProlongedMatrix ProlongedMatrix::operator*(const ProlongedMatrix& other) const {
  if (block_dim() != other.block_dim())
    throw DimensionMismatch("ProlongedMatrix::operator*: block size mismatch");
  return ProlongedMatrix(
      diagonal_ * other.diagonal_,
      lower_left_ * other.diagonal_ + diagonal_ * other.lower_left_);
}

ProlongedMatrix prolong(const Representation& rep, const AlgebraElement& b,
                        const GroupElement& h) {
  require_same_descriptor(b.descriptor(), rep.domain(), "prolong");
  require_same_descriptor(h.descriptor(), rep.domain(), "prolong");
  const Matrix sigma = rep.evaluate(h);
  const Matrix dsigma = rep.differential_at_identity(b);
  return ProlongedMatrix(sigma, dsigma * sigma);
}

TangentFiberVector apply(const ProlongedMatrix& p, const TangentFiberVector& v) {
  if (p.block_dim() != v.dim())
    throw DimensionMismatch("apply: prolonged matrix and vector dimensions differ");
  return TangentFiberVector(p.top_left() * v.xi,
                            p.bottom_left() * v.xi + p.bottom_right() * v.u);
}

namespace {

// (b, h)^-1 = (Ad(h^-1)(-b), h^-1) in the star group of H.
std::pair<AlgebraElement, GroupElement> star_inverse_pair(
    const AlgebraElement& b, const GroupElement& h) {
  GroupElement h_inv = h.inverse();
  AlgebraElement b_inv = adjoint(h_inv, -b);
  return {std::move(b_inv), std::move(h_inv)};
}

}  // namespace

TangentFiberVector apply_inverse_action(const Representation& rep,
                                        const AlgebraElement& b,
                                        const GroupElement& h,
                                        const TangentFiberVector& v) {
  const auto [b_inv, h_inv] = star_inverse_pair(b, h);
  return apply(prolong(rep, b_inv, h_inv), v);
}

TangentFiberVector apply_inverse_action_component_variant(
    const Representation& rep, const AlgebraElement& b, const GroupElement& h,
    const TangentFiberVector& v) {
  const auto [b_inv, h_inv] = star_inverse_pair(b, h);
  const Matrix sigma_inv = rep.evaluate(h_inv);
  const Matrix dsigma = rep.differential_at_identity(b_inv);
  return TangentFiberVector(sigma_inv * v.xi, dsigma * v.xi + sigma_inv * v.u);
}

double inverse_action_variant_discrepancy(const Representation& rep,
                                          const AlgebraElement& b,
                                          const GroupElement& h,
                                          const TangentFiberVector& v) {
  const TangentFiberVector consistent = apply_inverse_action(rep, b, h, v);
  const TangentFiberVector variant =
      apply_inverse_action_component_variant(rep, b, h, v);
  return consistent.distance(variant);
}

}  // namespace starbundle
