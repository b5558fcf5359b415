#pragma once

#include "starbundle/representations.hpp"

namespace starbundle {

/// Tangent-fiber vector (xi, u) in TF = R^m x R^m.
struct TangentFiberVector {
  Vector xi;
  Vector u;

  TangentFiberVector(Vector xi_in, Vector u_in)
      : xi(std::move(xi_in)), u(std::move(u_in)) {
    if (xi.size() != u.size())
      throw DimensionMismatch("TangentFiberVector: xi and u differ in length");
  }

  static TangentFiberVector zero(int m) {
    return TangentFiberVector(Vector::Zero(m), Vector::Zero(m));
  }

  int dim() const { return static_cast<int>(xi.size()); }
  double distance(const TangentFiberVector& other) const {
    return (xi - other.xi).norm() + (u - other.u).norm();
  }
};

/// Block lower-triangular 2m x 2m matrix
///
///   [ D  0 ]          D = sigma(h)
///   [ L  D ]          L = d sigma_e(b) sigma(h)
///
/// Only D and L are stored, so the zero top-right block and the shared
/// diagonal block hold bit-for-bit in the assembled matrix.
class ProlongedMatrix {
public:
  ProlongedMatrix(Matrix diagonal, Matrix lower_left);

  const Matrix& top_left() const { return diagonal_; }
  const Matrix& bottom_right() const { return diagonal_; }
  const Matrix& bottom_left() const { return lower_left_; }
  Matrix top_right() const { return Matrix::Zero(block_dim(), block_dim()); }

  int block_dim() const { return static_cast<int>(diagonal_.rows()); }

  /// The assembled 2m x 2m matrix.
  Matrix full() const;

  /// Reconstructs the named blocks from a full matrix; `blocks_valid`
  /// reports whether the block invariants held exactly.
  static ProlongedMatrix from_full(const Matrix& full, bool* blocks_valid = nullptr);

  ProlongedMatrix operator*(const ProlongedMatrix& other) const;

private:
  Matrix diagonal_;
  Matrix lower_left_;
};

/// sigma*(b, h) = [[sigma(h), 0], [d sigma_e(b) sigma(h), sigma(h)]].
/// Under right trivialization this is also the prolongation of sigma
/// evaluated on the tangent vector dR_h(b).
ProlongedMatrix prolong(const Representation& rep, const AlgebraElement& b,
                        const GroupElement& h);

/// Stacked application: xi' = D xi, u' = L xi + D u.
TangentFiberVector apply(const ProlongedMatrix& p, const TangentFiberVector& v);

/// sigma*((b,h)^-1)(v), computed as prolong(rep, Ad(h^-1)(-b), h^-1)
/// applied to v.
TangentFiberVector apply_inverse_action(const Representation& rep,
                                        const AlgebraElement& b,
                                        const GroupElement& h,
                                        const TangentFiberVector& v);

/// The component formula the inverse action is sometimes written with,
/// which applies d sigma_e(-Ad(h^-1) b) to xi directly instead of to
/// sigma(h^-1) xi. Kept as a diagnostic; it agrees with
/// apply_inverse_action exactly when h = e and differs generically.
TangentFiberVector apply_inverse_action_component_variant(
    const Representation& rep, const AlgebraElement& b, const GroupElement& h,
    const TangentFiberVector& v);

/// Norm distance between the two inverse-action formulas on (b, h, v).
double inverse_action_variant_discrepancy(const Representation& rep,
                                          const AlgebraElement& b,
                                          const GroupElement& h,
                                          const TangentFiberVector& v);

}  // namespace starbundle
