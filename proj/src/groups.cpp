#include "starbundle/groups.hpp"

#include <cmath>

namespace starbundle {

namespace {

constexpr double kGroupTol = 1e-9;

double orthogonal_residual(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  return (g.transpose() * g - Matrix::Identity(n, n)).norm() +
         std::abs(g.determinant() - 1.0);
}

// Rotation block + unit determinant + exact homogeneous bottom row.
double se2_residual(const Matrix& g) {
  const Matrix r = g.topLeftCorner(2, 2);
  double residual = (r.transpose() * r - Matrix::Identity(2, 2)).norm() +
                    std::abs(r.determinant() - 1.0);
  residual += std::abs(g(2, 0)) + std::abs(g(2, 1)) + std::abs(g(2, 2) - 1.0);
  return residual;
}

Matrix planar_rotation(double angle) {
  Matrix r(2, 2);
  const double c = std::cos(angle), s = std::sin(angle);
  r << c, -s, s, c;
  return r;
}

// sin(w)/w and (1-cos(w))/w with series fallbacks near zero.
void se2_v_entries(double w, double& a, double& b) {
  if (std::abs(w) < 1e-4) {
    const double w2 = w * w;
    a = 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    b = w / 2.0 - w * w2 / 24.0;
  } else {
    a = std::sin(w) / w;
    b = (1.0 - std::cos(w)) / w;
  }
}

}  // namespace

Matrix so2_generator() {
  Matrix j(2, 2);
  j << 0, -1, 1, 0;
  return j;
}

Matrix so3_generator(int axis) {
  Matrix l = Matrix::Zero(3, 3);
  switch (axis) {
    case 0: l(1, 2) = -1; l(2, 1) = 1; break;
    case 1: l(0, 2) = 1; l(2, 0) = -1; break;
    case 2: l(0, 1) = -1; l(1, 0) = 1; break;
    default: throw UsageError("so3_generator: axis must be 0, 1 or 2");
  }
  return l;
}

Matrix se2_generator(int index) {
  Matrix m = Matrix::Zero(3, 3);
  switch (index) {
    case 0: m(0, 1) = -1; m(1, 0) = 1; break;  // rotation
    case 1: m(0, 2) = 1; break;                // x translation
    case 2: m(1, 2) = 1; break;                // y translation
    default: throw UsageError("se2_generator: index must be 0, 1 or 2");
  }
  return m;
}

Matrix so3_hat(const Eigen::Vector3d& u) {
  Matrix m(3, 3);
  m << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return m;
}

DescriptorPtr make_so2() {
  return make_group_descriptor(
      "SO(2)", 2, {so2_generator()}, kGroupTol, orthogonal_residual,
      [](const Matrix& x) { return planar_rotation(x(1, 0)); });
}

DescriptorPtr make_so3() {
  auto rodrigues = [](const Matrix& x) -> Matrix {
    const Eigen::Vector3d w(x(2, 1), x(0, 2), x(1, 0));
    const double theta = w.norm();
    const Matrix id = Matrix::Identity(3, 3);
    if (theta < 1e-12) return id + x;
    const Matrix k = x / theta;
    return id + std::sin(theta) * k + (1.0 - std::cos(theta)) * k * k;
  };
  return make_group_descriptor(
      "SO(3)", 3, {so3_generator(0), so3_generator(1), so3_generator(2)},
      kGroupTol, orthogonal_residual, rodrigues);
}

DescriptorPtr make_se2() {
  auto closed_exp = [](const Matrix& x) -> Matrix {
    const double w = x(1, 0);
    double a, b;
    se2_v_entries(w, a, b);
    Matrix g = Matrix::Identity(3, 3);
    g.topLeftCorner(2, 2) = planar_rotation(w);
    g(0, 2) = a * x(0, 2) - b * x(1, 2);
    g(1, 2) = b * x(0, 2) + a * x(1, 2);
    return g;
  };
  return make_group_descriptor(
      "SE(2)", 3, {se2_generator(0), se2_generator(1), se2_generator(2)},
      kGroupTol, se2_residual, closed_exp);
}

DescriptorPtr make_trivial_group(int matrix_size) {
  const int n = matrix_size;
  return make_group_descriptor(
      "{e}", n, {}, kGroupTol,
      [n](const Matrix& g) { return (g - Matrix::Identity(n, n)).norm(); },
      [n](const Matrix&) { return Matrix::Identity(n, n); });
}

DescriptorPtr make_so2_about_z() {
  auto membership = [](const Matrix& g) {
    const Eigen::Vector3d p0(0, 0, 1);
    return orthogonal_residual(g) + (g * p0 - p0).norm();
  };
  auto closed_exp = [](const Matrix& x) -> Matrix {
    Matrix g = Matrix::Identity(3, 3);
    g.topLeftCorner(2, 2) = planar_rotation(x(1, 0));
    return g;
  };
  return make_group_descriptor("SO(2)<SO(3)", 3, {so3_generator(2)}, kGroupTol,
                               membership, closed_exp);
}

DescriptorPtr make_so2_in_se2() {
  auto membership = [](const Matrix& g) {
    const Eigen::Vector3d p0(0, 0, 1);
    return se2_residual(g) + (g * p0 - p0).norm();
  };
  auto closed_exp = [](const Matrix& x) -> Matrix {
    Matrix g = Matrix::Identity(3, 3);
    g.topLeftCorner(2, 2) = planar_rotation(x(1, 0));
    return g;
  };
  return make_group_descriptor("SO(2)<SE(2)", 3, {se2_generator(0)}, kGroupTol,
                               membership, closed_exp);
}

}  // namespace starbundle
