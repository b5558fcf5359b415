#pragma once

#include "starbundle/lie_core.hpp"

namespace starbundle {

/// SO(2) as 2x2 rotation matrices; algebra basis {J}, J = [[0,-1],[1,0]].
DescriptorPtr make_so2();

/// SO(3) as 3x3 rotation matrices; algebra basis {Lx, Ly, Lz} with
/// hat(u) v = u x v. Closed-form exponential via Rodrigues.
DescriptorPtr make_so3();

/// SE(2) as 3x3 homogeneous matrices [[R, t],[0, 1]]; algebra basis
/// {J2 (rotation), Px, Py (translations)} in that order.
DescriptorPtr make_se2();

/// The trivial group {I} in n x n matrices (empty algebra basis).
DescriptorPtr make_trivial_group(int matrix_size = 2);

/// SO(2) about the z axis realized inside 3x3 rotation matrices;
/// membership additionally pins the fixed point (0,0,1).
DescriptorPtr make_so2_about_z();

/// SO(2) realized inside SE(2) (rotations about the origin; zero
/// translation part).
DescriptorPtr make_so2_in_se2();

/// Basis matrices, exposed for tests and catalog code.
Matrix so2_generator();             // J
Matrix so3_generator(int axis);     // Lx, Ly, Lz for axis = 0,1,2
Matrix se2_generator(int index);    // J2, Px, Py for index = 0,1,2

/// hat : R^3 -> so(3), hat(u) v = u x v.
Matrix so3_hat(const Eigen::Vector3d& u);

}  // namespace starbundle
