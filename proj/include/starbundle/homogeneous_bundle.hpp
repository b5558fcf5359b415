#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "starbundle/prolongation.hpp"
#include "starbundle/star_group.hpp"

namespace starbundle {

/// A homogeneous space G/H with H realized inside G's matrix size,
/// together with the data needed to work in the prolonged bundle
/// E* = G* x_{H*} TF: an explicit algebra inclusion Lie(H) -> Lie(G),
/// the embedded model manifold for the coset space, and a section of
/// G* -> G*/H* given in closed form per catalog entry.
///
/// Coset labels are points of T(M) embedded in ambient space: the label
/// of (a, g) is the image of the zero tangent vector at the base point
/// under the star-group action, which is constant on H* cosets.
class HomogeneousSpace {
public:
  using SectionFn = std::function<StarElement(const EmbeddedTangentVector&)>;

  HomogeneousSpace(std::string name, DescriptorPtr big_group,
                   DescriptorPtr subgroup, Matrix algebra_inclusion,
                   ManifoldPtr manifold, SectionFn section);

  const std::string& name() const { return name_; }
  const DescriptorPtr& big_group() const { return big_group_; }
  const DescriptorPtr& subgroup() const { return subgroup_; }
  const ManifoldPtr& manifold() const { return manifold_; }
  const Matrix& algebra_inclusion() const { return inclusion_; }

  /// Residual of "is an element of H" for a G-sized matrix.
  double subgroup_membership(const Matrix& m) const {
    return subgroup_->membership_residual(m);
  }

  /// Lie(H) coords -> Lie(G) coords along the explicit embedding.
  Vector include_algebra(const Vector& h_coords) const;

  /// Least-squares Lie(G) -> Lie(H) coords plus off-subalgebra residual.
  std::pair<Vector, double> project_algebra(const Vector& g_coords) const;

  /// H* element viewed inside G*.
  StarElement embed(const StarElement& k) const;

  /// G* element reinterpreted over H; throws SubgroupViolation when the
  /// group part fails H membership or the algebra part leaves Lie(H).
  StarElement to_subgroup(const StarElement& p, double algebra_tol = 1e-8) const;

  /// Coset label of a star element: (a, g) applied to the zero tangent
  /// vector at the manifold base point.
  EmbeddedTangentVector coset_label(const StarElement& p) const;
  /// Label of a plain group element (zero tangent part).
  EmbeddedTangentVector coset_label(const GroupElement& g) const;

  /// Canonical representative of the H* coset with the given label.
  /// Throws ChartViolation outside the section's chart.
  StarElement section(const EmbeddedTangentVector& label) const {
    return section_(label);
  }

private:
  std::string name_;
  DescriptorPtr big_group_;
  DescriptorPtr subgroup_;
  Matrix inclusion_;  // dim Lie(G) x dim Lie(H)
  ManifoldPtr manifold_;
  SectionFn section_;
  Eigen::CompleteOrthogonalDecomposition<Matrix> inclusion_cod_;
};

using SpacePtr = std::shared_ptr<const HomogeneousSpace>;

/// Representative ((a, g), (xi, u)) of a class in E* = G* x_{H*} TF.
struct BundlePoint {
  StarElement star;
  TangentFiberVector fiber;

  double distance(const BundlePoint& other) const {
    return star.distance(other.star) + fiber.distance(other.fiber);
  }
};

/// Deterministic fiber sampling (entries uniform in [-2, 2]).
TangentFiberVector random_tangent_fiber(int fiber_dim, std::uint64_t seed);
BundlePoint random_bundle_point(const HomogeneousSpace& space,
                                const Representation& rep, std::uint64_t seed);

/// The prolonged right action of H* on G* x TF:
///   p . k = (p.star k, sigma*(k^-1)(p.fiber)).
/// k lives over the subgroup descriptor; a k over G is accepted if it
/// passes H* membership (SubgroupViolation otherwise).
BundlePoint prolonged_action(const HomogeneousSpace& space,
                             const Representation& rep, const BundlePoint& p,
                             const StarElement& k);

/// Decision procedure for p ~ q: the candidate witness is
/// h = g^-1 g', b = Ad(g^-1)(a' - a); it must pass H* membership and
/// reproduce q's fiber through the inverse action. Returns the witness
/// over the subgroup descriptor, or nothing. A returned witness always
/// reproduces q via prolonged_action within the decision tolerance.
std::optional<StarElement> are_equivalent(const HomogeneousSpace& space,
                                          const Representation& rep,
                                          const BundlePoint& p,
                                          const BundlePoint& q,
                                          double tol = 1e-8);

/// Unique representative whose star part is the section value at the
/// point's label, with the fiber transported accordingly. Idempotent.
/// Throws SectionFailure if the section produces a non-equivalent
/// representative (a descriptor bug).
BundlePoint canonicalize(const HomogeneousSpace& space,
                         const Representation& rep, const BundlePoint& p);

/// pi*: class of ((a,g), v) -> coset label of (a,g); constant on classes.
EmbeddedTangentVector bundle_projection(const HomogeneousSpace& space,
                                        const BundlePoint& p);

/// psi*: p -> (label, sigma*(b, h)(p.fiber)) with (b, h) the H* element
/// relating the section value at the label to p.star. Invariant under
/// change of representative and linear in the fiber.
std::pair<EmbeddedTangentVector, TangentFiberVector> local_trivialization(
    const HomogeneousSpace& space, const Representation& rep,
    const BundlePoint& p);

}  // namespace starbundle
