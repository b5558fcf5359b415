#include "starbundle/homogeneous_bundle.hpp"

#include <cmath>

#include "starbundle/rng.hpp"

namespace starbundle {

HomogeneousSpace::HomogeneousSpace(std::string name, DescriptorPtr big_group,
                                   DescriptorPtr subgroup,
                                   Matrix algebra_inclusion,
                                   ManifoldPtr manifold, SectionFn section)
    : name_(std::move(name)),
      big_group_(std::move(big_group)),
      subgroup_(std::move(subgroup)),
      inclusion_(std::move(algebra_inclusion)),
      manifold_(std::move(manifold)),
      section_(std::move(section)) {
  if (big_group_->matrix_size() != subgroup_->matrix_size())
    throw DimensionMismatch(name_ + ": subgroup must be realized in the big group's size");
  if (inclusion_.rows() != big_group_->algebra_dim() ||
      inclusion_.cols() != subgroup_->algebra_dim())
    throw DimensionMismatch(name_ + ": algebra inclusion has wrong shape");
  if (inclusion_.cols() > 0) inclusion_cod_.compute(inclusion_);
}

Vector HomogeneousSpace::include_algebra(const Vector& h_coords) const {
  return inclusion_ * h_coords;
}

std::pair<Vector, double> HomogeneousSpace::project_algebra(
    const Vector& g_coords) const {
  if (inclusion_.cols() == 0) return {Vector(0), g_coords.norm()};
  Vector h_coords = inclusion_cod_.solve(g_coords);
  const double residual = (inclusion_ * h_coords - g_coords).norm();
  return {std::move(h_coords), residual};
}

StarElement HomogeneousSpace::embed(const StarElement& k) const {
  require_same_descriptor(k.descriptor(), subgroup_, "HomogeneousSpace::embed");
  return StarElement(
      AlgebraElement::from_coords(big_group_, include_algebra(k.a.coords())),
      GroupElement(big_group_, k.g.matrix()));
}

StarElement HomogeneousSpace::to_subgroup(const StarElement& p,
                                          double algebra_tol) const {
  const double membership = subgroup_membership(p.g.matrix());
  if (membership > subgroup_->tolerance())
    throw SubgroupViolation(name_ + ": group part fails H membership, residual " +
                            std::to_string(membership));
  const auto [h_coords, residual] = project_algebra(p.a.coords());
  if (residual > algebra_tol)
    throw SubgroupViolation(name_ + ": algebra part leaves Lie(H), residual " +
                            std::to_string(residual));
  return StarElement(AlgebraElement::from_coords(subgroup_, h_coords),
                     GroupElement(subgroup_, p.g.matrix()));
}

EmbeddedTangentVector HomogeneousSpace::coset_label(const StarElement& p) const {
  return act_on_tangent(
      p, EmbeddedTangentVector::zero(manifold_, manifold_->base_point()));
}

EmbeddedTangentVector HomogeneousSpace::coset_label(const GroupElement& g) const {
  return coset_label(StarElement(AlgebraElement::zero(big_group_), g));
}

TangentFiberVector random_tangent_fiber(int fiber_dim, std::uint64_t seed) {
  SeededRng rng(mix_seed(seed) ^ 0xF1BE5);
  Vector xi(fiber_dim), u(fiber_dim);
  for (int i = 0; i < fiber_dim; ++i) xi[i] = rng.uniform(-2.0, 2.0);
  for (int i = 0; i < fiber_dim; ++i) u[i] = rng.uniform(-2.0, 2.0);
  return TangentFiberVector(std::move(xi), std::move(u));
}

BundlePoint random_bundle_point(const HomogeneousSpace& space,
                                const Representation& rep, std::uint64_t seed) {
  return BundlePoint{random_star_element(space.big_group(), seed),
                     random_tangent_fiber(rep.fiber_dim(), seed)};
}

BundlePoint prolonged_action(const HomogeneousSpace& space,
                             const Representation& rep, const BundlePoint& p,
                             const StarElement& k) {
  require_same_descriptor(p.star.descriptor(), space.big_group(),
                          "prolonged_action");
  require_same_descriptor(rep.domain(), space.subgroup(), "prolonged_action");
  const StarElement k_sub = k.descriptor().get() == space.subgroup().get()
                                ? k
                                : space.to_subgroup(k);
  return BundlePoint{
      star_multiply(p.star, space.embed(k_sub)),
      apply_inverse_action(rep, k_sub.a, k_sub.g, p.fiber)};
}

std::optional<StarElement> are_equivalent(const HomogeneousSpace& space,
                                          const Representation& rep,
                                          const BundlePoint& p,
                                          const BundlePoint& q, double tol) {
  // Candidate group part: h = g^-1 g'.
  const Matrix h_matrix = p.star.g.matrix().inverse() * q.star.g.matrix();
  if (space.subgroup_membership(h_matrix) > space.subgroup()->tolerance())
    return std::nullopt;

  // Candidate algebra part: b = Ad(g^-1)(a' - a), which must lie in Lie(H).
  const GroupElement g_inv = p.star.g.inverse();
  const AlgebraElement diff = q.star.a + (-p.star.a);
  const AlgebraElement b_in_g = adjoint(g_inv, diff);
  const auto [b_coords, algebra_residual] = space.project_algebra(b_in_g.coords());
  if (algebra_residual > tol) return std::nullopt;

  StarElement witness(
      AlgebraElement::from_coords(space.subgroup(), b_coords),
      GroupElement(space.subgroup(), h_matrix));

  // The witness must reproduce q exactly (star part and fiber).
  const BundlePoint reproduced = prolonged_action(space, rep, p, witness);
  if (reproduced.distance(q) > tol) return std::nullopt;
  return witness;
}

BundlePoint canonicalize(const HomogeneousSpace& space,
                         const Representation& rep, const BundlePoint& p) {
  const StarElement canonical_star = space.section(space.coset_label(p.star));
  StarElement relating =
      star_multiply(star_inverse(canonical_star), p.star);
  StarElement k = [&]() {
    try {
      return space.to_subgroup(relating);
    } catch (const SubgroupViolation& e) {
      throw SectionFailure(space.name() +
                           ": section produced a non-equivalent representative (" +
                           e.what() + ")");
    }
  }();
  // p = canonical . k, so the canonical fiber is sigma*(k)(p.fiber).
  return BundlePoint{canonical_star, apply(prolong(rep, k.a, k.g), p.fiber)};
}

EmbeddedTangentVector bundle_projection(const HomogeneousSpace& space,
                                        const BundlePoint& p) {
  return space.coset_label(p.star);
}

std::pair<EmbeddedTangentVector, TangentFiberVector> local_trivialization(
    const HomogeneousSpace& space, const Representation& rep,
    const BundlePoint& p) {
  const EmbeddedTangentVector label = space.coset_label(p.star);
  const StarElement k =
      space.to_subgroup(star_multiply(star_inverse(space.section(label)), p.star));
  return {label, apply(prolong(rep, k.a, k.g), p.fiber)};
}

}  // namespace starbundle
