#include "starbundle/representations.hpp"

#include <cmath>

#include "starbundle/rng.hpp"

namespace starbundle {

Matrix Representation::evaluate(const GroupElement& h) const {
  require_same_descriptor(h.descriptor(), domain_, "Representation::evaluate");
  return evaluate_(h);
}

Matrix Representation::numeric_differential(const AlgebraElement& x) const {
  require_same_descriptor(x.descriptor(), domain_,
                          "Representation::differential_at_identity");
  auto central = [&](double step) -> Matrix {
    const GroupElement plus = exp(x.scaled(step));
    const GroupElement minus = exp(x.scaled(-step));
    return (evaluate_(plus) - evaluate_(minus)) / (2.0 * step);
  };
  const double h = 1e-4;
  const Matrix coarse = central(h);
  const Matrix fine = central(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;  // one Richardson level
}

Matrix Representation::differential_at_identity(const AlgebraElement& x) const {
  if (analytic_differential_) {
    require_same_descriptor(x.descriptor(), domain_,
                            "Representation::differential_at_identity");
    return analytic_differential_(x);
  }
  return numeric_differential(x);
}

void Representation::validate(std::uint64_t seed) const {
  const Matrix at_identity = evaluate_(GroupElement::identity(domain_));
  if ((at_identity - Matrix::Identity(fiber_dim_, fiber_dim_)).norm() > 1e-12)
    throw MembershipViolation(id_ + ": sigma(e) differs from the identity");
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Matrix value =
        evaluate_(random_group_element(domain_, derive_seed(seed, 0x5E9, i)));
    if (std::abs(value.determinant()) <= 1e-12)
      throw MembershipViolation(id_ + ": sigma(h) is singular on a sample");
  }
}

double homomorphism_residual(const Representation& rep, int samples,
                             std::uint64_t seed) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto h1 = random_group_element(rep.domain(),
                                         derive_seed(seed, 0x40A, 2 * i));
    const auto h2 = random_group_element(rep.domain(),
                                         derive_seed(seed, 0x40A, 2 * i + 1));
    const Matrix lhs = rep.evaluate(multiply(h1, h2));
    const Matrix rhs = rep.evaluate(h1) * rep.evaluate(h2);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

Representation scale_representation(const Representation& rep, double factor) {
  return Representation(
      rep.id() + "#scaled", rep.domain(), rep.fiber_dim(),
      [rep, factor](const GroupElement& h) -> Matrix {
        return factor * rep.evaluate(h);
      });
}

}  // namespace starbundle
