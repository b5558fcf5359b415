#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "starbundle/lie_core.hpp"

namespace starbundle {

/// Finite-dimensional representation sigma : H -> Aut(F), F = R^m.
///
/// Carried as an evaluation map rather than generator matrices so that
/// restrictions of larger representations fit the same type. The
/// differential at the identity uses the analytic map when one is
/// supplied and central finite differences otherwise.
class Representation {
public:
  using EvaluateFn = std::function<Matrix(const GroupElement&)>;
  using DifferentialFn = std::function<Matrix(const AlgebraElement&)>;

  Representation(std::string id, DescriptorPtr domain, int fiber_dim,
                 EvaluateFn evaluate, DifferentialFn analytic_differential = nullptr)
      : id_(std::move(id)),
        domain_(std::move(domain)),
        fiber_dim_(fiber_dim),
        evaluate_(std::move(evaluate)),
        analytic_differential_(std::move(analytic_differential)) {}

  const std::string& id() const { return id_; }
  const DescriptorPtr& domain() const { return domain_; }
  int fiber_dim() const { return fiber_dim_; }
  bool has_analytic_differential() const {
    return static_cast<bool>(analytic_differential_);
  }

  /// sigma(h). Throws DomainMismatch if h lives in a different group.
  Matrix evaluate(const GroupElement& h) const;

  /// d sigma_e(X), analytic when available, otherwise central finite
  /// differences (step 1e-4) with one Richardson level.
  Matrix differential_at_identity(const AlgebraElement& x) const;

  /// Forces the finite-difference path (used to cross-check the
  /// analytic map and to drive the numeric-tolerance suites).
  Matrix numeric_differential(const AlgebraElement& x) const;

  /// Same representation with the analytic differential dropped.
  Representation without_analytic_differential() const {
    return Representation(id_ + "#numeric", domain_, fiber_dim_, evaluate_);
  }

  /// Checks sigma(e) = I and invertibility of a few samples; throws
  /// MembershipViolation on failure. Called on catalog construction.
  void validate(std::uint64_t seed = 0) const;

private:
  std::string id_;
  DescriptorPtr domain_;
  int fiber_dim_;
  EvaluateFn evaluate_;
  DifferentialFn analytic_differential_;
};

/// Max over sampled pairs of ||sigma(h1 h2) - sigma(h1) sigma(h2)||.
double homomorphism_residual(const Representation& rep, int samples,
                             std::uint64_t seed);

/// Negative control: the evaluation map scaled by `factor` (no longer a
/// homomorphism unless factor = 1).
Representation scale_representation(const Representation& rep, double factor);

}  // namespace starbundle
