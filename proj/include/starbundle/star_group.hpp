#pragma once

#include <cstdint>

#include "starbundle/lie_core.hpp"
#include "starbundle/manifolds.hpp"

namespace starbundle {

/// Element (a, g) of the star group G* = Lie(G) x G with multiplication
/// (a, g)(a', g') = (a + Ad(g) a', g g'). Via right trivialization it
/// doubles as the tangent vector dR_g(a) at g.
struct StarElement {
  AlgebraElement a;
  GroupElement g;

  StarElement(AlgebraElement a_in, GroupElement g_in)
      : a(std::move(a_in)), g(std::move(g_in)) {
    require_same_descriptor(a.descriptor(), g.descriptor(), "StarElement");
  }

  static StarElement identity(const DescriptorPtr& descriptor) {
    return StarElement(AlgebraElement::zero(descriptor),
                       GroupElement::identity(descriptor));
  }

  const DescriptorPtr& descriptor() const { return g.descriptor(); }

  /// Coordinate + matrix distance, used by tests and decision procedures.
  double distance(const StarElement& other) const {
    return (a.coords() - other.a.coords()).norm() +
           (g.matrix() - other.g.matrix()).norm();
  }
};

StarElement star_multiply(const StarElement& p, const StarElement& q);
StarElement star_inverse(const StarElement& p);

/// Theta : G* -> TG under right trivialization, (a, g) -> (g, a g).
struct TangentOfGroup {
  GroupElement base;
  Matrix vector;
};

TangentOfGroup theta(const StarElement& p);

/// Inverse of theta; throws SpanViolation if V g^-1 leaves the algebra.
StarElement theta_inverse(const TangentOfGroup& t);

/// Deterministic star-group sampling (algebra coords and group factor
/// drawn from the descriptor's bounded distribution).
StarElement random_star_element(const DescriptorPtr& descriptor,
                                std::uint64_t seed);

/// Action of G* on the tangent bundle of an embedded manifold with a
/// linear G-action: (a, g).v has base g x and vector g v + a (g x).
/// Throws TangencyViolation when the output leaves the tangent bundle
/// (a non-invariant manifold/action pairing).
EmbeddedTangentVector act_on_tangent(const StarElement& p,
                                     const EmbeddedTangentVector& v);

/// Finite-difference derivative of the fundamental vector field check:
/// || a(x) - d/dt exp(t a) x |_0 || at the base of v.
double fundamental_field_fd_residual(const AlgebraElement& a,
                                     const EmbeddedTangentVector& v,
                                     double fd_step = 1e-6);

/// Numerical rank of the infinitesimal G* action at v: columns are
/// finite-difference derivatives over a basis of Lie(G*) = Lie(G) + Lie(G),
/// stacked in the 2N-dimensional ambient space of (base, vec), with
/// singular values thresholded at 1e-6.
int infinitesimal_rank(const EmbeddedTangentVector& v,
                       const DescriptorPtr& descriptor, double fd_step = 1e-5);

}  // namespace starbundle
