#pragma once

#include <optional>
#include <vector>

#include "starbundle/homogeneous_bundle.hpp"

namespace starbundle {

/// Analytic generator of a section in the equivariant-function model:
/// f : G -> F with f(g h) = sigma(h^-1) f(g). `lift` is the directional
/// derivative d/dt f(exp(t a) g) at t = 0, used to prolong the section;
/// when absent it is computed by central finite differences.
struct SectionGenerator {
  std::string id;
  std::function<Vector(const GroupElement&)> value;
  std::function<Vector(const AlgebraElement&, const GroupElement&)> lift;
};

/// sigma*-equivariant generator on the star group: F : G* -> TF with
/// F(P k) = sigma*(k^-1) F(P) for k in H*.
struct StarSectionGenerator {
  std::string id;
  std::function<TangentFiberVector(const StarElement&)> value;
};

/// Tangent lift of a section generator: F(a, g) = (f(g), d/dt f(exp(ta) g)).
/// Equivariant whenever f is, by the equivariance of d sigma_e.
StarSectionGenerator star_lift(const SectionGenerator& generator);

/// Adds a finite-difference `lift` to a value-only generator.
SectionGenerator with_fd_lift(std::string id,
                              std::function<Vector(const GroupElement&)> value);

/// A section of E = G x_H F sampled at finitely many coset
/// representatives. Generator-backed sections can be resampled anywhere;
/// tabulated-only sections support just the identity and
/// sample-permuting group elements.
class SampledEquivariantSection {
public:
  static SampledEquivariantSection from_generator(
      SpacePtr space, Representation rep, SectionGenerator generator,
      int num_points = 64, std::uint64_t seed = 0);

  static SampledEquivariantSection tabulated(SpacePtr space, Representation rep,
                                             std::vector<GroupElement> points,
                                             std::vector<Vector> values);

  const SpacePtr& space() const { return space_; }
  const Representation& rep() const { return rep_; }
  const std::vector<GroupElement>& points() const { return points_; }
  const std::vector<Vector>& values() const { return values_; }
  bool has_generator() const { return generator_.has_value(); }
  const SectionGenerator& generator() const { return *generator_; }

  /// Max over points of ||value - f(point)||; zero by construction for
  /// generator-backed sections.
  double tabulation_residual() const;

private:
  SampledEquivariantSection(SpacePtr space, Representation rep,
                            std::vector<GroupElement> points,
                            std::vector<Vector> values,
                            std::optional<SectionGenerator> generator)
      : space_(std::move(space)),
        rep_(std::move(rep)),
        points_(std::move(points)),
        values_(std::move(values)),
        generator_(std::move(generator)) {}

  SpacePtr space_;
  Representation rep_;
  std::vector<GroupElement> points_;
  std::vector<Vector> values_;
  std::optional<SectionGenerator> generator_;

  friend SampledEquivariantSection rho_apply(const GroupElement&,
                                             const SampledEquivariantSection&);
  friend SampledEquivariantSection linear_combination(
      double, const SampledEquivariantSection&, double,
      const SampledEquivariantSection&);
};

/// A section of E* sampled at star-group points, with values in TF.
class SampledStarSection {
public:
  static SampledStarSection from_generator(SpacePtr space, Representation rep,
                                           StarSectionGenerator generator,
                                           int num_points = 64,
                                           std::uint64_t seed = 0);

  static SampledStarSection tabulated(SpacePtr space, Representation rep,
                                      std::vector<StarElement> points,
                                      std::vector<TangentFiberVector> values);

  const SpacePtr& space() const { return space_; }
  const Representation& rep() const { return rep_; }
  const std::vector<StarElement>& points() const { return points_; }
  const std::vector<TangentFiberVector>& values() const { return values_; }
  bool has_generator() const { return generator_.has_value(); }
  const StarSectionGenerator& generator() const { return *generator_; }

private:
  SampledStarSection(SpacePtr space, Representation rep,
                     std::vector<StarElement> points,
                     std::vector<TangentFiberVector> values,
                     std::optional<StarSectionGenerator> generator)
      : space_(std::move(space)),
        rep_(std::move(rep)),
        points_(std::move(points)),
        values_(std::move(values)),
        generator_(std::move(generator)) {}

  SpacePtr space_;
  Representation rep_;
  std::vector<StarElement> points_;
  std::vector<TangentFiberVector> values_;
  std::optional<StarSectionGenerator> generator_;

  friend SampledStarSection rho_star_apply(const StarElement&,
                                           const SampledStarSection&);
  friend SampledStarSection linear_combination(double,
                                               const SampledStarSection&, double,
                                               const SampledStarSection&);
};

/// Induced representation: (rho(g) s) has equivariant function f o L_{g^-1},
/// sampled at the same points. Tabulated-only sections accept the
/// identity and sample-permuting elements; anything else throws
/// GeneratorRequired.
SampledEquivariantSection rho_apply(const GroupElement& g,
                                    const SampledEquivariantSection& s);

/// Prolonged induced representation on star sections: value at P is
/// F(w^-1 P).
SampledStarSection rho_star_apply(const StarElement& w,
                                  const SampledStarSection& s);

/// Max over sample points and random h in H (resp. k in H*) of
/// ||f(g h) - sigma(h^-1) f(g)||; requires a generator.
double equivariance_residual(const SampledEquivariantSection& s, int h_samples,
                             std::uint64_t seed);
double equivariance_residual(const SampledStarSection& s, int h_samples,
                             std::uint64_t seed);

/// Pointwise alpha s1 + beta s2 (sections over the same sample points).
SampledEquivariantSection linear_combination(double alpha,
                                             const SampledEquivariantSection& s1,
                                             double beta,
                                             const SampledEquivariantSection& s2);
SampledStarSection linear_combination(double alpha, const SampledStarSection& s1,
                                      double beta, const SampledStarSection& s2);

}  // namespace starbundle
