#include "starbundle/induced_sections.hpp"

#include <cmath>

#include "starbundle/rng.hpp"

namespace starbundle {

namespace {

constexpr double kMatchTol = 1e-9;

void check_equivariance_at_construction(const HomogeneousSpace& space,
                                        const Representation& rep,
                                        const SectionGenerator& generator,
                                        const std::vector<GroupElement>& points,
                                        std::uint64_t seed) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto h = random_group_element(space.subgroup(),
                                        derive_seed(seed, 0xE9A1, i));
    const GroupElement h_in_g(space.big_group(), h.matrix());
    const Vector lhs = generator.value(multiply(points[i], h_in_g));
    const Vector rhs = rep.evaluate(h.inverse()) * generator.value(points[i]);
    if ((lhs - rhs).norm() > 1e-9)
      throw MembershipViolation(generator.id +
                                ": generator is not sigma-equivariant, residual " +
                                std::to_string((lhs - rhs).norm()));
  }
}

}  // namespace

StarSectionGenerator star_lift(const SectionGenerator& generator) {
  auto lift = generator.lift;
  if (!lift) {
    const auto lifted = with_fd_lift(generator.id, generator.value);
    lift = lifted.lift;
  }
  auto value = generator.value;
  return StarSectionGenerator{
      generator.id + "*",
      [value, lift](const StarElement& p) {
        return TangentFiberVector(value(p.g), lift(p.a, p.g));
      }};
}

SectionGenerator with_fd_lift(std::string id,
                              std::function<Vector(const GroupElement&)> value) {
  auto lift = [value](const AlgebraElement& a, const GroupElement& g) -> Vector {
    auto central = [&](double step) -> Vector {
      const GroupElement plus = multiply(exp(a.scaled(step)), g);
      const GroupElement minus = multiply(exp(a.scaled(-step)), g);
      return (value(plus) - value(minus)) / (2.0 * step);
    };
    const double h = 1e-4;
    return (4.0 * central(h / 2.0) - central(h)) / 3.0;
  };
  return SectionGenerator{std::move(id), std::move(value), std::move(lift)};
}

SampledEquivariantSection SampledEquivariantSection::from_generator(
    SpacePtr space, Representation rep, SectionGenerator generator,
    int num_points, std::uint64_t seed) {
  require_same_descriptor(rep.domain(), space->subgroup(),
                          "SampledEquivariantSection");
  std::vector<GroupElement> points;
  points.reserve(num_points);
  for (int i = 0; i < num_points; ++i)
    points.push_back(
        random_group_element(space->big_group(), derive_seed(seed, 0x5EC, i)));
  std::vector<Vector> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(generator.value(p));
  check_equivariance_at_construction(*space, rep, generator, points, seed);
  return SampledEquivariantSection(std::move(space), std::move(rep),
                                   std::move(points), std::move(values),
                                   std::move(generator));
}

SampledEquivariantSection SampledEquivariantSection::tabulated(
    SpacePtr space, Representation rep, std::vector<GroupElement> points,
    std::vector<Vector> values) {
  require_same_descriptor(rep.domain(), space->subgroup(),
                          "SampledEquivariantSection");
  if (points.size() != values.size())
    throw DimensionMismatch("tabulated section: points and values differ in count");
  return SampledEquivariantSection(std::move(space), std::move(rep),
                                   std::move(points), std::move(values),
                                   std::nullopt);
}

double SampledEquivariantSection::tabulation_residual() const {
  if (!generator_) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    worst = std::max(worst, (values_[i] - generator_->value(points_[i])).norm());
  return worst;
}

SampledStarSection SampledStarSection::from_generator(
    SpacePtr space, Representation rep, StarSectionGenerator generator,
    int num_points, std::uint64_t seed) {
  require_same_descriptor(rep.domain(), space->subgroup(), "SampledStarSection");
  std::vector<StarElement> points;
  points.reserve(num_points);
  for (int i = 0; i < num_points; ++i)
    points.push_back(
        random_star_element(space->big_group(), derive_seed(seed, 0x57A, i)));
  std::vector<TangentFiberVector> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(generator.value(p));
  return SampledStarSection(std::move(space), std::move(rep), std::move(points),
                            std::move(values), std::move(generator));
}

SampledStarSection SampledStarSection::tabulated(
    SpacePtr space, Representation rep, std::vector<StarElement> points,
    std::vector<TangentFiberVector> values) {
  require_same_descriptor(rep.domain(), space->subgroup(), "SampledStarSection");
  if (points.size() != values.size())
    throw DimensionMismatch("tabulated star section: points and values differ in count");
  return SampledStarSection(std::move(space), std::move(rep), std::move(points),
                            std::move(values), std::nullopt);
}

namespace {

bool is_exact_identity(const GroupElement& g) {
  const int n = static_cast<int>(g.matrix().rows());
  return g.matrix() == Matrix::Identity(n, n);
}

bool is_exact_identity(const StarElement& p) {
  return p.a.coords().isZero(0.0) && is_exact_identity(p.g);
}

}  // namespace

SampledEquivariantSection rho_apply(const GroupElement& g,
                                    const SampledEquivariantSection& s) {
  require_same_descriptor(g.descriptor(), s.space()->big_group(), "rho_apply");
  // rho(e) = id, exactly, on any backing
  if (is_exact_identity(g)) return s;
  const GroupElement g_inv = g.inverse();

  if (!s.has_generator()) {
    // tabulated-only: g must permute the sample set
    std::vector<Vector> permuted;
    permuted.reserve(s.points().size());
    for (const auto& p : s.points()) {
      const GroupElement moved = multiply(g_inv, p);
      bool found = false;
      for (std::size_t j = 0; j < s.points().size(); ++j) {
        if ((moved.matrix() - s.points()[j].matrix()).norm() <= kMatchTol) {
          permuted.push_back(s.values()[j]);
          found = true;
          break;
        }
      }
      if (!found)
        throw GeneratorRequired(
            "rho_apply: tabulated-only section and g does not permute the samples");
    }
    return SampledEquivariantSection::tabulated(s.space(), s.rep(), s.points(),
                                                std::move(permuted));
  }

  auto base = s.generator();
  SectionGenerator transported{
      base.id + "#transported",
      [value = base.value, g_inv](const GroupElement& p) {
        return value(multiply(g_inv, p));
      },
      base.lift ? std::function<Vector(const AlgebraElement&, const GroupElement&)>(
                      [lift = base.lift, g_inv](const AlgebraElement& a,
                                                const GroupElement& p) {
                        return lift(adjoint(g_inv, a), multiply(g_inv, p));
                      })
                : nullptr};
  // Lf'(a)(p) with f' = f o L_{g^-1} is Lf(Ad(g^-1) a)(g^-1 p) since
  // exp(t Ad(g^-1) a) = g^-1 exp(t a) g.

  std::vector<Vector> values;
  values.reserve(s.points().size());
  for (const auto& p : s.points())
    values.push_back(transported.value(p));
  return SampledEquivariantSection(s.space(), s.rep(), s.points(),
                                   std::move(values), std::move(transported));
}

SampledStarSection rho_star_apply(const StarElement& w,
                                  const SampledStarSection& s) {
  require_same_descriptor(w.descriptor(), s.space()->big_group(),
                          "rho_star_apply");
  if (is_exact_identity(w)) return s;
  const StarElement w_inv = star_inverse(w);

  if (!s.has_generator()) {
    std::vector<TangentFiberVector> permuted;
    permuted.reserve(s.points().size());
    for (const auto& p : s.points()) {
      const StarElement moved = star_multiply(w_inv, p);
      bool found = false;
      for (std::size_t j = 0; j < s.points().size(); ++j) {
        if (moved.distance(s.points()[j]) <= kMatchTol) {
          permuted.push_back(s.values()[j]);
          found = true;
          break;
        }
      }
      if (!found)
        throw GeneratorRequired(
            "rho_star_apply: tabulated-only section and w does not permute the samples");
    }
    return SampledStarSection::tabulated(s.space(), s.rep(), s.points(),
                                         std::move(permuted));
  }

  auto base = s.generator();
  StarSectionGenerator transported{
      base.id + "#transported",
      [value = base.value, w_inv](const StarElement& p) {
        return value(star_multiply(w_inv, p));
      }};
  std::vector<TangentFiberVector> values;
  values.reserve(s.points().size());
  for (const auto& p : s.points()) values.push_back(transported.value(p));
  return SampledStarSection(s.space(), s.rep(), s.points(), std::move(values),
                            std::move(transported));
}

double equivariance_residual(const SampledEquivariantSection& s, int h_samples,
                             std::uint64_t seed) {
  if (!s.has_generator())
    throw GeneratorRequired("equivariance_residual: section has no generator");
  const auto& space = *s.space();
  double worst = 0.0;
  for (int j = 0; j < h_samples; ++j) {
    const auto h = random_group_element(space.subgroup(),
                                        derive_seed(seed, 0xEA51, j));
    const GroupElement h_in_g(space.big_group(), h.matrix());
    const Matrix sigma_inv = s.rep().evaluate(h.inverse());
    for (std::size_t i = 0; i < s.points().size(); ++i) {
      const Vector lhs = s.generator().value(multiply(s.points()[i], h_in_g));
      const Vector rhs = sigma_inv * s.values()[i];
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

double equivariance_residual(const SampledStarSection& s, int h_samples,
                             std::uint64_t seed) {
  if (!s.has_generator())
    throw GeneratorRequired("equivariance_residual: star section has no generator");
  const auto& space = *s.space();
  double worst = 0.0;
  for (int j = 0; j < h_samples; ++j) {
    const auto k = random_star_element(space.subgroup(),
                                       derive_seed(seed, 0xEA52, j));
    const StarElement k_in_g = space.embed(k);
    for (std::size_t i = 0; i < s.points().size(); ++i) {
      const TangentFiberVector lhs =
          s.generator().value(star_multiply(s.points()[i], k_in_g));
      const TangentFiberVector rhs =
          apply_inverse_action(s.rep(), k.a, k.g, s.values()[i]);
      worst = std::max(worst, lhs.distance(rhs));
    }
  }
  return worst;
}

SampledEquivariantSection linear_combination(
    double alpha, const SampledEquivariantSection& s1, double beta,
    const SampledEquivariantSection& s2) {
  if (s1.space().get() != s2.space().get() ||
      s1.points().size() != s2.points().size())
    throw DomainMismatch("linear_combination: sections are not compatible");
  std::vector<Vector> values;
  values.reserve(s1.points().size());
  for (std::size_t i = 0; i < s1.points().size(); ++i)
    values.push_back(alpha * s1.values()[i] + beta * s2.values()[i]);

  std::optional<SectionGenerator> generator;
  if (s1.has_generator() && s2.has_generator()) {
    auto v1 = s1.generator().value, v2 = s2.generator().value;
    auto l1 = s1.generator().lift, l2 = s2.generator().lift;
    generator = SectionGenerator{
        "combo(" + s1.generator().id + "," + s2.generator().id + ")",
        [alpha, v1, beta, v2](const GroupElement& g) {
          return (alpha * v1(g) + beta * v2(g)).eval();
        },
        (l1 && l2)
            ? std::function<Vector(const AlgebraElement&, const GroupElement&)>(
                  [alpha, l1, beta, l2](const AlgebraElement& a,
                                        const GroupElement& g) {
                    return (alpha * l1(a, g) + beta * l2(a, g)).eval();
                  })
            : nullptr};
  }
  return SampledEquivariantSection(s1.space(), s1.rep(), s1.points(),
                                   std::move(values), std::move(generator));
}

SampledStarSection linear_combination(double alpha, const SampledStarSection& s1,
                                      double beta, const SampledStarSection& s2) {
  if (s1.space().get() != s2.space().get() ||
      s1.points().size() != s2.points().size())
    throw DomainMismatch("linear_combination: star sections are not compatible");
  std::vector<TangentFiberVector> values;
  values.reserve(s1.points().size());
  for (std::size_t i = 0; i < s1.points().size(); ++i)
    values.push_back(TangentFiberVector(
        alpha * s1.values()[i].xi + beta * s2.values()[i].xi,
        alpha * s1.values()[i].u + beta * s2.values()[i].u));

  std::optional<StarSectionGenerator> generator;
  if (s1.has_generator() && s2.has_generator()) {
    auto v1 = s1.generator().value, v2 = s2.generator().value;
    generator = StarSectionGenerator{
        "combo(" + s1.generator().id + "," + s2.generator().id + ")",
        [alpha, v1, beta, v2](const StarElement& p) {
          auto a = v1(p);
          auto b = v2(p);
          return TangentFiberVector(alpha * a.xi + beta * b.xi,
                                    alpha * a.u + beta * b.u);
        }};
  }
  return SampledStarSection(s1.space(), s1.rep(), s1.points(), std::move(values),
                            std::move(generator));
}

}  // namespace starbundle
