#include "starbundle/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "starbundle/catalog.hpp"
#include "starbundle/rng.hpp"

namespace starbundle {

namespace {

constexpr std::uint64_t kAxiomSalt = 0xA1;
constexpr std::uint64_t kHomSalt = 0xB2;
constexpr std::uint64_t kActionSalt = 0xC3;
constexpr std::uint64_t kEquivSalt = 0xD4;
constexpr std::uint64_t kProjSalt = 0xE5;
constexpr std::uint64_t kInducedSalt = 0xF6;
constexpr std::uint64_t kRankSalt = 0x17;

class SuiteBuilder {
public:
  explicit SuiteBuilder(const VerifyOptions& options) : options_(options) {}

  double threshold(const std::string& name, double fallback) const {
    auto it = options_.tolerance_overrides.find(name);
    return it == options_.tolerance_overrides.end() ? fallback : it->second;
  }

  /// pass = residual <= threshold
  void upper(const std::string& name, double residual, double fallback) {
    const double limit = threshold(name, fallback);
    checks_.push_back({name, residual, limit, residual <= limit});
    tolerances_[name] = limit;
  }

  /// pass = residual >= threshold; name must end in "_at_least"
  void lower(const std::string& name, double residual, double fallback) {
    const double limit = threshold(name, fallback);
    checks_.push_back({name, residual, limit, residual >= limit});
    tolerances_[name] = limit;
  }

  void merge_into(VerificationReport& report) {
    for (auto& c : checks_) report.checks.push_back(std::move(c));
    for (const auto& [name, value] : tolerances_) report.tolerances[name] = value;
    checks_.clear();
  }

private:
  const VerifyOptions& options_;
  std::vector<CheckResult> checks_;
  std::map<std::string, double> tolerances_;
};

// Random tangent vector on the entry's manifold: base from the group
// orbit of the base point, direction from a fundamental vector field.
EmbeddedTangentVector random_tangent(const HomogeneousSpace& space,
                                     std::uint64_t seed) {
  const auto g = random_group_element(space.big_group(), mix_seed(seed) ^ 0x7A);
  const auto a = random_algebra_element(space.big_group(), mix_seed(seed) ^ 0x7B);
  const Vector base = g.matrix() * space.manifold()->base_point();
  return EmbeddedTangentVector(EmbeddedManifoldPoint(space.manifold(), base),
                               a.matrix() * base);
}

// Index of the big-group basis direction farthest from Lie(H), used to
// build coset-breaking negative controls.
int off_subalgebra_direction(const HomogeneousSpace& space) {
  const int d = space.big_group()->algebra_dim();
  int best = 0;
  double best_residual = -1.0;
  for (int j = 0; j < d; ++j) {
    const auto [coords, residual] = space.project_algebra(Vector::Unit(d, j));
    if (residual > best_residual) {
      best_residual = residual;
      best = j;
    }
  }
  return best;
}

void group_axioms_checks(const CatalogEntry& entry, const VerifyOptions& options,
                         SuiteBuilder& builder) {
  auto run = [&](const DescriptorPtr& descriptor, const std::string& prefix,
                 std::uint64_t salt) {
    const StarElement e = StarElement::identity(descriptor);
    double assoc = 0.0, identity = 0.0, inverse = 0.0;
    for (int i = 0; i < options.samples; ++i) {
      const auto p = random_star_element(
          descriptor, derive_seed(options.seed, salt, 3 * i));
      const auto q = random_star_element(
          descriptor, derive_seed(options.seed, salt, 3 * i + 1));
      const auto r = random_star_element(
          descriptor, derive_seed(options.seed, salt, 3 * i + 2));
      assoc = std::max(assoc, star_multiply(star_multiply(p, q), r)
                                  .distance(star_multiply(p, star_multiply(q, r))));
      identity = std::max({identity, star_multiply(p, e).distance(p),
                           star_multiply(e, p).distance(p)});
      inverse = std::max({inverse, star_multiply(p, star_inverse(p)).distance(e),
                          star_multiply(star_inverse(p), p).distance(e)});
    }
    builder.upper(prefix + "star_associativity", assoc, 1e-10);
    builder.upper(prefix + "star_identity", identity, 1e-10);
    builder.upper(prefix + "star_inverse", inverse, 1e-10);
  };
  run(entry.space->big_group(), "", kAxiomSalt);
  run(entry.space->subgroup(), "subgroup_", kAxiomSalt ^ 0xFF);
}

void prolongation_homomorphism_checks(const CatalogEntry& entry,
                                      const VerifyOptions& options,
                                      SuiteBuilder& builder) {
  const Representation rep = options.corrupt_rep
                                 ? scale_representation(entry.rep, 2.0)
                                 : entry.rep;
  const Representation numeric = rep.without_analytic_differential();
  const auto& subgroup = entry.space->subgroup();

  double analytic = 0.0, fd = 0.0, paths = 0.0, det_rel = 0.0, inv_compat = 0.0;
  double top_right = 0.0, diag_shared = 0.0;
  for (int i = 0; i < options.samples; ++i) {
    const auto k1 = random_star_element(
        subgroup, derive_seed(options.seed, kHomSalt, 3 * i));
    const auto k2 = random_star_element(
        subgroup, derive_seed(options.seed, kHomSalt, 3 * i + 1));
    const auto k12 = star_multiply(k1, k2);

    const ProlongedMatrix p1 = prolong(rep, k1.a, k1.g);
    const ProlongedMatrix p2 = prolong(rep, k2.a, k2.g);
    const ProlongedMatrix p12 = prolong(rep, k12.a, k12.g);
    analytic = std::max(analytic, (p12.full() - (p1 * p2).full()).norm());

    const Matrix fd12 = prolong(numeric, k12.a, k12.g).full();
    const Matrix fd_prod = (prolong(numeric, k1.a, k1.g) *
                            prolong(numeric, k2.a, k2.g))
                               .full();
    fd = std::max(fd, (fd12 - fd_prod).norm());

    const auto b = random_algebra_element(
        subgroup, derive_seed(options.seed, kHomSalt, 3 * i + 2));
    paths = std::max(paths, (rep.differential_at_identity(b) -
                             rep.numeric_differential(b))
                                .norm());

    const Matrix full = p1.full();
    const int m = rep.fiber_dim();
    top_right = std::max(top_right, full.topRightCorner(m, m).norm());
    diag_shared = std::max(
        diag_shared,
        (full.topLeftCorner(m, m) - full.bottomRightCorner(m, m)).norm());

    const double det_sigma = rep.evaluate(k1.g).determinant();
    det_rel = std::max(det_rel,
                       std::abs(full.determinant() - det_sigma * det_sigma) /
                           std::max(std::abs(det_sigma * det_sigma), 1e-300));

    const auto k1_inv = star_inverse(k1);
    inv_compat = std::max(
        inv_compat,
        (full.inverse() - prolong(rep, k1_inv.a, k1_inv.g).full()).norm());
  }
  builder.upper("sigma_star_homomorphism_analytic", analytic, 1e-10);
  builder.upper("sigma_star_homomorphism_numeric", fd, 1e-6);
  builder.upper("differential_paths_agree", paths, 1e-6);
  builder.upper("block_top_right_zero", top_right, 0.0);
  builder.upper("block_diagonal_shared", diag_shared, 0.0);
  builder.upper("determinant_identity", det_rel, 1e-9);
  builder.upper("inverse_compatibility", inv_compat, 1e-9);
}

void action_laws_checks(const CatalogEntry& entry, const VerifyOptions& options,
                        SuiteBuilder& builder) {
  const auto& space = *entry.space;
  const auto& rep = entry.rep;

  double left_action = 0.0, tangency = 0.0, fundamental = 0.0;
  double right_action = 0.0, identity_star = 0.0, identity_fiber = 0.0;
  double variant_identity = 0.0, variant_generic = 0.0;
  const StarElement k_id = StarElement::identity(space.subgroup());

  for (int i = 0; i < options.samples; ++i) {
    const auto p = random_star_element(
        space.big_group(), derive_seed(options.seed, kActionSalt, 6 * i));
    const auto q = random_star_element(
        space.big_group(), derive_seed(options.seed, kActionSalt, 6 * i + 1));
    const auto v =
        random_tangent(space, derive_seed(options.seed, kActionSalt, 6 * i + 2));

    const auto lhs = act_on_tangent(p, act_on_tangent(q, v));
    const auto rhs = act_on_tangent(star_multiply(p, q), v);
    left_action = std::max(left_action, lhs.distance(rhs));
    tangency = std::max(tangency, space.manifold()->tangency_residual(
                                      lhs.base().coords(), lhs.vec()));
    fundamental = std::max(fundamental, fundamental_field_fd_residual(p.a, v));

    const auto bp = random_bundle_point(
        space, rep, derive_seed(options.seed, kActionSalt, 6 * i + 3));
    const auto k1 = random_star_element(
        space.subgroup(), derive_seed(options.seed, kActionSalt, 6 * i + 4));
    const auto k2 = random_star_element(
        space.subgroup(), derive_seed(options.seed, kActionSalt, 6 * i + 5));
    const auto chained =
        prolonged_action(space, rep, prolonged_action(space, rep, bp, k1), k2);
    const auto direct = prolonged_action(space, rep, bp, star_multiply(k1, k2));
    right_action = std::max(right_action, chained.distance(direct));

    const auto fixed = prolonged_action(space, rep, bp, k_id);
    identity_star = std::max(identity_star, fixed.star.distance(bp.star));
    identity_fiber = std::max(identity_fiber, fixed.fiber.distance(bp.fiber));

    if (options.paper_variant) {
      const auto b = k1.a;
      const auto v_fiber = bp.fiber;
      variant_identity = std::max(
          variant_identity,
          inverse_action_variant_discrepancy(
              rep, b, GroupElement::identity(space.subgroup()), v_fiber));
      if (space.subgroup()->algebra_dim() > 0)
        variant_generic = std::max(variant_generic,
                                   inverse_action_variant_discrepancy(
                                       rep, b, k1.g, v_fiber));
    }
  }
  builder.upper("tangent_left_action", left_action, 1e-9);
  builder.upper("tangent_action_tangency", tangency, 1e-9);
  builder.upper("fundamental_field_fd_agreement", fundamental, 1e-6);
  builder.upper("prolonged_right_action", right_action, 1e-9);
  builder.upper("prolonged_action_identity_star", identity_star, 0.0);
  builder.upper("prolonged_action_identity_fiber", identity_fiber, 1e-12);
  if (options.paper_variant) {
    builder.upper("paper_variant_identity_discrepancy", variant_identity, 1e-12);
    if (entry.space->subgroup()->algebra_dim() > 0)
      builder.lower("paper_variant_generic_discrepancy_at_least",
                    variant_generic, 1e-3);
  }
}

void equivalence_checks(const CatalogEntry& entry, const VerifyOptions& options,
                        SuiteBuilder& builder) {
  const auto& space = *entry.space;
  const auto& rep = entry.rep;
  const int off_direction = off_subalgebra_direction(space);
  const int dim_g = space.big_group()->algebra_dim();

  double recovery = 0.0, reflexivity = 0.0, symmetry = 0.0, transitivity = 0.0;
  double false_positives = 0.0, missing_witnesses = 0.0;
  for (int i = 0; i < options.samples; ++i) {
    const auto p = random_bundle_point(
        space, rep, derive_seed(options.seed, kEquivSalt, 4 * i));
    const auto k1 = random_star_element(
        space.subgroup(), derive_seed(options.seed, kEquivSalt, 4 * i + 1));
    const auto k2 = random_star_element(
        space.subgroup(), derive_seed(options.seed, kEquivSalt, 4 * i + 2));
    const auto q = prolonged_action(space, rep, p, k1);
    const auto r = prolonged_action(space, rep, q, k2);

    const auto witness = are_equivalent(space, rep, p, q);
    if (!witness) {
      missing_witnesses += 1.0;
    } else {
      recovery = std::max(recovery, witness->distance(k1));
    }

    const auto self = are_equivalent(space, rep, p, p);
    if (!self) {
      missing_witnesses += 1.0;
    } else {
      reflexivity = std::max(
          reflexivity, self->distance(StarElement::identity(space.subgroup())));
    }

    // symmetry: the inverted witness relates q back to p
    symmetry = std::max(
        symmetry, prolonged_action(space, rep, q, star_inverse(k1)).distance(p));
    // transitivity: the composed witness relates p to r
    transitivity = std::max(
        transitivity,
        prolonged_action(space, rep, p, star_multiply(k1, k2)).distance(r));

    // negative controls: break the coset with an off-H group factor and
    // the algebra part with an off-H direction
    const auto breaker = exp(AlgebraElement::from_coords(
        space.big_group(), 0.4 * Vector::Unit(dim_g, off_direction)));
    const BundlePoint coset_broken{
        StarElement(q.star.a, multiply(q.star.g, breaker)), q.fiber};
    if (are_equivalent(space, rep, p, coset_broken)) false_positives += 1.0;

    const BundlePoint algebra_broken{
        StarElement(q.star.a + AlgebraElement::from_coords(
                                   space.big_group(),
                                   0.4 * Vector::Unit(dim_g, off_direction)),
                    q.star.g),
        q.fiber};
    if (are_equivalent(space, rep, p, algebra_broken)) false_positives += 1.0;

    // wrong fiber on the right coset
    BundlePoint fiber_broken = q;
    fiber_broken.fiber.xi[0] += 0.5;
    if (are_equivalent(space, rep, p, fiber_broken)) false_positives += 1.0;
  }
  builder.upper("witness_recovery", recovery, 1e-9);
  builder.upper("witness_missing_count", missing_witnesses, 0.0);
  builder.upper("reflexivity_identity_witness", reflexivity, 1e-12);
  builder.upper("symmetry_roundtrip", symmetry, 1e-8);
  builder.upper("transitivity_composition", transitivity, 1e-8);
  builder.upper("negative_control_false_positives", false_positives, 0.0);
}

void projection_trivialization_checks(const CatalogEntry& entry,
                                      const VerifyOptions& options,
                                      SuiteBuilder& builder) {
  const auto& space = *entry.space;
  const auto& rep = entry.rep;

  double projection_invariance = 0.0, trivialization_invariance = 0.0;
  double linearity = 0.0, idempotence = 0.0, canonical_invariance = 0.0;
  double injectivity_separation = std::numeric_limits<double>::infinity();

  std::vector<BundlePoint> canonical_forms;
  std::vector<std::pair<EmbeddedTangentVector, TangentFiberVector>> outputs;

  for (int i = 0; i < options.samples; ++i) {
    const auto p = random_bundle_point(
        space, rep, derive_seed(options.seed, kProjSalt, 4 * i));
    const auto k = random_star_element(
        space.subgroup(), derive_seed(options.seed, kProjSalt, 4 * i + 1));
    const auto q = prolonged_action(space, rep, p, k);

    projection_invariance = std::max(
        projection_invariance,
        bundle_projection(space, p).distance(bundle_projection(space, q)));

    const auto [label_p, fiber_p] = local_trivialization(space, rep, p);
    const auto [label_q, fiber_q] = local_trivialization(space, rep, q);
    trivialization_invariance =
        std::max(trivialization_invariance,
                 label_p.distance(label_q) + fiber_p.distance(fiber_q));

    const auto v1 = random_tangent_fiber(
        rep.fiber_dim(), derive_seed(options.seed, kProjSalt, 4 * i + 2));
    const auto v2 = random_tangent_fiber(
        rep.fiber_dim(), derive_seed(options.seed, kProjSalt, 4 * i + 3));
    const auto f1 = local_trivialization(space, rep, {p.star, v1}).second;
    const auto f2 = local_trivialization(space, rep, {p.star, v2}).second;
    const auto fsum =
        local_trivialization(
            space, rep, {p.star, TangentFiberVector(v1.xi + v2.xi, v1.u + v2.u)})
            .second;
    linearity = std::max(linearity, (fsum.xi - f1.xi - f2.xi).norm() +
                                        (fsum.u - f1.u - f2.u).norm());

    const auto canonical = canonicalize(space, rep, p);
    idempotence = std::max(
        idempotence, canonicalize(space, rep, canonical).distance(canonical));
    canonical_invariance = std::max(
        canonical_invariance, canonicalize(space, rep, q).distance(canonical));

    if (i < 32) {
      canonical_forms.push_back(canonical);
      outputs.emplace_back(label_p, fiber_p);
    }
  }

  // injectivity on classes: distinct canonical forms must map to
  // distinct (label, fiber) pairs
  for (std::size_t i = 0; i < canonical_forms.size(); ++i) {
    for (std::size_t j = i + 1; j < canonical_forms.size(); ++j) {
      if (canonical_forms[i].distance(canonical_forms[j]) <= 1e-6) continue;
      const double separation =
          outputs[i].first.distance(outputs[j].first) +
          outputs[i].second.distance(outputs[j].second);
      injectivity_separation = std::min(injectivity_separation, separation);
    }
  }

  builder.upper("projection_class_invariance", projection_invariance, 1e-8);
  builder.upper("trivialization_class_invariance", trivialization_invariance,
                1e-8);
  builder.upper("trivialization_fiber_linearity", linearity, 1e-10);
  builder.upper("canonicalize_idempotence", idempotence, 1e-10);
  builder.upper("canonicalize_class_invariance", canonical_invariance, 1e-8);
  if (!std::isfinite(injectivity_separation)) injectivity_separation = 1e300;
  builder.lower("trivialization_injectivity_separation_at_least",
                injectivity_separation, 1e-6);
}

void induced_rep_checks(const CatalogEntry& entry, const VerifyOptions& options,
                        SuiteBuilder& builder) {
  const auto& space = entry.space;
  const auto& rep = entry.rep;
  const std::string generator_id =
      space->name() == "sphere" ? "sphere-height-times-frame" : "pullback-frame";
  const auto generator = catalog_section_generator(entry, generator_id);

  const auto section = SampledEquivariantSection::from_generator(
      space, rep, generator, 64, options.seed);
  const auto star_section = SampledStarSection::from_generator(
      space, rep, star_lift(generator), 64, options.seed);

  auto max_distance = [](const SampledEquivariantSection& a,
                         const SampledEquivariantSection& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
      worst = std::max(worst, (a.values()[i] - b.values()[i]).norm());
    return worst;
  };
  auto max_star_distance = [](const SampledStarSection& a,
                              const SampledStarSection& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
      worst = std::max(worst, a.values()[i].distance(b.values()[i]));
    return worst;
  };

  const double base_residual = equivariance_residual(section, 8, options.seed);
  const double base_star_residual =
      equivariance_residual(star_section, 8, options.seed);

  double composition = 0.0, preserved = 0.0, linearity = 0.0;
  double star_composition = 0.0, star_preserved = 0.0;
  const int pairs = std::max(1, options.samples / 10);
  for (int i = 0; i < pairs; ++i) {
    const auto g1 = random_group_element(
        space->big_group(), derive_seed(options.seed, kInducedSalt, 4 * i));
    const auto g2 = random_group_element(
        space->big_group(), derive_seed(options.seed, kInducedSalt, 4 * i + 1));
    composition = std::max(
        composition, max_distance(rho_apply(multiply(g1, g2), section),
                                  rho_apply(g1, rho_apply(g2, section))));

    const auto transformed = rho_apply(g1, section);
    preserved = std::max(
        preserved, std::max(0.0, equivariance_residual(transformed, 8, options.seed) -
                                     base_residual));

    const auto shifted = rho_apply(g2, section);
    const auto combo = linear_combination(1.25, section, -0.75, shifted);
    linearity = std::max(
        linearity,
        max_distance(rho_apply(g1, combo),
                     linear_combination(1.25, rho_apply(g1, section), -0.75,
                                        rho_apply(g1, shifted))));

    const auto w1 = random_star_element(
        space->big_group(), derive_seed(options.seed, kInducedSalt, 4 * i + 2));
    const auto w2 = random_star_element(
        space->big_group(), derive_seed(options.seed, kInducedSalt, 4 * i + 3));
    star_composition = std::max(
        star_composition,
        max_star_distance(rho_star_apply(star_multiply(w1, w2), star_section),
                          rho_star_apply(w1, rho_star_apply(w2, star_section))));
    star_preserved = std::max(
        star_preserved,
        std::max(0.0,
                 equivariance_residual(rho_star_apply(w1, star_section), 8,
                                       options.seed) -
                     base_star_residual));
  }

  const double identity_residual = max_distance(
      rho_apply(GroupElement::identity(space->big_group()), section), section);
  const double star_identity_residual = max_star_distance(
      rho_star_apply(StarElement::identity(space->big_group()), star_section),
      star_section);

  builder.upper("section_equivariance", base_residual, 1e-9);
  builder.upper("rho_identity_exact", identity_residual, 0.0);
  builder.upper("rho_composition", composition, 1e-9);
  builder.upper("rho_linearity", linearity, 1e-10);
  builder.upper("rho_equivariance_preserved", preserved, 1e-9);
  builder.upper("star_section_equivariance[interpreted]", base_star_residual,
                1e-9);
  builder.upper("rho_star_identity_exact[interpreted]", star_identity_residual,
                0.0);
  builder.upper("rho_star_composition[interpreted]", star_composition, 1e-9);
  builder.upper("rho_star_equivariance_preserved[interpreted]", star_preserved,
                1e-9);
}

void rank_transitivity_checks(const CatalogEntry& entry,
                              const VerifyOptions& options,
                              SuiteBuilder& builder) {
  const auto& space = *entry.space;
  const int dim_g = space.big_group()->algebra_dim();
  const int dim_h = space.subgroup()->algebra_dim();
  const int expected_rank = 2 * (dim_g - dim_h);

  double mismatches = 0.0;
  for (int i = 0; i < options.samples; ++i) {
    const auto v =
        random_tangent(space, derive_seed(options.seed, kRankSalt, i));
    if (infinitesimal_rank(v, space.big_group()) != expected_rank)
      mismatches += 1.0;
  }
  builder.upper("infinitesimal_rank_mismatches", mismatches, 0.0);

  const double dimension_error =
      std::abs((2 * dim_g - 2 * dim_h) - 2 * (dim_g - dim_h));
  builder.upper("dimension_identity_error", dimension_error, 0.0);
}

using SuiteFn = void (*)(const CatalogEntry&, const VerifyOptions&,
                         SuiteBuilder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"group-axioms", group_axioms_checks},
      {"prolongation-homomorphism", prolongation_homomorphism_checks},
      {"action-laws", action_laws_checks},
      {"equivalence", equivalence_checks},
      {"projection-trivialization", projection_trivialization_checks},
      {"induced-rep", induced_rep_checks},
      {"rank-transitivity", rank_transitivity_checks},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& example,
                             const std::string& suite,
                             const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& entry = catalog_entry(example);

  VerificationReport report;
  report.suite = suite;
  report.example = example;
  report.samples = options.samples;
  report.seed = options.seed;

  SuiteBuilder builder(options);
  bool found = false;
  for (const auto& [name, fn] : suite_table()) {
    if (suite == name || suite == "all") {
      fn(entry, options, builder);
      builder.merge_into(report);
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite: " + suite);

  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

Json report_to_json(const VerificationReport& report) {
  Json tolerances = Json::object();
  for (const auto& [name, value] : report.tolerances) tolerances[name] = value;
  Json checks = Json::array();
  for (const auto& check : report.checks)
    checks.push_back(Json{{"name", check.name},
                          {"max_residual", check.max_residual},
                          {"threshold", check.threshold},
                          {"pass", check.pass}});
  return Json{{"suite", report.suite},
              {"example", report.example},
              {"samples", report.samples},
              {"seed", report.seed},
              {"tolerances", std::move(tolerances)},
              {"checks", std::move(checks)},
              {"overall", report.overall},
              {"duration_ms", report.duration_ms}};
}

std::string report_to_text(const VerificationReport& report) {
  std::string out = "suite " + report.suite + " on " + report.example +
                    " (samples=" + std::to_string(report.samples) +
                    ", seed=" + std::to_string(report.seed) + ")\n";
  for (const auto& check : report.checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "  [%s] %-48s residual=%.3e threshold=%.3e\n",
                  check.pass ? "PASS" : "FAIL", check.name.c_str(),
                  check.max_residual, check.threshold);
    out += line;
  }
  out += report.overall ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

}  // namespace starbundle
