#include "starbundle/compute.hpp"

#include "starbundle/catalog.hpp"
#include "starbundle/verification.hpp"

namespace starbundle {

namespace {

std::string string_field(const Json& j, const std::string& key) {
  const Json& field = require_field(j, key);
  if (!field.is_string()) throw SchemaError("field '" + key + "' must be a string");
  return field.get<std::string>();
}

Representation resolve_rep(const CatalogEntry& entry, const Json& in) {
  if (!in.contains("rep")) return entry.rep;
  return catalog_representation(entry, string_field(in, "rep"));
}

StarElement witness_argument(const Json& in, const char* key,
                             const CatalogEntry& entry) {
  return witness_from_json(require_field(in, key), entry.space->subgroup());
}

Json dispatch(const std::string& op, const Json& in) {
  const auto& entry = catalog_entry(string_field(in, "example"));
  const auto& big = entry.space->big_group();

  if (op == "star_multiply") {
    const auto p = star_from_json(require_field(in, "p"), big);
    const auto q = star_from_json(require_field(in, "q"), big);
    return star_to_json(star_multiply(p, q));
  }
  if (op == "star_inverse") {
    return star_to_json(star_inverse(star_from_json(require_field(in, "p"), big)));
  }
  if (op == "prolong") {
    const Representation rep = resolve_rep(entry, in);
    const auto k = witness_from_json(in, entry.space->subgroup());
    return prolonged_to_json(prolong(rep, k.a, k.g));
  }
  if (op == "apply_inverse_action") {
    const Representation rep = resolve_rep(entry, in);
    const auto k = witness_from_json(in, entry.space->subgroup());
    const auto v = tangent_fiber_from_json(require_field(in, "v"));
    return tangent_fiber_to_json(apply_inverse_action(rep, k.a, k.g, v));
  }
  if (op == "prolonged_action") {
    const Representation rep = resolve_rep(entry, in);
    const auto p = bundle_point_from_json(require_field(in, "p"), big);
    const auto k = witness_argument(in, "k", entry);
    return bundle_point_to_json(prolonged_action(*entry.space, rep, p, k));
  }
  if (op == "are_equivalent") {
    const Representation rep = resolve_rep(entry, in);
    const auto p = bundle_point_from_json(require_field(in, "p"), big);
    const auto q = bundle_point_from_json(require_field(in, "q"), big);
    const auto witness = are_equivalent(*entry.space, rep, p, q);
    Json out{{"equivalent", witness.has_value()}};
    out["witness"] = witness ? witness_to_json(*witness) : Json();
    return out;
  }
  if (op == "canonicalize") {
    const Representation rep = resolve_rep(entry, in);
    const auto p = bundle_point_from_json(require_field(in, "p"), big);
    return bundle_point_to_json(canonicalize(*entry.space, rep, p));
  }
  if (op == "bundle_projection") {
    const auto p = bundle_point_from_json(require_field(in, "p"), big);
    return label_to_json(bundle_projection(*entry.space, p));
  }
  if (op == "local_trivialization") {
    const Representation rep = resolve_rep(entry, in);
    const auto p = bundle_point_from_json(require_field(in, "p"), big);
    const auto [label, fiber] = local_trivialization(*entry.space, rep, p);
    return Json{{"label", label_to_json(label)},
                {"fiber", tangent_fiber_to_json(fiber)}};
  }
  if (op == "rho_apply") {
    const Representation rep = resolve_rep(entry, in);
    const auto generator =
        catalog_section_generator(entry, string_field(in, "generator"));
    const int points = in.contains("points") ? in.at("points").get<int>() : 64;
    const std::uint64_t seed =
        in.contains("seed") ? in.at("seed").get<std::uint64_t>() : 0;
    if (points < 1 || points > 4096)
      throw SchemaError("points must be between 1 and 4096");
    const auto section = SampledEquivariantSection::from_generator(
        entry.space, rep, generator, points, seed);
    const GroupElement g(big, matrix_from_json(require_field(in, "g")));
    return section_to_json(rho_apply(g, section));
  }
  throw UsageError("unknown op: " + op);
}

}  // namespace

const std::vector<std::string>& compute_op_names() {
  static const std::vector<std::string> names = {
      "star_multiply",     "star_inverse",      "prolong",
      "apply_inverse_action", "prolonged_action", "are_equivalent",
      "canonicalize",      "bundle_projection", "local_trivialization",
      "rho_apply"};
  return names;
}

Json compute_op(const std::string& op, const std::string& raw_input) {
  const Json in = parse_json(raw_input);
  Json result = dispatch(op, in);
  return Json{{"op", op},
              {"input_hash", input_hash(raw_input)},
              {"result", std::move(result)}};
}

Json list_examples() {
  Json out = Json::array();
  for (const auto& name : catalog_names()) {
    const auto& entry = catalog_entry(name);
    Json suites = Json::array();
    for (const auto& suite : suite_names()) suites.push_back(suite);
    Json generators = Json::array();
    for (const auto& id : catalog_generator_ids(entry)) generators.push_back(id);
    out.push_back(Json{
        {"name", name},
        {"manifold", entry.space->manifold()->name()},
        {"dim_g", entry.space->big_group()->algebra_dim()},
        {"dim_h", entry.space->subgroup()->algebra_dim()},
        {"fiber_dim", entry.rep.fiber_dim()},
        {"tangent_fiber_dim", 2 * entry.rep.fiber_dim()},
        {"rep", entry.rep.id()},
        {"suites", std::move(suites)},
        {"generators", std::move(generators)},
    });
  }
  return out;
}

}  // namespace starbundle
