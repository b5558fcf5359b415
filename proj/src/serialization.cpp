#include "starbundle/serialization.hpp"

#include <cstdint>

namespace starbundle {

Json parse_json(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw SchemaError("input is not valid JSON");
  return parsed;
}

const Json& require_field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError("missing required field '" + key + "'");
  return j.at(key);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw SchemaError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw SchemaError("matrix rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw SchemaError("matrix rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row.at(k).is_number())
        throw SchemaError("matrix entries must be numbers");
      m(i, k) = row.at(k).get<double>();
    }
  }
  return m;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector must be an array of numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j.at(i).is_number()) throw SchemaError("vector entries must be numbers");
    v[i] = j.at(i).get<double>();
  }
  return v;
}

Json descriptor_to_json(const GroupDescriptor& descriptor) {
  Json basis = Json::array();
  for (const auto& b : descriptor.algebra_basis()) basis.push_back(to_json(b));
  return Json{{"name", descriptor.name()},
              {"matrix_size", descriptor.matrix_size()},
              {"basis", std::move(basis)},
              {"tolerance", descriptor.tolerance()}};
}

Json star_to_json(const StarElement& p) {
  return Json{{"a", to_json(p.a.coords())}, {"g", to_json(p.g.matrix())}};
}

namespace {

StarElement star_from_fields(const Json& j, const char* algebra_key,
                             const char* group_key,
                             const DescriptorPtr& descriptor) {
  const Vector coords = vector_from_json(require_field(j, algebra_key));
  if (coords.size() != descriptor->algebra_dim())
    throw SchemaError(std::string(algebra_key) + ": expected " +
                      std::to_string(descriptor->algebra_dim()) + " coordinates");
  const Matrix g = matrix_from_json(require_field(j, group_key));
  if (g.rows() != descriptor->matrix_size() || g.cols() != descriptor->matrix_size())
    throw SchemaError(std::string(group_key) + ": expected a " +
                      std::to_string(descriptor->matrix_size()) + "x" +
                      std::to_string(descriptor->matrix_size()) + " matrix");
  return StarElement(AlgebraElement::from_coords(descriptor, coords),
                     GroupElement(descriptor, g));
}

}  // namespace

StarElement star_from_json(const Json& j, const DescriptorPtr& descriptor) {
  return star_from_fields(j, "a", "g", descriptor);
}

Json witness_to_json(const StarElement& k) {
  return Json{{"b", to_json(k.a.coords())}, {"h", to_json(k.g.matrix())}};
}

StarElement witness_from_json(const Json& j, const DescriptorPtr& subgroup) {
  return star_from_fields(j, "b", "h", subgroup);
}

Json tangent_fiber_to_json(const TangentFiberVector& v) {
  return Json{{"xi", to_json(v.xi)}, {"u", to_json(v.u)}};
}

TangentFiberVector tangent_fiber_from_json(const Json& j) {
  return TangentFiberVector(vector_from_json(require_field(j, "xi")),
                            vector_from_json(require_field(j, "u")));
}

Json bundle_point_to_json(const BundlePoint& p) {
  return Json{{"a", to_json(p.star.a.coords())},
              {"g", to_json(p.star.g.matrix())},
              {"xi", to_json(p.fiber.xi)},
              {"u", to_json(p.fiber.u)}};
}

BundlePoint bundle_point_from_json(const Json& j,
                                   const DescriptorPtr& big_group) {
  return BundlePoint{star_from_json(j, big_group), tangent_fiber_from_json(j)};
}

Json label_to_json(const EmbeddedTangentVector& label) {
  return Json{{"manifold", label.base().manifold()->name()},
              {"base", to_json(label.base().coords())},
              {"vec", to_json(label.vec())}};
}

EmbeddedTangentVector label_from_json(const Json& j,
                                      const ManifoldPtr& manifold) {
  if (j.contains("manifold") &&
      j.at("manifold").get<std::string>() != manifold->name())
    throw SchemaError("label names manifold '" +
                      j.at("manifold").get<std::string>() + "', expected '" +
                      manifold->name() + "'");
  return EmbeddedTangentVector(
      EmbeddedManifoldPoint(manifold,
                            vector_from_json(require_field(j, "base"))),
      vector_from_json(require_field(j, "vec")));
}

Json prolonged_to_json(const ProlongedMatrix& p) {
  const Matrix full = p.full();
  const int m = p.block_dim();
  const bool valid = full.topRightCorner(m, m).isZero(0.0) &&
                     full.topLeftCorner(m, m) == full.bottomRightCorner(m, m);
  return Json{{"matrix", to_json(full)}, {"blocks_valid", valid}};
}

Json section_to_json(const SampledEquivariantSection& s) {
  Json points = Json::array();
  for (const auto& p : s.points()) points.push_back(to_json(p.matrix()));
  Json values = Json::array();
  for (const auto& v : s.values()) values.push_back(to_json(v));
  Json generator;
  if (s.has_generator()) generator = s.generator().id;
  return Json{{"points", std::move(points)},
              {"values", std::move(values)},
              {"generator", std::move(generator)}};
}

std::string input_hash(const std::string& raw) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : raw) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace starbundle
