#pragma once

#include <json.hpp>
#include <string>

#include "starbundle/homogeneous_bundle.hpp"
#include "starbundle/induced_sections.hpp"

namespace starbundle {

// ordered_json keeps fields in insertion order so emitted documents are
// byte-stable for fixed inputs.
using Json = nlohmann::ordered_json;

/// Parse with SchemaError on malformed input.
Json parse_json(const std::string& text);

/// Fetch a required field; SchemaError when missing.
const Json& require_field(const Json& j, const std::string& key);

// Matrices serialize as row-major nested arrays of doubles; vectors as
// flat arrays.
Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);

/// {name, matrix_size, basis, tolerance}
Json descriptor_to_json(const GroupDescriptor& descriptor);

/// {"a": coords, "g": matrix}
Json star_to_json(const StarElement& p);
StarElement star_from_json(const Json& j, const DescriptorPtr& descriptor);

/// Witnesses use subgroup-algebra coordinates: {"b": coords, "h": matrix}.
Json witness_to_json(const StarElement& k);
StarElement witness_from_json(const Json& j, const DescriptorPtr& subgroup);

/// {"xi": vector, "u": vector}
Json tangent_fiber_to_json(const TangentFiberVector& v);
TangentFiberVector tangent_fiber_from_json(const Json& j);

/// {"a": coords, "g": matrix, "xi": vector, "u": vector}
Json bundle_point_to_json(const BundlePoint& p);
BundlePoint bundle_point_from_json(const Json& j, const DescriptorPtr& big_group);

/// {"manifold": name, "base": coords, "vec": coords}
Json label_to_json(const EmbeddedTangentVector& label);
EmbeddedTangentVector label_from_json(const Json& j, const ManifoldPtr& manifold);

/// Single 2m x 2m row-major array plus a block-structure validity flag.
Json prolonged_to_json(const ProlongedMatrix& p);

/// {"points": [...], "values": [...], "generator": id | null}
Json section_to_json(const SampledEquivariantSection& s);

/// FNV-1a 64-bit hash of the raw input bytes, as a hex string; used to
/// pin fixtures to the exact input document.
std::string input_hash(const std::string& raw);

}  // namespace starbundle
