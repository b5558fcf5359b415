#pragma once

#include <string>
#include <vector>

#include "starbundle/serialization.hpp"

namespace starbundle {

/// Batch-evaluable operation names accepted by compute_op.
const std::vector<std::string>& compute_op_names();

/// Evaluates one operation on a JSON input document. The output echoes
/// the operation and the FNV-1a hash of the raw input for fixture
/// pinning. Throws SchemaError for inputs that do not match the op's
/// schema, UsageError for unknown ops/examples, and the operation's own
/// error type for semantic failures.
Json compute_op(const std::string& op, const std::string& raw_input);

/// Static catalog dump with dimensions, suites, representation ids and
/// section generators, in stable order.
Json list_examples();

}  // namespace starbundle
