#pragma once

#include <stdexcept>
#include <string>

namespace starbundle {

/// Base class for all starbundle errors. `code()` returns a stable
/// identifier used in CLI error output.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define STARBUNDLE_DEFINE_ERROR(NAME)                       \
  class NAME : public Error {                               \
  public:                                                   \
    explicit NAME(const std::string& what) : Error(#NAME, what) {} \
  }

STARBUNDLE_DEFINE_ERROR(MembershipViolation);
STARBUNDLE_DEFINE_ERROR(SpanViolation);
STARBUNDLE_DEFINE_ERROR(DomainMismatch);
STARBUNDLE_DEFINE_ERROR(DimensionMismatch);
STARBUNDLE_DEFINE_ERROR(TangencyViolation);
STARBUNDLE_DEFINE_ERROR(SubgroupViolation);
STARBUNDLE_DEFINE_ERROR(SectionFailure);
STARBUNDLE_DEFINE_ERROR(ChartViolation);
STARBUNDLE_DEFINE_ERROR(GeneratorRequired);
STARBUNDLE_DEFINE_ERROR(UsageError);
STARBUNDLE_DEFINE_ERROR(SchemaError);

#undef STARBUNDLE_DEFINE_ERROR

}  // namespace starbundle
