#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heron {

/// Base class of every domain error raised by the library. `name()` is the
/// stable identifier the CLI prints verbatim.
class Error : public std::domain_error {
 public:
  Error(std::string_view name, const std::string& what)
      : std::domain_error(what), name_(name) {}

  std::string_view name() const noexcept { return name_; }

 private:
  std::string_view name_;
};

#define HERON_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                         \
   public:                                                            \
    explicit Type(const std::string& what) : Error(#Type, what) {}    \
  }

HERON_DEFINE_ERROR(TriangleInequalityError);
HERON_DEFINE_ERROR(ParityError);
HERON_DEFINE_ERROR(DivisibilityError);
HERON_DEFINE_ERROR(RangeError);
HERON_DEFINE_ERROR(ScaleParityError);
HERON_DEFINE_ERROR(NonPrimitiveError);
HERON_DEFINE_ERROR(IrrationalAreaError);
// Raised when a theorem-backed identity fails at runtime, or when a value
// handed in by the caller violates a type invariant.
HERON_DEFINE_ERROR(InvariantError);

#undef HERON_DEFINE_ERROR

}  // namespace heron
