#pragma once

#include <stdexcept>
#include <string>

namespace k3twist {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define K3TWIST_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

K3TWIST_DEFINE_ERROR(NotARoot)
K3TWIST_DEFINE_ERROR(NotNegative)
K3TWIST_DEFINE_ERROR(NotElliptic)
K3TWIST_DEFINE_ERROR(NotInImage)
K3TWIST_DEFINE_ERROR(NoCircle)
K3TWIST_DEFINE_ERROR(NotAtkinLehner)
K3TWIST_DEFINE_ERROR(BadSection)
K3TWIST_DEFINE_ERROR(OrderMismatch)
K3TWIST_DEFINE_ERROR(LengthMismatch)
K3TWIST_DEFINE_ERROR(SchemaError)
K3TWIST_DEFINE_ERROR(InvariantViolation)
K3TWIST_DEFINE_ERROR(BadWindow)

#undef K3TWIST_DEFINE_ERROR

}  // namespace k3twist
