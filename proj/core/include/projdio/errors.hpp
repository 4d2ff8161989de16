#pragma once

#include <stdexcept>
#include <string>

namespace projdio {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PROJDIO_ERROR_TYPE(Name)            \
  struct Name : Error {                     \
    using Error::Error;                     \
    Name() : Error(#Name) {}                \
  }

PROJDIO_ERROR_TYPE(ZeroVector);
PROJDIO_ERROR_TYPE(DimensionMismatch);
PROJDIO_ERROR_TYPE(InvalidRange);
PROJDIO_ERROR_TYPE(RadiusOutOfRange);
PROJDIO_ERROR_TYPE(InvalidParameter);
PROJDIO_ERROR_TYPE(PointOutsideSupport);
PROJDIO_ERROR_TYPE(DegenerateBall);
PROJDIO_ERROR_TYPE(PackingFailed);
PROJDIO_ERROR_TYPE(BudgetExceeded);
PROJDIO_ERROR_TYPE(EmptyTree);
PROJDIO_ERROR_TYPE(PointsOutsideBall);
PROJDIO_ERROR_TYPE(RationalInput);
PROJDIO_ERROR_TYPE(ConfigInvalid);
PROJDIO_ERROR_TYPE(InvariantViolation);

#undef PROJDIO_ERROR_TYPE

}  // namespace projdio
