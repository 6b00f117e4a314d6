#pragma once

#include <stdexcept>

namespace nov {

#define NOV_ERROR(Name)                             \
    struct Name : std::runtime_error {              \
        using std::runtime_error::runtime_error;    \
    }

NOV_ERROR(ShapeMismatch);
NOV_ERROR(NotIncident);
NOV_ERROR(NotAnElement);
NOV_ERROR(NotUnit);
NOV_ERROR(FlavorMismatch);
NOV_ERROR(WindowTooSmall);
NOV_ERROR(MarginExceeded);
NOV_ERROR(NotInKernel);
NOV_ERROR(HomotopyInvalid);
NOV_ERROR(IncidenceViolation);
NOV_ERROR(InputError);

#undef NOV_ERROR

}  // namespace nov
