#pragma once

#include <stdexcept>
#include <string>

namespace platlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

#define PLATLAB_ERROR(Name)                                              \
    class Name : public Error {                                          \
    public:                                                              \
        using Error::Error;                                              \
        const char* kind() const noexcept override { return #Name; }     \
    };

PLATLAB_ERROR(ShapeError)
PLATLAB_ERROR(TwistednessError)
PLATLAB_ERROR(ConfigError)
PLATLAB_ERROR(UnresolvedDiagram)
PLATLAB_ERROR(AmbiguousOrder)
PLATLAB_ERROR(TangencyError)
PLATLAB_ERROR(BudgetExceeded)
PLATLAB_ERROR(DegenerateSubdivision)
PLATLAB_ERROR(CensusMismatch)
PLATLAB_ERROR(CaseInapplicable)

#undef PLATLAB_ERROR

}  // namespace platlab
