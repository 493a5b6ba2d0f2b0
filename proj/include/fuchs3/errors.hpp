#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fuchs3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FUCHS3_ERROR(Name)                                                     \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

FUCHS3_ERROR(DivisionByZero);
FUCHS3_ERROR(ZeroDenominator);
FUCHS3_ERROR(NotSquare);
FUCHS3_ERROR(DimensionMismatch);
FUCHS3_ERROR(Inconsistent);
FUCHS3_ERROR(DuplicateNode);
FUCHS3_ERROR(InvalidConfig);
FUCHS3_ERROR(SingularGBlock);
FUCHS3_ERROR(NotASingularPoint);
FUCHS3_ERROR(WrongExponents);
FUCHS3_ERROR(FieldMismatch);
FUCHS3_ERROR(DegenerateLinear);
FUCHS3_ERROR(RankMismatch);
FUCHS3_ERROR(InterpolationInconsistent);
FUCHS3_ERROR(FactorizationMismatch);
FUCHS3_ERROR(ParseError);
FUCHS3_ERROR(Unsupported);
FUCHS3_ERROR(OutsideOpenSet);

#undef FUCHS3_ERROR

} // namespace fuchs3
