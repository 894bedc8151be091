#ifndef DYNGAL_ERRORS_HPP
#define DYNGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyngal {

// Base class for all errors raised by the library. Each named condition
// gets its own type so callers (and the CLI) can map them to reports.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DYNGAL_ERROR(NAME)                                                 \
    struct NAME : Error {                                                  \
        explicit NAME(const std::string& what = #NAME) : Error(what) {}    \
    }

DYNGAL_ERROR(NonExactDivision);
DYNGAL_ERROR(NotSquarefree);
DYNGAL_ERROR(DegreeMismatch);
DYNGAL_ERROR(NotASubgroup);
DYNGAL_ERROR(IndexLimitExceeded);
DYNGAL_ERROR(NotInGroup);
DYNGAL_ERROR(BudgetExceeded);
DYNGAL_ERROR(NotInWreathGroup);
DYNGAL_ERROR(IndexOutOfRange);
DYNGAL_ERROR(NotADivisor);
DYNGAL_ERROR(InvalidCharacter);
DYNGAL_ERROR(InvalidParameters);
DYNGAL_ERROR(ParseError);
DYNGAL_ERROR(ValidationError);
DYNGAL_ERROR(AmbiguousInertia);
DYNGAL_ERROR(UnsupportedN);
DYNGAL_ERROR(NonIntegralGenus);
DYNGAL_ERROR(NonIntegralCount);
DYNGAL_ERROR(MissingPatternSet);

#undef DYNGAL_ERROR

} // namespace dyngal

#endif
