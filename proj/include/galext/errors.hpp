#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galext {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define GALEXT_DEFINE_ERROR(Name)                                                                  \
    class Name : public Error                                                                      \
    {                                                                                              \
    public:                                                                                        \
        using Error::Error;                                                                        \
    }

GALEXT_DEFINE_ERROR(RegistryMismatch);
GALEXT_DEFINE_ERROR(NotInvertible);
GALEXT_DEFINE_ERROR(UnknownSymbol);
GALEXT_DEFINE_ERROR(ShapeError);
GALEXT_DEFINE_ERROR(IndexError);
GALEXT_DEFINE_ERROR(NotSymmetricInvariant);
GALEXT_DEFINE_ERROR(MalformedPhase);
GALEXT_DEFINE_ERROR(DegreeBoundExceeded);
GALEXT_DEFINE_ERROR(BadSpin);
GALEXT_DEFINE_ERROR(BadRank);
GALEXT_DEFINE_ERROR(BadMass);
GALEXT_DEFINE_ERROR(NotCentral);
GALEXT_DEFINE_ERROR(CovarianceFailure);
GALEXT_DEFINE_ERROR(RedundancyClaimFailure);
GALEXT_DEFINE_ERROR(BadParameter);

#undef GALEXT_DEFINE_ERROR

/// Input-format error carrying a 1-based source position.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
        , line_(line)
        , column_(column)
    {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace galext
