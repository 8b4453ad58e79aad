#ifndef HVMAG_ERRORS_HPP
#define HVMAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hvmag {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct AnchorAbovePoint : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidLevel : Error {
    using Error::Error;
};

struct TooManyPoints : Error {
    using Error::Error;
};

struct NegativeLength : Error {
    using Error::Error;
};

struct SingularSimilarityMatrix : Error {
    using Error::Error;
};

struct NonFiniteCoordinate : Error {
    using Error::Error;
};

struct UnsortedParameters : Error {
    using Error::Error;
};

struct InvalidMu : Error {
    using Error::Error;
};

struct InvalidTriple : Error {
    using Error::Error;
};

struct PerturbationLeavesSimplex : Error {
    using Error::Error;
};

struct InvalidBounds : Error {
    using Error::Error;
};

struct InfeasibleStart : Error {
    using Error::Error;
};

struct InfeasiblePoint : Error {
    using Error::Error;
};

struct NonFiniteObjective : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace hvmag

#endif  // HVMAG_ERRORS_HPP
