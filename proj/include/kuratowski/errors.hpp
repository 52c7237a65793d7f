#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuratowski {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument fell outside its documented range.
struct DomainError : Error {
    using Error::Error;
};

/// A file could not be opened or read.
struct IoError : Error {
    using Error::Error;
};

/// An input file could not be parsed; the message names the line.
struct ParseError : Error {
    using Error::Error;
};

/// A loaded distance matrix violates a metric axiom.
struct MetricViolation : Error {
    MetricViolation(const std::string& msg, std::size_t i, std::size_t j, std::size_t k)
        : Error(msg), i(i), j(j), k(k) {}
    std::size_t i, j, k;
};

/// The k-NN graph split into more than one component.
struct DisconnectedGraph : Error {
    using Error::Error;
};

/// The geodesic through two points is not unique (coincident or antipodal).
struct DegenerateGeodesic : Error {
    using Error::Error;
};

/// The perpendicular foot is not unique (point is a pole of the great circle).
struct AmbiguousFoot : Error {
    using Error::Error;
};

/// No landmark subset passes verification; signals a corrupted oracle.
struct NoPassingNet : Error {
    using Error::Error;
};

}  // namespace kuratowski
