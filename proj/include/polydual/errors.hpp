#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydual {

// All arithmetic is exact; a result that would leave the 64-bit range is a
// hard error, never a silent wraparound.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input points do not affinely span 3-space.
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Polar dual requested for a polytope whose interior misses the origin.
struct OriginNotInteriorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A vertex subset that is not a face of the polytope.
struct NotAFaceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Basis comparison on linearly dependent triples.
struct NonComparableBasesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A monomial whose weighted degree differs from the weight system's total degree.
struct WrongDegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A lattice vector outside the span of a basis; indicates corrupt input data.
struct NonRepresentableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Computed data disagrees with a case fixture's expected values.
struct FixtureMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check between two internal computation routes failed.
struct InternalInconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial (or other textual) input rejected; carries the byte offset.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& message, std::size_t pos)
        : std::invalid_argument(message + " at position " + std::to_string(pos)),
          position(pos) {}

    std::size_t position;
};

}  // namespace polydual
