#pragma once

#include <stdexcept>

namespace kingdon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// exact
struct NonSymmetric : Error {
    using Error::Error;
};

// algebra_core
struct AlgebraMismatch : Error {
    using Error::Error;
};
struct NoConjugation : Error {
    using Error::Error;
};
struct NotScalar : Error {
    using Error::Error;
};

// cayley_dickson
struct InvalidConjugation : Error {
    using Error::Error;
};
struct TowerTooTall : Error {
    using Error::Error;
};

// kingdon
struct DimensionTooLarge : Error {
    using Error::Error;
};
struct NotOctonions : Error {
    using Error::Error;
};

// structure
struct VerificationFailed : Error {
    using Error::Error;
};

}  // namespace kingdon
