#pragma once

#include <stdexcept>

namespace medimark {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands that must share a shape do not.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A buffer has the wrong length for the primitive consuming it.
struct SizeError : Error {
    using Error::Error;
};

// A requested region does not lie inside the image.
struct RegionOutOfBounds : Error {
    using Error::Error;
};

// A statistic is undefined for this input (e.g. zero variance).
struct DegenerateInput : Error {
    using Error::Error;
};

} // namespace medimark
