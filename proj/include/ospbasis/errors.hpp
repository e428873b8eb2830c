#pragma once

#include <stdexcept>
#include <string>

namespace ospbasis {

// Input that does not describe a valid semistandard tableau, partition or filling.
class invalid_tableau : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal identity failed to hold (inexact division, nonzero residual,
// broken unitriangularity). Always a bug or an out-of-span input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// expand_in_basis was handed a vector that is not in the span of the context.
class out_of_span_error : public consistency_error {
public:
    using consistency_error::consistency_error;
};

} // namespace ospbasis
