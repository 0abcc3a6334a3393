#pragma once

#include <stdexcept>
#include <string>

namespace warpmat {

// Raised for any input that violates a domain invariant (bad Gauss code,
// malformed matrix, unsatisfiable reconstruction, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace warpmat
