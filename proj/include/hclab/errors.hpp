#pragma once

#include <stdexcept>
#include <string>

namespace hclab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cayley-table validation failures; messages name the first offending cell/triple.
struct NotLatinSquare : Error {
    using Error::Error;
};
struct NotAssociative : Error {
    using Error::Error;
};
struct IdentityNotZero : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};
struct NotPGroup : Error {
    using Error::Error;
};
struct OrderCapExceeded : Error {
    using Error::Error;
};
struct InvalidAction : Error {
    using Error::Error;
};
struct FileFormatError : Error {
    using Error::Error;
};

} // namespace hclab
