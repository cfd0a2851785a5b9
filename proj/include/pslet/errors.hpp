#ifndef PSLET_ERRORS_HPP
#define PSLET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pslet {

// Base class for every failure the library reports. The CLI maps
// SyntaxError/UnknownSymbol to exit code 2 and the rest to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NoBracket : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownSymbol : Error {
    std::size_t offset;
    UnknownSymbol(const std::string& name, std::size_t off)
        : Error("unknown symbol '" + name + "' (at offset " + std::to_string(off) + ")"),
          offset(off) {}
};

struct SingularPoint : Error {
    using Error::Error;
};

struct NoBinding : Error {
    using Error::Error;
};

struct ComplexFrequency : Error {
    using Error::Error;
};

struct InsufficientJet : Error {
    using Error::Error;
};

struct OrderOverflow : Error {
    using Error::Error;
};

struct DegeneratePade : Error {
    using Error::Error;
};

struct NodeMismatch : Error {
    using Error::Error;
};

struct NoBoundState : Error {
    using Error::Error;
};

}  // namespace pslet

#endif
