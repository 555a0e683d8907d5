#ifndef SMALLCOVER_ERRORS_HPP
#define SMALLCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

struct NotPureError : Error {
    using Error::Error;
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct InvalidCharacteristicError : Error {
    using Error::Error;
};

struct NotUpperTriangularError : Error {
    using Error::Error;
};

// Carries the offending directed cycle (1-based indices).
struct NotBottError : Error {
    std::vector<int> cycle;
    NotBottError(const std::string& msg, std::vector<int> cyc)
        : Error(msg), cycle(std::move(cyc)) {}
};

// Carries a subset whose lengths sum to exactly half the total.
struct NotGenericError : Error {
    std::vector<int> witness;
    NotGenericError(const std::string& msg, std::vector<int> w)
        : Error(msg), witness(std::move(w)) {}
};

// Text/JSON input errors with a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int ln, int col = 0)
        : Error(msg + " (line " + std::to_string(ln) +
                (col > 0 ? ", column " + std::to_string(col) : std::string()) + ")"),
          line(ln), column(col) {}
};

}  // namespace smallcover

#endif
