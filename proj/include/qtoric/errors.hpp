#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactmath
struct DiscriminantMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NonSquareFreeDiscriminant : Error {
    using Error::Error;
};

// polytope
struct EmptyPolytope : Error {
    using Error::Error;
};
struct Unbounded : Error {
    using Error::Error;
};
struct LowerDimensional : Error {
    using Error::Error;
};
struct NotSimple : Error {
    using Error::Error;
};

// quasilattice
struct GeneratorsDoNotSpan : Error {
    using Error::Error;
};
struct DependentFaceNormals : Error {
    using Error::Error;
};

// delzant
struct NotOnLevelSet : Error {
    using Error::Error;
};
struct OutsidePolytope : Error {
    using Error::Error;
};

// verify
struct RejectionBudgetExceeded : Error {
    using Error::Error;
};

// config
struct SyntaxError : Error {
    SyntaxError(int line, int col, const std::string& what)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

}  // namespace qtoric
