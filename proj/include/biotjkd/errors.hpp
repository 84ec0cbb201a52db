#ifndef BIOTJKD_ERRORS_HPP
#define BIOTJKD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biotjkd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    std::size_t pivot_index;
    NotPositiveDefinite(const std::string& msg, std::size_t idx)
        : Error(msg), pivot_index(idx) {}
};

struct DegenerateLeadingCoefficient : Error {
    using Error::Error;
};

struct BranchCutEvaluation : Error {
    using Error::Error;
};

struct DegenerateModulus : Error {
    using Error::Error;
};

struct InvalidRange : Error {
    using Error::Error;
};

struct DuplicateNode : Error {
    using Error::Error;
};

struct RepeatedPole : Error {
    using Error::Error;
};

struct ComplexPole : Error {
    using Error::Error;
};

struct SchemaMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace biotjkd

#endif
