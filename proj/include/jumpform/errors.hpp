#pragma once

#include <stdexcept>
#include <string>

namespace jumpform {

/// Base error for the whole library. `code()` is the stable machine-readable
/// identifier that the CLI and the Python bindings surface unchanged.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& w) : Error("dimension_mismatch", w) {}
};

struct MalformedInputError : Error {
    explicit MalformedInputError(const std::string& w) : Error("malformed_input", w) {}
};

struct ParityError : Error {
    explicit ParityError(const std::string& w) : Error("parity_error", w) {}
};

struct InfeasibleGeometryError : Error {
    explicit InfeasibleGeometryError(const std::string& w) : Error("infeasible_geometry", w) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& w) : Error("size_limit", w) {}
};

struct UnsupportedClassificationError : Error {
    explicit UnsupportedClassificationError(const std::string& w)
        : Error("unsupported_classification", w) {}
};

struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& w) : Error("no_solution", w) {}
};

struct DegenerateFormError : Error {
    explicit DegenerateFormError(const std::string& w) : Error("degenerate_form", w) {}
};

struct DegenerateSurfaceError : Error {
    explicit DegenerateSurfaceError(const std::string& w) : Error("degenerate_surface", w) {}
};

struct IdenticallyComplexError : Error {
    explicit IdenticallyComplexError(const std::string& w) : Error("identically_complex", w) {}
};

struct RadiusUnusableError : Error {
    explicit RadiusUnusableError(const std::string& w) : Error("radius_unusable", w) {}
};

struct IoError : Error {
    explicit IoError(const std::string& w) : Error("io_error", w) {}
};

}  // namespace jumpform
