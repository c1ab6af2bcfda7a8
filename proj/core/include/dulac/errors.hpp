#pragma once

#include <stdexcept>
#include <string>

namespace dulac {

// Differentiating something that is not C^1 where asked (bare |y| factors).
struct non_smooth_error : std::runtime_error {
    explicit non_smooth_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation that needs fully numeric input received unbound parameters.
struct parametric_error : std::runtime_error {
    explicit parametric_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the documented domain of an operation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Zero set is not isolated / candidate degenerates.
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing failed (no sign change on the given interval).
struct bracket_error : std::runtime_error {
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input that does not parse.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dulac
