#pragma once

#include <stdexcept>
#include <string>

namespace lesyn {

inline constexpr const char* version_string = "0.1.0";

// Error taxonomy. The CLI maps each class to a distinct exit code
// (see tools/lesyn.cpp); library code throws and never exits.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened / read / written.
class io_error : public error {
public:
    using error::error;
};

/// File exists but its contents are not what the format requires
/// (malformed NIfTI, truncated checkpoint, unparseable config).
class format_error : public error {
public:
    using error::error;
};

/// Two grids that must match (dims / spacing / orientation) do not,
/// or a spatial transform is unusable.
class geometry_error : public error {
public:
    using error::error;
};

/// Invalid parameter combination (non-increasing gammas, bad split
/// fraction, architecture mismatch, ...).
class config_error : public error {
public:
    using error::error;
};

/// Numerically degenerate input or diverged computation (constant
/// image where a range is needed, NaN loss, non-convergent fit).
class numeric_error : public error {
public:
    using error::error;
};

} // namespace lesyn
