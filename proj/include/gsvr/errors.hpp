#ifndef GSVR_ERRORS_HPP
#define GSVR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsvr {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller handed us values that violate a documented precondition
// (non-finite scale, mismatched shapes, bad flag combination, ...).
struct invalid_parameter : error {
    explicit invalid_parameter(const std::string& msg) : error(msg) {}
};

// Filesystem trouble: missing files, unwritable directories, short reads.
struct io_error : error {
    explicit io_error(const std::string& msg) : error(msg) {}
};

// A byte stream we refuse to parse: bad magic, truncation, unknown major
// version, corrupt section. Names the failing section where possible.
struct format_error : error {
    explicit format_error(const std::string& msg) : error(msg) {}
};

// Numerics went off the rails: diverging loss, non-finite values where
// finiteness is an invariant.
struct numeric_error : error {
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

// Covariance whose determinant fell below the invertibility floor.
struct degenerate_gaussian : numeric_error {
    explicit degenerate_gaussian(const std::string& msg) : numeric_error(msg) {}
};

} // namespace gsvr

#endif // GSVR_ERRORS_HPP
