#ifndef GRACEFUL_ERRORS_HPP
#define GRACEFUL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graceful {

// Invalid argument to a library operation (bad index, malformed edge, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file or stream.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured resource guard.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graceful

#endif
