#pragma once

#include <stdexcept>
#include <string>

namespace artm {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
    usage = 1,       // bad arguments, invalid configuration
    data = 2,        // malformed or inconsistent input data
    infeasible = 3,  // no solution exists under the given constraints
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& message) {
    throw Error(ErrorKind::usage, message);
}

[[noreturn]] inline void throw_data(const std::string& message) {
    throw Error(ErrorKind::data, message);
}

[[noreturn]] inline void throw_infeasible(const std::string& message) {
    throw Error(ErrorKind::infeasible, message);
}

}  // namespace artm
