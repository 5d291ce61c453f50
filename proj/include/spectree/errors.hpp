#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectree {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented range of an operation.
class invalid_parameter : public error {
public:
    using error::error;
};

// A structural requirement on the input graph does not hold (e.g. connectivity).
class precondition_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class numerical_failure : public error {
public:
    numerical_failure(const std::string& what, double best_estimate)
        : error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

// Requested work exceeds a configured cap.
class resource_error : public error {
public:
    using error::error;
};

// Internal inconsistency: two checkers disagree or a proven-infallible step failed.
class defect_error : public error {
public:
    using error::error;
};

} // namespace spectree
