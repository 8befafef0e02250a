#pragma once

#include <stdexcept>
#include <string>

namespace dyncolor {

struct DuplicateEdgeError : std::runtime_error {
    explicit DuplicateEdgeError(const std::string& what)
        : std::runtime_error(what) {}
};

struct MissingEdgeError : std::runtime_error {
    explicit MissingEdgeError(const std::string& what)
        : std::runtime_error(what) {}
};

// The update stream broke the promised max-degree bound.
struct DegreeBoundError : std::runtime_error {
    explicit DegreeBoundError(const std::string& what)
        : std::runtime_error(what) {}
};

struct InvalidEpsilonError : std::invalid_argument {
    explicit InvalidEpsilonError(const std::string& what)
        : std::invalid_argument(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what)
        : std::out_of_range(what) {}
};

struct StreamParseError : std::runtime_error {
    StreamParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    std::size_t line;
};

struct InvalidArgsError : std::invalid_argument {
    explicit InvalidArgsError(const std::string& what)
        : std::invalid_argument(what) {}
};

}  // namespace dyncolor
