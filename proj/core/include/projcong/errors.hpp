#pragma once

#include <stdexcept>
#include <string>

namespace projcong {

/// Support dropped to or below the admissible margin: the body does not
/// contain the origin as an interior point.
class OriginNotInteriorError : public std::runtime_error {
public:
    explicit OriginNotInteriorError(const std::string& what) : std::runtime_error(what) {}
};

/// Projection collapsed to a segment or point.
class DegenerateProjectionError : public std::runtime_error {
public:
    explicit DegenerateProjectionError(const std::string& what) : std::runtime_error(what) {}
};

/// Random fixture generation exhausted its rejection budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace projcong
