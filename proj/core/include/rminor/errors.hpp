#pragma once

#include <stdexcept>
#include <string>

namespace rminor {

// Thrown by guarded brute-force searches when an input exceeds the size the
// search is willing to enumerate. Distinct from std::invalid_argument so
// callers can map it to a dedicated exit code.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rminor
