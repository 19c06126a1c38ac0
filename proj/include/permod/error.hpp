#pragma once

#include <stdexcept>
#include <string>

namespace permod {

/// Library-wide exception. Thrown on invalid inputs, malformed files and
/// internal consistency failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permod
