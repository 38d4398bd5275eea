#pragma once

#include <stdexcept>
#include <string>

namespace bergekit {

/// Raised on any precondition violation or malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bergekit
