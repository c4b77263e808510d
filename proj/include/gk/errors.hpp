#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Input exceeds a hard structural cap (vertex count, enumeration size).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search (Dirichlet prime scan, q scan) ran out of room without an
// answer.  Distinct from a principled rejection: nothing was proven.
class BoundExhaustedError : public std::runtime_error {
public:
    explicit BoundExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gk
