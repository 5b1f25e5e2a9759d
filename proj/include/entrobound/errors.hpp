#pragma once

#include <stdexcept>
#include <string>

namespace entrobound {

// Raised when an input object violates one of its declared invariants
// (non-Hermitian matrix, incomplete POVM, unnormalized state, ...).
// Messages carry the offending index and deviation magnitude.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace entrobound
