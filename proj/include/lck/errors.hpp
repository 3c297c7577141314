#pragma once

#include <stdexcept>

namespace lck {

// Input is well-formed but outside what the implementation decides
// (non-ladder decompositions, over-budget enumerations).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lck
