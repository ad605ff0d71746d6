#pragma once

#include <stdexcept>

namespace dnacyclic {

// An operation would enumerate more state than the configured cap allows.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dnacyclic
