#pragma once

#include <stdexcept>
#include <string>

namespace ww {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion produced a value outside {-1,+1}.
struct NotASignFunction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ww
