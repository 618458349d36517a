// errors.hpp - error types shared by all ecsim modules

#pragma once

#include <stdexcept>

namespace ecsim {

// Invalid configuration, parameters, or grids. CLI exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation lost validity: overflow/NaN while marching, quadrature
// non-convergence, a singular-coefficient guard trip. CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ecsim
