#pragma once

#include <stdexcept>

namespace fracdim {

// Numerical failure as opposed to argument validation: quadrature that does
// not converge, diverging integrands, singular linear systems, unstable time
// marches. Validation problems throw std::domain_error or
// std::invalid_argument instead.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fracdim
