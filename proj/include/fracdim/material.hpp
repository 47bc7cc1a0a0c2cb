#pragma once

namespace fracdim {

/// Material constants shared by the boundary-value scenarios. Each solver
/// reads only its own subset and validates what it uses.
struct MaterialParams {
    double lambda = 1.0;  // Lame first parameter
    double mu = 1.0;      // shear modulus
    double rho = 1.0;     // mass density
    double c_p = 1.0;     // specific heat
    double k = 1.0;       // thermal conductivity
    double eps0 = 1.0;    // vacuum permittivity
    double rho_q = 1.0;   // volumetric charge density
};

}  // namespace fracdim
