#pragma once

#include <utility>

#include "fracdim/material.hpp"
#include "fracdim/operators.hpp"

namespace fracdim {

// Uniformly charged infinite circular cylinder embedded in a medium of
// non-integer dimension D, with 2 < D <= 3. Charge density and permittivity
// come from MaterialParams (rho_q, eps0). The potential is normalized so
// that phi(0) = 0.
struct CylinderChargeScenario {
    double D = 3.0;
    double R = 1.0;
    MaterialParams material;
};

// Electrostatic potential at distance r from the axis. Negative of the
// field's antiderivative; continuous across r = R. Near D = 3 the outside
// branch degenerates to a logarithm.
double potential(const CylinderChargeScenario& s, double r);

// Radial electric field E(r) along e_r. Regular in D on (2, 3]; grows
// linearly inside the cylinder and decays like r^(2-D) outside.
OperatorResult field(const CylinderChargeScenario& s, double r);

// Charge per unit length of the cylinder.
double charge_per_length(const CylinderChargeScenario& s);

// (eps_in, eps_out): scalars that cast the inside and outside fields into
// the classical Gauss-law shapes E_in = rho_q r/(2 eps0 eps_in) and
// E_out = tau_D/(2 pi eps0 eps_out r^(D-2)). Both equal 1 at D = 3.
std::pair<double, double> effective_permittivities(const CylinderChargeScenario& s);

}  // namespace fracdim
