#pragma once
// Standard inputs: the two-variable example and mapping cones.

#include "novikov/complexes.hpp"

namespace nov {

LaurentPoly example_mu();  // 1 + x y^2 + x^2 + x^2 y
LaurentPoly example_nu();  // x + y + y^2 + x^2 y^2
// 0 -> L -(mu, nu)^T-> L^2 -(-nu, mu)-> L -> 0 in degrees 0, 1, 2
FreeComplex example_complex();

}  // namespace nov
