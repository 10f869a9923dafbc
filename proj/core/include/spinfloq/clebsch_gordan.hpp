// clebsch_gordan.hpp — Clebsch-Gordan coefficients in the Condon-Shortley
// real convention, Racah closed form with log-factorials. All angular
// momenta are passed doubled.

#pragma once

namespace spinfloq {

// <j1 m1; j2 m2 | J M>; selection-rule violations return 0.
double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2,
                      int twice_cap_j, int twice_cap_m);

}  // namespace spinfloq
