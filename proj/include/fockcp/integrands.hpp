#ifndef FOCKCP_INTEGRANDS_HPP
#define FOCKCP_INTEGRANDS_HPP

#include "fockcp/optics.hpp"
#include "fockcp/scenario.hpp"

// The four diagram integrands S_1..S_4, their total S_tot, and the
// parallel-alignment specialization. All take the integration variable chi
// (tau in [0,1] on the traveling branch, i*kappa on the evanescent branch),
// with reflection coefficients evaluated at the on-shell pole k_z = wL chi.
//
// Common structure, with A = R_TE - chi^2 R_TM and B = (1 - chi^2) R_TM:
//
//             -i N_L wL^4
//   S_1(chi) = ----------- e^{i zeta chi} (Ex2 dx2 + Ey2 dy2 + Ez2 dz2)
//              32 pi^2 (w+wL)^2
//                 x [ dpar2 A + 2 dz2 B ]
//
//   S_2 = S_3: denominator (w+wL)(w-wL), bracket (Ex2 dx2^2 + Ey2 dy2^2) A
//              + 2 Ez2 dz2^2 B
//   S_4: denominator (w-wL)^2, bracket as S_1.
//
// S_tot is implemented independently (4 w^2 quartic block + 2 (w^2+wL^2)
// cross block over the common (w^2-wL^2)^2 denominator); agreement with the
// sum of the four is a test, not a definition.

namespace fockcp {

struct IntegrandParams {
  double omega = 0.0;    // transition frequency, natural (1/m)
  double omegaL = 0.0;   // drive frequency, natural
  double z = 0.0;        // m
  double photons = 0.0;  // N_L
  double ex2 = 0.0, ey2 = 0.0, ez2 = 0.0;  // squared amplitudes, natural
  double dx2 = 0.0, dy2 = 0.0, dz2 = 0.0;  // squared dipoles, natural

  double dpar2() const { return dx2 + dy2; }
  double zeta() const { return 2.0 * omegaL * z; }

  static IntegrandParams from(const NaturalParams& p);
  static IntegrandParams from(const Scenario& s);
};

// Single diagram, index in 1..4. Throws ResonantDriveError at w == wL.
cplx s_diagram(int index, cplx chi, const IntegrandParams& p,
               const Medium& medium);

// Closed-form total of the four diagrams.
cplx s_tot(cplx chi, const IntegrandParams& p, const Medium& medium);

// Drive and dipole both along x:
//   -i N_L wL^4 w^2 / (8 pi^2 (w^2-wL^2)^2) Ex2 d^4 e^{i zeta chi}
//      x (R_TE - chi^2 R_TM)
// Equals s_tot under the same parameter restriction.
cplx s_parallel(cplx chi, const IntegrandParams& p, const Medium& medium);

}  // namespace fockcp

#endif
