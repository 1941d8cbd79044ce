#ifndef FOCKCP_POTENTIAL_HPP
#define FOCKCP_POTENTIAL_HPP

#include "fockcp/quadrature.hpp"
#include "fockcp/scenario.hpp"

// Assembly of the physical energy shifts (SI joules):
//
//   general:    quadrature of S_tot on both branches, any alignment/medium
//   parallel:   finite-n parallel alignment via the I_cl alpha^2 grouping
//   conductor:  closed forms
//       ev    = -P (1 - zeta^2/2)
//       tr    = -P (-1 + zeta^2/2 + (1 - zeta^2) cos zeta + zeta sin zeta)
//       total =  P ((zeta^2 - 1) cos zeta - zeta sin zeta)
//   with P = I_cl alpha^2 / (32 pi c eps0^2 z^3).

namespace fockcp {

struct ShiftDiagnostics {
  double travelingError = 0.0;  // absolute quadrature error estimates, J
  double evanescentError = 0.0;
  int travelingPanels = 0;
  int evanescentPanels = 0;
  // |Im| of the evanescent integral, converted to J. Zero for a perfect
  // conductor; nonzero for a dielectric (TIR window), where it measures the
  // dissipative channel discarded from the conservative potential.
  double evanescentImagResidue = 0.0;
  bool nearResonance = false;
};

struct ShiftResult {
  double traveling = 0.0;   // J
  double evanescent = 0.0;  // J
  double total = 0.0;       // traveling + evanescent, by construction
  double zeta = 0.0;
  ShiftDiagnostics diagnostics;
};

// Quadrature of S_tot (any alignment, any medium).
ShiftResult shift_general(const Scenario& s, const QuadratureSettings& settings);

// Parallel alignment, dielectric medium, classical intensity:
//   ev = -(I a^2 wL^3 / 8 pi) \int_0^inf dk e^{-zeta k} (R_TE + k^2 R_TM)
//   tr = -Re i (I a^2 wL^3 / 8 pi) \int_0^1 dt e^{i zeta t} (R_TE - t^2 R_TM)
// (natural forms; output SI).
ShiftResult shift_parallel_dielectric(const Scenario& s,
                                      const QuadratureSettings& settings);

enum class PcPart { Evanescent, Traveling, Total };

// Closed-form perfect-conductor shift (parallel alignment, classical
// intensity required). No quadrature.
double pc_shift(PcPart part, const Scenario& s);

enum class PcRegime { NearField, Retarded };

// zeta << 1:  -I a^2 / (32 pi c eps0^2 z^3)
// zeta >> 1:  +I a^2 wL^2 cos(2 wL z / c) / (8 pi c^3 eps0^2 z)
double pc_asymptotic(PcRegime regime, const Scenario& s);

// The three-term split of the conductor total,
//   pref [ -cos z / z^3 - sin z / z^2 + cos z / z ],
// pref = I a^2 wL^3 / (4 pi c^4 eps0^2). The 1/z^3 term alone is the
// prior-literature model curve.
struct PcDecomposition {
  double termCos3 = 0.0;  // J
  double termSin2 = 0.0;
  double termCos1 = 0.0;
  double sum() const { return termCos3 + termSin2 + termCos1; }
};

PcDecomposition pc_decompose(const Scenario& s);

}  // namespace fockcp

#endif
